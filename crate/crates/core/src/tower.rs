//! Cyclic ℓᵐ-extensions as towers of m steps of degree ℓ.
//!
//! G cyclic has a single subgroup of each order, so the decomposition group
//! of order ℓʲ of a place is the bottom of the subgroup chain: the place
//! splits completely in the first m − j layers and is then totally
//! ramified (tame) or undecomposed (above ℓ) in the remaining j.

use serde::Serialize;

use crate::delta_chars::{DeltaCharacter, Element};
use crate::gee_chars::{solve_multiplicities, CyclicGroupSpec, GCharacter, GeeError};
use crate::genus::{EngineError, Extension, Place};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TowerError {
    #[error("a tower needs m >= 1")]
    Trivial,
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Characters(#[from] GeeError),
    #[error("assembled character has degree {got}, expected the top-level value {expected}")]
    Degree { got: i64, expected: i64 },
}

/// The places of F_k above one descriptor place, seen from F_k → F_{k+1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedPlace {
    pub name: String,
    pub above_ell: bool,
    pub delta_dec: Vec<Element>,
    /// Number of places of F_k above the descriptor place.
    pub count: u64,
    /// Decomposition exponent in F_{k+1}/F_k: 0 or 1.
    pub local_j: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerStep {
    pub level: u32,
    pub places: Vec<DerivedPlace>,
}

pub fn decompose(ext: &Extension) -> Result<Vec<TowerStep>, TowerError> {
    let g = ext.g();
    if g.m == 0 {
        return Err(TowerError::Trivial);
    }
    Ok((0..g.m)
        .map(|k| TowerStep {
            level: k,
            places: ext
                .places()
                .iter()
                .map(|p| {
                    let free = g.m - p.j;
                    DerivedPlace {
                        name: p.name.clone(),
                        above_ell: p.above_ell,
                        delta_dec: p.dec.generators().to_vec(),
                        count: g.ell.pow(k.min(free)),
                        local_j: u32::from(k >= free),
                    }
                })
                .collect(),
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub level: u32,
    pub places: Vec<DerivedPlace>,
    /// λ of F_{level+1} as a Δ-character.
    pub lambda: DeltaCharacter,
    pub lambda_degree: i64,
    /// Kida's formula for the step F_{level} → F_{level+1}.
    pub kida: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainTrace {
    pub steps: Vec<ChainStep>,
    /// λ of F_0 = K, …, F_m = L as Δ-characters.
    #[serde(skip)]
    pub levels: Vec<DeltaCharacter>,
    pub chain_value: i64,
    pub direct_value: i64,
    pub agrees: bool,
}

fn expand(ext: &Extension, step: &TowerStep) -> Vec<Place> {
    let mut out = Vec::new();
    for (p, d) in ext.places().iter().zip(&step.places) {
        for copy in 0..d.count {
            let mut q = p.clone();
            q.name = if d.count == 1 {
                p.name.clone()
            } else {
                format!("{}.{copy}", p.name)
            };
            q.j = d.local_j;
            out.push(q);
        }
    }
    out
}

/// Runs the transfer one prime step at a time and compares with the direct value.
pub fn transfer_chain(ext: &Extension) -> Result<ChainTrace, TowerError> {
    let steps = decompose(ext)?;
    let prime = CyclicGroupSpec {
        ell: ext.g().ell,
        m: 1,
    };
    let mut lambda = ext.lambda_k().clone();
    let mut levels = vec![lambda.clone()];
    let mut trace = Vec::with_capacity(steps.len());
    for step in steps {
        let layer = ext.derived(prime, lambda.clone(), expand(ext, &step));
        let kida = layer.kida_a1()?;
        lambda = layer.transfer_t3()?.lambda_l;
        levels.push(lambda.clone());
        trace.push(ChainStep {
            level: step.level,
            places: step.places,
            lambda_degree: lambda.degree(),
            lambda: lambda.clone(),
            kida,
        });
    }
    let chain_value = lambda.inner(&ext.delta_prime_induced());
    let direct_value = ext.kida_a1()?;
    Ok(ChainTrace {
        steps: trace,
        levels,
        chain_value,
        direct_value,
        agrees: chain_value == direct_value,
    })
}

/// Per-level multiplicities of one Δ-irreducible, as fixed dimensions.
pub fn fixed_degree_chain(trace: &ChainTrace, index: usize) -> Vec<i64> {
    trace.levels.iter().map(|l| l.coeff(index)).collect()
}

/// The G-character whose fixed dimensions along the subgroup chain are `fixed_dims`.
pub fn assemble_character(ext: &Extension, fixed_dims: &[i64]) -> Result<GCharacter, TowerError> {
    let (chi, _) = solve_multiplicities(ext.g(), fixed_dims)?;
    let expected = *fixed_dims.last().unwrap_or(&0);
    if chi.degree() != expected {
        return Err(TowerError::Degree {
            got: chi.degree(),
            expected,
        });
    }
    Ok(chi)
}
