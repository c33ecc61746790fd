//! Parameter sweeps over split-place configurations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::delta_chars::{DeltaCharacterRepr, DeltaGroupSpec};
use crate::gee_chars::CyclicGroupSpec;
use crate::genus::{EngineError, Extension, ExtensionDescriptor, PlaceDescriptor, SCHEMA};
use crate::par::par_map;

/// A grid of descriptors: every place is split in K∞/K⁺∞ (trivial Δ_p)
/// and shares the exponent `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepGrid {
    pub schema: String,
    pub ells: Vec<u64>,
    pub ms: Vec<u32>,
    pub tame_places: Vec<usize>,
    pub ell_places: Vec<usize>,
    pub js: Vec<u32>,
    /// λ_K = ω + extra·ε, with ε the odd character trivial on Δ′.
    #[serde(default = "zero_only")]
    pub lambda_extra: Vec<i64>,
    /// w = 1 uses Δ = Z/2; w = 0 uses Z/2 × Z/2 with ω ∉ Δ′-invariants.
    #[serde(default = "both_w")]
    pub roots_of_unity: Vec<u8>,
    #[serde(default = "both_deltas")]
    pub deltas: Vec<u8>,
}

fn zero_only() -> Vec<i64> {
    vec![0]
}

fn both_w() -> Vec<u8> {
    vec![0, 1]
}

fn both_deltas() -> Vec<u8> {
    vec![0, 1]
}

impl SweepGrid {
    pub fn check(&self) -> Result<(), String> {
        if self.schema != SCHEMA {
            return Err(format!("unsupported schema {:?}, expected {SCHEMA:?}", self.schema));
        }
        if let Some(x) = self.lambda_extra.iter().find(|&&x| x < 0) {
            return Err(format!("lambda_extra {x} would make lambda_K virtual"));
        }
        if let Some(w) = self.roots_of_unity.iter().find(|&&w| w > 1) {
            return Err(format!("roots_of_unity entry {w} is not 0 or 1"));
        }
        Ok(())
    }

    /// The descriptors of the grid, in row-major order. Combinations that
    /// fail validation (j > m, an inadmissible δ) are skipped.
    pub fn descriptors(&self) -> Vec<ExtensionDescriptor> {
        let mut out = Vec::new();
        for &ell in &self.ells {
            for &m in &self.ms {
                for &tame in &self.tame_places {
                    for &wild in &self.ell_places {
                        for &j in &self.js {
                            for &extra in &self.lambda_extra {
                                for &w in &self.roots_of_unity {
                                    for &delta in &self.deltas {
                                        let d = grid_descriptor(ell, m, tame, wild, j, extra, w, delta);
                                        if Extension::new(d.clone()).is_ok() {
                                            out.push(d);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[allow(clippy::too_many_arguments)]
fn grid_descriptor(ell: u64, m: u32, tame: usize, wild: usize, j: u32, extra: i64, w: u8, delta: u8) -> ExtensionDescriptor {
    let (delta_group, omega, eps) = if w == 1 {
        (
            DeltaGroupSpec {
                ell,
                elementary_divisors: vec![2],
                tau_bar: vec![1],
                omega: vec![1],
                delta_prime_gens: vec![],
            },
            "(1)",
            "(1)",
        )
    } else {
        (
            DeltaGroupSpec {
                ell,
                elementary_divisors: vec![2, 2],
                tau_bar: vec![1, 0],
                omega: vec![1, 1],
                delta_prime_gens: vec![vec![0, 1]],
            },
            "(1,1)",
            "(1,0)",
        )
    };
    let mut coeffs = BTreeMap::new();
    *coeffs.entry(omega.to_string()).or_insert(0) += 1;
    if extra != 0 {
        *coeffs.entry(eps.to_string()).or_insert(0) += extra;
    }
    let place = |name: String, above_ell: bool| PlaceDescriptor {
        name,
        above_ell,
        delta_dec: vec![],
        g_dec_exp: j,
    };
    let places = (0..tame)
        .map(|i| place(format!("q{i}"), false))
        .chain((0..wild).map(|i| place(format!("l{i}"), true)))
        .collect();
    ExtensionDescriptor {
        schema: SCHEMA.to_string(),
        id: format!("sweep-l{ell}-m{m}-t{tame}-e{wild}-j{j}-x{extra}-w{w}-d{delta}"),
        delta_group,
        g: CyclicGroupSpec { ell, m },
        lambda_k: DeltaCharacterRepr { coeffs },
        lambda_tilde_k: None,
        delta_flag: Some(delta),
        places,
        mu_zero: true,
        leopoldt: true,
        gross_kuzmin: true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    #[serde(rename = "descriptor-id")]
    pub descriptor_id: String,
    /// Λ_K = ⟨λ_K, 1_{Δ′}^Δ⟩.
    #[serde(rename = "lambda_K")]
    pub lambda_k: i64,
    #[serde(rename = "lambda_L")]
    pub lambda_l: i64,
    #[serde(rename = "lambda_tilde_L")]
    pub lambda_tilde_l: i64,
    pub delta: u8,
    pub delta_prime: u8,
    #[serde(rename = "duality-case")]
    pub duality_case: String,
}

pub fn run_grid(grid: &SweepGrid) -> Result<Vec<SweepRow>, EngineError> {
    par_map(grid.descriptors(), |d| {
        let ext = Extension::new(d).expect("filtered to valid descriptors");
        Ok(SweepRow {
            descriptor_id: ext.id().to_string(),
            lambda_k: ext.lambda_k().inner(&ext.delta_prime_induced()),
            lambda_l: ext.kida_a1()?,
            lambda_tilde_l: ext.kuzmin_a3()?.lambda_tilde_l,
            delta: ext.delta().ok_or(EngineError::NeedsDelta)?,
            delta_prime: ext.delta_prime(),
            duality_case: ext.scolie_case().label().to_string(),
        })
    })
    .into_iter()
    .collect()
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("in memory");
    }
    String::from_utf8(w.into_inner().expect("in memory")).expect("utf-8")
}
