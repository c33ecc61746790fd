//! Rational ℓ-adic characters of a cyclic group G of order ℓᵐ, and of Δ × G.
//!
//! The Qℓ-irreducible characters of G are ψ₀, …, ψₘ where ψᵢ is the sum of
//! the faithful characters of G/G_{m−i}; deg ψ₀ = 1 and deg ψᵢ = (ℓ−1)ℓ^{i−1}.
//! The subgroup of order ℓ^{m−k} fixes exactly ψ₀, …, ψ_k, which is what makes
//! multiplicities recoverable from fixed-point dimensions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::delta_chars::{is_prime, DeltaCharacter, DeltaGroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeeError {
    #[error("ell = {0} is not an odd prime")]
    EllNotOddPrime(u64),
    #[error("ell^m overflows for ell = {ell}, m = {m}")]
    TooLarge { ell: u64, m: u32 },
    #[error("subgroup exponent {j} is outside 0..={m}")]
    SubgroupExponent { j: u32, m: u32 },
    #[error("expected {expected} coefficients, got {got}")]
    Length { expected: usize, got: usize },
    #[error("fixed dimension increment {increment} at level {level} is not a multiple of deg psi_{level} = {degree}")]
    InconsistentDimensions {
        level: usize,
        increment: i64,
        degree: i64,
    },
    #[error("ell mismatch: {0} vs {1}")]
    EllMismatch(u64, u64),
    #[error("group mismatch between characters")]
    SpecMismatch,
}

/// G cyclic of order ℓᵐ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyclicGroupSpec {
    pub ell: u64,
    pub m: u32,
}

impl CyclicGroupSpec {
    pub fn new(ell: u64, m: u32) -> Result<Self, GeeError> {
        let spec = CyclicGroupSpec { ell, m };
        spec.check()?;
        Ok(spec)
    }

    pub fn check(&self) -> Result<(), GeeError> {
        if self.ell < 3 || !is_prime(self.ell) {
            return Err(GeeError::EllNotOddPrime(self.ell));
        }
        if (self.ell as i64).checked_pow(self.m).is_none() {
            return Err(GeeError::TooLarge {
                ell: self.ell,
                m: self.m,
            });
        }
        Ok(())
    }

    /// ℓᵉ as a signed integer.
    pub fn ell_pow(&self, e: u32) -> i64 {
        (self.ell as i64).pow(e)
    }

    pub fn order(&self) -> i64 {
        self.ell_pow(self.m)
    }

    /// deg ψᵢ.
    pub fn psi_degree(&self, i: usize) -> i64 {
        if i == 0 {
            1
        } else {
            (self.ell as i64 - 1) * self.ell_pow(i as u32 - 1)
        }
    }

    pub fn psi_degrees(&self) -> Vec<i64> {
        (0..=self.m as usize).map(|i| self.psi_degree(i)).collect()
    }

    fn check_j(&self, j: u32) -> Result<(), GeeError> {
        if j > self.m {
            return Err(GeeError::SubgroupExponent { j, m: self.m });
        }
        Ok(())
    }
}

/// A virtual character Σ nᵢψᵢ of G.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GCharacterRepr")]
pub struct GCharacter {
    ell: u64,
    m: u32,
    coeffs: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GCharacterRepr {
    ell: u64,
    m: u32,
    coeffs: Vec<i64>,
}

impl TryFrom<GCharacterRepr> for GCharacter {
    type Error = GeeError;
    fn try_from(r: GCharacterRepr) -> Result<Self, GeeError> {
        GCharacter::new(CyclicGroupSpec::new(r.ell, r.m)?, r.coeffs)
    }
}

impl GCharacter {
    pub fn new(spec: CyclicGroupSpec, coeffs: Vec<i64>) -> Result<Self, GeeError> {
        let expected = spec.m as usize + 1;
        if coeffs.len() != expected {
            return Err(GeeError::Length {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(GCharacter {
            ell: spec.ell,
            m: spec.m,
            coeffs,
        })
    }

    pub fn zero(spec: CyclicGroupSpec) -> Self {
        GCharacter {
            ell: spec.ell,
            m: spec.m,
            coeffs: vec![0; spec.m as usize + 1],
        }
    }

    /// The unit character 1_G = ψ₀.
    pub fn unit(spec: CyclicGroupSpec) -> Self {
        Self::psi(spec, 0)
    }

    pub fn psi(spec: CyclicGroupSpec, i: usize) -> Self {
        let mut c = Self::zero(spec);
        c.coeffs[i] = 1;
        c
    }

    pub fn spec(&self) -> CyclicGroupSpec {
        CyclicGroupSpec {
            ell: self.ell,
            m: self.m,
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> i64 {
        let spec = self.spec();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, n)| n * spec.psi_degree(i))
            .sum()
    }

    pub fn is_genuine(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn zip_with(&self, other: &GCharacter, f: impl Fn(i64, i64) -> i64) -> GCharacter {
        assert_eq!(self.spec(), other.spec(), "characters of different groups");
        GCharacter {
            ell: self.ell,
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Display for GCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &n) in self.coeffs.iter().enumerate().filter(|(_, n)| **n != 0) {
            let sign = if n < 0 { "-" } else if first { "" } else { "+" };
            match n.unsigned_abs() {
                1 => write!(f, "{sign}ψ{i}")?,
                k => write!(f, "{sign}{k}ψ{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &GCharacter {
    type Output = GCharacter;
    fn add(self, rhs: &GCharacter) -> GCharacter {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &GCharacter {
    type Output = GCharacter;
    fn sub(self, rhs: &GCharacter) -> GCharacter {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Add for GCharacter {
    type Output = GCharacter;
    fn add(self, rhs: GCharacter) -> GCharacter {
        &self + &rhs
    }
}

impl Sub for GCharacter {
    type Output = GCharacter;
    fn sub(self, rhs: GCharacter) -> GCharacter {
        &self - &rhs
    }
}

impl Neg for &GCharacter {
    type Output = GCharacter;
    fn neg(self) -> GCharacter {
        self * -1
    }
}

impl Mul<i64> for &GCharacter {
    type Output = GCharacter;
    fn mul(self, k: i64) -> GCharacter {
        GCharacter {
            ell: self.ell,
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

impl Mul<i64> for GCharacter {
    type Output = GCharacter;
    fn mul(self, k: i64) -> GCharacter {
        &self * k
    }
}

/// Reg_G = ψ₀ + … + ψₘ.
pub fn reg(spec: CyclicGroupSpec) -> GCharacter {
    GCharacter {
        ell: spec.ell,
        m: spec.m,
        coeffs: vec![1; spec.m as usize + 1],
    }
}

/// Aug_G = Reg_G − 1_G.
pub fn aug(spec: CyclicGroupSpec) -> GCharacter {
    let mut c = reg(spec);
    c.coeffs[0] = 0;
    c
}

/// Ind_H^G 1 for H of order ℓʲ: the characters trivial on H are ψ₀ … ψ_{m−j}.
pub fn induce_unit_from(spec: CyclicGroupSpec, j: u32) -> Result<GCharacter, GeeError> {
    spec.check_j(j)?;
    let mut c = GCharacter::zero(spec);
    for i in 0..=(spec.m - j) as usize {
        c.coeffs[i] = 1;
    }
    Ok(c)
}

/// ρ = Ind_H^G Aug_H = Reg_G − Ind_H^G 1.
pub fn induce_aug_from(spec: CyclicGroupSpec, j: u32) -> Result<GCharacter, GeeError> {
    Ok(&reg(spec) - &induce_unit_from(spec, j)?)
}

/// Fixed-point dimensions of a representation with character `chi`: entry k is
/// the dimension fixed by the subgroup of order ℓ^{m−k}.
pub fn fixed_dims(chi: &GCharacter) -> Vec<i64> {
    let spec = chi.spec();
    let mut acc = 0;
    chi.coeffs
        .iter()
        .enumerate()
        .map(|(i, n)| {
            acc += n * spec.psi_degree(i);
            acc
        })
        .collect()
}

/// Inverts [`fixed_dims`]. The flag reports whether the result is genuine.
pub fn solve_multiplicities(
    spec: CyclicGroupSpec,
    fixed_dims: &[i64],
) -> Result<(GCharacter, bool), GeeError> {
    let expected = spec.m as usize + 1;
    if fixed_dims.len() != expected {
        return Err(GeeError::Length {
            expected,
            got: fixed_dims.len(),
        });
    }
    let mut coeffs = Vec::with_capacity(expected);
    let mut previous = 0;
    for (level, &dim) in fixed_dims.iter().enumerate() {
        let increment = dim - previous;
        let degree = spec.psi_degree(level);
        if increment % degree != 0 {
            return Err(GeeError::InconsistentDimensions {
                level,
                increment,
                degree,
            });
        }
        coeffs.push(increment / degree);
        previous = dim;
    }
    let chi = GCharacter::new(spec, coeffs)?;
    let genuine = chi.is_genuine();
    Ok((chi, genuine))
}

/// A virtual character of Δ × G: one G-character row per Δ-irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DGCharacter {
    group: Arc<DeltaGroup>,
    spec: CyclicGroupSpec,
    rows: Vec<Vec<i64>>,
}

/// Outer product δ ⊗ g.
pub fn dg_combine(delta: &DeltaCharacter, g: &GCharacter) -> Result<DGCharacter, GeeError> {
    if delta.group().ell() != g.ell {
        return Err(GeeError::EllMismatch(delta.group().ell(), g.ell));
    }
    let rows = delta
        .coeffs()
        .iter()
        .map(|&a| g.coeffs.iter().map(|&b| a * b).collect())
        .collect();
    Ok(DGCharacter {
        group: Arc::clone(delta.group()),
        spec: g.spec(),
        rows,
    })
}

impl DGCharacter {
    pub fn zero(group: &Arc<DeltaGroup>, spec: CyclicGroupSpec) -> Self {
        DGCharacter {
            group: Arc::clone(group),
            spec,
            rows: vec![vec![0; spec.m as usize + 1]; group.order()],
        }
    }

    pub fn group(&self) -> &Arc<DeltaGroup> {
        &self.group
    }

    pub fn spec(&self) -> CyclicGroupSpec {
        self.spec
    }

    /// The G-character attached to the Δ-irreducible of index `index`.
    pub fn row(&self, index: usize) -> GCharacter {
        GCharacter {
            ell: self.spec.ell,
            m: self.spec.m,
            coeffs: self.rows[index].clone(),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = GCharacter> + '_ {
        (0..self.rows.len()).map(|i| self.row(i))
    }

    /// The Δ-character obtained by taking G-degrees.
    pub fn degree_g(&self) -> DeltaCharacter {
        let degs = self.spec.psi_degrees();
        let coeffs = self
            .rows
            .iter()
            .map(|r| r.iter().zip(&degs).map(|(a, d)| a * d).sum())
            .collect();
        DeltaCharacter::from_coeffs(&self.group, coeffs)
    }

    /// The G-character obtained by taking Δ-degrees.
    pub fn degree_delta(&self) -> GCharacter {
        let mut out = GCharacter::zero(self.spec);
        for r in &self.rows {
            for (o, a) in out.coeffs.iter_mut().zip(r) {
                *o += a;
            }
        }
        out
    }

    pub fn degree(&self) -> i64 {
        self.degree_g().degree()
    }

    pub fn is_genuine(&self) -> bool {
        self.rows.iter().flatten().all(|&a| a >= 0)
    }

    /// (Δ-irreducible index, ψ index, coefficient) for every negative entry.
    pub fn negative_entries(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (i, &a) in row.iter().enumerate() {
                if a < 0 {
                    out.push((r, i, a));
                }
            }
        }
        out
    }

    /// Sum of the rows whose Δ-irreducible satisfies `keep`.
    pub fn sum_rows(&self, keep: impl Fn(usize) -> bool) -> GCharacter {
        let mut out = GCharacter::zero(self.spec);
        for (r, row) in self.rows.iter().enumerate() {
            if keep(r) {
                for (o, a) in out.coeffs.iter_mut().zip(row) {
                    *o += a;
                }
            }
        }
        out
    }

    fn zip_with(&self, other: &DGCharacter, f: impl Fn(i64, i64) -> i64) -> DGCharacter {
        assert_eq!(self.spec, other.spec, "characters of different groups");
        assert_eq!(self.rows.len(), other.rows.len(), "characters of different groups");
        DGCharacter {
            group: Arc::clone(&self.group),
            spec: self.spec,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect())
                .collect(),
        }
    }
}

impl Add for &DGCharacter {
    type Output = DGCharacter;
    fn add(self, rhs: &DGCharacter) -> DGCharacter {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &DGCharacter {
    type Output = DGCharacter;
    fn sub(self, rhs: &DGCharacter) -> DGCharacter {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Add for DGCharacter {
    type Output = DGCharacter;
    fn add(self, rhs: DGCharacter) -> DGCharacter {
        &self + &rhs
    }
}

impl Sub for DGCharacter {
    type Output = DGCharacter;
    fn sub(self, rhs: DGCharacter) -> DGCharacter {
        &self - &rhs
    }
}

/// JSON: `{"ell":3,"m":1,"rows":{"(1)":[0,1]}}`, zero rows omitted.
impl Serialize for DGCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: BTreeMap<usize, &Vec<i64>> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.iter().any(|&a| a != 0))
            .collect();
        struct Rows<'a>(&'a DGCharacter, BTreeMap<usize, &'a Vec<i64>>);
        impl Serialize for Rows<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.1.len()))?;
                for (i, r) in &self.1 {
                    map.serialize_entry(&self.0.group.label(*i), r)?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("ell", &self.spec.ell)?;
        map.serialize_entry("m", &self.spec.m)?;
        map.serialize_entry("rows", &Rows(self, rows))?;
        map.end()
    }
}
