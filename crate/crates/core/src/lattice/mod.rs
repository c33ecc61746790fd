//! Integer lattices with an automorphism of ℓ-power order, and their Tate
//! cohomology computed exactly over ℤ.
//!
//! For the cyclic group G = ⟨σ⟩ of order N, H¹ = ker ν / (σ−1)X and
//! H² = X^G / νX with ν = Σ_{i<N} σⁱ. Both are finite quotients of integer
//! lattices; working over ℤ rather than modulo ℓᵏ avoids the spurious
//! torsion that truncation introduces on trivial summands.

pub mod linalg;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::delta_chars::is_prime;
use crate::gee_chars::{aug, reg, CyclicGroupSpec, GCharacter};
use linalg::{quotient, Matrix};

/// Disguise stops growing entries past this magnitude.
const DISGUISE_ENTRY_BOUND: i64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("ell = {0} is not an odd prime")]
    EllNotOddPrime(u64),
    #[error("sigma must be a {rank}x{rank} matrix")]
    Shape { rank: usize },
    #[error("sigma^(ell^{k}) is not the identity")]
    NotOfOrder { k: u32 },
    #[error("sigma already has order dividing ell^{}", k - 1)]
    OrderTooSmall { k: u32 },
    #[error("canonical lattice needs a nonzero multiplicity")]
    Empty,
    #[error("this operation needs k <= 1, got k = {0}")]
    Regime(u32),
    #[error("H^{degree} has invariant factors {factors:?}, not an elementary abelian ell-group")]
    Structure { degree: u8, factors: Vec<u64> },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Free ℤ-module of rank n with σ of order ℓᵏ. For k = 0 the group is read as
/// cyclic of order ℓ acting trivially.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GLatticeRepr", into = "GLatticeRepr")]
pub struct GLattice {
    ell: u64,
    k: u32,
    sigma: Matrix,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GLatticeRepr {
    ell: u64,
    k: u32,
    rank: usize,
    sigma: Vec<Vec<i64>>,
}

impl TryFrom<GLatticeRepr> for GLattice {
    type Error = LatticeError;
    fn try_from(r: GLatticeRepr) -> Result<Self, LatticeError> {
        if r.sigma.len() != r.rank || r.sigma.iter().any(|row| row.len() != r.rank) {
            return Err(LatticeError::Shape { rank: r.rank });
        }
        GLattice::new(r.ell, r.k, Matrix::from_rows(&r.sigma))
    }
}

impl From<GLattice> for GLatticeRepr {
    fn from(l: GLattice) -> Self {
        GLatticeRepr {
            ell: l.ell,
            k: l.k,
            rank: l.rank(),
            sigma: l
                .sigma
                .to_i64_rows()
                .expect("disguised entries stay within i64"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyResult {
    pub h1_invariant_factors: Vec<u64>,
    pub h2_invariant_factors: Vec<u64>,
    /// Present when every invariant factor equals ℓ.
    pub h1_dim: Option<usize>,
    pub h2_dim: Option<usize>,
    pub herbrand_q: Option<i64>,
}

impl CohomologyResult {
    /// (h¹, h²) as 𝔽ℓ-dimensions, or a structure error.
    pub fn dims(&self) -> Result<(usize, usize), LatticeError> {
        match (self.h1_dim, self.h2_dim) {
            (Some(a), Some(b)) => Ok((a, b)),
            (None, _) => Err(LatticeError::Structure {
                degree: 1,
                factors: self.h1_invariant_factors.clone(),
            }),
            (_, None) => Err(LatticeError::Structure {
                degree: 2,
                factors: self.h2_invariant_factors.clone(),
            }),
        }
    }
}

/// Multiplicities in X ≃ Z[G]^α ⊕ Z[ζℓ]^β ⊕ Z^γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
}

impl Decomposition {
    pub fn rank(&self, ell: u64) -> usize {
        let ell = ell as usize;
        ell * self.alpha + (ell - 1) * self.beta + self.gamma
    }
}

impl GLattice {
    pub fn new(ell: u64, k: u32, sigma: Matrix) -> Result<Self, LatticeError> {
        if ell < 3 || !is_prime(ell) {
            return Err(LatticeError::EllNotOddPrime(ell));
        }
        let n = sigma.nrows();
        if sigma.ncols() != n {
            return Err(LatticeError::Shape { rank: n });
        }
        // σ^{ℓᵏ} = 1 already forces det σ = ±1.
        if !sigma.pow(ell.pow(k)).is_identity() {
            return Err(LatticeError::NotOfOrder { k });
        }
        if k >= 1 && sigma.pow(ell.pow(k - 1)).is_identity() {
            return Err(LatticeError::OrderTooSmall { k });
        }
        Ok(GLattice { ell, k, sigma })
    }

    pub fn from_rows(ell: u64, k: u32, rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        Self::new(ell, k, Matrix::from_rows(rows))
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn rank(&self) -> usize {
        self.sigma.nrows()
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    /// Order of the acting group: ℓᵏ, or ℓ when σ is the identity.
    pub fn group_order(&self) -> u64 {
        self.ell.pow(self.k.max(1))
    }

    /// Block-diagonal sum; the result carries the larger order.
    pub fn direct_sum(&self, other: &GLattice) -> Result<GLattice, LatticeError> {
        if self.ell != other.ell {
            return Err(LatticeError::EllNotOddPrime(other.ell));
        }
        GLattice::new(self.ell, self.k.max(other.k), self.sigma.direct_sum(&other.sigma))
    }

    fn norm(&self) -> Matrix {
        let n = self.rank();
        let mut acc = Matrix::identity(n);
        let mut power = Matrix::identity(n);
        for _ in 1..self.group_order() {
            power = power.mul(&self.sigma);
            acc = acc.add(&power);
        }
        acc
    }

    fn sigma_minus_one(&self) -> Matrix {
        self.sigma.sub(&Matrix::identity(self.rank()))
    }
}

/// Block-diagonal model: α cyclic permutation blocks, β companion blocks of
/// 1 + x + … + x^{ℓ−1}, γ trivial 1×1 blocks.
pub fn canonical_lattice(ell: u64, alpha: usize, beta: usize, gamma: usize) -> Result<GLattice, LatticeError> {
    if ell < 3 || !is_prime(ell) {
        return Err(LatticeError::EllNotOddPrime(ell));
    }
    if alpha + beta + gamma == 0 {
        return Err(LatticeError::Empty);
    }
    let l = ell as usize;
    let mut perm = Matrix::zeros(l, l);
    for i in 0..l {
        perm.set((i + 1) % l, i, BigInt::from(1));
    }
    // companion matrix of the ℓ-th cyclotomic polynomial: e_i ↦ e_{i+1}, e_{ℓ−2} ↦ −Σ e_j
    let mut comp = Matrix::zeros(l - 1, l - 1);
    for i in 0..l - 2 {
        comp.set(i + 1, i, BigInt::from(1));
    }
    for r in 0..l - 1 {
        comp.set(r, l - 2, BigInt::from(-1));
    }
    let mut sigma = Matrix::zeros(0, 0);
    for _ in 0..alpha {
        sigma = sigma.direct_sum(&perm);
    }
    for _ in 0..beta {
        sigma = sigma.direct_sum(&comp);
    }
    for _ in 0..gamma {
        sigma = sigma.direct_sum(&Matrix::identity(1));
    }
    let k = if alpha + beta > 0 { 1 } else { 0 };
    GLattice::new(ell, k, sigma)
}

/// Conjugates σ by a seeded product of elementary unimodular matrices.
pub fn disguise(lattice: &GLattice, seed: u64) -> GLattice {
    let n = lattice.rank();
    if n < 2 {
        return lattice.clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sigma = lattice.sigma.clone();
    let bound = BigInt::from(DISGUISE_ENTRY_BOUND);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..=2i64));
        // σ ↦ EσE⁻¹ with E = 1 + c·e_{ij}
        let mut next = sigma.clone();
        next.add_row_multiple(i, j, &c);
        next.add_col_multiple(j, i, &-c);
        let within = (0..n).all(|r| next.row(r).iter().all(|x| x.magnitude() <= bound.magnitude()));
        if within {
            sigma = next;
        }
    }
    GLattice {
        ell: lattice.ell,
        k: lattice.k,
        sigma,
    }
}

fn factors_to_u64(f: Vec<BigInt>) -> Vec<u64> {
    f.into_iter()
        .map(|d| d.to_u64().expect("cohomology is killed by the group order"))
        .collect()
}

pub fn cohomology(lattice: &GLattice) -> CohomologyResult {
    let nu = lattice.norm();
    let s = lattice.sigma_minus_one();
    let (h1, free1) = quotient(&nu, &s);
    let (h2, free2) = quotient(&s, &nu);
    debug_assert_eq!((free1, free2), (0, 0), "Tate cohomology is finite");
    let h1 = factors_to_u64(h1);
    let h2 = factors_to_u64(h2);
    let elementary = |f: &[u64]| f.iter().all(|&d| d == lattice.ell);
    let h1_dim = elementary(&h1).then_some(h1.len());
    let h2_dim = elementary(&h2).then_some(h2.len());
    let herbrand_q = match (h1_dim, h2_dim) {
        (Some(a), Some(b)) => Some(b as i64 - a as i64),
        _ => None,
    };
    CohomologyResult {
        h1_invariant_factors: h1,
        h2_invariant_factors: h2,
        h1_dim,
        h2_dim,
        herbrand_q,
    }
}

/// rank of X^G.
pub fn fixed_rank(lattice: &GLattice) -> usize {
    lattice.rank() - lattice.sigma_minus_one().rank()
}

/// Entry i is the rank fixed by the subgroup of order ℓ^{k−i}, generated by σ^{ℓⁱ}.
pub fn fixed_dims_chain(lattice: &GLattice) -> Vec<i64> {
    let n = lattice.rank();
    let id = Matrix::identity(n);
    (0..=lattice.k)
        .map(|i| {
            let g = lattice.sigma.pow(lattice.ell.pow(i));
            (n - g.sub(&id).rank()) as i64
        })
        .collect()
}

fn require_prime_regime(lattice: &GLattice) -> Result<(), LatticeError> {
    if lattice.k > 1 {
        return Err(LatticeError::Regime(lattice.k));
    }
    Ok(())
}

/// Cohomology and fixed rank of one lattice, computed once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeAnalysis {
    pub ell: u64,
    pub rank: usize,
    pub fixed_rank: usize,
    pub cohomology: CohomologyResult,
}

pub fn analyse(lattice: &GLattice) -> Result<LatticeAnalysis, LatticeError> {
    require_prime_regime(lattice)?;
    Ok(LatticeAnalysis {
        ell: lattice.ell,
        rank: lattice.rank(),
        fixed_rank: fixed_rank(lattice),
        cohomology: cohomology(lattice),
    })
}

impl LatticeAnalysis {
    fn spec(&self) -> CyclicGroupSpec {
        CyclicGroupSpec { ell: self.ell, m: 1 }
    }

    fn herbrand_q(&self) -> Result<i64, LatticeError> {
        let (h1, h2) = self.cohomology.dims()?;
        Ok(h2 as i64 - h1 as i64)
    }

    /// α = rk X^G − h², β = h¹, γ = h².
    pub fn decomposition(&self) -> Result<Decomposition, LatticeError> {
        let (h1, h2) = self.cohomology.dims()?;
        let fixed = self.fixed_rank;
        let alpha = fixed.checked_sub(h2).ok_or_else(|| {
            LatticeError::Internal(format!("fixed rank {fixed} below h2 = {h2}"))
        })?;
        let d = Decomposition {
            alpha,
            beta: h1,
            gamma: h2,
        };
        if d.rank(self.ell) != self.rank {
            return Err(LatticeError::Internal(format!(
                "{d:?} does not account for rank {}",
                self.rank
            )));
        }
        Ok(d)
    }

    /// χ = rk X^G · Reg_G − q(X) · Aug_G.
    pub fn character(&self) -> Result<GCharacter, LatticeError> {
        let q = self.herbrand_q()?;
        let spec = self.spec();
        Ok(&(reg(spec) * self.fixed_rank as i64) - &(aug(spec) * q))
    }

    /// χ′ = corank X′^G · Reg_G + q(X′) · Aug_G for X′ = (Qℓ/Zℓ) ⊗ X, using q(X′) = −q(X).
    pub fn divisible_character(&self) -> Result<GCharacter, LatticeError> {
        let q_divisible = -self.herbrand_q()?;
        let corank_fixed = self.fixed_rank as i64;
        let spec = self.spec();
        Ok(&(reg(spec) * corank_fixed) + &(aug(spec) * q_divisible))
    }
}

pub fn recover_decomposition(lattice: &GLattice) -> Result<Decomposition, LatticeError> {
    analyse(lattice)?.decomposition()
}

pub fn character_of(lattice: &GLattice) -> Result<GCharacter, LatticeError> {
    analyse(lattice)?.character()
}

pub fn divisible_character_of(lattice: &GLattice) -> Result<GCharacter, LatticeError> {
    analyse(lattice)?.divisible_character()
}
