//! Character ring of the abelian group Δ = Gal(K′∞/K⁺∞).
//!
//! Δ has exponent dividing ℓ − 1, so every ℓ-adic irreducible character is of
//! degree one and the group ring splits into |Δ| copies of Zℓ. Characters are
//! therefore stored on the dual group: a virtual character is an integer
//! coefficient vector indexed by the irreducibles, in lexicographic order of
//! their exponent tuples.
//!
//! An element of Δ = ⊕ Z/dᵢ is a tuple of residues; the irreducible with
//! exponent tuple (a₁, …, a_r) sends x to Π ζ_{dᵢ}^{aᵢxᵢ}.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_integer::Integer;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

/// Upper bound on |Δ| for enumeration-based character arithmetic.
pub const DEFAULT_MAX_ORDER: u64 = 512;

/// An element of Δ, written as residues modulo the elementary divisors.
pub type Element = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeltaError {
    #[error("ell = {0} is not an odd prime")]
    EllNotOddPrime(u64),
    #[error("elementary divisor {divisor} does not divide ell - 1 = {ell_minus_one}")]
    DivisorExponent { divisor: u64, ell_minus_one: u64 },
    #[error("|Delta| = {order} exceeds the enumeration bound {bound}")]
    TooLarge { order: u64, bound: u64 },
    #[error("{what} has {got} coordinates, expected {expected}")]
    Shape {
        what: String,
        got: usize,
        expected: usize,
    },
    #[error("{what}: coordinate {index} = {value} is not reduced modulo {modulus}")]
    Range {
        what: String,
        index: usize,
        value: u64,
        modulus: u64,
    },
    #[error("tau_bar has order {0}, expected 2")]
    TauOrder(u64),
    #[error("omega(tau_bar) = +1, but the cyclotomic character must be odd")]
    OmegaParity,
    #[error("Delta' has index {0} in Delta, expected 2")]
    DeltaPrimeIndex(u64),
    #[error("tau_bar lies in Delta'")]
    TauInDeltaPrime,
    #[error("{0:?} is not an element of Delta")]
    InvalidSubgroup(Element),
    #[error("malformed character key {0:?}")]
    CharacterKey(String),
}

impl DeltaError {
    /// Stable rule identifier used in validation reports.
    pub fn rule(&self) -> &'static str {
        match self {
            DeltaError::EllNotOddPrime(_) => "ELL_ODD_PRIME",
            DeltaError::DivisorExponent { .. } => "DELTA_EXPONENT",
            DeltaError::TooLarge { .. } => "DELTA_ORDER_BOUND",
            DeltaError::Shape { .. } | DeltaError::Range { .. } => "DELTA_ELEMENT",
            DeltaError::TauOrder(_) => "TAU_ORDER",
            DeltaError::OmegaParity => "OMEGA_PARITY",
            DeltaError::DeltaPrimeIndex(_) => "DELTA_PRIME_INDEX",
            DeltaError::TauInDeltaPrime => "TAU_IN_DELTA_PRIME",
            DeltaError::InvalidSubgroup(_) => "INVALID_SUBGROUP",
            DeltaError::CharacterKey(_) => "CHARACTER_KEY",
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Raw description of Δ, as read from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaGroupSpec {
    pub ell: u64,
    pub elementary_divisors: Vec<u64>,
    pub tau_bar: Element,
    pub omega: Element,
    pub delta_prime_gens: Vec<Element>,
}

/// A validated Δ together with τ̄, ω and the index-two subgroup Δ′.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaGroup {
    spec: DeltaGroupSpec,
    order: usize,
    exponent_lcm: u64,
    delta_prime: DeltaSubgroup,
    imaginary: Vec<bool>,
}

/// A subgroup of Δ, stored with its generators and its enumerated elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSubgroup {
    generators: Vec<Element>,
    elements: BTreeSet<Element>,
}

fn check_element(divisors: &[u64], what: &str, x: &[u64]) -> Result<(), DeltaError> {
    if x.len() != divisors.len() {
        return Err(DeltaError::Shape {
            what: what.to_string(),
            got: x.len(),
            expected: divisors.len(),
        });
    }
    for (index, (&value, &modulus)) in x.iter().zip(divisors).enumerate() {
        if value >= modulus {
            return Err(DeltaError::Range {
                what: what.to_string(),
                index,
                value,
                modulus,
            });
        }
    }
    Ok(())
}

fn add_elements(divisors: &[u64], x: &[u64], y: &[u64]) -> Element {
    x.iter()
        .zip(y)
        .zip(divisors)
        .map(|((a, b), d)| (a + b) % d)
        .collect()
}

impl DeltaSubgroup {
    pub(crate) fn generate(divisors: &[u64], generators: Vec<Element>) -> Self {
        let identity = vec![0; divisors.len()];
        let mut elements = BTreeSet::new();
        elements.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = add_elements(divisors, &x, g);
                if elements.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        DeltaSubgroup {
            generators,
            elements,
        }
    }

    /// The subgroup of `group` generated by `generators`.
    pub fn new(group: &DeltaGroup, generators: Vec<Element>) -> Result<Self, DeltaError> {
        for g in &generators {
            if check_element(group.divisors(), "subgroup generator", g).is_err() {
                return Err(DeltaError::InvalidSubgroup(g.clone()));
            }
        }
        Ok(Self::generate(group.divisors(), generators))
    }

    /// The trivial subgroup.
    pub fn trivial(group: &DeltaGroup) -> Self {
        Self::generate(group.divisors(), Vec::new())
    }

    /// Δ itself, generated by the unit vectors.
    pub fn full(group: &DeltaGroup) -> Self {
        let r = group.rank();
        let gens = (0..r)
            .map(|i| {
                let mut e = vec![0; r];
                e[i] = 1 % group.divisors()[i];
                e
            })
            .collect();
        Self::generate(group.divisors(), gens)
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.elements.iter()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        self.elements.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &DeltaSubgroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }
}

impl DeltaGroup {
    /// Every invariant violated by `spec`, in a fixed order.
    pub fn violations(spec: &DeltaGroupSpec) -> Vec<DeltaError> {
        Self::violations_with_bound(spec, DEFAULT_MAX_ORDER)
    }

    pub fn violations_with_bound(spec: &DeltaGroupSpec, bound: u64) -> Vec<DeltaError> {
        let mut out = Vec::new();
        if spec.ell < 3 || !is_prime(spec.ell) {
            out.push(DeltaError::EllNotOddPrime(spec.ell));
            // Everything below is measured against ell - 1.
            return out;
        }
        let mut divisors_ok = true;
        for &d in &spec.elementary_divisors {
            if d == 0 || !(spec.ell - 1).is_multiple_of(d) {
                out.push(DeltaError::DivisorExponent {
                    divisor: d,
                    ell_minus_one: spec.ell - 1,
                });
                divisors_ok = false;
            }
        }
        if !divisors_ok {
            return out;
        }
        let order = spec
            .elementary_divisors
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
            .unwrap_or(u64::MAX);
        if order > bound {
            out.push(DeltaError::TooLarge { order, bound });
            return out;
        }
        let divs = &spec.elementary_divisors;
        let mut shape_ok = true;
        for (what, x) in [("tau_bar", &spec.tau_bar), ("omega", &spec.omega)] {
            if let Err(e) = check_element(divs, what, x) {
                out.push(e);
                shape_ok = false;
            }
        }
        for g in &spec.delta_prime_gens {
            if let Err(e) = check_element(divs, "delta_prime generator", g) {
                out.push(e);
                shape_ok = false;
            }
        }
        if !shape_ok {
            return out;
        }
        let tau_order = element_order(divs, &spec.tau_bar);
        if tau_order != 2 {
            out.push(DeltaError::TauOrder(tau_order));
        }
        let lcm = divs.iter().fold(1u64, |acc, &d| acc.lcm(&d));
        if tau_order == 2 && character_phase(divs, lcm, &spec.omega, &spec.tau_bar) == 0 {
            out.push(DeltaError::OmegaParity);
        }
        let dp = DeltaSubgroup::generate(divs, spec.delta_prime_gens.clone());
        let index = order / dp.order() as u64;
        if dp.order() as u64 * 2 != order {
            out.push(DeltaError::DeltaPrimeIndex(index));
        }
        if dp.contains(&spec.tau_bar) {
            out.push(DeltaError::TauInDeltaPrime);
        }
        out
    }

    pub fn new(spec: DeltaGroupSpec) -> Result<Self, DeltaError> {
        Self::with_bound(spec, DEFAULT_MAX_ORDER)
    }

    /// Like [`DeltaGroup::new`] with a custom bound on |Δ|.
    pub fn with_bound(spec: DeltaGroupSpec, bound: u64) -> Result<Self, DeltaError> {
        if let Some(e) = Self::violations_with_bound(&spec, bound).into_iter().next() {
            return Err(e);
        }
        let divs = &spec.elementary_divisors;
        let order = divs.iter().product::<u64>() as usize;
        let exponent_lcm = divs.iter().fold(1u64, |acc, &d| acc.lcm(&d));
        let delta_prime = DeltaSubgroup::generate(divs, spec.delta_prime_gens.clone());
        let mut group = DeltaGroup {
            spec,
            order,
            exponent_lcm,
            delta_prime,
            imaginary: Vec::new(),
        };
        group.imaginary = (0..order)
            .map(|i| group.phase(&group.exponents(i), &group.spec.tau_bar) != 0)
            .collect();
        Ok(group)
    }

    /// Convenience constructor for an `Arc`-shared group.
    pub fn shared(spec: DeltaGroupSpec) -> Result<Arc<Self>, DeltaError> {
        Self::new(spec).map(Arc::new)
    }

    /// Δ = Z/2 with τ̄ the generator, ω the sign character, and Δ′ trivial.
    pub fn quadratic(ell: u64) -> Result<Arc<Self>, DeltaError> {
        Self::shared(DeltaGroupSpec {
            ell,
            elementary_divisors: vec![2],
            tau_bar: vec![1],
            omega: vec![1],
            delta_prime_gens: vec![],
        })
    }

    pub fn spec(&self) -> &DeltaGroupSpec {
        &self.spec
    }

    pub fn ell(&self) -> u64 {
        self.spec.ell
    }

    pub fn divisors(&self) -> &[u64] {
        &self.spec.elementary_divisors
    }

    pub fn rank(&self) -> usize {
        self.spec.elementary_divisors.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn tau_bar(&self) -> &Element {
        &self.spec.tau_bar
    }

    pub fn delta_prime(&self) -> &DeltaSubgroup {
        &self.delta_prime
    }

    /// Exponent tuple of the irreducible with canonical index `index`.
    pub fn exponents(&self, mut index: usize) -> Element {
        let divs = self.divisors();
        let mut out = vec![0; divs.len()];
        for i in (0..divs.len()).rev() {
            let d = divs[i] as usize;
            out[i] = (index % d) as u64;
            index /= d;
        }
        out
    }

    /// Canonical index of the irreducible with the given exponent tuple.
    pub fn index_of(&self, exponents: &[u64]) -> usize {
        exponents
            .iter()
            .zip(self.divisors())
            .fold(0usize, |acc, (&a, &d)| acc * d as usize + (a % d) as usize)
    }

    /// φ(x) as a phase in Z/L, L the exponent of Δ: φ(x) = exp(2πi·phase/L).
    fn phase(&self, exponents: &[u64], x: &[u64]) -> u64 {
        character_phase(self.divisors(), self.exponent_lcm, exponents, x)
    }

    pub fn omega_index(&self) -> usize {
        self.index_of(&self.spec.omega)
    }

    pub fn is_imaginary(&self, index: usize) -> bool {
        self.imaginary[index]
    }

    pub fn is_trivial_on(&self, index: usize, subgroup: &DeltaSubgroup) -> bool {
        let e = self.exponents(index);
        subgroup.generators().iter().all(|g| self.phase(&e, g) == 0)
    }

    /// Index of the product φψ.
    pub fn product_index(&self, a: usize, b: usize) -> usize {
        let ea = self.exponents(a);
        let eb = self.exponents(b);
        self.index_of(&add_elements(self.divisors(), &ea, &eb))
    }

    /// Index of the contragredient φ⁻¹.
    pub fn inverse_index(&self, a: usize) -> usize {
        let e: Element = self
            .exponents(a)
            .iter()
            .zip(self.divisors())
            .map(|(&x, &d)| (d - x) % d)
            .collect();
        self.index_of(&e)
    }

    /// Index of φ* = ωφ⁻¹.
    pub fn mirror_index(&self, a: usize) -> usize {
        self.product_index(self.omega_index(), self.inverse_index(a))
    }

    /// Canonical label "(a1,...,ar)" of an irreducible.
    pub fn label(&self, index: usize) -> String {
        let parts: Vec<String> = self.exponents(index).iter().map(|a| a.to_string()).collect();
        format!("({})", parts.join(","))
    }

    fn parse_label(&self, key: &str) -> Result<usize, DeltaError> {
        let bad = || DeltaError::CharacterKey(key.to_string());
        let inner = key
            .trim()
            .strip_prefix('(')
            .and_then(|k| k.strip_suffix(')'))
            .ok_or_else(bad)?;
        let exps: Vec<u64> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|s| s.trim().parse::<u64>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        };
        if check_element(self.divisors(), "character key", &exps).is_err() {
            return Err(bad());
        }
        Ok(self.index_of(&exps))
    }
}

pub(crate) fn element_order(divisors: &[u64], x: &[u64]) -> u64 {
    x.iter()
        .zip(divisors)
        .map(|(&a, &d)| d / a.gcd(&d))
        .fold(1u64, |acc, o| acc.lcm(&o))
}

pub(crate) fn character_phase(divisors: &[u64], lcm: u64, exponents: &[u64], x: &[u64]) -> u64 {
    let mut acc = 0u64;
    for ((&a, &xi), &d) in exponents.iter().zip(x).zip(divisors) {
        acc = (acc + (a * xi % d) * (lcm / d)) % lcm;
    }
    acc
}

/// A virtual ℓ-adic character of Δ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaCharacter {
    group: Arc<DeltaGroup>,
    coeffs: Vec<i64>,
}

/// JSON form of a character: `{"coeffs":{"(0,0)":1,"(1,0)":2}}`, omitted keys are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaCharacterRepr {
    pub coeffs: BTreeMap<String, i64>,
}

impl DeltaCharacter {
    pub fn zero(group: &Arc<DeltaGroup>) -> Self {
        DeltaCharacter {
            group: Arc::clone(group),
            coeffs: vec![0; group.order()],
        }
    }

    pub fn irreducible(group: &Arc<DeltaGroup>, index: usize) -> Self {
        let mut c = Self::zero(group);
        c.coeffs[index] = 1;
        c
    }

    /// The unit character 1.
    pub fn one(group: &Arc<DeltaGroup>) -> Self {
        Self::irreducible(group, 0)
    }

    /// The cyclotomic character ω.
    pub fn omega(group: &Arc<DeltaGroup>) -> Self {
        Self::irreducible(group, group.omega_index())
    }

    pub fn from_coeffs(group: &Arc<DeltaGroup>, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), group.order(), "coefficient vector length");
        DeltaCharacter {
            group: Arc::clone(group),
            coeffs,
        }
    }

    pub fn from_repr(group: &Arc<DeltaGroup>, repr: &DeltaCharacterRepr) -> Result<Self, DeltaError> {
        let mut c = Self::zero(group);
        for (key, &value) in &repr.coeffs {
            let index = group.parse_label(key)?;
            c.coeffs[index] += value;
        }
        Ok(c)
    }

    pub fn to_repr(&self) -> DeltaCharacterRepr {
        DeltaCharacterRepr {
            coeffs: self
                .nonzero()
                .map(|(i, v)| (self.group.label(i), v))
                .collect(),
        }
    }

    pub fn group(&self) -> &Arc<DeltaGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> i64 {
        self.coeffs[index]
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i, v))
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Non-virtual: every coefficient is nonnegative.
    pub fn is_genuine(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    fn same_group(&self, other: &DeltaCharacter) {
        assert!(
            Arc::ptr_eq(&self.group, &other.group) || self.group == other.group,
            "characters of different groups"
        );
    }

    fn permuted(&self, map: impl Fn(usize) -> usize) -> Self {
        let mut out = Self::zero(&self.group);
        for (i, v) in self.nonzero() {
            out.coeffs[map(i)] += v;
        }
        out
    }

    /// Image under the mirror involution φ ↦ ωφ⁻¹, extended linearly.
    pub fn mirror(&self) -> Self {
        self.permuted(|i| self.group.mirror_index(i))
    }

    /// Product with the degree-one character of index `by`.
    pub fn twist_by(&self, by: usize) -> Self {
        self.permuted(|i| self.group.product_index(by, i))
    }

    /// Product with ω.
    pub fn twist_omega(&self) -> Self {
        self.twist_by(self.group.omega_index())
    }

    /// (χ⊕, χ⊖): the parts supported on irreducibles with φ(τ̄) = +1 and −1.
    pub fn split_real_imag(&self) -> (Self, Self) {
        let mut real = Self::zero(&self.group);
        let mut imag = Self::zero(&self.group);
        for (i, v) in self.nonzero() {
            if self.group.is_imaginary(i) {
                imag.coeffs[i] = v;
            } else {
                real.coeffs[i] = v;
            }
        }
        (real, imag)
    }

    pub fn real_part(&self) -> Self {
        self.split_real_imag().0
    }

    pub fn imag_part(&self) -> Self {
        self.split_real_imag().1
    }

    /// α ∨ β, the smallest character containing both.
    pub fn join(&self, other: &DeltaCharacter) -> Self {
        self.same_group(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a.max(b))
            .collect();
        DeltaCharacter {
            group: Arc::clone(&self.group),
            coeffs,
        }
    }

    /// Positive part χ ∨ 0.
    pub fn positive_part(&self) -> Self {
        self.join(&Self::zero(&self.group))
    }

    /// The standard pairing; the irreducibles are orthonormal.
    pub fn inner(&self, other: &DeltaCharacter) -> i64 {
        self.same_group(other);
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    /// Keeps only the coefficients of irreducibles trivial on `subgroup`.
    pub fn project_trivial_on(&self, subgroup: &DeltaSubgroup) -> Self {
        let mut out = Self::zero(&self.group);
        for (i, v) in self.nonzero() {
            if self.group.is_trivial_on(i, subgroup) {
                out.coeffs[i] = v;
            }
        }
        out
    }
}

impl Serialize for DeltaCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a DeltaCharacter);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(None)?;
                for (i, v) in self.0.nonzero() {
                    map.serialize_entry(&self.0.group.label(i), &v)?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("coeffs", &Coeffs(self))?;
        map.end()
    }
}

impl fmt::Display for DeltaCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, v) in self.nonzero() {
            let sign = if v < 0 { "-" } else if first { "" } else { "+" };
            let mag = v.unsigned_abs();
            let label = self.group.label(i);
            if mag == 1 {
                write!(f, "{sign}φ{label}")?;
            } else {
                write!(f, "{sign}{mag}φ{label}")?;
            }
            first = false;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&DeltaCharacter> for &DeltaCharacter {
            type Output = DeltaCharacter;
            fn $method(self, rhs: &DeltaCharacter) -> DeltaCharacter {
                self.same_group(rhs);
                DeltaCharacter {
                    group: Arc::clone(&self.group),
                    coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a $op b).collect(),
                }
            }
        }
        impl $trait<DeltaCharacter> for DeltaCharacter {
            type Output = DeltaCharacter;
            fn $method(self, rhs: DeltaCharacter) -> DeltaCharacter {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&DeltaCharacter> for DeltaCharacter {
            type Output = DeltaCharacter;
            fn $method(self, rhs: &DeltaCharacter) -> DeltaCharacter {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);

impl AddAssign<&DeltaCharacter> for DeltaCharacter {
    fn add_assign(&mut self, rhs: &DeltaCharacter) {
        self.same_group(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&DeltaCharacter> for DeltaCharacter {
    fn sub_assign(&mut self, rhs: &DeltaCharacter) {
        self.same_group(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for &DeltaCharacter {
    type Output = DeltaCharacter;
    fn neg(self) -> DeltaCharacter {
        DeltaCharacter {
            group: Arc::clone(&self.group),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for DeltaCharacter {
    type Output = DeltaCharacter;
    fn neg(self) -> DeltaCharacter {
        -&self
    }
}

impl Mul<i64> for &DeltaCharacter {
    type Output = DeltaCharacter;
    fn mul(self, k: i64) -> DeltaCharacter {
        DeltaCharacter {
            group: Arc::clone(&self.group),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

impl Mul<i64> for DeltaCharacter {
    type Output = DeltaCharacter;
    fn mul(self, k: i64) -> DeltaCharacter {
        &self * k
    }
}

/// The |Δ| degree-one irreducibles, in canonical order.
pub fn irreducibles(group: &Arc<DeltaGroup>) -> Vec<DeltaCharacter> {
    (0..group.order())
        .map(|i| DeltaCharacter::irreducible(group, i))
        .collect()
}

/// Ind_H^Δ 1: the sum of all irreducibles trivial on H.
pub fn induce_unit(group: &Arc<DeltaGroup>, subgroup: &DeltaSubgroup) -> Result<DeltaCharacter, DeltaError> {
    for x in subgroup.elements() {
        if check_element(group.divisors(), "subgroup element", x).is_err() {
            return Err(DeltaError::InvalidSubgroup(x.clone()));
        }
    }
    let mut out = DeltaCharacter::zero(group);
    for i in 0..group.order() {
        if group.is_trivial_on(i, subgroup) {
            out.coeffs[i] = 1;
        }
    }
    Ok(out)
}
