//! Seeded generators for groups, characters, lattices and descriptors.

use std::sync::Arc;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::delta_chars::{
    character_phase, DeltaCharacter, DeltaCharacterRepr, DeltaGroup, DeltaGroupSpec, DeltaSubgroup, Element,
};
use crate::gee_chars::CyclicGroupSpec;
use crate::genus::{Extension, ExtensionDescriptor, PlaceDescriptor, SCHEMA};
use crate::lattice::{canonical_lattice, disguise, GLattice};

fn divisors_of(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn all_elements(divisors: &[u64]) -> Vec<Element> {
    let mut out = vec![Vec::new()];
    for &d in divisors {
        out = out
            .into_iter()
            .flat_map(|x| {
                (0..d).map(move |a| {
                    let mut y = x.clone();
                    y.push(a);
                    y
                })
            })
            .collect();
    }
    out
}

/// A small generating set of the subgroup `elements`, chosen greedily.
fn greedy_generators(divisors: &[u64], elements: &[Element]) -> Vec<Element> {
    let mut gens: Vec<Element> = Vec::new();
    let mut span = DeltaSubgroup::generate(divisors, Vec::new());
    for x in elements {
        if !span.contains(x) {
            gens.push(x.clone());
            span = DeltaSubgroup::generate(divisors, gens.clone());
        }
    }
    gens
}

/// A random valid Δ for one of `ells`, of order at most `max_order`.
pub fn random_delta_spec(rng: &mut impl Rng, ells: &[u64], max_order: u64) -> DeltaGroupSpec {
    loop {
        let ell = *ells.choose(rng).expect("at least one ell");
        let choices: Vec<u64> = divisors_of(ell - 1).into_iter().filter(|&d| d > 1).collect();
        let rank = rng.gen_range(1..=3);
        let divisors: Vec<u64> = (0..rank).map(|_| *choices.choose(rng).expect("ell - 1 >= 2")).collect();
        let order: u64 = divisors.iter().product();
        if order > max_order {
            continue;
        }
        let lcm = divisors.iter().fold(1u64, |a, d| a.lcm(d));
        let elements = all_elements(&divisors);
        let involutions: Vec<&Element> = elements
            .iter()
            .filter(|x| x.iter().any(|&a| a != 0) && x.iter().zip(&divisors).all(|(a, d)| (2 * a) % d == 0))
            .collect();
        // order-two characters have the same exponent shape as involutions
        let mut pairs = Vec::new();
        for &tau in &involutions {
            for &eps in &involutions {
                if character_phase(&divisors, lcm, eps, tau) != 0 {
                    pairs.push((tau, eps));
                }
            }
        }
        let Some(&(tau, eps)) = pairs.choose(rng) else {
            continue;
        };
        let odd: Vec<&Element> = elements
            .iter()
            .filter(|phi| character_phase(&divisors, lcm, phi, tau) != 0)
            .collect();
        let omega = (*odd.choose(rng).expect("eps is odd")).clone();
        let kernel: Vec<Element> = elements
            .iter()
            .filter(|x| character_phase(&divisors, lcm, eps, x) == 0)
            .cloned()
            .collect();
        return DeltaGroupSpec {
            ell,
            tau_bar: tau.clone(),
            omega,
            delta_prime_gens: greedy_generators(&divisors, &kernel),
            elementary_divisors: divisors,
        };
    }
}

pub fn random_delta_group(rng: &mut impl Rng, ells: &[u64], max_order: u64) -> Arc<DeltaGroup> {
    DeltaGroup::shared(random_delta_spec(rng, ells, max_order)).expect("generator produces valid groups")
}

/// Coefficients drawn uniformly from `lo..=hi`.
pub fn random_character(rng: &mut impl Rng, group: &Arc<DeltaGroup>, lo: i64, hi: i64) -> DeltaCharacter {
    let coeffs = (0..group.order()).map(|_| rng.gen_range(lo..=hi)).collect();
    DeltaCharacter::from_coeffs(group, coeffs)
}

/// A genuine character supported on imaginary irreducibles.
pub fn random_imaginary(rng: &mut impl Rng, group: &Arc<DeltaGroup>, hi: i64) -> DeltaCharacter {
    let coeffs = (0..group.order())
        .map(|i| if group.is_imaginary(i) { rng.gen_range(0..=hi) } else { 0 })
        .collect();
    DeltaCharacter::from_coeffs(group, coeffs)
}

fn random_element(rng: &mut impl Rng, group: &DeltaGroup) -> Element {
    group.divisors().iter().map(|&d| rng.gen_range(0..d)).collect()
}

/// Knobs for [`random_descriptor`].
#[derive(Debug, Clone)]
pub struct DescriptorOptions {
    pub ells: Vec<u64>,
    pub min_m: u32,
    pub max_m: u32,
    pub max_places: usize,
    pub max_lambda: i64,
    pub max_order: u64,
}

impl Default for DescriptorOptions {
    fn default() -> Self {
        DescriptorOptions {
            ells: vec![3, 5, 7],
            min_m: 1,
            max_m: 1,
            max_places: 4,
            max_lambda: 3,
            max_order: 64,
        }
    }
}

/// The δ values a descriptor admits.
pub fn admissible_deltas(desc: &ExtensionDescriptor) -> Vec<u8> {
    (0..=1u8)
        .filter(|&d| {
            let mut c = desc.clone();
            c.delta_flag = Some(d);
            Extension::new(c).is_ok()
        })
        .collect()
}

/// A random descriptor that passes validation.
pub fn random_descriptor(rng: &mut impl Rng, opts: &DescriptorOptions, id: &str) -> ExtensionDescriptor {
    let spec = random_delta_spec(rng, &opts.ells, opts.max_order);
    let group = DeltaGroup::shared(spec.clone()).expect("valid");
    let omega_idx = group.omega_index();
    let m = rng.gen_range(opts.min_m..=opts.max_m);
    let n_places = rng.gen_range(0..=opts.max_places);
    let mut places = Vec::with_capacity(n_places);
    for i in 0..n_places {
        let above_ell = rng.gen_bool(0.35);
        let j = rng.gen_range(0..=m);
        let mut gens = Vec::new();
        if rng.gen_bool(0.7) {
            let x = random_element(rng, &group);
            let h = DeltaSubgroup::new(&group, vec![x.clone()]).expect("element of Delta");
            let allowed = above_ell || j == 0 || group.is_trivial_on(omega_idx, &h);
            if allowed {
                gens.push(x);
            }
        }
        places.push(PlaceDescriptor {
            name: format!("p{i}"),
            above_ell,
            delta_dec: gens,
            g_dec_exp: j,
        });
    }
    let mut lambda = random_imaginary(rng, &group, opts.max_lambda);
    if rng.gen_bool(0.8) {
        lambda += &DeltaCharacter::omega(&group);
    }
    let mut desc = ExtensionDescriptor {
        schema: SCHEMA.to_string(),
        id: id.to_string(),
        delta_group: spec,
        g: CyclicGroupSpec { ell: group.ell(), m },
        lambda_k: lambda.to_repr(),
        lambda_tilde_k: None,
        delta_flag: None,
        places,
        mu_zero: true,
        leopoldt: true,
        gross_kuzmin: true,
    };
    let deltas = admissible_deltas(&desc);
    desc.delta_flag = Some(*deltas.choose(rng).expect("delta 0 or 1 is admissible"));
    desc
}

/// λ as a JSON-ready representation.
pub fn repr(chi: &DeltaCharacter) -> DeltaCharacterRepr {
    chi.to_repr()
}

/// Multiplicities (α, β, γ) with ℓα + (ℓ−1)β + γ between 1 and `max_rank`.
pub fn random_multiplicities(rng: &mut impl Rng, ell: u64, max_rank: usize) -> (usize, usize, usize) {
    let l = ell as usize;
    loop {
        let alpha = rng.gen_range(0..=max_rank / l);
        let beta = rng.gen_range(0..=(max_rank - l * alpha) / (l - 1));
        let rest = max_rank - l * alpha - (l - 1) * beta;
        let gamma = rng.gen_range(0..=rest);
        if alpha + beta + gamma > 0 {
            return (alpha, beta, gamma);
        }
    }
}

/// A disguised canonical lattice with known multiplicities.
pub fn random_lattice(rng: &mut impl Rng, ell: u64, max_rank: usize) -> ((usize, usize, usize), GLattice) {
    let (a, b, c) = random_multiplicities(rng, ell, max_rank);
    let base = canonical_lattice(ell, a, b, c).expect("nonzero multiplicities");
    ((a, b, c), disguise(&base, rng.gen()))
}
