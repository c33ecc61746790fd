//! Property suites runnable from the command line.
//!
//! Each suite draws its cases from a seeded generator, so a run is
//! reproducible from `(seed, cases)` alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::delta_chars::{induce_unit, DeltaSubgroup};
use crate::gee_chars::{fixed_dims, solve_multiplicities, CyclicGroupSpec, GCharacter};
use crate::gen::{self, DescriptorOptions};
use crate::genus::Extension;
use crate::lattice::{character_of, cohomology, divisible_character_of, recover_decomposition};
use crate::par::par_map;
use crate::tower;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub id: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub passed: bool,
    pub first_failure: Option<String>,
}

type Check = fn(&mut ChaCha8Rng) -> Result<(), String>;

pub const SUITES: &[(&str, Check)] = &[
    ("DELTA-MIRROR-INVOLUTION", mirror_involution),
    ("DELTA-PARITY-SWAP", parity_swap),
    ("DELTA-INDUCTION-DEGREE", induction_degree),
    ("GEE-FIXED-DIMS-ROUNDTRIP", fixed_dims_roundtrip),
    ("LATTICE-DECOMPOSITION", lattice_decomposition),
    ("LATTICE-HERBRAND", lattice_herbrand),
    ("LATTICE-DIVISIBLE", lattice_divisible),
    ("GENUS-HERBRAND-OPPOSITE", herbrand_opposite),
    ("GENUS-COHOMOLOGY-HERBRAND", cohomology_herbrand),
    ("GENUS-SCOLIE-EXACT", scolie_exact),
    ("GENUS-KIDA-DEGREE", kida_degree),
    ("GENUS-TILDE-CONSISTENT", tilde_consistent),
    ("TOWER-TRANSITIVITY", tower_transitivity),
    ("TOWER-ETAPE2", tower_etape2),
];

pub fn suite_ids() -> Vec<&'static str> {
    SUITES.iter().map(|(id, _)| *id).collect()
}

/// Runs one check `cases` times; case i uses the stream seeded by `seed + i`.
pub fn run_suite(id: &'static str, check: Check, seed: u64, cases: usize) -> Outcome {
    let results = par_map((0..cases as u64).collect(), |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i));
        check(&mut rng).map_err(|e| format!("case {i}: {e}"))
    });
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    Outcome {
        id,
        cases,
        failures: failures.len(),
        passed: failures.is_empty(),
        first_failure: failures.into_iter().next(),
    }
}

pub fn run_all(seed: u64, cases: usize) -> Vec<Outcome> {
    SUITES
        .iter()
        .map(|&(id, check)| run_suite(id, check, seed, cases))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mirror_involution(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let group = gen::random_delta_group(rng, &[3, 5, 7, 11, 13], 64);
    let chi = gen::random_character(rng, &group, -5, 5);
    ensure(chi.mirror().mirror() == chi, || format!("mirror twice moved {chi}"))
}

fn parity_swap(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let group = gen::random_delta_group(rng, &[3, 5, 7, 11, 13], 64);
    let chi = gen::random_character(rng, &group, -5, 5);
    let a = chi.mirror().real_part().degree();
    let b = chi.imag_part().degree();
    ensure(a == b, || format!("{chi}: deg mirror+ = {a}, deg minus = {b}"))
}

fn induction_degree(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let group = gen::random_delta_group(rng, &[3, 5, 7, 11, 13], 64);
    let gens = (0..rng.gen_range(0..3))
        .map(|_| group.divisors().iter().map(|&d| rng.gen_range(0..d)).collect())
        .collect();
    let h = DeltaSubgroup::new(&group, gens).map_err(|e| e.to_string())?;
    let ind = induce_unit(&group, &h).map_err(|e| e.to_string())?;
    let index = (group.order() / h.order()) as i64;
    ensure(ind.degree() == index && ind.is_genuine(), || {
        format!("Ind from order {} has degree {}", h.order(), ind.degree())
    })
}

fn fixed_dims_roundtrip(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ell = [3u64, 5, 7][rng.gen_range(0..3)];
    let spec = CyclicGroupSpec::new(ell, rng.gen_range(0..4)).map_err(|e| e.to_string())?;
    let coeffs = (0..=spec.m).map(|_| rng.gen_range(-4..=4)).collect();
    let chi = GCharacter::new(spec, coeffs).map_err(|e| e.to_string())?;
    let (back, _) = solve_multiplicities(spec, &fixed_dims(&chi)).map_err(|e| e.to_string())?;
    ensure(back == chi, || format!("{chi} came back as {back}"))
}

fn random_lattice(rng: &mut ChaCha8Rng) -> ((usize, usize, usize), crate::lattice::GLattice) {
    let ell = [3u64, 5, 7][rng.gen_range(0..3)];
    gen::random_lattice(rng, ell, 24)
}

fn lattice_decomposition(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ((a, b, c), x) = random_lattice(rng);
    let d = recover_decomposition(&x).map_err(|e| e.to_string())?;
    ensure((d.alpha, d.beta, d.gamma) == (a, b, c), || {
        format!("built ({a},{b},{c}), recovered {d:?}")
    })
}

fn lattice_herbrand(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ((_, b, c), x) = random_lattice(rng);
    let q = cohomology(&x).herbrand_q;
    ensure(q == Some(c as i64 - b as i64), || format!("q = {q:?}, expected {}", c as i64 - b as i64))
}

fn lattice_divisible(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (_, x) = random_lattice(rng);
    let a = character_of(&x).map_err(|e| e.to_string())?;
    let b = divisible_character_of(&x).map_err(|e| e.to_string())?;
    ensure(a == b && a.degree() == x.rank() as i64, || format!("{a} vs {b} at rank {}", x.rank()))
}

fn prime_extension(rng: &mut ChaCha8Rng) -> Extension {
    let d = gen::random_descriptor(rng, &DescriptorOptions::default(), "verify");
    Extension::new(d).expect("generator yields valid descriptors")
}

fn tower_extension(rng: &mut ChaCha8Rng) -> Extension {
    let opts = DescriptorOptions {
        ells: vec![3, 5],
        max_m: 3,
        max_places: 3,
        ..DescriptorOptions::default()
    };
    Extension::new(gen::random_descriptor(rng, &opts, "verify")).expect("generator yields valid descriptors")
}

fn herbrand_opposite(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ext = prime_extension(rng);
    let sum = ext.herbrand_cl().map_err(|e| e.to_string())? + ext.herbrand_c().map_err(|e| e.to_string())?;
    ensure(sum.is_zero(), || format!("{}: sum {sum}", ext.descriptor().to_json_pretty()))
}

fn admissible(ext: &Extension) -> Vec<Extension> {
    gen::admissible_deltas(ext.descriptor())
        .into_iter()
        .filter_map(|d| ext.with_delta(d).ok())
        .collect()
}

fn cohomology_herbrand(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ext = prime_extension(rng);
    for e in admissible(&ext) {
        let r = e.cohomology_report().map_err(|e| e.to_string())?;
        let hc = e.herbrand_c().map_err(|e| e.to_string())?;
        ensure(r.q_c == hc, || format!("delta {}: q_c {} vs {hc}", r.delta, r.q_c))?;
        let hcl = e.herbrand_cl().map_err(|e| e.to_string())?;
        ensure(r.q_cl == hcl, || format!("delta {}: q_cl {} vs {hcl}", r.delta, r.q_cl))?;
    }
    Ok(())
}

fn scolie_exact(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ext = prime_extension(rng);
    for e in admissible(&ext) {
        let r = e.cohomology_report().map_err(|e| e.to_string())?;
        ensure(r.duality.holds == r.duality.case.predicts_duality(), || {
            format!(
                "delta {}: duality {} but case {}",
                r.delta,
                r.duality.holds,
                r.duality.case.label()
            )
        })?;
    }
    Ok(())
}

fn kida_degree(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ext = tower_extension(rng);
    let t = ext.transfer_t3().map_err(|e| e.to_string())?;
    let proj = ext.project_c1(&t.chi_l).degree;
    let kida = ext.kida_a1().map_err(|e| e.to_string())?;
    ensure(proj == kida, || format!("projection degree {proj}, Kida {kida}"))
}

fn tilde_consistent(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ext = tower_extension(rng);
    let t3 = ext.transfer_t3().map_err(|e| e.to_string())?;
    let t3p = ext.transfer_t3prime().map_err(|e| e.to_string())?;
    ensure(ext.tilde_l(&t3.chi_l) == t3p.chi_l, || "tilde of the transfer differs from the all-places transfer".into())
}

fn tower_transitivity(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ext = tower_extension(rng);
    let trace = tower::transfer_chain(&ext).map_err(|e| e.to_string())?;
    ensure(trace.agrees, || {
        format!("chain {} vs direct {}", trace.chain_value, trace.direct_value)
    })
}

fn tower_etape2(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ext = tower_extension(rng);
    let trace = tower::transfer_chain(&ext).map_err(|e| e.to_string())?;
    let direct = ext.transfer_t3().map_err(|e| e.to_string())?;
    for idx in 0..ext.group().order() {
        let dims = tower::fixed_degree_chain(&trace, idx);
        let row = tower::assemble_character(&ext, &dims).map_err(|e| e.to_string())?;
        ensure(row == direct.chi_l.row(idx), || {
            format!("row {}: assembled {row}, direct {}", ext.group().label(idx), direct.chi_l.row(idx))
        })?;
    }
    Ok(())
}
