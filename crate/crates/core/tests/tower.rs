use genus_calc::gee_chars::{reg, CyclicGroupSpec, GCharacter};
use genus_calc::genus::{Extension, ExtensionDescriptor, SCHEMA};
use genus_calc::tower::*;
use serde_json::json;

fn ext(ell: u64, m: u32, lambda: i64, js: &[u32]) -> Extension {
    let places: Vec<_> = js
        .iter()
        .enumerate()
        .map(|(i, j)| json!({"name": format!("q{i}"), "above_ell": false, "delta_dec": [], "g_dec_exp": j}))
        .collect();
    let d = json!({
        "schema": SCHEMA, "id": "tower",
        "delta_group": {"ell": ell, "elementary_divisors": [2], "tau_bar": [1], "omega": [1], "delta_prime_gens": []},
        "g": {"ell": ell, "m": m}, "lambda_K": {"coeffs": {"(1)": lambda}}, "places": places, "mu_zero": true,
    });
    Extension::new(ExtensionDescriptor::from_json(&d.to_string()).unwrap()).unwrap()
}

#[test]
fn single_step_is_the_descriptor() {
    let e = ext(3, 1, 1, &[1, 0]);
    let steps = decompose(&e).unwrap();
    assert_eq!(steps.len(), 1);
    let js: Vec<u32> = steps[0].places.iter().map(|p| p.local_j).collect();
    assert_eq!(js, vec![1, 0]);
    assert!(steps[0].places.iter().all(|p| p.count == 1));
}

#[test]
fn undecomposed_and_split_places() {
    let steps = decompose(&ext(3, 2, 1, &[2, 0])).unwrap();
    let at = |k: usize, i: usize| (steps[k].places[i].count, steps[k].places[i].local_j);
    assert_eq!((at(0, 0), at(1, 0)), ((1, 1), (1, 1)));
    assert_eq!((at(0, 1), at(1, 1)), ((1, 0), (3, 0)));
}

#[test]
fn counts_are_conserved() {
    for m in 1..=3u32 {
        for j in 0..=m {
            let e = ext(5, m, 1, &[j]);
            let steps = decompose(&e).unwrap();
            let mut count = 1u64;
            for s in &steps {
                let p = &s.places[0];
                assert_eq!(p.count, count);
                count *= 5u64.pow(1 - p.local_j);
            }
            assert_eq!(count, 5u64.pow(m - j));
            assert_eq!(steps.iter().map(|s| s.places[0].local_j).sum::<u32>(), j);
        }
    }
}

#[test]
fn trivial_tower_rejected() {
    assert_eq!(decompose(&ext(3, 0, 1, &[])).unwrap_err(), TowerError::Trivial);
}

#[test]
fn chain_values() {
    let t = transfer_chain(&ext(3, 2, 1, &[2])).unwrap();
    let per_step: Vec<i64> = t.steps.iter().map(|s| s.lambda_degree).collect();
    assert_eq!(per_step, vec![3, 9]);
    assert_eq!((t.chain_value, t.direct_value), (9, 9));

    // F_1 is the decomposition field of the place: it splits there and ramifies above
    let t = transfer_chain(&ext(3, 2, 1, &[1])).unwrap();
    let per_step: Vec<i64> = t.steps.iter().map(|s| s.lambda_degree).collect();
    assert_eq!(per_step, vec![1, 7]);
    assert!(t.agrees);

    let t = transfer_chain(&ext(3, 2, 1, &[])).unwrap();
    assert!(t.steps.iter().all(|s| s.lambda_degree == 1));
}

#[test]
fn assemble_examples() {
    let e = ext(3, 1, 1, &[1]);
    let s = CyclicGroupSpec { ell: 3, m: 1 };
    let chi = assemble_character(&e, &[1, 3]).unwrap();
    assert_eq!(chi, reg(s));
    let omega_row = e.transfer_t3().unwrap().chi_l.row(1);
    assert_eq!(chi, omega_row);

    let e2 = ext(3, 2, 1, &[]);
    let s2 = e2.g();
    assert_eq!(assemble_character(&e2, &[1, 1, 1]).unwrap(), GCharacter::unit(s2));
    assert_eq!(assemble_character(&e2, &[2, 2, 2]).unwrap(), &GCharacter::unit(s2) * 2);
    assert_eq!(assemble_character(&e2, &[1, 3, 9]).unwrap(), reg(s2));
    assert!(assemble_character(&e2, &[1, 2, 9]).is_err());
}

#[test]
fn fixed_degree_chain_rebuilds_rows() {
    let e = ext(5, 3, 2, &[1, 3, 0, 2]);
    let t = transfer_chain(&e).unwrap();
    let direct = e.transfer_t3().unwrap();
    for idx in 0..2 {
        let dims = fixed_degree_chain(&t, idx);
        assert_eq!(dims.len(), 4);
        assert_eq!(assemble_character(&e, &dims).unwrap(), direct.chi_l.row(idx));
    }
}
