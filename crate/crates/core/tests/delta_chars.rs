use std::sync::Arc;

use genus_calc::delta_chars::*;

fn z2() -> Arc<DeltaGroup> {
    DeltaGroup::quadratic(3).unwrap()
}

fn z2xz3() -> Arc<DeltaGroup> {
    DeltaGroup::shared(DeltaGroupSpec {
        ell: 7,
        elementary_divisors: vec![2, 3],
        tau_bar: vec![1, 0],
        omega: vec![1, 1],
        delta_prime_gens: vec![vec![0, 1]],
    })
    .unwrap()
}

fn klein() -> Arc<DeltaGroup> {
    DeltaGroup::shared(DeltaGroupSpec {
        ell: 3,
        elementary_divisors: vec![2, 2],
        tau_bar: vec![1, 0],
        omega: vec![1, 1],
        delta_prime_gens: vec![vec![0, 1]],
    })
    .unwrap()
}

#[test]
fn irreducible_counts() {
    assert_eq!(irreducibles(&z2()).len(), 2);
    assert_eq!(irreducibles(&z2xz3()).len(), 6);
    let z4 = DeltaGroup::shared(DeltaGroupSpec {
        ell: 5,
        elementary_divisors: vec![4],
        tau_bar: vec![2],
        omega: vec![1],
        delta_prime_gens: vec![vec![2]],
    });
    // tau_bar = 2 lies in <2>, so this choice of Delta' is rejected
    assert_eq!(z4.unwrap_err(), DeltaError::TauInDeltaPrime);
    let z4 = DeltaGroup::shared(DeltaGroupSpec {
        ell: 5,
        elementary_divisors: vec![4],
        tau_bar: vec![2],
        omega: vec![1],
        delta_prime_gens: vec![vec![1]],
    });
    // Z/4 has a single index-2 subgroup, which contains the only involution
    assert!(z4.is_err());
}

#[test]
fn z4_generator_character_has_order_four() {
    // Z/4 with ell = 5: there is no valid tau_bar/Delta' pair, so only
    // inspect the dual group arithmetic through a valid Z/2 x Z/4 shape.
    let g = DeltaGroup::shared(DeltaGroupSpec {
        ell: 5,
        elementary_divisors: vec![2, 4],
        tau_bar: vec![1, 0],
        omega: vec![1, 1],
        delta_prime_gens: vec![vec![0, 1]],
    })
    .unwrap();
    let chars = irreducibles(&g);
    assert_eq!(chars.len(), 8);
    let gen = g.index_of(&[0, 1]);
    let mut acc = 0;
    let mut order = 0;
    loop {
        acc = g.product_index(acc, gen);
        order += 1;
        if acc == 0 {
            break;
        }
    }
    assert_eq!(order, 4);
}

#[test]
fn induce_unit_examples() {
    let g = z2();
    let full = DeltaSubgroup::full(&g);
    assert_eq!(induce_unit(&g, &full).unwrap(), DeltaCharacter::one(&g));
    let triv = DeltaSubgroup::trivial(&g);
    let reg = induce_unit(&g, &triv).unwrap();
    assert_eq!(reg.coeffs(), &[1, 1]);
    assert_eq!(reg.degree(), 2);

    let k = klein();
    let h = DeltaSubgroup::new(&k, vec![vec![1, 0]]).unwrap();
    let ind = induce_unit(&k, &h).unwrap();
    // characters killing (1,0): exponents (0,0) and (0,1)
    let mut expected = DeltaCharacter::zero(&k);
    for i in 0..4 {
        let e = k.exponents(i);
        if e[0] == 0 {
            expected = expected + DeltaCharacter::irreducible(&k, i);
        }
    }
    assert_eq!(ind, expected);
    assert_eq!(ind.degree(), 2);
}

#[test]
fn induce_unit_rejects_foreign_elements() {
    let g = z2();
    let k = klein();
    let h = DeltaSubgroup::new(&k, vec![vec![1, 1]]).unwrap();
    assert!(matches!(induce_unit(&g, &h), Err(DeltaError::InvalidSubgroup(_))));
    assert!(DeltaSubgroup::new(&g, vec![vec![2]]).is_err());
}

#[test]
fn mirror_examples() {
    let g = z2xz3();
    let one = DeltaCharacter::one(&g);
    let omega = DeltaCharacter::omega(&g);
    assert_eq!(one.mirror(), omega);
    assert_eq!(omega.mirror(), one);
    let chi = DeltaCharacter::from_coeffs(&g, vec![3, -1, 0, 2, 5, -4]);
    assert_eq!(chi.mirror().mirror(), chi);
}

#[test]
fn split_examples() {
    let g = z2();
    let omega = DeltaCharacter::omega(&g);
    let one = DeltaCharacter::one(&g);
    assert_eq!(omega.split_real_imag(), (DeltaCharacter::zero(&g), omega.clone()));
    assert_eq!(one.split_real_imag(), (one.clone(), DeltaCharacter::zero(&g)));
    let reg = &one + &omega;
    assert_eq!(reg.split_real_imag(), (one, omega));
}

#[test]
fn join_examples() {
    let g = z2xz3();
    let one = DeltaCharacter::one(&g);
    let zero = DeltaCharacter::zero(&g);
    assert_eq!((&one - &one).join(&zero), zero);
    let p1 = DeltaCharacter::irreducible(&g, 1);
    let p2 = DeltaCharacter::irreducible(&g, 2);
    let x = &(&p1 * 2) - &p2;
    assert_eq!(x.join(&zero), &p1 * 2);
    let y = DeltaCharacter::from_coeffs(&g, vec![-2, 4, 0, 1, -1, 3]);
    assert_eq!(x.join(&y), y.join(&x));
}

#[test]
fn inner_examples() {
    let g = z2xz3();
    let omega = DeltaCharacter::omega(&g);
    assert_eq!(omega.inner(&omega), 1);
    let reg = induce_unit(&g, &DeltaSubgroup::trivial(&g)).unwrap();
    assert_eq!(DeltaCharacter::one(&g).inner(&reg), 1);
    // omega = (1,1) is nontrivial on Delta' = <(0,1)>
    let ind = induce_unit(&g, g.delta_prime()).unwrap();
    assert_eq!(omega.inner(&ind), 0);
    let z = z2();
    let ind = induce_unit(&z, z.delta_prime()).unwrap();
    assert_eq!(DeltaCharacter::omega(&z).inner(&ind), 1);
}

#[test]
fn projection_examples() {
    let g = z2xz3();
    let chi = DeltaCharacter::from_coeffs(&g, vec![1, 2, 3, 4, 5, 6]);
    assert_eq!(chi.project_trivial_on(&DeltaSubgroup::trivial(&g)), chi);
    let only_one = chi.project_trivial_on(&DeltaSubgroup::full(&g));
    assert_eq!(only_one, DeltaCharacter::one(&g));
    let z = z2();
    let sgn3 = &DeltaCharacter::omega(&z) * 3;
    assert_eq!(sgn3.project_trivial_on(&DeltaSubgroup::trivial(&z)), sgn3);
}

#[test]
fn group_validation_rules() {
    let base = DeltaGroupSpec {
        ell: 7,
        elementary_divisors: vec![2, 3],
        tau_bar: vec![1, 0],
        omega: vec![1, 1],
        delta_prime_gens: vec![vec![0, 1]],
    };
    let mut s = base.clone();
    s.omega = vec![0, 1];
    assert_eq!(DeltaGroup::new(s).unwrap_err().rule(), "OMEGA_PARITY");
    let mut s = base.clone();
    s.ell = 9;
    assert_eq!(DeltaGroup::new(s).unwrap_err().rule(), "ELL_ODD_PRIME");
    let mut s = base.clone();
    s.elementary_divisors = vec![2, 4];
    s.tau_bar = vec![1, 0];
    assert_eq!(DeltaGroup::new(s).unwrap_err().rule(), "DELTA_EXPONENT");
    let mut s = base.clone();
    s.tau_bar = vec![0, 1];
    assert_eq!(DeltaGroup::new(s).unwrap_err().rule(), "TAU_ORDER");
    let mut s = base.clone();
    s.delta_prime_gens = vec![];
    assert_eq!(DeltaGroup::new(s).unwrap_err().rule(), "DELTA_PRIME_INDEX");
    let mut s = base;
    s.tau_bar = vec![1, 3];
    assert_eq!(DeltaGroup::new(s).unwrap_err().rule(), "DELTA_ELEMENT");
}

#[test]
fn json_shape() {
    let g = z2xz3();
    let chi = DeltaCharacter::from_coeffs(&g, vec![1, 0, 0, 2, 0, 0]);
    let text = serde_json::to_string(&chi).unwrap();
    assert_eq!(text, r#"{"coeffs":{"(0,0)":1,"(1,0)":2}}"#);
    let repr: DeltaCharacterRepr = serde_json::from_str(&text).unwrap();
    assert_eq!(DeltaCharacter::from_repr(&g, &repr).unwrap(), chi);
    let bad: DeltaCharacterRepr = serde_json::from_str(r#"{"coeffs":{"(2,0)":1}}"#).unwrap();
    assert!(DeltaCharacter::from_repr(&g, &bad).is_err());
    let spec: DeltaGroupSpec = serde_json::from_str(
        r#"{"ell":7,"elementary_divisors":[2,3],"tau_bar":[1,0],"omega":[1,1],"delta_prime_gens":[[0,1]]}"#,
    )
    .unwrap();
    assert_eq!(&spec, g.spec());
}
