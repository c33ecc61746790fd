use genus_calc::delta_chars::{DeltaCharacter, DeltaGroup};
use genus_calc::gee_chars::*;

fn spec(ell: u64, m: u32) -> CyclicGroupSpec {
    CyclicGroupSpec::new(ell, m).unwrap()
}

#[test]
fn reg_and_aug() {
    assert_eq!(reg(spec(3, 1)).degree(), 3);
    assert_eq!(reg(spec(3, 2)).degree(), 9);
    assert_eq!(reg(spec(3, 0)), GCharacter::unit(spec(3, 0)));
    assert!(aug(spec(3, 0)).is_zero());
    assert_eq!(aug(spec(5, 2)).degree(), 24);
}

#[test]
fn induction() {
    let s = spec(3, 2);
    assert_eq!(induce_unit_from(s, 0).unwrap(), reg(s));
    assert_eq!(induce_unit_from(s, 2).unwrap(), GCharacter::unit(s));
    let ind = induce_unit_from(s, 1).unwrap();
    assert_eq!(ind.coeffs(), &[1, 1, 0]);
    assert_eq!(ind.degree(), 3);
    assert!(induce_unit_from(s, 3).is_err());

    assert!(induce_aug_from(s, 0).unwrap().is_zero());
    assert_eq!(induce_aug_from(spec(3, 1), 1).unwrap(), aug(spec(3, 1)));
    let rho = induce_aug_from(s, 1).unwrap();
    assert_eq!(rho, GCharacter::psi(s, 2));
    assert_eq!(rho.degree(), 6);
}

#[test]
fn induced_character_from_explicit_z9_characters() {
    // Degree-one characters of Z/9 are k -> zeta^(a k). Ind_H^G 1 for
    // H = <3> of order 3 contains those with a*3 = 0 mod 9. psi_i collects
    // the a of exact order 3^i.
    let s = spec(3, 2);
    let mut coeffs = vec![0i64; 3];
    for a in 0..9u32 {
        if (a * 3) % 9 == 0 {
            let order = 9 / num_integer::gcd(a, 9);
            let i = match order {
                1 => 0,
                3 => 1,
                _ => 2,
            };
            coeffs[i] += 1;
        }
    }
    // each psi_i appears with its full Galois orbit, so normalise by degree
    for (i, c) in coeffs.iter_mut().enumerate() {
        *c /= s.psi_degree(i);
    }
    assert_eq!(induce_unit_from(s, 1).unwrap().coeffs(), coeffs.as_slice());
}

#[test]
fn multiplicities() {
    let s = spec(3, 1);
    assert_eq!(
        solve_multiplicities(s, &[1, 1]).unwrap(),
        (GCharacter::unit(s), true)
    );
    assert_eq!(solve_multiplicities(s, &[0, 2]).unwrap(), (aug(s), true));
    assert!(matches!(
        solve_multiplicities(s, &[0, 1]),
        Err(GeeError::InconsistentDimensions { .. })
    ));
    let s2 = spec(3, 2);
    assert_eq!(solve_multiplicities(s2, &[1, 3, 9]).unwrap().0, reg(s2));
    let (virt, genuine) = solve_multiplicities(s, &[1, -1]).unwrap();
    assert_eq!(virt.coeffs(), &[1, -1]);
    assert!(!genuine);
}

#[test]
fn dg_plumbing() {
    let g = DeltaGroup::quadratic(3).unwrap();
    let omega = DeltaCharacter::omega(&g);
    let s = spec(3, 2);
    let x = dg_combine(&omega, &reg(s)).unwrap();
    assert_eq!(x.degree_g(), &omega * 9);
    let one = DeltaCharacter::one(&g);
    assert_eq!(dg_combine(&one, &aug(s)).unwrap().degree_delta(), aug(s));
    let chi = DeltaCharacter::from_coeffs(&g, vec![2, 3]);
    assert_eq!(dg_combine(&chi, &GCharacter::unit(s)).unwrap().degree(), 5);
    let g5 = DeltaGroup::quadratic(5).unwrap();
    assert!(dg_combine(&DeltaCharacter::one(&g5), &reg(s)).is_err());
}

#[test]
fn json_forms() {
    let c: GCharacter = serde_json::from_str(r#"{"ell":3,"m":2,"coeffs":[1,0,2]}"#).unwrap();
    assert_eq!(c.degree(), 13);
    assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"ell":3,"m":2,"coeffs":[1,0,2]}"#);
    assert!(serde_json::from_str::<GCharacter>(r#"{"ell":3,"m":2,"coeffs":[1]}"#).is_err());
    assert!(serde_json::from_str::<GCharacter>(r#"{"ell":4,"m":1,"coeffs":[1,1]}"#).is_err());
}
