use genus_calc::genus::*;

fn worked() -> ExtensionDescriptor {
    serde_json::from_str(
        r#"{"schema":"genus-calc/1","id":"w","delta_group":{"ell":3,"elementary_divisors":[2],
        "tau_bar":[1],"omega":[1],"delta_prime_gens":[]},"g":{"ell":3,"m":1},
        "lambda_K":{"coeffs":{"(1)":1}},"places":[{"name":"p","above_ell":false,
        "delta_dec":[],"g_dec_exp":1}],"mu_zero":true}"#,
    )
    .unwrap()
}

#[test]
fn worked_descriptor_is_valid_and_forces_delta() {
    let e = Extension::new(worked()).unwrap();
    assert_eq!(e.delta(), Some(1));
    assert!(e.places()[0].split_in_k);
}

#[test]
fn omega_parity_rule() {
    let mut d = worked();
    d.delta_group.omega = vec![0];
    assert_eq!(Extension::validate(&d).rules(), vec!["OMEGA_PARITY"]);
}

#[test]
fn delta_norm_rule() {
    let mut d = worked();
    d.delta_flag = Some(0);
    assert_eq!(Extension::validate(&d).rules(), vec!["DELTA_NORM"]);
    let mut d = worked();
    d.places.clear();
    d.delta_flag = Some(1);
    assert_eq!(Extension::validate(&d).rules(), vec!["DELTA_NORM"]);
}

#[test]
fn empty_places_valid() {
    let mut d = worked();
    d.places.clear();
    d.delta_flag = Some(0);
    assert!(Extension::validate(&d).valid);
}

#[test]
fn structural_rules() {
    let mut d = worked();
    d.places.push(d.places[0].clone());
    d.places[1].g_dec_exp = 2;
    let rules = Extension::validate(&d).rules().join(",");
    assert!(rules.contains("DUPLICATE_PLACE"));
    assert!(rules.contains("DECOMPOSITION_EXPONENT"));
    let mut d = worked();
    d.places[0].delta_dec = vec![vec![1]];
    assert_eq!(Extension::validate(&d).rules(), vec!["TAME_ROOTS_OF_UNITY"]);
    let mut d = worked();
    d.lambda_k.coeffs.insert("(0)".into(), 1);
    assert_eq!(Extension::validate(&d).rules(), vec!["LAMBDA_SUPPORT"]);
}

#[test]
fn schema_errors() {
    assert!(matches!(
        ExtensionDescriptor::from_json(r#"{"id":"x"}"#),
        Err(SchemaError::Json(_))
    ));
    let mut text = serde_json::to_value(worked()).unwrap();
    text["schema"] = "genus-calc/0".into();
    assert!(matches!(
        ExtensionDescriptor::from_json(&text.to_string()),
        Err(SchemaError::Version(_))
    ));
    text["schema"] = SCHEMA.into();
    text["extra"] = 1.into();
    assert!(ExtensionDescriptor::from_json(&text.to_string()).is_err());
}
