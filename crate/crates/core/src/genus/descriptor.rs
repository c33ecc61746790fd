//! Extension descriptors: the JSON input format and its validation.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::delta_chars::{
    induce_unit, DeltaCharacter, DeltaCharacterRepr, DeltaGroup, DeltaGroupSpec, DeltaSubgroup, Element,
};
use crate::gee_chars::CyclicGroupSpec;

pub const SCHEMA: &str = "genus-calc/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceDescriptor {
    pub name: String,
    pub above_ell: bool,
    /// Generators of the decomposition group Δ_p in K′∞/K⁺∞.
    pub delta_dec: Vec<Element>,
    /// j with |G_p| = ℓʲ, the decomposition group in L⁺∞/K⁺∞.
    pub g_dec_exp: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDescriptor {
    pub schema: String,
    pub id: String,
    pub delta_group: DeltaGroupSpec,
    pub g: CyclicGroupSpec,
    #[serde(rename = "lambda_K")]
    pub lambda_k: DeltaCharacterRepr,
    #[serde(rename = "lambda_tilde_K", default, skip_serializing_if = "Option::is_none")]
    pub lambda_tilde_k: Option<DeltaCharacterRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_flag: Option<u8>,
    #[serde(default)]
    pub places: Vec<PlaceDescriptor>,
    pub mu_zero: bool,
    #[serde(default)]
    pub leopoldt: bool,
    #[serde(default)]
    pub gross_kuzmin: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("descriptor is not valid JSON for schema {SCHEMA}: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema {0:?}, expected {SCHEMA:?}")]
    Version(String),
}

impl ExtensionDescriptor {
    /// Parses a descriptor, rejecting unknown keys and foreign schema tags.
    pub fn from_json(text: &str) -> Result<Self, SchemaError> {
        let d: ExtensionDescriptor = serde_json::from_str(text)?;
        if d.schema != SCHEMA {
            return Err(SchemaError::Version(d.schema));
        }
        Ok(d)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }
}

/// The conjectural hypotheses a computation is conditional on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub mu_zero: bool,
    pub leopoldt: bool,
    pub gross_kuzmin: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub id: String,
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn rules(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.rule.as_str()).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "descriptor {:?}:", self.id)?;
        for v in &self.violations {
            write!(f, " [{}] {};", v.rule, v.message)?;
        }
        Ok(())
    }
}

/// A place of K⁺∞ with its derived characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Place {
    pub name: String,
    pub above_ell: bool,
    pub dec: DeltaSubgroup,
    pub j: u32,
    /// χ_p = Ind_{Δ_p}^Δ 1.
    pub chi: DeltaCharacter,
    /// χ_p⊖.
    pub chi_minus: DeltaCharacter,
    /// Δ_p ⊆ Δ′: p splits in K∞/K⁺∞.
    pub split_in_k: bool,
}

impl Place {
    pub fn tame(&self) -> bool {
        !self.above_ell
    }

    /// Tame places have decomposition equal to inertia; above ℓ the
    /// decomposition exponent is likewise read as the ramification marker.
    pub fn ramified(&self) -> bool {
        self.j >= 1
    }
}

/// A validated descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub(crate) desc: ExtensionDescriptor,
    pub(crate) group: Arc<DeltaGroup>,
    pub(crate) g: CyclicGroupSpec,
    pub(crate) lambda_k: DeltaCharacter,
    pub(crate) lambda_tilde_k: Option<DeltaCharacter>,
    pub(crate) delta: Option<u8>,
    pub(crate) places: Vec<Place>,
}

struct Collector {
    violations: Vec<Violation>,
}

impl Collector {
    fn push(&mut self, rule: &str, message: impl Into<String>) {
        self.violations.push(Violation {
            rule: rule.to_string(),
            message: message.into(),
        });
    }
}

fn is_imaginary_support(chi: &DeltaCharacter) -> bool {
    chi.real_part().is_zero()
}

impl Extension {
    pub fn new(desc: ExtensionDescriptor) -> Result<Self, ValidationReport> {
        let mut c = Collector {
            violations: Vec::new(),
        };
        let fail = |c: Collector, desc: &ExtensionDescriptor| ValidationReport {
            id: desc.id.clone(),
            valid: false,
            violations: c.violations,
        };

        let delta_errors = DeltaGroup::violations(&desc.delta_group);
        for e in &delta_errors {
            c.push(e.rule(), e.to_string());
        }
        if let Err(e) = desc.g.check() {
            c.push("G_SPEC", e.to_string());
        }
        if desc.g.ell != desc.delta_group.ell {
            c.push(
                "ELL_MISMATCH",
                format!("g.ell = {} but delta_group.ell = {}", desc.g.ell, desc.delta_group.ell),
            );
        }
        if !c.violations.is_empty() {
            return Err(fail(c, &desc));
        }
        let group = Arc::new(DeltaGroup::new(desc.delta_group.clone()).expect("checked above"));
        let g = desc.g;

        let lambda_k = match DeltaCharacter::from_repr(&group, &desc.lambda_k) {
            Ok(l) => {
                if !is_imaginary_support(&l) {
                    c.push("LAMBDA_SUPPORT", format!("lambda_K = {l} has a real component"));
                }
                if !l.is_genuine() {
                    c.push("LAMBDA_GENUINE", format!("lambda_K = {l} has a negative coefficient"));
                }
                Some(l)
            }
            Err(e) => {
                c.push(e.rule(), format!("lambda_K: {e}"));
                None
            }
        };
        let lambda_tilde_k = match &desc.lambda_tilde_k {
            None => None,
            Some(repr) => match DeltaCharacter::from_repr(&group, repr) {
                Ok(l) => {
                    if !is_imaginary_support(&l) {
                        c.push("LAMBDA_SUPPORT", format!("lambda_tilde_K = {l} has a real component"));
                    }
                    if !l.is_genuine() {
                        c.push("LAMBDA_GENUINE", format!("lambda_tilde_K = {l} has a negative coefficient"));
                    }
                    Some(l)
                }
                Err(e) => {
                    c.push(e.rule(), format!("lambda_tilde_K: {e}"));
                    None
                }
            },
        };

        let omega_idx = group.omega_index();
        let mut names = BTreeSet::new();
        let mut places = Vec::new();
        for p in &desc.places {
            if !names.insert(p.name.as_str()) {
                c.push("DUPLICATE_PLACE", format!("place name {:?} repeated", p.name));
            }
            if p.g_dec_exp > g.m {
                c.push(
                    "DECOMPOSITION_EXPONENT",
                    format!("place {:?}: g_dec_exp {} exceeds m = {}", p.name, p.g_dec_exp, g.m),
                );
            }
            let dec = match DeltaSubgroup::new(&group, p.delta_dec.clone()) {
                Ok(h) => h,
                Err(e) => {
                    c.push(e.rule(), format!("place {:?}: {e}", p.name));
                    continue;
                }
            };
            let chi = induce_unit(&group, &dec).expect("subgroup checked");
            let chi_minus = chi.imag_part();
            let split_in_k = dec.is_subgroup_of(group.delta_prime());
            let place = Place {
                name: p.name.clone(),
                above_ell: p.above_ell,
                dec,
                j: p.g_dec_exp,
                chi,
                chi_minus,
                split_in_k,
            };
            // tame ℓ-ramification needs the ℓ-th roots of unity in the completion
            if place.tame() && place.ramified() && !group.is_trivial_on(omega_idx, &place.dec) {
                c.push(
                    "TAME_ROOTS_OF_UNITY",
                    format!(
                        "place {:?} is tamely ramified but omega is nontrivial on its decomposition group",
                        p.name
                    ),
                );
            }
            places.push(place);
        }

        let mut delta = desc.delta_flag;
        if let Some(d) = delta {
            if d > 1 {
                c.push("DELTA_FLAG", format!("delta_flag = {d} is not 0 or 1"));
                delta = None;
            }
        }
        let tame_ramified = places.iter().any(|p| p.tame() && p.ramified());
        let any_ramified = places.iter().any(Place::ramified);
        let omega = DeltaCharacter::omega(&group);
        let ramified_minus: i64 = places
            .iter()
            .filter(|p| p.ramified())
            .map(|p| p.chi_minus.inner(&omega))
            .sum();
        if tame_ramified {
            match delta {
                Some(0) => c.push(
                    "DELTA_NORM",
                    "a tamely ramified place forces delta = 1: primitive roots of unity are not local norms there",
                ),
                _ => delta = Some(1),
            }
        } else if !any_ramified {
            match delta {
                Some(1) => c.push("DELTA_NORM", "without ramification zeta is a norm, so delta = 0"),
                _ => delta = Some(0),
            }
        } else if delta == Some(1) && ramified_minus == 0 {
            c.push(
                "DELTA_NORM",
                "delta = 1 needs a ramified place whose imaginary character contains omega",
            );
        }

        if !c.violations.is_empty() {
            return Err(fail(c, &desc));
        }
        Ok(Extension {
            lambda_k: lambda_k.expect("no violations"),
            lambda_tilde_k,
            delta,
            group,
            g,
            places,
            desc,
        })
    }

    /// Validation report for a raw descriptor.
    pub fn validate(desc: &ExtensionDescriptor) -> ValidationReport {
        match Extension::new(desc.clone()) {
            Ok(_) => ValidationReport {
                id: desc.id.clone(),
                valid: true,
                violations: Vec::new(),
            },
            Err(r) => r,
        }
    }

    pub fn descriptor(&self) -> &ExtensionDescriptor {
        &self.desc
    }

    pub fn id(&self) -> &str {
        &self.desc.id
    }

    pub fn group(&self) -> &Arc<DeltaGroup> {
        &self.group
    }

    pub fn g(&self) -> CyclicGroupSpec {
        self.g
    }

    pub fn lambda_k(&self) -> &DeltaCharacter {
        &self.lambda_k
    }

    pub fn lambda_tilde_k(&self) -> Option<&DeltaCharacter> {
        self.lambda_tilde_k.as_ref()
    }

    /// δ after validation: forced by the ramification pattern or user-supplied.
    pub fn delta(&self) -> Option<u8> {
        self.delta
    }

    pub fn places(&self) -> &[Place] {
        &self.places
    }

    pub fn hypotheses(&self) -> Hypotheses {
        Hypotheses {
            mu_zero: self.desc.mu_zero,
            leopoldt: self.desc.leopoldt,
            gross_kuzmin: self.desc.gross_kuzmin,
        }
    }

    /// A sub-extension sharing Δ: used for the layers of a tower, whose
    /// intermediate λ may be virtual and so bypasses input validation.
    pub(crate) fn derived(&self, g: CyclicGroupSpec, lambda: DeltaCharacter, places: Vec<Place>) -> Extension {
        let mut desc = self.desc.clone();
        desc.g = g;
        desc.lambda_k = lambda.to_repr();
        desc.lambda_tilde_k = None;
        desc.delta_flag = None;
        desc.places = places
            .iter()
            .map(|p| PlaceDescriptor {
                name: p.name.clone(),
                above_ell: p.above_ell,
                delta_dec: p.dec.generators().to_vec(),
                g_dec_exp: p.j,
            })
            .collect();
        Extension {
            desc,
            group: Arc::clone(&self.group),
            g,
            lambda_k: lambda,
            lambda_tilde_k: None,
            delta: None,
            places,
        }
    }

    /// The same extension with a different δ, if that value is admissible.
    pub fn with_delta(&self, delta: u8) -> Result<Extension, ValidationReport> {
        let mut desc = self.desc.clone();
        desc.delta_flag = Some(delta);
        Extension::new(desc)
    }
}
