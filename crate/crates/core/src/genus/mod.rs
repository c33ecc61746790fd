//! Genus formulas evaluated on extension descriptors.
//!
//! Throughout, L∞/K∞ is an ℓ-extension with group G cyclic of order ℓᵐ,
//! Δ = Gal(K′∞/K⁺∞) and every place datum carries its decomposition group
//! Δ_p in K′∞/K⁺∞ and its decomposition exponent j in L⁺∞/K⁺∞.

mod descriptor;

use std::collections::BTreeSet;

use serde::Serialize;

pub use descriptor::{
    Extension, ExtensionDescriptor, Hypotheses, Place, PlaceDescriptor, SchemaError, ValidationReport,
    Violation, SCHEMA,
};

use crate::delta_chars::{induce_unit, DeltaCharacter};
use crate::gee_chars::{dg_combine, induce_aug_from, induce_unit_from, reg, DGCharacter, GCharacter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("the computation assumes mu = 0, but the descriptor does not assert it")]
    MuNonZero,
    #[error("delta is not determined by the ramification pattern and was not supplied")]
    NeedsDelta,
    #[error("this formula is stated for G of prime order (m = 1), got m = {0}")]
    Regime(u32),
    #[error("unknown place {0:?}")]
    UnknownPlace(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub code: String,
    pub message: String,
}

impl Warning {
    fn new(code: &str, message: impl Into<String>) -> Self {
        Warning {
            code: code.to_string(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct P4Translation {
    /// λ_{ℓ} = λ − χ_ℓ⊖
    pub lambda_ell_decomposed: DeltaCharacter,
    /// λ^{ℓ} = λ* + (χ_ℓ⊕ − 1)*
    pub lambda_ell_infinitesimal: DeltaCharacter,
    pub warnings: Vec<Warning>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T1Translation {
    pub case_i: DeltaCharacter,
    pub case_ii: DeltaCharacter,
    pub case_iii: DeltaCharacter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ScolieCase {
    #[serde(rename = "tame")]
    Tame,
    #[serde(rename = "sauvage-exceptionnel")]
    WildExceptional,
    /// One split wild place, but the local two-place and non-norm proviso fails.
    #[serde(rename = "conditional")]
    Conditional,
    #[serde(rename = "none")]
    None,
}

impl ScolieCase {
    pub fn label(self) -> &'static str {
        match self {
            ScolieCase::Tame => "tame",
            ScolieCase::WildExceptional => "sauvage-exceptionnel",
            ScolieCase::Conditional => "conditional",
            ScolieCase::None => "none",
        }
    }

    /// Whether the case asserts duality.
    pub fn predicts_duality(self) -> bool {
        matches!(self, ScolieCase::Tame | ScolieCase::WildExceptional)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Duality {
    pub holds: bool,
    pub case: ScolieCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub h1_cl: DeltaCharacter,
    pub h2_cl: DeltaCharacter,
    pub h1_c: DeltaCharacter,
    pub h2_c: DeltaCharacter,
    pub q_cl: DeltaCharacter,
    pub q_c: DeltaCharacter,
    pub delta: u8,
    pub delta_prime: u8,
    pub duality: Duality,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferResult {
    /// χ_L⊖ as a Δ × G character.
    pub chi_l: DGCharacter,
    /// The Δ-character of C_{L′∞}⊖.
    pub lambda_l: DeltaCharacter,
    pub lambda_l_degree: i64,
    pub warnings: Vec<Warning>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlacePairing {
    pub name: String,
    pub split_in_k: bool,
    /// ⟨χ_p, 1_{Δ′}^Δ⟩
    pub bare: i64,
    /// ⟨χ_p⊖, 1_{Δ′}^Δ⟩
    pub imaginary: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectionResult {
    pub character: GCharacter,
    pub degree: i64,
    /// ⟨ω, 1_{Δ′}^Δ⟩
    pub w: i64,
    pub pairings: Vec<PlacePairing>,
    /// Every ⊖ pairing is in {0,1} and equals the split indicator.
    pub imaginary_claim_holds: bool,
    /// Every bare pairing is in {0,1} and equals the split indicator.
    pub bare_claim_holds: bool,
    /// The projected character satisfies the displayed identity with ⊖ pairings.
    pub identity_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuzminReport {
    pub lambda_tilde_k_source: &'static str,
    /// Numeric formula over tame split ramified places.
    pub lambda_tilde_l: i64,
    /// Degree of the projection of the all-places transfer.
    pub transfer_degree: i64,
    /// transfer_degree − lambda_tilde_l; nonzero exactly when a split place above ℓ ramifies.
    pub mismatch: i64,
}

impl Extension {
    pub fn chi_of_place(&self, name: &str) -> Result<DeltaCharacter, EngineError> {
        self.places
            .iter()
            .find(|p| p.name == name)
            .map(|p| p.chi.clone())
            .ok_or_else(|| EngineError::UnknownPlace(name.to_string()))
    }

    /// Σ χ_p over the places satisfying `keep`.
    pub fn chi_sum(&self, keep: impl Fn(&Place) -> bool) -> DeltaCharacter {
        let mut acc = DeltaCharacter::zero(&self.group);
        for p in self.places.iter().filter(|p| keep(p)) {
            acc += &p.chi;
        }
        acc
    }

    /// Σ χ_p over a named set of places.
    pub fn chi_sum_named<S: AsRef<str>>(&self, names: &[S]) -> Result<DeltaCharacter, EngineError> {
        let mut acc = DeltaCharacter::zero(&self.group);
        for n in names {
            acc += &self.chi_of_place(n.as_ref())?;
        }
        Ok(acc)
    }

    fn chi_minus_sum(&self, keep: impl Fn(&Place) -> bool) -> DeltaCharacter {
        self.chi_sum(keep).imag_part()
    }

    /// χ_ℓ = Σ_{p|ℓ} χ_p.
    pub fn chi_ell(&self) -> DeltaCharacter {
        self.chi_sum(|p| p.above_ell)
    }

    fn omega(&self) -> DeltaCharacter {
        DeltaCharacter::omega(&self.group)
    }

    fn one(&self) -> DeltaCharacter {
        DeltaCharacter::one(&self.group)
    }

    /// 1_{Δ′}^Δ.
    pub fn delta_prime_induced(&self) -> DeltaCharacter {
        induce_unit(&self.group, self.group.delta_prime()).expect("Delta' lies in Delta")
    }

    /// w = ⟨ω, 1_{Δ′}^Δ⟩: 1 when K∞ contains the ℓ-th roots of unity.
    pub fn w(&self) -> i64 {
        self.omega().inner(&self.delta_prime_induced())
    }

    fn require_mu_zero(&self) -> Result<(), EngineError> {
        if self.desc.mu_zero {
            Ok(())
        } else {
            Err(EngineError::MuNonZero)
        }
    }

    fn require_prime(&self) -> Result<(), EngineError> {
        if self.g.m == 1 {
            Ok(())
        } else {
            Err(EngineError::Regime(self.g.m))
        }
    }

    /// λ_{ℓ} and λ^{ℓ} from λ. The descriptor's λ_K is the full λ, whose
    /// real component vanishes.
    pub fn translate_p4(&self) -> P4Translation {
        let chi_ell = self.chi_ell();
        let (plus, minus) = chi_ell.split_real_imag();
        let lambda = &self.lambda_k;
        let ldec = lambda - &minus;
        let linf = lambda.mirror() + (&plus - &self.one()).mirror();
        let mut warnings = Vec::new();
        if !ldec.is_genuine() {
            warnings.push(Warning::new(
                "NEGATIVE_LAMBDA_ELL",
                format!("lambda_{{l}} = {ldec} has a negative coefficient; the input is inconsistent"),
            ));
        }
        P4Translation {
            lambda_ell_decomposed: ldec,
            lambda_ell_infinitesimal: linf,
            warnings,
        }
    }

    /// The three λ^S_T identities. T only has to be admissible: places of T
    /// do not move λ.
    pub fn translate_t1<S: AsRef<str>>(&self, s: &[S], t: &[S]) -> Result<T1Translation, EngineError> {
        let s_set: BTreeSet<&str> = s.iter().map(AsRef::as_ref).collect();
        let t_set: BTreeSet<&str> = t.iter().map(AsRef::as_ref).collect();
        if let Some(shared) = s_set.intersection(&t_set).next() {
            return Err(EngineError::Precondition(format!("place {shared:?} is in both S and T")));
        }
        for name in s_set.iter().chain(&t_set) {
            let p = self
                .places
                .iter()
                .find(|p| p.name == *name)
                .ok_or_else(|| EngineError::UnknownPlace(name.to_string()))?;
            if p.above_ell {
                return Err(EngineError::Precondition(format!("place {name:?} lies above ell")));
            }
        }
        let chi_s = self.chi_sum_named(s)?;
        let (s_plus, s_minus) = chi_s.split_real_imag();
        let lambda = &self.lambda_k;
        let extra = (&s_plus - &self.one()).positive_part().twist_omega();
        Ok(T1Translation {
            case_i: lambda.imag_part() + &extra,
            case_ii: (lambda - &self.chi_ell()).imag_part() + &extra,
            case_iii: lambda.mirror().real_part() + s_minus.twist_omega(),
        })
    }

    fn tame_ramified_minus(&self) -> DeltaCharacter {
        self.chi_minus_sum(|p| p.tame() && p.ramified())
    }

    /// Herbrand character of Cl⊖: Σ_{tame ramified} χ_p⊖ − ω.
    pub fn herbrand_cl(&self) -> Result<DeltaCharacter, EngineError> {
        self.require_prime()?;
        Ok(self.tame_ramified_minus() - self.omega())
    }

    /// Herbrand character of C⊖: ω − Σ_{tame ramified} χ_p⊖.
    pub fn herbrand_c(&self) -> Result<DeltaCharacter, EngineError> {
        self.require_prime()?;
        Ok(self.omega() - self.tame_ramified_minus())
    }

    /// δ′ = 0 exactly when some tamely ramified place makes the imaginary
    /// capitulation trivial, i.e. when ω occurs in a tame ramified χ_p⊖.
    pub fn delta_prime(&self) -> u8 {
        let omega = self.omega();
        let capitulation_killed = self
            .places
            .iter()
            .any(|p| p.tame() && p.ramified() && p.chi_minus.inner(&omega) > 0);
        if capitulation_killed {
            0
        } else {
            1
        }
    }

    /// The Scolie case, read off the ramification pattern and δ.
    pub fn scolie_case(&self) -> ScolieCase {
        let wild_minus = self.chi_minus_sum(|p| p.above_ell && p.ramified());
        if wild_minus.is_zero() {
            return ScolieCase::Tame;
        }
        let imaginary_ramified: Vec<&Place> = self
            .places
            .iter()
            .filter(|p| p.ramified() && !p.chi_minus.is_zero())
            .collect();
        match imaginary_ramified.as_slice() {
            [p] if p.above_ell => {
                if p.chi_minus == self.omega() && self.delta == Some(1) {
                    ScolieCase::WildExceptional
                } else {
                    ScolieCase::Conditional
                }
            }
            _ => ScolieCase::None,
        }
    }

    pub fn cohomology_report(&self) -> Result<CohomologyReport, EngineError> {
        self.require_prime()?;
        self.require_mu_zero()?;
        let delta = self.delta.ok_or(EngineError::NeedsDelta)?;
        let delta_prime = self.delta_prime();
        let omega = self.omega();
        let wild = self.chi_minus_sum(|p| p.above_ell && p.ramified());
        let tame = self.tame_ramified_minus();
        let all = self.chi_minus_sum(|p| p.ramified());
        let d = i64::from(delta);
        let dp = i64::from(delta_prime);
        let h1_cl = &omega * dp;
        let h2_cl = &tame - &(&omega * (1 - dp));
        let h1_c = &all - &(&omega * d);
        let h2_c = &wild + &(&omega * (1 - d));
        let holds = h1_c == h2_cl && h2_c == h1_cl;
        Ok(CohomologyReport {
            q_cl: &h2_cl - &h1_cl,
            q_c: &h2_c - &h1_c,
            h1_cl,
            h2_cl,
            h1_c,
            h2_c,
            delta,
            delta_prime,
            duality: Duality {
                holds,
                case: self.scolie_case(),
            },
        })
    }

    fn transfer_with(
        &self,
        base: &DeltaCharacter,
        keep: impl Fn(&Place) -> bool,
        bare: bool,
    ) -> DGCharacter {
        let omega = self.omega();
        let mut x = dg_combine(&(base - &omega), &reg(self.g)).expect("same ell");
        for p in self.places.iter().filter(|p| keep(p)) {
            let rho = induce_aug_from(self.g, p.j).expect("exponent validated");
            let chi = if bare { &p.chi } else { &p.chi_minus };
            x = x + dg_combine(chi, &rho).expect("same ell");
        }
        x + dg_combine(&omega, &GCharacter::unit(self.g)).expect("same ell")
    }

    fn transfer_result(&self, chi_l: DGCharacter) -> TransferResult {
        let mut warnings = Vec::new();
        for (r, i, a) in chi_l.negative_entries() {
            warnings.push(Warning::new(
                "NEGATIVE_COEFFICIENT",
                format!("coefficient {a} at ({}, psi_{i})", self.group.label(r)),
            ));
        }
        let lambda_l = chi_l.degree_g();
        TransferResult {
            lambda_l_degree: lambda_l.degree(),
            lambda_l,
            chi_l,
            warnings,
        }
    }

    /// χ_L⊖ = (λ_K − ω)·Reg_G + Σ_{p∤ℓ} χ_p⊖ ρ_p + ω·1_G.
    pub fn transfer_t3(&self) -> Result<TransferResult, EngineError> {
        self.require_mu_zero()?;
        Ok(self.transfer_result(self.transfer_with(&self.lambda_k, Place::tame, false)))
    }

    /// The same identity with the bare χ_p in place of χ_p⊖.
    pub fn transfer_t3_bare(&self) -> Result<TransferResult, EngineError> {
        self.require_mu_zero()?;
        Ok(self.transfer_result(self.transfer_with(&self.lambda_k, Place::tame, true)))
    }

    /// Projection onto the Δ′-invariant part: the G-character of C_{L∞}⊖.
    pub fn project_c1(&self, x: &DGCharacter) -> ProjectionResult {
        let group = &self.group;
        let character = x.sum_rows(|r| group.is_trivial_on(r, group.delta_prime()));
        let ind = self.delta_prime_induced();
        let w = self.w();
        let pairings: Vec<PlacePairing> = self
            .places
            .iter()
            .filter(|p| p.tame())
            .map(|p| PlacePairing {
                name: p.name.clone(),
                split_in_k: p.split_in_k,
                bare: p.chi.inner(&ind),
                imaginary: p.chi_minus.inner(&ind),
            })
            .collect();
        let claim = |v: i64, split: bool| v == i64::from(split);
        let imaginary_claim_holds = pairings.iter().all(|p| claim(p.imaginary, p.split_in_k));
        let bare_claim_holds = pairings.iter().all(|p| claim(p.bare, p.split_in_k));

        let g = self.g;
        let big_lambda = self.lambda_k.inner(&ind);
        let mut expected = &(reg(g) * (big_lambda - w)) + &(GCharacter::unit(g) * w);
        for (p, pairing) in self.places.iter().filter(|p| p.tame()).zip(&pairings) {
            let rho = induce_aug_from(g, p.j).expect("exponent validated");
            expected = &expected + &(rho * pairing.imaginary);
        }
        ProjectionResult {
            degree: character.degree(),
            identity_holds: expected == character,
            character,
            w,
            pairings,
            imaginary_claim_holds,
            bare_claim_holds,
        }
    }

    /// Σ over tame split places of (number of places above p) · (e − 1).
    fn tame_split_genus(&self) -> i64 {
        self.places
            .iter()
            .filter(|p| p.tame() && p.split_in_k && p.ramified())
            .map(|p| self.g.ell_pow(self.g.m - p.j) * (self.g.ell_pow(p.j) - 1))
            .sum()
    }

    /// λ_L = w + (λ_K − w)·ℓᵐ + Σ_P (e_P − 1), with λ_K read on the Δ′-invariant part.
    pub fn kida_a1(&self) -> Result<i64, EngineError> {
        self.require_mu_zero()?;
        let w = self.w();
        let big_lambda = self.lambda_k.inner(&self.delta_prime_induced());
        Ok(w + (big_lambda - w) * self.g.order() + self.tame_split_genus())
    }

    /// Same value for λ_{ℓ}⊕ of the real fields; recorded under Leopoldt.
    pub fn wingberg_a2(&self) -> Result<i64, EngineError> {
        self.kida_a1()
    }

    /// χ̃ = χ − Σ_{p|ℓ} χ_p⊖ ⊗ Ind_{G_p}^G 1, on the L side.
    pub fn tilde_l(&self, x: &DGCharacter) -> DGCharacter {
        let mut out = x.clone();
        for p in self.places.iter().filter(|p| p.above_ell) {
            let ind = induce_unit_from(self.g, p.j).expect("exponent validated");
            out = out - dg_combine(&p.chi_minus, &ind).expect("same ell");
        }
        out
    }

    /// χ̃ = χ − Σ_{p|ℓ} χ_p⊖, on the K side.
    pub fn tilde_k(&self, x: &DeltaCharacter) -> DeltaCharacter {
        x - &self.chi_minus_sum(|p| p.above_ell)
    }

    /// λ̃_K from the descriptor, or derived from λ_K.
    pub fn lambda_tilde_or_derived(&self) -> (DeltaCharacter, &'static str) {
        match &self.lambda_tilde_k {
            Some(l) => (l.clone(), "input"),
            None => (self.tilde_k(&self.lambda_k), "derived"),
        }
    }

    /// χ̃_L⊖ = (λ̃_K − ω)·Reg_G + Σ_p χ_p⊖ ρ_p + ω·1_G over every place.
    pub fn transfer_t3prime(&self) -> Result<TransferResult, EngineError> {
        self.require_mu_zero()?;
        let (base, _) = self.lambda_tilde_or_derived();
        Ok(self.transfer_result(self.transfer_with(&base, |_| true, false)))
    }

    /// Kuz'min's numeric formula next to the degree of the all-places
    /// transfer; the two are reported side by side, not reconciled.
    pub fn kuzmin_a3(&self) -> Result<KuzminReport, EngineError> {
        let (base, source) = self.lambda_tilde_or_derived();
        let t = self.transfer_t3prime()?;
        let transfer_degree = self.project_c1(&t.chi_l).degree;
        let w = self.w();
        let big = base.inner(&self.delta_prime_induced());
        let lambda_tilde_l = w + (big - w) * self.g.order() + self.tame_split_genus();
        Ok(KuzminReport {
            lambda_tilde_k_source: source,
            lambda_tilde_l,
            transfer_degree,
            mismatch: transfer_degree - lambda_tilde_l,
        })
    }
}
