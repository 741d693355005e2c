//! Lifting coefficients and `Lift(ℂ)`.
//!
//! Lifting the Zuckerman expansion of the trivial representation and
//! inverting the KLV matrices on the `R_D` towers gives, for `S ∈ R_D`,
//! the coefficient of `J(c_S(γ_Sh))` in `Lift(ℂ)`:
//!
//! `K_S = Σ_{S' ⊆ S} (−1)^{ℓ(γ₀)−ℓ(γ_{S'})} C(H_{S'})`,
//!
//! where `C(H)` is the normalising constant of stable lifting
//! (`C(H) = c(H)/c(H_s)` with `c(H) = |H₂⁰|·|H/Z₀(H)|^{1/2}`). On the
//! towers that occur, `C(H_{S'}) = 1` for proper `S'` and `C(H_S) = 2`, the
//! class that acquires a compact `S¹` factor.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cartan::{self, CartanClass, TorusShape};
use crate::coherent;
use crate::error::{Error, Result};
use crate::klv_poset::FormalIntegerCombination;
use crate::parameters::{self, CentralCharacterLabel, PairSetParameter, RdSet};
use crate::rational::{int, Rational};
use crate::root_system::{Family, GroupFamily, RootSystem};

/// `C(H)` for a Cartan class occurring in an `R_D` tower.
#[derive(Debug, Clone, Serialize)]
pub struct CartanConstant {
    pub cartan: String,
    pub shape: String,
    #[serde(with = "crate::rational::serde_one")]
    pub value: Rational,
}

/// `C(H)` for the class `c` relative to the tower of `set`: `2` for the
/// class of the full set, `1` for the class of a proper subset (the split
/// class included).
pub fn cartan_constant(sys: &RootSystem, c: &CartanClass, set: &RdSet) -> Result<CartanConstant> {
    let chi = CentralCharacterLabel::new(sys, 0)?;
    let full = parameters::rd_parameter(sys, chi, set)?.cartan_class(sys)?;
    let shape = cartan::cartan_shape(sys, c)?;
    let value = if *c == full {
        int(2)
    } else {
        let mut proper = false;
        for p in parameters::tower(sys, chi, set)? {
            if p.elements().len() < set.elements.len() && p.cartan_class(sys)? == *c {
                proper = true;
                break;
            }
        }
        if !proper {
            return Err(Error::Scope(format!(
                "{} does not occur in the tower of {}; C(H) is tabulated only there",
                c.label(),
                set.label()
            )));
        }
        int(1)
    };
    Ok(CartanConstant { cartan: c.label(), shape: shape.to_string(), value })
}

/// One summand of `K_S`.
#[derive(Debug, Clone, Serialize)]
pub struct KTerm {
    pub subset: String,
    pub cartan: String,
    pub shape: String,
    pub sign: i64,
    pub constant: i64,
}

/// `K_S` with its summands.
#[derive(Debug, Clone, Serialize)]
pub struct KCoefficient {
    pub name: String,
    pub set: String,
    pub terms: Vec<KTerm>,
    pub value: i64,
}

/// Computes `K_S` for a set `S ∈ R_D`. The sign of each summand is
/// `(−1)^{ℓ(γ₀)−ℓ(γ_{S'})}` from exact lengths; it must equal
/// `(−1)^{|S'|}`.
pub fn k_coefficient(sys: &RootSystem, set: &RdSet) -> Result<KCoefficient> {
    let chi = CentralCharacterLabel::new(sys, 0)?;
    let l0 = parameters::length(sys, &PairSetParameter::base(chi))?;
    let mut terms = Vec::new();
    let mut value = 0i64;
    for p in parameters::tower(sys, chi, set)? {
        let drop = l0 - parameters::length(sys, &p)?;
        if drop != int(p.elements().len() as i64) {
            return Err(Error::Consistency(format!(
                "ℓ(γ₀) − ℓ({}) = {} but |S'| = {}",
                p.render(),
                crate::rational::format_rational(&drop),
                p.elements().len()
            )));
        }
        let sign = if p.elements().len() % 2 == 0 { 1 } else { -1 };
        let class = p.cartan_class(sys)?;
        let c = cartan_constant(sys, &class, set)?;
        let constant = c.value.to_integer();
        value += sign * constant;
        terms.push(KTerm { subset: p.render(), cartan: c.cartan, shape: c.shape, sign, constant });
    }
    Ok(KCoefficient { name: set.name.to_string(), set: set.label(), terms, value })
}

/// `K_S` for the set named `name` (`π`, `δ` or `σ`, ASCII `pi`, `delta`,
/// `sigma` accepted).
pub fn k_coefficient_by_name(family: GroupFamily, name: &str) -> Result<KCoefficient> {
    let name = match name {
        "pi" => "π",
        "delta" => "δ",
        "sigma" => "σ",
        other => other,
    };
    let sys = RootSystem::new(family)?;
    let set = parameters::rd_sets(family)
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::Argument(format!("{name} is not a set in R_D for {}", family.group_name())))?;
    k_coefficient(&sys, &set)
}

/// The coefficient printed in the closing proposition for `c_S(Sh)`.
pub fn stated_coefficient(family: GroupFamily, name: &str) -> Option<i64> {
    let p = family.n() / 2;
    let alt = if p % 2 == 0 { 1 } else { -1 };
    match (family.family(), name) {
        (Family::A, "π") if family.n() % 2 == 0 => Some(alt),
        (Family::D, "π") => Some(1),
        (Family::D, "δ" | "σ") if family.n() % 2 == 0 => Some(alt),
        (Family::E, "π") if family.rank() == 7 => Some(-1),
        _ => None,
    }
}

/// `Lift(ℂ)` as a formal combination of the parameters of `G̃`.
#[derive(Debug, Clone, Serialize)]
pub struct LiftResult {
    pub family: String,
    pub group: String,
    pub combination: FormalIntegerCombination,
    pub coefficients: Vec<KCoefficient>,
    pub infinitesimal_character: String,
    pub text: String,
}

const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn subscript(k: usize) -> String {
    k.to_string().chars().map(|c| SUBSCRIPTS[c.to_digit(10).unwrap() as usize]).collect()
}

fn named_sum(name: &str, count: usize) -> String {
    if count == 1 {
        name.to_string()
    } else {
        (1..=count).map(|i| format!("{name}{}", subscript(i))).collect::<Vec<_>>().join("+")
    }
}

/// Computes `Lift(ℂ) = Σ_χ [Sh_χ + Σ_{S ∈ R_D, S ≠ ∅} K_S c_S(Sh_χ)]`.
pub fn lift_trivial(family: GroupFamily) -> Result<LiftResult> {
    let sys = RootSystem::new(family)?;
    let chis = CentralCharacterLabel::all(&sys)?;
    let sets = parameters::rd_sets(family);
    let coefficients: Vec<KCoefficient> = sets.iter().map(|s| k_coefficient(&sys, s)).collect::<Result<_>>()?;
    let mut combination = FormalIntegerCombination::new();
    for &chi in &chis {
        combination.add_term(PairSetParameter::base(chi), 1);
        for (set, k) in sets.iter().zip(&coefficients) {
            combination.add_term(parameters::rd_parameter(&sys, chi, set)?, k.value);
        }
    }
    let mut text = named_sum("Sh", chis.len());
    for k in &coefficients {
        let body = named_sum(&k.name, chis.len());
        let body = if chis.len() == 1 { body } else { format!("({body})") };
        let sign = if k.value < 0 { "−" } else { "+" };
        let mag = k.value.abs();
        let coeff = if mag == 1 { String::new() } else { mag.to_string() };
        text.push_str(&format!("{sign}{coeff}{body}"));
    }
    Ok(LiftResult {
        family: family.label(),
        group: family.group_name(),
        combination,
        coefficients,
        infinitesimal_character: "ρ/2".into(),
        text,
    })
}

/// One check of the main theorem.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremCheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Report of [`main_theorem_report`].
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub family: String,
    pub group: String,
    pub checks: Vec<TheoremCheckResult>,
    pub passed: bool,
}

/// Runs every check of `Lift(ℂ) = Π^s_{ρ/2}(G̃) = Π_{R_D}(G̃)`:
///
/// 1. the support of `Lift(ℂ)` equals `⋃_χ Π_{R_D}(G̃)_χ`;
/// 2. every `K_S` is nonzero, equal to `±1`, and equal to the stated value;
/// 3. the support size equals the small-representation count.
pub fn main_theorem_report(family: GroupFamily) -> Result<TheoremReport> {
    let sys = RootSystem::new(family)?;
    let lift = lift_trivial(family)?;
    let mut checks = Vec::new();

    let support: BTreeSet<PairSetParameter> = lift.combination.support().into_iter().collect();
    let expected = parameters::pi_rd_all(&sys)?;
    let missing: Vec<String> = expected.difference(&support).map(|p| p.render()).collect();
    let extra: Vec<String> = support.difference(&expected).map(|p| p.render()).collect();
    checks.push(TheoremCheckResult {
        name: "support".into(),
        passed: missing.is_empty() && extra.is_empty(),
        detail: if missing.is_empty() && extra.is_empty() {
            format!("support equals Π_R_D ({} parameters)", support.len())
        } else {
            format!("missing {missing:?}, unexpected {extra:?}")
        },
    });

    let mut bad = Vec::new();
    for k in &lift.coefficients {
        let stated = stated_coefficient(family, &k.name);
        if k.value == 0 || k.value.abs() != 1 || stated != Some(k.value) {
            bad.push(format!("K_{} = {} (stated {:?})", k.name, k.value, stated));
        }
    }
    let all_pm1 = lift.combination.terms().all(|(_, c)| c.abs() == 1);
    checks.push(TheoremCheckResult {
        name: "coefficients".into(),
        passed: bad.is_empty() && all_pm1,
        detail: if bad.is_empty() && all_pm1 {
            let ks: Vec<String> = lift.coefficients.iter().map(|k| format!("K_{} = {}", k.name, k.value)).collect();
            if ks.is_empty() {
                "no nonempty S ∈ R_D; every coefficient is +1".into()
            } else {
                ks.join(", ")
            }
        } else {
            bad.join("; ")
        },
    });

    let count = coherent::count_small(family)?;
    checks.push(TheoremCheckResult {
        name: "count".into(),
        passed: count.value == support.len(),
        detail: format!("|support| = {}, count_small = {}", support.len(), count.value),
    });

    let passed = checks.iter().all(|c| c.passed);
    Ok(TheoremReport { family: family.label(), group: family.group_name(), checks, passed })
}

/// Like [`main_theorem_report`], but a failed check is an error naming it.
pub fn verify_main_theorem(family: GroupFamily) -> Result<TheoremReport> {
    let report = main_theorem_report(family)?;
    if let Some(c) = report.checks.iter().find(|c| !c.passed) {
        return Err(Error::TheoremCheck { check: c.name.clone(), detail: c.detail.clone() });
    }
    Ok(report)
}

/// Torus shape of the class reached by the full set `S`.
pub fn full_tower_shape(sys: &RootSystem, set: &RdSet) -> Result<TorusShape> {
    let chi = CentralCharacterLabel::new(sys, 0)?;
    let c = parameters::rd_parameter(sys, chi, set)?.cartan_class(sys)?;
    cartan::cartan_shape(sys, &c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_values() {
        assert_eq!(k_coefficient_by_name(GroupFamily::sl(4).unwrap(), "pi").unwrap().value, 1);
        assert_eq!(k_coefficient_by_name(GroupFamily::sl(6).unwrap(), "pi").unwrap().value, -1);
        assert_eq!(k_coefficient_by_name(GroupFamily::spin(5).unwrap(), "pi").unwrap().value, 1);
        assert_eq!(k_coefficient_by_name(GroupFamily::e(7).unwrap(), "pi").unwrap().value, -1);
        assert!(matches!(
            k_coefficient_by_name(GroupFamily::e(6).unwrap(), "pi"),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn lift_texts() {
        assert_eq!(lift_trivial(GroupFamily::sl(4).unwrap()).unwrap().text, "Sh₁+Sh₂+(π₁+π₂)");
        assert_eq!(lift_trivial(GroupFamily::sl(5).unwrap()).unwrap().text, "Sh");
        assert_eq!(lift_trivial(GroupFamily::e(7).unwrap()).unwrap().text, "Sh₁+Sh₂−(π₁+π₂)");
        assert_eq!(lift_trivial(GroupFamily::spin(5).unwrap()).unwrap().text, "Sh₁+Sh₂+(π₁+π₂)");
    }

    #[test]
    fn split_constant_is_one() {
        let sys = RootSystem::new(GroupFamily::sl(4).unwrap()).unwrap();
        let set = &parameters::rd_sets(sys.family())[0];
        let split = cartan::classify(&sys, &cartan::Involution::split(&sys)).unwrap();
        assert_eq!(cartan_constant(&sys, &split, set).unwrap().value, int(1));
    }

    #[test]
    fn theorem_e6() {
        let r = verify_main_theorem(GroupFamily::e(6).unwrap()).unwrap();
        assert!(r.passed);
    }
}
