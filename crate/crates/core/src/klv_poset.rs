//! Closed-form KLV data on the containment posets of the sets `S ∈ R_D`.
//!
//! For `γ* = c_S(γ_Sh)` with `S ∈ R_D` (and for every member of its tower
//! `c_{S'}(γ_Sh)`, `S' ⊆ S`):
//!
//! - `M(γ*,δ) = (−1)^{ℓ(δ)−ℓ(γ*)}` if `δ ⊆ γ*` and `0` otherwise;
//! - `m(γ*,δ) = 1` if `δ ⊆ γ*` and `0` otherwise;
//!
//! and `M·m = Id` on every row these formulas govern. The Zuckerman
//! expansion of the trivial representation restricted to the same towers
//! has coefficients `(−1)^{ℓ(γ₀)−ℓ(c_{S'}(γ₀))} = (−1)^{|S'|}`.
//!
//! No general KLV recursion is implemented.

use std::collections::BTreeMap;
use std::ops::{Add, Neg};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::parameters::{self, CentralCharacterLabel, PairSetParameter, RdSet};
use crate::rational::{self, Rational};
use crate::root_system::{Family, GroupFamily, RootSystem};

/// A finite ℤ-combination of parameters; zero coefficients are never
/// stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FormalIntegerCombination {
    terms: BTreeMap<PairSetParameter, i64>,
}

impl FormalIntegerCombination {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c·[p]`, dropping the term if it cancels.
    pub fn add_term(&mut self, p: PairSetParameter, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn coefficient(&self, p: &PairSetParameter) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PairSetParameter, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn support(&self) -> Vec<PairSetParameter> {
        self.terms.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for FormalIntegerCombination {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
        self
    }
}

impl Neg for FormalIntegerCombination {
    type Output = Self;

    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(p, c)| (p, -c)).collect() }
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    parameter: &'a PairSetParameter,
    coefficient: i64,
}

impl Serialize for FormalIntegerCombination {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms
            .iter()
            .map(|(parameter, &coefficient)| TermJson { parameter, coefficient })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

/// Parameters with a common base point, ordered by containment, with exact
/// lengths.
#[derive(Debug, Clone, Serialize)]
pub struct ParameterPoset {
    pub family: GroupFamily,
    pub elements: Vec<PairSetParameter>,
    #[serde(with = "rational::serde_vec")]
    pub lengths: Vec<Rational>,
}

impl ParameterPoset {
    pub fn new(sys: &RootSystem, elements: Vec<PairSetParameter>) -> Result<Self> {
        if let Some(first) = elements.first() {
            if elements.iter().any(|p| p.chi() != first.chi()) {
                return Err(Error::Comparison("poset elements have different base points".into()));
            }
        }
        let lengths = elements.iter().map(|p| parameters::length(sys, p)).collect::<Result<_>>()?;
        Ok(Self { family: sys.family(), elements, lengths })
    }

    /// The poset on which the inversion identities are checked: the full block for types A
    /// and D, the tower of the distinguished set for `E7`, and the base point
    /// alone for `E6` and `E8`.
    pub fn rd_poset(sys: &RootSystem, chi: CentralCharacterLabel) -> Result<Self> {
        let elements = match sys.family().family() {
            Family::A | Family::D => parameters::enumerate_block(sys, chi, 1_000_000)?,
            Family::E => {
                let mut out = vec![PairSetParameter::base(chi)];
                for set in parameters::rd_sets(sys.family()) {
                    for p in parameters::tower(sys, chi, &set)? {
                        if !out.contains(&p) {
                            out.push(p);
                        }
                    }
                }
                out
            }
        };
        Self::new(sys, elements)
    }

    /// The tower `{c_{S'}(γ_Sh) : S' ⊆ S}` as a poset.
    pub fn tower(sys: &RootSystem, chi: CentralCharacterLabel, set: &RdSet) -> Result<Self> {
        Self::new(sys, parameters::tower(sys, chi, set)?)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, p: &PairSetParameter) -> Option<usize> {
        self.elements.iter().position(|q| q == p)
    }

    /// `elements[i] ⊆ elements[j]`.
    pub fn le(&self, i: usize, j: usize) -> Result<bool> {
        parameters::contains(&self.elements[i], &self.elements[j])
    }

    /// Checks that strict containment strictly lowers the length.
    pub fn is_graded_by_length(&self) -> Result<bool> {
        for i in 0..self.len() {
            for j in 0..self.len() {
                if i != j && self.le(i, j)? && self.lengths[j] >= self.lengths[i] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The parameters `γ*` covered by the closed forms: `c_S(γ_Sh)` for the
/// nonempty `S ∈ R_D`.
pub fn gamma_star_catalog(sys: &RootSystem, chi: CentralCharacterLabel) -> Result<Vec<PairSetParameter>> {
    parameters::rd_sets(sys.family()).iter().map(|s| parameters::rd_parameter(sys, chi, s)).collect()
}

fn check_in_towers(sys: &RootSystem, gamma: &PairSetParameter, what: &str) -> Result<()> {
    for star in gamma_star_catalog(sys, gamma.chi())? {
        if parameters::contains(gamma, &star)? {
            return Ok(());
        }
    }
    Err(Error::Scope(format!(
        "{} is not c_{{S'}}(γ_Sh) for S' ⊆ S ∈ R_D; {what} is only available in closed form there",
        gamma.render()
    )))
}

/// `(−1)^{a−b}` for exact lengths whose difference must be an integer.
fn length_sign(a: &Rational, b: &Rational) -> Result<i64> {
    let d = a - b;
    if !d.is_integer() {
        return Err(Error::Consistency(format!(
            "length difference {} is not an integer",
            rational::format_rational(&d)
        )));
    }
    Ok(if d.to_integer().rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `M(γ*,δ) = (−1)^{ℓ(δ)−ℓ(γ*)}[δ ⊆ γ*]`.
pub fn m_upper_entry(sys: &RootSystem, gamma_star: &PairSetParameter, delta: &PairSetParameter) -> Result<i64> {
    check_in_towers(sys, gamma_star, "M(γ,δ)")?;
    if !parameters::contains(delta, gamma_star)? {
        return Ok(0);
    }
    length_sign(&parameters::length(sys, delta)?, &parameters::length(sys, gamma_star)?)
}

/// `m(γ,δ) = [δ ⊆ γ]` for `γ = c_S(γ_Sh)`.
pub fn m_lower_entry(sys: &RootSystem, gamma: &PairSetParameter, delta: &PairSetParameter) -> Result<i64> {
    check_in_towers(sys, gamma, "m(γ,δ)")?;
    Ok(i64::from(parameters::contains(delta, gamma)?))
}

/// Alias matching the usual notation `M(γ*,δ)`.
#[allow(non_snake_case)]
pub fn M_entry(sys: &RootSystem, gamma_star: &PairSetParameter, delta: &PairSetParameter) -> Result<i64> {
    m_upper_entry(sys, gamma_star, delta)
}

/// Alias matching the usual notation `m(γ,δ)`.
pub fn m_entry(sys: &RootSystem, gamma: &PairSetParameter, delta: &PairSetParameter) -> Result<i64> {
    m_lower_entry(sys, gamma, delta)
}

/// Result of an inversion check.
#[derive(Debug, Clone, Serialize)]
pub struct InversionCheck {
    pub gamma_star: String,
    pub holds: bool,
    pub rows_checked: usize,
    pub columns_checked: usize,
    /// The first `(row, column)` where `Σ_δ M(γ,δ)m(δ,δ*)` differs from the
    /// identity.
    pub failing: Option<(String, String)>,
}

/// Checks `Σ_δ M(γ,δ) m(δ,δ*) = [γ = δ*]` for every `δ*` in the poset and
/// every row `γ` in the tower below `γ*` (including `γ*`).
pub fn verify_inversion(sys: &RootSystem, poset: &ParameterPoset, gamma_star: &PairSetParameter) -> Result<InversionCheck> {
    check_in_towers(sys, gamma_star, "the inversion identity")?;
    let rows: Vec<usize> = (0..poset.len())
        .filter(|&i| parameters::contains(&poset.elements[i], gamma_star).unwrap_or(false))
        .collect();
    let mut check = InversionCheck {
        gamma_star: gamma_star.render(),
        holds: true,
        rows_checked: rows.len(),
        columns_checked: poset.len(),
        failing: None,
    };
    for &g in &rows {
        let gamma = &poset.elements[g];
        let m_row: Vec<i64> = poset
            .elements
            .iter()
            .map(|d| m_upper_entry(sys, gamma, d))
            .collect::<Result<_>>()?;
        for (c, col) in poset.elements.iter().enumerate() {
            let mut sum = 0i64;
            for (d, delta) in poset.elements.iter().enumerate() {
                if m_row[d] != 0 {
                    sum += m_row[d] * m_lower_entry(sys, delta, col)?;
                }
            }
            if sum != i64::from(g == c) {
                check.holds = false;
                check.failing = Some((gamma.render(), col.render()));
                return Ok(check);
            }
        }
    }
    Ok(check)
}

/// Dense `M` and `m` restricted to a tower, in tower order; `M·m` is
/// returned alongside for inspection.
#[derive(Debug, Clone, Serialize)]
pub struct TowerMatrices {
    pub elements: Vec<String>,
    pub upper: Vec<Vec<i64>>,
    pub lower: Vec<Vec<i64>>,
    pub product: Vec<Vec<i64>>,
}

impl TowerMatrices {
    pub fn is_identity(&self) -> bool {
        self.product.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }
}

pub fn tower_matrices(sys: &RootSystem, chi: CentralCharacterLabel, set: &RdSet) -> Result<TowerMatrices> {
    let t = parameters::tower(sys, chi, set)?;
    let n = t.len();
    let mut upper = vec![vec![0i64; n]; n];
    let mut lower = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            upper[i][j] = m_upper_entry(sys, &t[i], &t[j])?;
            lower[i][j] = m_lower_entry(sys, &t[i], &t[j])?;
        }
    }
    let product = (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| upper[i][k] * lower[k][j]).sum()).collect())
        .collect();
    Ok(TowerMatrices { elements: t.iter().map(|p| p.render()).collect(), upper, lower, product })
}

/// The alternating sum `−Σ_{i=1}^{k−1} (−1)^i C(k,i)`, which is `0` for odd
/// `k` and `2` for even `k ≥ 2`.
pub fn alternating_binomial_tail(k: u32) -> i64 {
    let mut c: i64 = 1;
    let mut sum = 0;
    for i in 1..k {
        c = c * i64::from(k - i + 1) / i64::from(i);
        sum += if i % 2 == 0 { c } else { -c };
    }
    -sum
}

/// The Zuckerman expansion `ℂ = Σ_γ (−1)^{ℓ(γ)−ℓ(γ₀)} I(γ)` restricted to
/// `γ = c_{S'}(γ₀)` with `S' ⊆ S ∈ R_D`. The linear-group parameters are
/// indexed by the pair sets of the first central character.
pub fn zuckerman_restricted(family: GroupFamily) -> Result<FormalIntegerCombination> {
    let sys = RootSystem::new(family)?;
    let chi = CentralCharacterLabel::new(&sys, 0)?;
    let base = PairSetParameter::base(chi);
    let l0 = parameters::length(&sys, &base)?;
    let mut out = FormalIntegerCombination::new();
    out.add_term(base, 1);
    let mut seen = std::collections::BTreeSet::new();
    for set in parameters::rd_sets(family) {
        for p in parameters::tower(&sys, chi, &set)? {
            if p.is_base() || !seen.insert(p.clone()) {
                continue;
            }
            let sign = length_sign(&l0, &parameters::length(&sys, &p)?)?;
            let expected = if p.elements().len() % 2 == 0 { 1 } else { -1 };
            if sign != expected {
                return Err(Error::Consistency(format!(
                    "length drop of {} does not match its number of Cayley steps",
                    p.render()
                )));
            }
            out.add_term(p, sign);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(f: GroupFamily) -> (RootSystem, CentralCharacterLabel) {
        let s = RootSystem::new(f).unwrap();
        let c = CentralCharacterLabel::new(&s, 0).unwrap();
        (s, c)
    }

    #[test]
    fn sl4_entries() {
        let (s, c) = setup(GroupFamily::sl(4).unwrap());
        let star = PairSetParameter::parse(&s, c, "{1,2},{3,4}").unwrap();
        let base = PairSetParameter::base(c);
        assert_eq!(M_entry(&s, &star, &star).unwrap(), 1);
        assert_eq!(M_entry(&s, &star, &base).unwrap(), 1);
        let cross = PairSetParameter::parse(&s, c, "{1,4}").unwrap();
        assert_eq!(M_entry(&s, &star, &cross).unwrap(), 0);
        assert!(matches!(M_entry(&s, &cross, &base), Err(Error::Scope(_))));
    }

    #[test]
    fn sl2_multiplicity() {
        let (s, c) = setup(GroupFamily::sl(2).unwrap());
        let one = PairSetParameter::parse(&s, c, "{1,2}").unwrap();
        let base = PairSetParameter::base(c);
        assert_eq!(m_entry(&s, &one, &base).unwrap(), 1);
        assert_eq!(m_entry(&s, &one, &one).unwrap(), 1);
        assert_eq!(m_entry(&s, &base, &one).unwrap(), 0);
    }

    #[test]
    fn sl4_inversion_on_block() {
        let (s, c) = setup(GroupFamily::sl(4).unwrap());
        let poset = ParameterPoset::rd_poset(&s, c).unwrap();
        assert_eq!(poset.len(), 7);
        assert!(poset.is_graded_by_length().unwrap());
        for star in gamma_star_catalog(&s, c).unwrap() {
            assert!(verify_inversion(&s, &poset, &star).unwrap().holds);
        }
    }

    #[test]
    fn singleton_poset() {
        let (s, c) = setup(GroupFamily::sl(2).unwrap());
        let base = PairSetParameter::base(c);
        let poset = ParameterPoset::new(&s, vec![base.clone()]).unwrap();
        let star = PairSetParameter::parse(&s, c, "{1,2}").unwrap();
        assert!(verify_inversion(&s, &poset, &star).unwrap().holds);
    }

    #[test]
    fn binomial_tail() {
        for k in 1..=10u32 {
            assert_eq!(alternating_binomial_tail(k), if k % 2 == 1 { 0 } else { 2 }, "k = {k}");
        }
    }

    #[test]
    fn e7_zuckerman_signs() {
        let z = zuckerman_restricted(GroupFamily::e(7).unwrap()).unwrap();
        assert_eq!(z.len(), 8);
        let mut by_size: Vec<(usize, i64)> = z.terms().map(|(p, c)| (p.elements().len(), c)).collect();
        by_size.sort();
        assert_eq!(by_size, vec![(0, 1), (1, -1), (1, -1), (1, -1), (2, 1), (2, 1), (2, 1), (3, -1)]);
    }

    #[test]
    fn combination_drops_zeros() {
        let (s, c) = setup(GroupFamily::sl(2).unwrap());
        let mut f = FormalIntegerCombination::new();
        let base = PairSetParameter::base(c);
        f.add_term(base.clone(), 2);
        let g = -f.clone();
        assert!((f + g).is_empty());
        let _ = s;
    }
}
