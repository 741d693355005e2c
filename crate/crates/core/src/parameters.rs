//! Pair-set parameters for ρ/2-regular characters.
//!
//! A parameter is `c_S(γ_Sh)`: a pseudospherical base point (identified only
//! by its central character) followed by Cayley transforms through a set `S`
//! of orthogonal half-integral roots. `S` is written as a set of elements:
//!
//! - a pair `{i,j}` (odd `i`, even `j`) for the root `e_i − e_j`;
//! - a signed pair `{−i,−j}` for the root `e_i + e_j` (types D and E);
//! - a block `{i₁,…,i_r,j₁,…,j_r}` (`r ≥ 2`) standing for the roots
//!   `e_{i_k} ± e_{j_k}`, with odd and even indices matched in sorted order.
//!
//! The rendering `γ({1,2},{−3,−4})` follows the standard notation for these parameters.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::cartan::{self, CartanClass, Involution, Signature};
pub use crate::cartan::Sign;
use crate::error::{Error, Result};
use crate::rational::{self, int, rat, Rational};
use crate::root_system::{Family, GroupFamily, RootIdx, RootSystem};

/// Index of a genuine central character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CentralCharacterLabel {
    pub family: GroupFamily,
    pub index: usize,
}

impl CentralCharacterLabel {
    pub fn new(sys: &RootSystem, index: usize) -> Result<Self> {
        let count = cartan::genuine_central_character_count(sys)?;
        if index >= count {
            return Err(Error::Argument(format!(
                "central character index {index} out of range (the family has {count})"
            )));
        }
        Ok(Self { family: sys.family(), index })
    }

    /// All labels of the family.
    pub fn all(sys: &RootSystem) -> Result<Vec<Self>> {
        let count = cartan::genuine_central_character_count(sys)?;
        Ok((0..count).map(|index| Self { family: sys.family(), index }).collect())
    }
}

/// One element of a pair set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PairElement {
    Pair { odd: usize, even: usize, sign: Sign },
    Block { odds: Vec<usize>, evens: Vec<usize> },
}

impl PairElement {
    /// A pair from two indices in either order; exactly one must be odd.
    pub fn pair(i: usize, j: usize, sign: Sign) -> Result<Self> {
        match (i % 2, j % 2) {
            (1, 0) => Ok(PairElement::Pair { odd: i, even: j, sign }),
            (0, 1) => Ok(PairElement::Pair { odd: j, even: i, sign }),
            _ => Err(Error::Argument(format!("pair {{{i},{j}}} needs one odd and one even index"))),
        }
    }

    pub fn block(indices: &[usize]) -> Result<Self> {
        let mut odds: Vec<usize> = indices.iter().copied().filter(|i| i % 2 == 1).collect();
        let mut evens: Vec<usize> = indices.iter().copied().filter(|i| i % 2 == 0).collect();
        odds.sort_unstable();
        evens.sort_unstable();
        if odds.len() != evens.len() || odds.len() < 2 {
            return Err(Error::Argument(format!(
                "block {indices:?} needs at least two odd and equally many even indices"
            )));
        }
        Ok(PairElement::Block { odds, evens })
    }

    pub fn indices(&self) -> Vec<usize> {
        match self {
            PairElement::Pair { odd, even, .. } => vec![*odd, *even],
            PairElement::Block { odds, evens } => {
                let mut v: Vec<usize> = odds.iter().chain(evens).copied().collect();
                v.sort_unstable();
                v
            }
        }
    }

    /// Sort key: first odd index, blocks before pairs, even index, `+`
    /// before `−`.
    fn key(&self) -> (usize, u8, usize, Sign) {
        match self {
            PairElement::Block { odds, evens } => (odds[0], 0, evens[0], Sign::Plus),
            PairElement::Pair { odd, even, sign } => (*odd, 1, *even, *sign),
        }
    }

    /// The Cayley roots this element stands for, as reflection tokens.
    fn tokens(&self) -> Vec<String> {
        let tok = |o: usize, e: usize, s: Sign| {
            format!("s{{{},{}}}{}", o, e, if s == Sign::Minus { "b" } else { "" })
        };
        match self {
            PairElement::Pair { odd, even, sign } => vec![tok(*odd, *even, *sign)],
            PairElement::Block { odds, evens } => odds
                .iter()
                .zip(evens)
                .flat_map(|(&o, &e)| [tok(o, e, Sign::Plus), tok(o, e, Sign::Minus)])
                .collect(),
        }
    }

    /// Containment of elements: a pair lies in a block containing both its
    /// indices; a block lies in a block containing all its indices.
    pub fn contained_in(&self, other: &PairElement) -> bool {
        match (self, other) {
            (a @ PairElement::Pair { .. }, b @ PairElement::Pair { .. }) => a == b,
            (PairElement::Block { .. }, PairElement::Pair { .. }) => false,
            (a, b @ PairElement::Block { .. }) => {
                let bi = b.indices();
                a.indices().iter().all(|i| bi.contains(i))
            }
        }
    }

    pub fn render(&self) -> String {
        match self {
            PairElement::Pair { odd, even, sign: Sign::Plus } => format!("{{{odd},{even}}}"),
            PairElement::Pair { odd, even, sign: Sign::Minus } => format!("{{−{odd},−{even}}}"),
            PairElement::Block { .. } => {
                let v: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
                format!("{{{}}}", v.join(","))
            }
        }
    }
}

impl PartialOrd for PairElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PairElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key()).then_with(|| self.indices().cmp(&other.indices()))
    }
}

/// A ρ/2-regular character `c_S(γ_Sh)` in pair-set form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairSetParameter {
    chi: CentralCharacterLabel,
    elements: Vec<PairElement>,
}

/// A Cayley root request: the pair `{i,j}` with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedPair {
    pub i: usize,
    pub j: usize,
    pub sign: Sign,
}

impl SignedPair {
    pub fn plus(i: usize, j: usize) -> Self {
        Self { i, j, sign: Sign::Plus }
    }

    pub fn minus(i: usize, j: usize) -> Self {
        Self { i, j, sign: Sign::Minus }
    }
}

impl PairSetParameter {
    /// Validates and canonicalises a pair set.
    pub fn new(sys: &RootSystem, chi: CentralCharacterLabel, elements: Vec<PairElement>) -> Result<Self> {
        if chi.family != sys.family() {
            return Err(Error::Argument(format!(
                "central character of {} used with {}",
                chi.family,
                sys.family()
            )));
        }
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        let p = Self { chi, elements };
        p.validate(sys)?;
        Ok(p)
    }

    /// The base point `γ_Sh` for a central character.
    pub fn base(chi: CentralCharacterLabel) -> Self {
        Self { chi, elements: Vec::new() }
    }

    fn validate(&self, sys: &RootSystem) -> Result<()> {
        let family = sys.family();
        let dim = sys.ambient_dim();
        for el in &self.elements {
            if family.family() == Family::A {
                let ok = matches!(el, PairElement::Pair { sign: Sign::Plus, .. });
                if !ok {
                    return Err(Error::Family {
                        family: family.label(),
                        reason: format!("type A admits unsigned pairs only, got {}", el.render()),
                    });
                }
            }
            if let Some(&bad) = el.indices().iter().find(|&&i| i == 0 || i > dim) {
                return Err(Error::Argument(format!("index {bad} out of range 1..={dim}")));
            }
        }
        let roots = self.cayley_roots(sys)?;
        let lambda = sys.half_rho();
        for &r in &roots {
            let q = rational::dot(lambda.coords(), sys.root(r).coords());
            if !rational::is_half_odd_integer(&q) {
                return Err(Error::Argument(format!(
                    "Cayley root {} is not half-integral at ρ/2",
                    sys.root_label(r)
                )));
            }
        }
        Involution::from_cayley_roots(sys, &roots)?;
        Ok(())
    }

    pub fn family(&self) -> GroupFamily {
        self.chi.family
    }

    pub fn chi(&self) -> CentralCharacterLabel {
        self.chi
    }

    pub fn elements(&self) -> &[PairElement] {
        &self.elements
    }

    pub fn is_base(&self) -> bool {
        self.elements.is_empty()
    }

    /// The Cayley roots as (positive) root indices, in element order.
    pub fn cayley_roots(&self, sys: &RootSystem) -> Result<Vec<RootIdx>> {
        let mut out = Vec::new();
        for el in &self.elements {
            for tok in el.tokens() {
                let idx = sys.parse_reflection(&tok).map_err(|_| {
                    Error::Argument(format!("{} is not a pair of roots of {}", el.render(), sys.family()))
                })?;
                out.push(idx);
            }
        }
        Ok(out)
    }

    pub fn cayley_root_count(&self) -> usize {
        self.elements
            .iter()
            .map(|e| match e {
                PairElement::Pair { .. } => 1,
                PairElement::Block { odds, .. } => 2 * odds.len(),
            })
            .sum()
    }

    pub fn involution(&self, sys: &RootSystem) -> Result<Involution> {
        Involution::from_cayley_roots(sys, &self.cayley_roots(sys)?)
    }

    pub fn cartan_class(&self, sys: &RootSystem) -> Result<CartanClass> {
        cartan::classify(sys, &self.involution(sys)?)
    }

    /// `γ({1,2},{−3,−4})`, or `γ(∅)` for the base point.
    pub fn render(&self) -> String {
        if self.elements.is_empty() {
            return "γ(∅)".into();
        }
        let parts: Vec<String> = self.elements.iter().map(|e| e.render()).collect();
        format!("γ({})", parts.join(","))
    }

    /// Parses `γ({1,2},{−3,−4})`, `{1,2},{-3,-4}`, `γ(∅)` or the empty
    /// string.
    pub fn parse(sys: &RootSystem, chi: CentralCharacterLabel, text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("bad parameter {text:?}: {why}"));
        let mut t = text.trim().replace('−', "-");
        for prefix in ["γ(", "gamma(", "J(", "I("] {
            if let Some(rest) = t.strip_prefix(prefix) {
                t = rest.strip_suffix(')').ok_or_else(|| bad("unbalanced parentheses"))?.to_string();
                break;
            }
        }
        let t = t.trim();
        let mut elements = Vec::new();
        if !(t.is_empty() || t == "∅") {
            let mut rest = t;
            while !rest.is_empty() {
                let open = rest.find('{').ok_or_else(|| bad("expected `{`"))?;
                if !rest[..open].trim().trim_matches(',').trim().is_empty() {
                    return Err(bad("unexpected text between elements"));
                }
                let close = rest[open..].find('}').ok_or_else(|| bad("expected `}`"))? + open;
                let nums: Vec<i64> = rest[open + 1..close]
                    .split(',')
                    .map(|s| s.trim().parse::<i64>().map_err(|_| bad("expected integers")))
                    .collect::<Result<_>>()?;
                elements.push(element_from_signed(&nums).map_err(|e| bad(&e.to_string()))?);
                rest = rest[close + 1..].trim_start_matches([',', ' ']);
            }
        }
        Self::new(sys, chi, elements)
    }

    pub fn to_json(&self) -> ParameterJson {
        let mut blocks = Vec::new();
        let mut pairs = Vec::new();
        for el in &self.elements {
            match el {
                PairElement::Block { .. } => blocks.push(el.indices()),
                PairElement::Pair { odd, even, sign } => {
                    let s = if *sign == Sign::Minus { -1 } else { 1 };
                    pairs.push([s * *odd as i64, s * *even as i64]);
                }
            }
        }
        ParameterJson {
            family: format!("{:?}", self.family().family()),
            rank: self.family().rank(),
            central_char: self.chi.index,
            rendered: self.render(),
            blocks,
            pairs,
        }
    }
}

impl fmt::Display for PairSetParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for PairSetParameter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// JSON form of a parameter.
#[derive(Debug, Clone, Serialize)]
pub struct ParameterJson {
    pub family: String,
    pub rank: usize,
    pub central_char: usize,
    pub rendered: String,
    pub blocks: Vec<Vec<usize>>,
    pub pairs: Vec<[i64; 2]>,
}

fn element_from_signed(nums: &[i64]) -> Result<PairElement> {
    match nums {
        [a, b] if *a > 0 && *b > 0 => PairElement::pair(*a as usize, *b as usize, Sign::Plus),
        [a, b] if *a < 0 && *b < 0 => PairElement::pair(-a as usize, -b as usize, Sign::Minus),
        [_, _] => Err(Error::Argument("a signed pair needs equal signs".into())),
        v if v.len() >= 4 && v.iter().all(|&x| x > 0) => {
            PairElement::block(&v.iter().map(|&x| x as usize).collect::<Vec<_>>())
        }
        _ => Err(Error::Argument("elements are pairs or blocks of at least four indices".into())),
    }
}

/// One base parameter `γ_Sh` per genuine central character.
pub fn pseudospherical_params(sys: &RootSystem) -> Result<Vec<PairSetParameter>> {
    Ok(CentralCharacterLabel::all(sys)?.into_iter().map(PairSetParameter::base).collect())
}

/// The inverse Cayley transform of `p` through `e_i − e_j` (`Plus`) or
/// `e_i + e_j` (`Minus`).
pub fn cayley(sys: &RootSystem, p: &PairSetParameter, root: SignedPair) -> Result<PairSetParameter> {
    if p.family() != sys.family() {
        return Err(Error::Argument("parameter and root system differ".into()));
    }
    if sys.family().family() == Family::A && root.sign == Sign::Minus {
        return Err(Error::Family {
            family: sys.family().label(),
            reason: "signed Cayley roots do not exist in type A".into(),
        });
    }
    let el = PairElement::pair(root.i, root.j, root.sign).map_err(|e| Error::Transform(e.to_string()))?;
    if p.elements.contains(&el) {
        return Err(Error::Transform(format!("{} is already a Cayley root", el.render())));
    }
    let mut elements = p.elements.clone();
    elements.push(el);
    PairSetParameter::new(sys, p.chi, elements).map_err(|e| match e {
        Error::Argument(m) => Error::Transform(m),
        other => other,
    })
}

/// `ℓ(γ) = ½#{α ∈ Δ⁺ : θα ∉ Δ⁺} + ½ dim 𝔞`, with `dim 𝔞 = rank − |S|`.
pub fn length(sys: &RootSystem, p: &PairSetParameter) -> Result<Rational> {
    let theta = p.involution(sys)?;
    let flipped = (0..sys.num_positive()).filter(|&a| !sys.is_positive(theta.apply(a))).count();
    let split_dim = sys.rank() - theta.cayley_roots().len();
    Ok(rat(flipped as i64, 2) + rat(split_dim as i64, 2))
}

/// Length of the split parameter, `ℓ_s = ½|Δ⁺| + ½ rank`.
pub fn split_length(sys: &RootSystem) -> Rational {
    rat(sys.num_positive() as i64, 2) + rat(sys.rank() as i64, 2)
}

/// The type-A closed form `ℓ_s − Σ|i_k − j_k|`, available when the pairs
/// can be arranged as `i₁<j₁<⋯<i_m<j_m` (non-overlapping intervals).
pub fn length_closed_form(sys: &RootSystem, p: &PairSetParameter) -> Option<Rational> {
    if sys.family().family() != Family::A {
        return None;
    }
    let mut intervals: Vec<(usize, usize)> = p
        .elements
        .iter()
        .map(|e| match e {
            PairElement::Pair { odd, even, .. } => ((*odd).min(*even), (*odd).max(*even)),
            PairElement::Block { .. } => unreachable!("type A has no blocks"),
        })
        .collect();
    intervals.sort_unstable();
    if intervals.windows(2).any(|w| w[0].1 >= w[1].0) {
        return None;
    }
    let drop: usize = intervals.iter().map(|(a, b)| b - a).sum();
    Some(split_length(sys) - int(drop as i64))
}

/// `p1 ⊆ p2`: every element of `p1` lies in some element of `p2`.
pub fn contains(p1: &PairSetParameter, p2: &PairSetParameter) -> Result<bool> {
    if p1.chi != p2.chi {
        return Err(Error::Comparison(format!(
            "{} and {} have different base points",
            p1.render(),
            p2.render()
        )));
    }
    Ok(p1.elements.iter().all(|a| p2.elements.iter().any(|b| a.contained_in(b))))
}

/// All parameters reachable from `γ_Sh` by Cayley transforms, in canonical
/// order. Types A and D only; type E is handled through
/// [`orbit_representatives`].
pub fn enumerate_block(sys: &RootSystem, chi: CentralCharacterLabel, cap: usize) -> Result<Vec<PairSetParameter>> {
    if sys.family().family() == Family::E {
        return Err(Error::Scope(
            "full block enumeration for type E is not supported; use the orbit representatives".into(),
        ));
    }
    let n = sys.ambient_dim();
    let signs: &[Sign] = if sys.family().family() == Family::A { &[Sign::Plus] } else { &[Sign::Plus, Sign::Minus] };
    let start = PairSetParameter::base(chi);
    let mut seen: HashSet<PairSetParameter> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for odd in (1..=n).step_by(2) {
            for even in (2..=n).step_by(2) {
                for &sign in signs {
                    let Ok(q) = cayley(sys, &p, SignedPair { i: odd, j: even, sign }) else { continue };
                    if seen.insert(q.clone()) {
                        if seen.len() > cap {
                            return Err(Error::Resource { what: "block enumeration".into(), cap });
                        }
                        queue.push_back(q);
                    }
                }
            }
        }
    }
    let mut out: Vec<PairSetParameter> = seen.into_iter().collect();
    out.sort_by(|a, b| a.cayley_root_count().cmp(&b.cayley_root_count()).then(a.cmp(b)));
    Ok(out)
}

/// The cross-action orbit representatives `γ_{r,m,s}` displayed for type E.
pub fn e_representative_table(rank: usize) -> &'static [((usize, usize, usize), &'static str)] {
    match rank {
        6 => &[
            ((2, 2, 0), "{1,2,3,4}"),
            ((0, 3, 0), "{1,2},{-1,-2},{3,4}"),
            ((0, 2, 2), "{1,2},{-1,-2}"),
            ((0, 1, 4), "{1,2}"),
            ((0, 0, 6), ""),
        ],
        7 => &[
            ((7, 0, 0), "{1,2,3,4,5,6},{7,8}"),
            ((5, 1, 0), "{1,2,3,4},{5,6},{7,8}"),
            ((3, 2, 0), "{1,2,3,4},{7,8}"),
            ((1, 3, 0), "{1,2},{-1,-2},{3,4},{7,8}"),
            ((2, 2, 1), "{1,2,3,4}"),
            ((1, 2, 2), "{1,2},{-1,-2},{7,8}"),
            ((0, 3, 1), "{1,2},{-1,-2},{3,4}"),
            ((0, 2, 3), "{1,2},{-1,-2}"),
            ((0, 1, 5), "{1,2}"),
            ((0, 0, 7), ""),
        ],
        8 => &[
            ((8, 0, 0), "{1,2,3,4,5,6,7,8}"),
            ((6, 1, 0), "{1,2,3,4,5,6},{7,8}"),
            ((4, 2, 0), "{1,2,3,4},{5,6},{7,8}"),
            ((2, 3, 0), "{1,2,3,4},{5,6}"),
            ((0, 4, 0), "{1,2},{-1,-2},{3,4},{5,6}"),
            ((2, 2, 2), "{1,2},{-1,-2},{3,4},{-3,-4}"),
            ((0, 3, 2), "{1,2},{-1,-2},{3,4}"),
            ((0, 2, 4), "{1,2},{-1,-2}"),
            ((0, 1, 6), "{1,2}"),
            ((0, 0, 8), ""),
        ],
        _ => &[],
    }
}

/// The displayed orbit representatives for type E (first central
/// character), each with its Cartan class.
pub fn orbit_representatives(sys: &RootSystem) -> Result<Vec<(CartanClass, PairSetParameter)>> {
    if sys.family().family() != Family::E {
        return Err(Error::Family {
            family: sys.family().label(),
            reason: "orbit representatives are tabulated for type E; use class_representatives".into(),
        });
    }
    class_representatives(sys, CentralCharacterLabel::new(sys, 0)?)
}

/// One representative parameter per Cartan class for a central character:
/// the displayed `γ_{r,m,s}` for type E, and the standard pairs
/// `{2k−1,2k}` (double pairs first, orientation on the last single pair)
/// for types A and D.
pub fn class_representatives(
    sys: &RootSystem,
    chi: CentralCharacterLabel,
) -> Result<Vec<(CartanClass, PairSetParameter)>> {
    let mut out = Vec::new();
    for c in cartan::classes(sys.family()) {
        let p = match c.signature {
            Signature::E { r, m, s } => {
                let text = e_representative_table(sys.rank())
                    .iter()
                    .find(|(sig, _)| *sig == (r, m, s))
                    .map(|(_, t)| *t)
                    .ok_or_else(|| Error::Classification(format!("no representative for {c}")))?;
                PairSetParameter::parse(sys, chi, text)?
            }
            Signature::A { pairs } => {
                let els = (1..=pairs).map(|k| PairElement::pair(2 * k - 1, 2 * k, Sign::Plus)).collect::<Result<_>>()?;
                PairSetParameter::new(sys, chi, els)?
            }
            Signature::D { singles, doubles, orientation } => {
                let mut els = Vec::new();
                for k in 1..=doubles {
                    els.push(PairElement::pair(2 * k - 1, 2 * k, Sign::Plus)?);
                    els.push(PairElement::pair(2 * k - 1, 2 * k, Sign::Minus)?);
                }
                for k in doubles + 1..=doubles + singles {
                    let last = k == doubles + singles;
                    let sign = if last && orientation == Some(Sign::Minus) { Sign::Minus } else { Sign::Plus };
                    els.push(PairElement::pair(2 * k - 1, 2 * k, sign)?);
                }
                PairSetParameter::new(sys, chi, els)?
            }
        };
        let got = p.cartan_class(sys)?;
        if got != c {
            return Err(Error::Consistency(format!("representative {} lies in {got}, not {c}", p.render())));
        }
        out.push((c, p));
    }
    Ok(out)
}

/// A distinguished set `S ∈ R_D` of simple roots, with its pair-set form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RdSet {
    /// Name used in lift formulas: `π`, `δ` or `σ`.
    pub name: &'static str,
    /// Indices of the simple roots in `S`, in Bourbaki labelling.
    pub simple_labels: Vec<usize>,
    #[serde(serialize_with = "serialize_elements")]
    pub elements: Vec<PairElement>,
}

fn serialize_elements<S: serde::Serializer>(v: &[PairElement], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(|e| e.render()).collect::<Vec<_>>().serialize(s)
}

impl RdSet {
    pub fn label(&self) -> String {
        let v: Vec<String> = self.simple_labels.iter().map(|i| format!("α{i}")).collect();
        format!("{{{}}}", v.join(","))
    }
}

/// The nonempty sets `S ∈ R_D` for a family.
///
/// - `SL(2p)`: `π = {α₁,α₃,…,α_{2p−1}}`, pairs `{2k−1,2k}`;
/// - `Spin(2p,2p)`: `π = {α_{n−1},α_n}` (the pair `{2p−1,2p}` with both
///   signs), `δ = {α₁,α₃,…,α_{2p−1}}`, `σ = {α₁,…,α_{2p−3},α_{2p}}`;
/// - `Spin(2p+1,2p+1)`: `π = {α_{n−1},α_n}`, i.e. `e_{2p+1} ∓ e_{2p}`;
/// - `E7`: `π = {α₁,α₃,α₇}` with pair set `{−1,−2},{3,4},{5,6}`.
pub fn rd_sets(family: GroupFamily) -> Vec<RdSet> {
    let n = family.n();
    let p = n / 2;
    let pairs = |ks: &mut dyn Iterator<Item = (usize, usize, Sign)>| -> Vec<PairElement> {
        ks.map(|(o, e, s)| PairElement::pair(o, e, s).expect("static data")).collect()
    };
    match family.family() {
        Family::A if n % 2 == 0 => vec![RdSet {
            name: "π",
            simple_labels: (1..=p).map(|k| 2 * k - 1).collect(),
            elements: pairs(&mut (1..=p).map(|k| (2 * k - 1, 2 * k, Sign::Plus))),
        }],
        Family::A => Vec::new(),
        Family::D if n % 2 == 0 => vec![
            RdSet {
                name: "π",
                simple_labels: vec![n - 1, n],
                elements: pairs(&mut [(n - 1, n, Sign::Plus), (n - 1, n, Sign::Minus)].into_iter()),
            },
            RdSet {
                name: "δ",
                simple_labels: (1..=p).map(|k| 2 * k - 1).collect(),
                elements: pairs(&mut (1..=p).map(|k| (2 * k - 1, 2 * k, Sign::Plus))),
            },
            RdSet {
                name: "σ",
                simple_labels: (1..p).map(|k| 2 * k - 1).chain([n]).collect(),
                elements: pairs(
                    &mut (1..=p).map(|k| (2 * k - 1, 2 * k, if k == p { Sign::Minus } else { Sign::Plus })),
                ),
            },
        ],
        Family::D => vec![RdSet {
            name: "π",
            simple_labels: vec![n - 1, n],
            elements: pairs(&mut [(n, n - 1, Sign::Plus), (n, n - 1, Sign::Minus)].into_iter()),
        }],
        Family::E if family.rank() == 7 => vec![RdSet {
            name: "π",
            simple_labels: vec![1, 3, 7],
            elements: pairs(&mut [(1, 2, Sign::Minus), (3, 4, Sign::Plus), (5, 6, Sign::Plus)].into_iter()),
        }],
        Family::E => Vec::new(),
    }
}

/// `c_S(γ_Sh)` for `S ∈ R_D`.
pub fn rd_parameter(sys: &RootSystem, chi: CentralCharacterLabel, set: &RdSet) -> Result<PairSetParameter> {
    PairSetParameter::new(sys, chi, set.elements.clone())
}

/// All `c_{S'}(γ_Sh)` for `S' ⊆ S`, ordered by `|S'|` then canonically.
pub fn tower(sys: &RootSystem, chi: CentralCharacterLabel, set: &RdSet) -> Result<Vec<PairSetParameter>> {
    let k = set.elements.len();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u32..(1u32 << k) {
        let els = (0..k).filter(|&b| mask >> b & 1 == 1).map(|b| set.elements[b].clone()).collect();
        out.push(PairSetParameter::new(sys, chi, els)?);
    }
    out.sort_by(|a, b| a.cayley_root_count().cmp(&b.cayley_root_count()).then(a.cmp(b)));
    Ok(out)
}

/// `Π_{R_D}(G̃)_χ`: the base point and `c_S(γ_Sh)` for each `S ∈ R_D`.
pub fn pi_rd(sys: &RootSystem, chi: CentralCharacterLabel) -> Result<Vec<PairSetParameter>> {
    let mut out = vec![PairSetParameter::base(chi)];
    for s in rd_sets(sys.family()) {
        out.push(rd_parameter(sys, chi, &s)?);
    }
    Ok(out)
}

/// `Π_{R_D}(G̃)` over all central characters.
pub fn pi_rd_all(sys: &RootSystem) -> Result<BTreeSet<PairSetParameter>> {
    let mut out = BTreeSet::new();
    for chi in CentralCharacterLabel::all(sys)? {
        out.extend(pi_rd(sys, chi)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(f: GroupFamily) -> RootSystem {
        RootSystem::new(f).unwrap()
    }

    fn chi0(s: &RootSystem) -> CentralCharacterLabel {
        CentralCharacterLabel::new(s, 0).unwrap()
    }

    #[test]
    fn render_and_parse_round_trip() {
        let s = sys(GroupFamily::spin(4).unwrap());
        let p = PairSetParameter::parse(&s, chi0(&s), "γ({3,4},{−1,−2})").unwrap();
        assert_eq!(p.render(), "γ({−1,−2},{3,4})");
        assert_eq!(PairSetParameter::parse(&s, chi0(&s), &p.render()).unwrap(), p);
        assert_eq!(PairSetParameter::base(chi0(&s)).render(), "γ(∅)");
    }

    #[test]
    fn cayley_from_base() {
        let s = sys(GroupFamily::sl(4).unwrap());
        let base = PairSetParameter::base(chi0(&s));
        let p = cayley(&s, &base, SignedPair::plus(1, 2)).unwrap();
        assert_eq!(p.render(), "γ({1,2})");
        assert!(matches!(cayley(&s, &p, SignedPair::plus(1, 4)), Err(Error::Transform(_))));
        assert!(matches!(cayley(&s, &p, SignedPair::minus(3, 4)), Err(Error::Family { .. })));
    }

    #[test]
    fn d_double_pair() {
        let s = sys(GroupFamily::spin(4).unwrap());
        let base = PairSetParameter::base(chi0(&s));
        let p = cayley(&s, &base, SignedPair::plus(3, 4)).unwrap();
        let q = cayley(&s, &p, SignedPair::minus(3, 4)).unwrap();
        assert_eq!(q.render(), "γ({3,4},{−3,−4})");
    }

    #[test]
    fn sl4_lengths() {
        let s = sys(GroupFamily::sl(4).unwrap());
        assert_eq!(split_length(&s), rat(9, 2));
        let base = PairSetParameter::base(chi0(&s));
        assert_eq!(length(&s, &base).unwrap(), rat(9, 2));
        let p = PairSetParameter::parse(&s, chi0(&s), "{1,2},{3,4}").unwrap();
        assert_eq!(length(&s, &p).unwrap(), rat(5, 2));
        assert_eq!(length_closed_form(&s, &p), Some(rat(5, 2)));
        let q = PairSetParameter::parse(&s, chi0(&s), "{1,4},{3,2}").unwrap();
        assert_eq!(length_closed_form(&s, &q), None);
    }

    #[test]
    fn sl4_block_has_seven_parameters() {
        let s = sys(GroupFamily::sl(4).unwrap());
        let block = enumerate_block(&s, chi0(&s), 1000).unwrap();
        let r: Vec<String> = block.iter().map(|p| p.render()).collect();
        assert_eq!(
            r,
            [
                "γ(∅)",
                "γ({1,2})",
                "γ({1,4})",
                "γ({3,2})",
                "γ({3,4})",
                "γ({1,2},{3,4})",
                "γ({1,4},{3,2})"
            ]
        );
    }

    #[test]
    fn e_block_enumeration_is_out_of_scope() {
        let s = sys(GroupFamily::e(6).unwrap());
        assert!(matches!(enumerate_block(&s, chi0(&s), 10), Err(Error::Scope(_))));
    }

    #[test]
    fn e_representatives() {
        let s6 = sys(GroupFamily::e(6).unwrap());
        let reps = orbit_representatives(&s6).unwrap();
        assert_eq!(reps.len(), 5);
        assert_eq!(reps[1].1.render(), "γ({1,2},{−1,−2},{3,4})");
        let s7 = sys(GroupFamily::e(7).unwrap());
        let reps = orbit_representatives(&s7).unwrap();
        assert_eq!(reps.len(), 10);
        assert_eq!(reps[0].1.render(), "γ({1,2,3,4,5,6},{7,8})");
        let s8 = sys(GroupFamily::e(8).unwrap());
        let reps = orbit_representatives(&s8).unwrap();
        assert_eq!(reps.len(), 10);
        assert_eq!(reps[0].1.render(), "γ({1,2,3,4,5,6,7,8})");
    }

    #[test]
    fn pi_rd_counts() {
        for (f, total) in [
            (GroupFamily::sl(4).unwrap(), 4),
            (GroupFamily::sl(5).unwrap(), 1),
            (GroupFamily::spin(4).unwrap(), 16),
            (GroupFamily::spin(5).unwrap(), 4),
            (GroupFamily::e(6).unwrap(), 1),
            (GroupFamily::e(7).unwrap(), 4),
            (GroupFamily::e(8).unwrap(), 1),
        ] {
            let s = sys(f);
            assert_eq!(pi_rd_all(&s).unwrap().len(), total, "{f}");
        }
        let s7 = sys(GroupFamily::e(7).unwrap());
        let p = pi_rd(&s7, chi0(&s7)).unwrap();
        assert_eq!(p[1].render(), "γ({−1,−2},{3,4},{5,6})");
    }

    #[test]
    fn containment() {
        let s = sys(GroupFamily::e(7).unwrap());
        let c = chi0(&s);
        let a = PairSetParameter::parse(&s, c, "{1,2},{-1,-2}").unwrap();
        let b = PairSetParameter::parse(&s, c, "{1,2,3,4}").unwrap();
        assert!(contains(&a, &b).unwrap());
        assert!(!contains(&b, &a).unwrap());
        let other = CentralCharacterLabel::new(&s, 1).unwrap();
        assert!(matches!(contains(&a, &PairSetParameter::base(other)), Err(Error::Comparison(_))));
    }
}
