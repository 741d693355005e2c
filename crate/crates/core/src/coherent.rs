//! Coherent-continuation counting at infinitesimal character ρ/2.
//!
//! For a parameter `γ` with Cartan involution `θ` and a word
//! `w = s_{α_n}⋯s_{α_1}` the β-chain `β_k = s_{α_1}⋯s_{α_{k−1}}(α_k)` is
//! classified root by root; `m(γ,w)` is the number of imaginary `β_k` and
//! `ε_γ(w) = (−1)^{m(γ,w)}`. Classifying `β_k` against `θ` is the same as
//! classifying `α_k` against the involution of the cross-acted parameter
//! `s_{β_{k−1}}⋯s_{β_1} × γ`, which is how the chain is usually described.
//!
//! A parameter contributes to the sign multiplicity of coherent continuation
//! only if `sgn = ε_γ` on its stabilizer
//! `W_γ = [W^i(ρ/2) × W^r(ρ/2)] ⋊ W^C(ρ/2)^θ` (condition (★)). A single
//! element with `sgn(w) ≠ ε_γ(w)` rules the parameter out.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::cartan::{self, Involution, RootTypeTag, Signature};
use crate::error::{Error, Result};
use crate::parameters::{self, CentralCharacterLabel, PairSetParameter};
use crate::rational::{self, Rational};
use crate::root_system::{chain_roots, canonical_reflection_word, Family, GroupFamily, RootIdx, RootSubsystem, RootSystem, Weight};
use crate::weyl::{RootPerm, WeylWord};

/// Default cap on the number of Weyl group elements enumerated by
/// [`star_check`].
pub const DEFAULT_SEARCH_CAP: usize = 200_000;

/// One step `β_k` of a chain with its root type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub index: usize,
    pub root: String,
    #[serde(skip)]
    pub root_idx: RootIdx,
    #[serde(rename = "type")]
    pub tag: RootTypeTag,
}

/// The annotated β-chain of a word for a parameter, with
/// `m(γ,w)`, `ε_γ(w) = (−1)^m` and `sgn(w) = (−1)^{len}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCertificate {
    pub parameter: PairSetParameter,
    pub word: WeylWord,
    pub word_text: String,
    pub steps: Vec<ChainStep>,
    pub imaginary_count: usize,
    pub sign: i8,
    pub sgn: i8,
}

impl ChainCertificate {
    /// Recomputes `m` and `ε` from the steps.
    pub fn is_consistent(&self) -> bool {
        let m = self.steps.iter().filter(|s| s.tag == RootTypeTag::Imaginary).count();
        m == self.imaginary_count && self.sign == parity_sign(m) && self.sgn == parity_sign(self.word.len())
    }

    /// True when `sgn(w) ≠ ε_γ(w)`, i.e. the certificate violates (★).
    pub fn violates_star(&self) -> bool {
        self.sign != self.sgn
    }

    /// Text rendering mirroring the "β_i (type)" lists.
    pub fn render_text(&self) -> String {
        let mut out = format!("parameter {}\nword ({} letters): {}\n", self.parameter, self.word.len(), self.word_text);
        for s in &self.steps {
            out.push_str(&format!("β{} = {} ({})\n", s.index, s.root, s.tag));
        }
        out.push_str(&format!(
            "m = {}, ε = {}, sgn = {}\n",
            self.imaginary_count,
            sign_str(self.sign),
            sign_str(self.sgn)
        ));
        out
    }
}

fn parity_sign(k: usize) -> i8 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn sign_str(s: i8) -> &'static str {
    if s > 0 {
        "+1"
    } else {
        "−1"
    }
}

/// Classifies the β-chain of `word` for the parameter `p`.
pub fn chain_types(sys: &RootSystem, p: &PairSetParameter, word: &WeylWord) -> Result<ChainCertificate> {
    word.validate(sys)?;
    let theta = p.involution(sys)?;
    Ok(chain_types_for(sys, p, &theta, word))
}

fn chain_types_for(sys: &RootSystem, p: &PairSetParameter, theta: &Involution, word: &WeylWord) -> ChainCertificate {
    let steps: Vec<ChainStep> = chain_roots(sys, word)
        .into_iter()
        .enumerate()
        .map(|(k, r)| ChainStep { index: k + 1, root: sys.root_label(r), root_idx: r, tag: theta.root_type(sys, r) })
        .collect();
    let m = steps.iter().filter(|s| s.tag == RootTypeTag::Imaginary).count();
    ChainCertificate {
        parameter: p.clone(),
        word_text: word.render(sys),
        word: word.clone(),
        steps,
        imaginary_count: m,
        sign: parity_sign(m),
        sgn: parity_sign(word.len()),
    }
}

/// The pieces of the stabilizer `W_γ = [W^i(ρ/2) × W^r(ρ/2)] ⋊ W^C(ρ/2)^θ`.
#[derive(Debug, Clone, Serialize)]
pub struct StabilizerDescription {
    /// `Δ^r(ρ/2)`: integral roots with `θα = −α`.
    pub real_subsystem: RootSubsystem,
    /// `Δ^i(ρ/2)`: integral roots with `θα = α`.
    pub imaginary_subsystem: RootSubsystem,
    /// `Δ^C(ρ/2)`: integral roots orthogonal to `ρ_r` and `ρ_i`, closed
    /// under their own reflections.
    pub complex_subsystem: RootSubsystem,
    pub rho_r: Weight,
    pub rho_i: Weight,
    /// Generators of `W^C(ρ/2)^θ`, when supplied.
    pub complex_fixed_generators: Vec<WeylWord>,
}

impl StabilizerDescription {
    /// `w ∈ W^r(ρ/2)`.
    pub fn in_real(&self, sys: &RootSystem, w: &RootPerm) -> bool {
        in_reflection_group(sys, &self.real_subsystem, w)
    }

    /// `w ∈ W^i(ρ/2)`.
    pub fn in_imaginary(&self, sys: &RootSystem, w: &RootPerm) -> bool {
        in_reflection_group(sys, &self.imaginary_subsystem, w)
    }

    /// `w ∈ W^C(ρ/2)`.
    pub fn in_complex(&self, sys: &RootSystem, w: &RootPerm) -> bool {
        in_reflection_group(sys, &self.complex_subsystem, w)
    }
}

fn half_sum(sys: &RootSystem, roots: &[RootIdx]) -> Weight {
    let mut v = vec![Rational::from_integer(0); sys.ambient_dim()];
    for &r in roots {
        for (x, c) in v.iter_mut().zip(sys.root(r).coords()) {
            *x += c;
        }
    }
    Weight(v).scaled(rational::half())
}

/// Computes the stabilizer pieces of `p`.
pub fn stabilizer(sys: &RootSystem, p: &PairSetParameter) -> Result<StabilizerDescription> {
    let theta = p.involution(sys)?;
    Ok(stabilizer_for(sys, &theta))
}

fn stabilizer_for(sys: &RootSystem, theta: &Involution) -> StabilizerDescription {
    let lambda = sys.half_rho();
    let integral: Vec<bool> = (0..sys.len())
        .map(|i| rational::dot(lambda.coords(), sys.root(i).coords()).is_integer())
        .collect();
    let real = RootSubsystem::from_predicate(sys, |i| integral[i] && theta.apply(i) == sys.negate(i));
    let imag = RootSubsystem::from_predicate(sys, |i| integral[i] && theta.apply(i) == i);
    let rho_r = half_sum(sys, &real.positive);
    let rho_i = half_sum(sys, &imag.positive);
    let orth: Vec<RootIdx> = (0..sys.len())
        .filter(|&i| {
            integral[i]
                && rational::dot(rho_r.coords(), sys.root(i).coords()).is_zero()
                && rational::dot(rho_i.coords(), sys.root(i).coords()).is_zero()
        })
        .collect();
    let closure = reflection_closure(sys, &orth);
    let complex = RootSubsystem::from_predicate(sys, |i| closure.contains(&i));
    StabilizerDescription {
        real_subsystem: real,
        imaginary_subsystem: imag,
        complex_subsystem: complex,
        rho_r,
        rho_i,
        complex_fixed_generators: Vec::new(),
    }
}

/// Smallest set of roots containing `seed` and stable under the reflections
/// in its own members. In a simply-laced system this is a closed subsystem.
fn reflection_closure(sys: &RootSystem, seed: &[RootIdx]) -> HashSet<RootIdx> {
    let mut set: HashSet<RootIdx> = seed.iter().copied().collect();
    let mut queue: VecDeque<RootIdx> = seed.iter().copied().collect();
    while let Some(a) = queue.pop_front() {
        let members: Vec<RootIdx> = set.iter().copied().collect();
        for b in members {
            for c in [sys.reflection(a).apply(b), sys.reflection(b).apply(a)] {
                if set.insert(c) {
                    queue.push_back(c);
                }
            }
        }
    }
    set
}

/// Membership in the reflection group of a closed subsystem, by stripping
/// descents in the subsystem's simple roots.
pub fn in_reflection_group(sys: &RootSystem, sub: &RootSubsystem, w: &RootPerm) -> bool {
    let mut w = w.clone();
    'outer: loop {
        for &b in &sub.simple {
            if !sys.is_positive(w.apply(b)) {
                w = w.compose(sys.reflection(b));
                continue 'outer;
            }
        }
        return w.is_identity();
    }
}

/// Which part of the stabilizer a witness lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    /// A reflection in `Δ^r(ρ/2)`; rules out when `ε = +1` (as `sgn = −1`).
    RealReflection,
    /// A reflection in `Δ^i(ρ/2)`; rules out when `ε = +1`.
    ImaginaryReflection,
    /// An element of `W^C(ρ/2)^θ`; rules out when `ε ≠ sgn`.
    ComplexFixed,
}

/// Outcome of the condition-(★) test.
#[derive(Debug, Clone, Serialize)]
pub enum Verdict {
    RuledOut { kind: WitnessKind, witness_id: Option<String>, certificate: ChainCertificate },
    Survives,
}

impl Verdict {
    pub fn is_ruled_out(&self) -> bool {
        matches!(self, Verdict::RuledOut { .. })
    }
}

/// Decides condition (★) for `p` by checking `sgn = ε_γ` on the simple
/// reflections of `W^r(ρ/2)` and `W^i(ρ/2)` and on every element of
/// `W^C(ρ/2)^θ`, enumerated breadth-first up to `cap` elements.
pub fn star_check(sys: &RootSystem, p: &PairSetParameter, cap: usize) -> Result<Verdict> {
    let theta = p.involution(sys)?;
    let stab = stabilizer_for(sys, &theta);
    for (kind, sub) in [
        (WitnessKind::RealReflection, &stab.real_subsystem),
        (WitnessKind::ImaginaryReflection, &stab.imaginary_subsystem),
    ] {
        for &a in &sub.simple {
            let cert = chain_types_for(sys, p, &theta, &canonical_reflection_word(sys, a));
            if cert.violates_star() {
                return Ok(Verdict::RuledOut { kind, witness_id: None, certificate: cert });
            }
        }
    }
    let gens: Vec<&RootPerm> = stab.complex_subsystem.positive.iter().map(|&a| sys.reflection(a)).collect();
    let id = RootPerm::identity(sys.len());
    let mut seen: HashSet<RootPerm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut fixed = Vec::new();
    while let Some(w) = queue.pop_front() {
        if !w.is_identity() && theta.commutes_with(&w) {
            fixed.push(w.clone());
        }
        for g in &gens {
            let v = w.compose(g);
            if !seen.contains(&v) {
                if seen.len() >= cap {
                    return Err(Error::Resource { what: "W^C(ρ/2) enumeration".into(), cap });
                }
                seen.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    fixed.sort_by_key(|w| w.length(sys));
    for w in fixed {
        let cert = chain_types_for(sys, p, &theta, &w.reduced_word(sys));
        if cert.violates_star() {
            return Ok(Verdict::RuledOut { kind: WitnessKind::ComplexFixed, witness_id: None, certificate: cert });
        }
    }
    Ok(Verdict::Survives)
}

/// Where a catalog witness comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessSource {
    /// Published with the original rule-out argument.
    Published,
    /// Added here where the printed witness does not have the claimed sign.
    Supplementary,
}

/// A shipped witness: a Weyl group element for an E-type orbit
/// representative, given by an explicit word.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub id: String,
    pub rank: usize,
    pub class: (usize, usize, usize),
    pub kind: WitnessKind,
    pub source: WitnessSource,
    /// The element in its published notation.
    pub element: String,
    /// Reflection tokens; the word is read left to right.
    pub word: String,
    /// Cancel adjacent repeated letters before building the chain.
    pub free_reduce: bool,
    /// Printed `(β_k, type)` list, roots compared up to sign.
    #[serde(skip)]
    pub golden: Option<&'static [(&'static str, &'static str)]>,
}

const E6_030_GOLDEN: &[(&str, &str)] = &[
    ("-e3+e4", "im"),
    ("-e1+e2", "im"),
    ("-e1+e4", "cx"),
    ("e2+e4", "cx"),
    ("e1+e2", "im"),
    ("e1+e4", "cx"),
    ("e2-e4", "cx"),
    ("e3+e4", "real"),
    ("e2+e3", "cx"),
    ("e1+e3", "cx"),
    ("-e1+e3", "cx"),
    ("-e2+e3", "cx"),
];

const E7_320_GOLDEN: &[(&str, &str)] = &[
    ("-e4+e5", "cx"),
    ("-e3+e5", "cx"),
    ("-e2+e5", "cx"),
    ("-e1+e5", "cx"),
    ("-e4+e6", "cx"),
    ("-e3+e6", "cx"),
    ("-e2+e6", "cx"),
    ("-e1+e6", "cx"),
    ("e5+e6", "real"),
    ("e1+e5", "cx"),
    ("e2+e5", "cx"),
    ("e3+e5", "cx"),
    ("e4+e5", "cx"),
    ("e1+e6", "cx"),
    ("e2+e6", "cx"),
    ("e3+e6", "cx"),
    ("e4+e6", "cx"),
    ("-e1+e2", "im"),
    ("-e3+e4", "im"),
    ("-e1+e4", "im"),
    ("e2+e4", "im"),
    ("e1+e2", "im"),
    ("e2+e3", "im"),
    ("e1+e4", "im"),
    ("b37", "cx"),
    ("b1347", "cx"),
    ("e2+e3", "im"),
    ("b1237", "cx"),
    ("b2347", "cx"),
    ("-e1+e4", "im"),
    ("b47", "cx"),
    ("-e1+e2", "im"),
    ("b27", "cx"),
    ("b17", "cx"),
    ("b1247", "cx"),
    ("e2+e4", "im"),
    ("e1+e4", "im"),
    ("b3467", "cx"),
    ("b123467", "cx"),
    ("b2367", "cx"),
    ("b1367", "cx"),
    ("b3457", "cx"),
    ("b123457", "cx"),
    ("b2357", "cx"),
    ("b1357", "cx"),
    ("-e7+e8", "im"),
    ("b2467", "cx"),
    ("b1467", "cx"),
    ("b67", "cx"),
    ("b1267", "cx"),
    ("b2457", "cx"),
    ("b1457", "cx"),
    ("b57", "cx"),
    ("b1257", "cx"),
    ("e1+e2", "im"),
    ("-e2+e4", "im"),
    ("-e1+e4", "im"),
    ("b123567", "cx"),
    ("b234567", "cx"),
    ("b134567", "cx"),
    ("b3567", "cx"),
    ("-e1+e2", "im"),
    ("e2+e4", "im"),
    ("b1567", "cx"),
    ("b124567", "cx"),
    ("b2567", "cx"),
    ("b4567", "cx"),
    ("-e2+e4", "im"),
    ("e1+e2", "im"),
    ("-e1+e4", "im"),
    ("e2+e4", "im"),
    ("e1-e2", "im"),
];

const S35_GOLDEN: &[(&str, &str)] = &[("-e4+e5", "real"), ("-e3+e5", "real"), ("-e3+e4", "real")];
const S57_GOLDEN: &[(&str, &str)] = &[("-e6+e7", "real"), ("-e5+e7", "real"), ("-e5+e6", "real")];

/// The 12-letter word for `s₁₃s_{1̄3}s₂₄s_{2̄4}`.
const S13_WORD: &str = "s23 s12 s12b s23 s34 s23 s12 s23 s12b s23 s12 s34";

/// A reduced word for `s₁₅s_{1̄5}s₂₆s_{2̄6}`.
const S15_WORD: &str =
    "s56 s45 s34 s23 s12 s12b s23 s34 s45 s56 s45 s34 s23 s12 s12b s23 s34 s45 s12 s12b";

/// The word for `r₄₅₆₇r₁₂₃₅₆₇r₁₂₄₇r₃₇`, assembled from the building blocks
/// `s_{5̄6}` and `s_{2̄4}`.
fn e7_320_word() -> String {
    let s56b = "s45 s34 s23 s12 s56 s45 s34 s23 s12b s23 s34 s45 s56 s12 s23 s34 s45";
    let s24b = "s12 s34 s23 s12b s23 s34 s12";
    let r4567 = "s12 s23 s12b s23 s12 r234567 s12 s23 s12b s23 s12";
    let r123567 = "s34 s23 s12 r234567 s12 s23 s34";
    let r1247 = format!("{s56b} s23 s12 r234567 s12 s23 {s56b}");
    let r37 = format!("{s56b} {s24b} r234567 {s24b} {s56b}");
    format!("{r4567} {r123567} {r1247} {r37}")
}

/// The shipped witness catalog, in a fixed order.
pub fn witness_catalog() -> Vec<Witness> {
    let mut out = Vec::new();
    let mut push = |id: &str,
                    rank: usize,
                    class: (usize, usize, usize),
                    kind: WitnessKind,
                    source: WitnessSource,
                    element: &str,
                    word: String,
                    free_reduce: bool,
                    golden: Option<&'static [(&'static str, &'static str)]>| {
        out.push(Witness {
            id: id.to_string(),
            rank,
            class,
            kind,
            source,
            element: element.to_string(),
            word,
            free_reduce,
            golden,
        })
    };
    use WitnessKind::*;
    use WitnessSource::*;
    for (rank, class) in [
        (6, (0, 2, 2)),
        (6, (0, 1, 4)),
        (6, (0, 0, 6)),
        (7, (0, 0, 7)),
        (7, (0, 1, 5)),
        (7, (0, 2, 3)),
        (7, (1, 2, 2)),
    ] {
        let id = format!("E{rank}-{}{}{}-s35", class.0, class.1, class.2);
        push(&id, rank, class, RealReflection, Published, "s35", "s45 s34 s45".into(), false, Some(S35_GOLDEN));
    }
    for class in [(0, 0, 8), (0, 1, 6), (0, 2, 4), (0, 3, 2), (2, 2, 2)] {
        let id = format!("E8-{}{}{}-s57", class.0, class.1, class.2);
        push(&id, 8, class, RealReflection, Published, "s57", "s67 s56 s67".into(), false, Some(S57_GOLDEN));
    }
    let s13 = "s13 s1̄3 s24 s2̄4";
    push("E6-030", 6, (0, 3, 0), ComplexFixed, Published, s13, S13_WORD.into(), false, Some(E6_030_GOLDEN));
    for class in [(5, 1, 0), (1, 3, 0), (0, 3, 1)] {
        let id = format!("E7-{}{}{}", class.0, class.1, class.2);
        push(&id, 7, class, ComplexFixed, Published, s13, S13_WORD.into(), false, None);
    }
    push(
        "E7-320",
        7,
        (3, 2, 0),
        ComplexFixed,
        Published,
        "r4567 r123567 r1247 r37",
        e7_320_word(),
        true,
        Some(E7_320_GOLDEN),
    );
    for class in [(6, 1, 0), (4, 2, 0), (2, 3, 0), (0, 4, 0)] {
        let id = format!("E8-{}{}{}", class.0, class.1, class.2);
        push(&id, 8, class, ComplexFixed, Published, s13, S13_WORD.into(), false, None);
    }
    let s15 = "s15 s1̄5 s26 s2̄6";
    push("E7-510-alt", 7, (5, 1, 0), ComplexFixed, Supplementary, s15, S15_WORD.into(), false, None);
    push(
        "E8-610-alt",
        8,
        (6, 1, 0),
        ComplexFixed,
        Supplementary,
        "s1̄2 s34 s56 s7̄8",
        "s12b s34 s56 s78b".into(),
        false,
        None,
    );
    push("E8-420-alt", 8, (4, 2, 0), ComplexFixed, Supplementary, s15, S15_WORD.into(), false, None);
    push("E8-230-alt", 8, (2, 3, 0), ComplexFixed, Supplementary, s15, S15_WORD.into(), false, None);
    out
}

/// Looks up a catalog entry.
pub fn find_witness(id: &str) -> Result<Witness> {
    witness_catalog()
        .into_iter()
        .find(|w| w.id == id)
        .ok_or_else(|| Error::Argument(format!("unknown witness {id:?}")))
}

/// The E-type orbit representative with the given `(r,m,s)` label.
pub fn e_representative(sys: &RootSystem, chi: CentralCharacterLabel, class: (usize, usize, usize)) -> Result<PairSetParameter> {
    let text = parameters::e_representative_table(sys.rank())
        .iter()
        .find(|(c, _)| *c == class)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Argument(format!("no class {class:?} in {}", sys.family())))?;
    PairSetParameter::parse(sys, chi, text)
}

/// Recomputes a witness certificate from scratch and checks it:
/// membership of `w` in the claimed part of the stabilizer, the printed
/// `(β_k, type)` list (roots up to sign), and the sign that rules the
/// parameter out. Any discrepancy is a certificate failure naming the first
/// divergent step (step 0 for whole-word claims).
pub fn replay_witness(id: &str) -> Result<ChainCertificate> {
    let entry = find_witness(id)?;
    let sys = RootSystem::new(GroupFamily::e(entry.rank)?)?;
    replay_entry(&sys, &entry, CentralCharacterLabel::new(&sys, 0)?)
}

fn replay_entry(sys: &RootSystem, entry: &Witness, chi: CentralCharacterLabel) -> Result<ChainCertificate> {
    let p = e_representative(sys, chi, entry.class)?;
    let mut word = WeylWord::parse(sys, &entry.word)?;
    if entry.free_reduce {
        word = word.free_reduce();
    }
    let theta = p.involution(sys)?;
    let cert = chain_types_for(sys, &p, &theta, &word);
    let w = RootPerm::from_word(sys, &word)?;
    let stab = stabilizer_for(sys, &theta);
    let failure = match entry.kind {
        WitnessKind::RealReflection => {
            (!is_reflection_in(sys, &stab.real_subsystem, &w)).then_some("is not a reflection in Δ^r(ρ/2)")
        }
        WitnessKind::ImaginaryReflection => {
            (!is_reflection_in(sys, &stab.imaginary_subsystem, &w)).then_some("is not a reflection in Δ^i(ρ/2)")
        }
        WitnessKind::ComplexFixed if !theta.commutes_with(&w) => Some("does not commute with θ"),
        WitnessKind::ComplexFixed => (!stab.in_complex(sys, &w)).then_some("is not in W^C(ρ/2)"),
    };
    if let Some(why) = failure {
        return Err(Error::Certificate {
            step: 0,
            detail: format!("{} {why} for {p} (m = {})", entry.element, cert.imaginary_count),
        });
    }
    if let Some(golden) = entry.golden {
        if golden.len() != cert.steps.len() {
            return Err(Error::Certificate {
                step: golden.len().min(cert.steps.len()) + 1,
                detail: format!("chain has {} steps, expected {}", cert.steps.len(), golden.len()),
            });
        }
        for (step, (root, tag)) in cert.steps.iter().zip(golden) {
            let expected = sys.parse_root(root)?;
            let tag = RootTypeTag::parse(tag)?;
            if sys.positive_of(expected) != sys.positive_of(step.root_idx) || tag != step.tag {
                return Err(Error::Certificate {
                    step: step.index,
                    detail: format!("computed {} ({}), printed {} ({})", step.root, step.tag, root, tag),
                });
            }
        }
    }
    if !cert.violates_star() {
        return Err(Error::Certificate {
            step: 0,
            detail: format!(
                "m = {} gives ε = {} = sgn, so {} does not rule out {p}",
                cert.imaginary_count,
                sign_str(cert.sign),
                entry.element
            ),
        });
    }
    Ok(cert)
}

fn is_reflection_in(sys: &RootSystem, sub: &RootSubsystem, w: &RootPerm) -> bool {
    sub.positive.iter().any(|&a| sys.reflection(a) == w)
}

/// Outcome of replaying one catalog entry.
#[derive(Debug, Clone, Serialize)]
pub struct ReplayOutcome {
    pub id: String,
    pub source: WitnessSource,
    pub passed: bool,
    pub imaginary_count: Option<usize>,
    pub detail: String,
}

/// Replays the whole catalog, in catalog order.
pub fn replay_catalog() -> Vec<ReplayOutcome> {
    witness_catalog()
        .into_iter()
        .map(|w| match replay_witness(&w.id) {
            Ok(c) => ReplayOutcome {
                id: w.id,
                source: w.source,
                passed: true,
                imaginary_count: Some(c.imaginary_count),
                detail: format!("{} steps, m = {}", c.steps.len(), c.imaginary_count),
            },
            Err(e) => ReplayOutcome { id: w.id, source: w.source, passed: false, imaginary_count: None, detail: e.to_string() },
        })
        .collect()
}

/// Condition-(★) verdict for an orbit representative.
///
/// Type E consults the shipped witness catalog (a witness counts only if
/// its replay succeeds); types A and D run [`star_check`]. A `Survives`
/// verdict from the catalog is an upper-bound statement only.
pub fn rule_out(sys: &RootSystem, p: &PairSetParameter) -> Result<Verdict> {
    if sys.family().family() != Family::E {
        return star_check(sys, p, DEFAULT_SEARCH_CAP);
    }
    let class = p.cartan_class(sys)?;
    let Signature::E { r, m, s } = class.signature else {
        return Err(Error::Consistency("type E parameter without an (r,m,s) label".into()));
    };
    for w in witness_catalog().into_iter().filter(|w| w.rank == sys.rank() && w.class == (r, m, s)) {
        let rep = e_representative(sys, p.chi(), w.class)?;
        if rep != *p {
            continue;
        }
        if let Ok(cert) = replay_entry(sys, &w, p.chi()) {
            return Ok(Verdict::RuledOut { kind: w.kind, witness_id: Some(w.id), certificate: cert });
        }
    }
    Ok(Verdict::Survives)
}

/// One orbit representative in a count report.
#[derive(Debug, Clone, Serialize)]
pub struct RepresentativeVerdict {
    pub class: String,
    pub parameter: String,
    pub survives: bool,
    pub witness: Option<String>,
    pub imaginary_count: Option<usize>,
}

/// Proof report for the number of small genuine representations.
#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub family: String,
    pub group: String,
    pub representatives: Vec<RepresentativeVerdict>,
    pub survivors: usize,
    pub central_characters: usize,
    pub upper_bound: usize,
    pub lower_bound: usize,
    pub value: usize,
}

/// Counts `|Π^s_{ρ/2}(G̃)|`: the upper bound is (surviving
/// representatives) × (genuine central characters), the lower bound is
/// `|Π_{R_D}(G̃)|`; they must agree.
pub fn count_small(family: GroupFamily) -> Result<CountReport> {
    let sys = RootSystem::new(family)?;
    let chi = CentralCharacterLabel::new(&sys, 0)?;
    let mut reps = Vec::new();
    for (class, p) in parameters::class_representatives(&sys, chi)? {
        let verdict = rule_out(&sys, &p)?;
        let (witness, imaginary_count) = match &verdict {
            Verdict::RuledOut { witness_id, certificate, .. } => (
                Some(witness_id.clone().unwrap_or_else(|| certificate.word_text.clone())),
                Some(certificate.imaginary_count),
            ),
            Verdict::Survives => (None, None),
        };
        reps.push(RepresentativeVerdict {
            class: class.label(),
            parameter: p.render(),
            survives: !verdict.is_ruled_out(),
            witness,
            imaginary_count,
        });
    }
    let survivors = reps.iter().filter(|r| r.survives).count();
    let central_characters = cartan::genuine_central_character_count(&sys)?;
    let upper = survivors * central_characters;
    let lower = parameters::pi_rd_all(&sys)?.len();
    if upper != lower {
        return Err(Error::Counting { upper, lower });
    }
    Ok(CountReport {
        family: family.label(),
        group: family.group_name(),
        representatives: reps,
        survivors,
        central_characters,
        upper_bound: upper,
        lower_bound: lower,
        value: upper,
    })
}

/// `ε_γ(w)` for every word in `words`, keyed by the element each word
/// represents; used to test that `ε_γ` depends only on the element.
pub fn epsilon_by_element(
    sys: &RootSystem,
    p: &PairSetParameter,
    words: &[WeylWord],
) -> Result<HashMap<RootPerm, HashSet<i8>>> {
    let theta = p.involution(sys)?;
    let mut out: HashMap<RootPerm, HashSet<i8>> = HashMap::new();
    for w in words {
        let perm = RootPerm::from_word(sys, w)?;
        out.entry(perm).or_default().insert(chain_types_for(sys, p, &theta, w).sign);
    }
    Ok(out)
}
