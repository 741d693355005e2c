//! Cartan involutions, conjugacy classes of Cartan subgroups, torus shapes,
//! Hasse diagrams and centers of the double covers.
//!
//! Every involution handled here has the form `θ = (−Id)∘∏_{α∈S} s_α` for a
//! set `S` of mutually orthogonal roots (the Cayley roots). The split Cartan
//! has `S = ∅`; a single Cayley step adds one root orthogonal to `S`. This
//! form is stable under conjugation by the Weyl group, so it is the only
//! representation we need.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, QMatrix, ZMatrix};
use crate::rational::{int, Rational};
use crate::root_system::{Family, GroupFamily, RootIdx, RootSystem};
use crate::weyl::RootPerm;

/// Orientation sign of a signed pair, `{i,j}` versus `{−i,−j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "−",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RootTypeTag {
    Real,
    Imaginary,
    Complex,
}

impl RootTypeTag {
    /// Abbreviation used in certificates: `real`, `im`, `cx`.
    pub fn short(self) -> &'static str {
        match self {
            RootTypeTag::Real => "real",
            RootTypeTag::Imaginary => "im",
            RootTypeTag::Complex => "cx",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "real" | "re" => Ok(RootTypeTag::Real),
            "im" | "imaginary" => Ok(RootTypeTag::Imaginary),
            "cx" | "complex" => Ok(RootTypeTag::Complex),
            other => Err(Error::Parse(format!("unknown root type {other:?}"))),
        }
    }
}

impl fmt::Display for RootTypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

/// A Cartan involution `(−Id)∘∏ s_α` over a set of orthogonal roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    cayley: Vec<RootIdx>,
    perm: RootPerm,
}

impl Involution {
    /// `θ = −Id`, the involution of the split Cartan.
    pub fn split(sys: &RootSystem) -> Self {
        Self::from_cayley_roots(sys, &[]).expect("the empty set is orthogonal")
    }

    /// Builds `(−Id)∘∏ s_α` from mutually orthogonal roots (signs ignored).
    pub fn from_cayley_roots(sys: &RootSystem, roots: &[RootIdx]) -> Result<Self> {
        let mut cayley: Vec<RootIdx> = roots.iter().map(|&r| sys.positive_of(r)).collect();
        cayley.sort_unstable();
        for (k, &a) in cayley.iter().enumerate() {
            for &b in &cayley[k + 1..] {
                if a == b || sys.inner(a, b) != 0 {
                    return Err(Error::Transform(format!(
                        "roots {} and {} are not orthogonal",
                        sys.root_label(a),
                        sys.root_label(b)
                    )));
                }
            }
        }
        let mut perm = RootPerm::identity(sys.len());
        for &a in &cayley {
            perm = perm.compose(sys.reflection(a));
        }
        let neg = RootPerm::from_images((0..sys.len()).map(|i| sys.negate(i)).collect());
        Ok(Self { cayley, perm: neg.compose(&perm) })
    }

    /// The Cayley roots (positive representatives, sorted by index).
    pub fn cayley_roots(&self) -> &[RootIdx] {
        &self.cayley
    }

    pub fn perm(&self) -> &RootPerm {
        &self.perm
    }

    pub fn apply(&self, i: RootIdx) -> RootIdx {
        self.perm.apply(i)
    }

    pub fn root_type(&self, sys: &RootSystem, i: RootIdx) -> RootTypeTag {
        let t = self.perm.apply(i);
        if t == i {
            RootTypeTag::Imaginary
        } else if t == sys.negate(i) {
            RootTypeTag::Real
        } else {
            RootTypeTag::Complex
        }
    }

    /// Adds one Cayley root; it must be real for `self`.
    pub fn with_cayley_root(&self, sys: &RootSystem, alpha: RootIdx) -> Result<Self> {
        if self.root_type(sys, alpha) != RootTypeTag::Real {
            return Err(Error::Transform(format!(
                "{} is not a real root for this involution",
                sys.root_label(alpha)
            )));
        }
        let mut roots = self.cayley.clone();
        roots.push(alpha);
        Self::from_cayley_roots(sys, &roots)
    }

    /// `w θ w⁻¹`.
    pub fn conjugate(&self, sys: &RootSystem, w: &RootPerm) -> Self {
        let roots: Vec<RootIdx> = self.cayley.iter().map(|&a| w.apply(a)).collect();
        Self::from_cayley_roots(sys, &roots).expect("conjugation preserves orthogonality")
    }

    /// True iff `θ` commutes with `w`.
    pub fn commutes_with(&self, w: &RootPerm) -> bool {
        self.perm.compose(w) == w.compose(&self.perm)
    }

    pub fn count_type(&self, sys: &RootSystem, tag: RootTypeTag) -> usize {
        (0..sys.len()).filter(|&i| self.root_type(sys, i) == tag).count()
    }

    /// The action on the ambient space, `−∏(I − ααᵀ)`.
    pub fn ambient_matrix(&self, sys: &RootSystem) -> QMatrix {
        let n = sys.ambient_dim();
        let mut m = linalg::identity(n);
        for &a in &self.cayley {
            let v = sys.root(a).coords();
            let r: QMatrix = (0..n)
                .map(|i| (0..n).map(|j| if i == j { int(1) } else { int(0) } - v[i] * v[j]).collect())
                .collect();
            m = linalg::mul(&m, &r);
        }
        m.into_iter().map(|row| row.into_iter().map(|x| -x).collect()).collect()
    }

    /// The action on the (co)root lattice in the simple-root basis: column
    /// `j` holds the coefficients of `θ(α_j)`.
    pub fn lattice_matrix(&self, sys: &RootSystem) -> ZMatrix {
        let r = sys.rank();
        let cols: Vec<Vec<i64>> = (0..r)
            .map(|j| sys.simple_coefficients(self.apply(sys.simple_indices()[j])))
            .collect();
        (0..r).map(|i| (0..r).map(|j| cols[j][i]).collect()).collect()
    }

    /// `θ² = Id` on roots and on the ambient space, and `θ` permutes `Δ`.
    pub fn is_valid_involution(&self, sys: &RootSystem) -> bool {
        let sq = self.perm.compose(&self.perm);
        let m = self.ambient_matrix(sys);
        let permutes = sys.roots().iter().all(|r| {
            let img = linalg::mul_vec(&m, r.coords());
            sys.index_of(&crate::root_system::Root(img)).is_some()
        });
        sq.is_identity() && linalg::mul(&m, &m) == linalg::identity(sys.ambient_dim()) && permutes
    }
}

/// Root type of `alpha` under `theta`.
pub fn root_type(sys: &RootSystem, theta: &Involution, alpha: &crate::root_system::Root) -> Result<RootTypeTag> {
    let i = sys
        .index_of(alpha)
        .ok_or_else(|| Error::Argument("vector is not a root of this system".into()))?;
    Ok(theta.root_type(sys, i))
}

/// Isomorphism type `(S¹)^r × (ℂ^×)^m × (ℝ^×)^s` of a real torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TorusShape {
    pub compact_circles: usize,
    pub complex_factors: usize,
    pub split_lines: usize,
}

impl TorusShape {
    pub fn rank(&self) -> usize {
        self.compact_circles + 2 * self.complex_factors + self.split_lines
    }

    /// Shape of the Cartan subgroup with involution `θ`, read off from the
    /// `ℤ[ℤ/2]`-module structure of the coroot lattice: with
    /// `L± = ker(θ ∓ 1)`, the index `[L : L₊ ⊕ L₋] = 2^m`.
    pub fn from_involution(sys: &RootSystem, theta: &Involution) -> Result<Self> {
        let a = theta.lattice_matrix(sys);
        let r = a.len();
        let shifted = |s: i64| -> ZMatrix {
            (0..r).map(|i| (0..r).map(|j| a[i][j] - if i == j { s } else { 0 }).collect()).collect()
        };
        let plus = linalg::integer_kernel(&shifted(1));
        let minus = linalg::integer_kernel(&shifted(-1));
        if plus.len() + minus.len() != r {
            return Err(Error::Consistency("θ is not diagonalisable over ℚ".into()));
        }
        let basis: ZMatrix = (0..r)
            .map(|i| plus.iter().chain(minus.iter()).map(|v| v[i]).collect())
            .collect();
        let index = linalg::abs_det_int(&basis);
        if index <= 0 || (index & (index - 1)) != 0 {
            return Err(Error::Consistency(format!("lattice index {index} is not a power of 2")));
        }
        let m = index.trailing_zeros() as usize;
        if m > plus.len() || m > minus.len() {
            return Err(Error::Consistency("inconsistent lattice decomposition".into()));
        }
        Ok(TorusShape {
            compact_circles: plus.len() - m,
            complex_factors: m,
            split_lines: minus.len() - m,
        })
    }
}

impl fmt::Display for TorusShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |base: &str, k: usize| match k {
            0 => {}
            1 => parts.push(base.to_string()),
            _ => parts.push(format!("({base})^{k}")),
        };
        push("S¹", self.compact_circles);
        push("ℂ^×", self.complex_factors);
        push("ℝ^×", self.split_lines);
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" × "))
        }
    }
}

/// Label of a conjugacy class of Cartan subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Signature {
    /// Type E: the class `𝔥^{r,m,s}`.
    E { r: usize, m: usize, s: usize },
    /// Type A: the number of Cayley pairs; the real rank is `n − 1 − pairs`.
    A { pairs: usize },
    /// Type D: `singles` single signed pairs and `doubles` double pairs
    /// `{i,j},{−i,−j}`; the orientation distinguishes the two classes that
    /// exist when `doubles = 0` and the singles use every coordinate.
    D { singles: usize, doubles: usize, orientation: Option<Sign> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CartanClass {
    pub family: GroupFamily,
    pub signature: Signature,
}

impl CartanClass {
    pub fn new(family: GroupFamily, signature: Signature) -> Result<Self> {
        let c = CartanClass { family, signature };
        if !classes(family).contains(&c) {
            return Err(Error::Classification(format!(
                "{} is not a Cartan class of {}",
                c.label(),
                family
            )));
        }
        Ok(c)
    }

    /// Number of Cayley roots separating the class from the split one.
    pub fn cayley_count(&self) -> usize {
        match self.signature {
            Signature::E { r, m, .. } => r + m,
            Signature::A { pairs } => pairs,
            Signature::D { singles, doubles, .. } => singles + 2 * doubles,
        }
    }

    pub fn real_rank(&self) -> usize {
        self.family.rank() - self.cayley_count()
    }

    pub fn is_split(&self) -> bool {
        self.cayley_count() == 0
    }

    /// Conventional label: `𝔥^{2,2,0}`, `H_2`, `H(1,1)`, `H(2,0,−)`.
    pub fn label(&self) -> String {
        match self.signature {
            Signature::E { r, m, s } => format!("h^{{{r},{m},{s}}}"),
            Signature::A { .. } => format!("H_{}", self.real_rank()),
            Signature::D { singles, doubles, orientation } => match orientation {
                None => format!("H({singles},{doubles})"),
                Some(o) => format!("H({singles},{doubles},{})", o.symbol()),
            },
        }
    }
}

impl fmt::Display for CartanClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The rows of the type-E tables: `(r, m, s)` and the Cayley roots.
pub fn e_table(rank: usize) -> &'static [((usize, usize, usize), &'static str)] {
    match rank {
        6 => &[
            ((2, 2, 0), "s12 s12b s34 s34b"),
            ((0, 3, 0), "s12 s12b s34"),
            ((0, 2, 2), "s12 s12b"),
            ((0, 1, 4), "s12"),
            ((0, 0, 6), ""),
        ],
        7 => &[
            ((7, 0, 0), "s12 s12b s34 s34b s56 s56b s78"),
            ((5, 1, 0), "s12 s12b s34 s34b s56 s78"),
            ((3, 2, 0), "s12 s12b s34 s34b s78"),
            ((1, 3, 0), "s12 s12b s34 s78"),
            ((2, 2, 1), "s12 s12b s34 s34b"),
            ((1, 2, 2), "s12 s12b s78"),
            ((0, 3, 1), "s12 s12b s34"),
            ((0, 2, 3), "s12 s12b"),
            ((0, 1, 5), "s12"),
            ((0, 0, 7), ""),
        ],
        8 => &[
            ((8, 0, 0), "s12 s12b s34 s34b s56 s56b s78 s78b"),
            ((6, 1, 0), "s12 s12b s34 s34b s56 s56b s78"),
            ((4, 2, 0), "s12 s12b s34 s34b s56 s78"),
            ((2, 3, 0), "s12 s12b s34 s34b s56"),
            ((0, 4, 0), "s12 s12b s34 s56"),
            ((2, 2, 2), "s12 s12b s34 s34b"),
            ((0, 3, 2), "s12 s12b s34"),
            ((0, 2, 4), "s12 s12b"),
            ((0, 1, 6), "s12"),
            ((0, 0, 8), ""),
        ],
        _ => &[],
    }
}

/// All Cartan classes of the family, in a fixed order: the E tables' order,
/// or by increasing number of Cayley roots for A and D.
pub fn classes(family: GroupFamily) -> Vec<CartanClass> {
    let mk = |signature| CartanClass { family, signature };
    match family.family() {
        Family::E => e_table(family.rank())
            .iter()
            .map(|&((r, m, s), _)| mk(Signature::E { r, m, s }))
            .collect(),
        Family::A => (0..=family.n() / 2).map(|pairs| mk(Signature::A { pairs })).collect(),
        Family::D => {
            let n = family.n();
            let q = n / 2;
            let mut out = Vec::new();
            for total in 0..=n {
                for doubles in 0..=q {
                    if 2 * doubles > total {
                        break;
                    }
                    let singles = total - 2 * doubles;
                    if singles + doubles > q {
                        continue;
                    }
                    if doubles == 0 && 2 * singles == n {
                        out.push(mk(Signature::D { singles, doubles, orientation: Some(Sign::Plus) }));
                        out.push(mk(Signature::D { singles, doubles, orientation: Some(Sign::Minus) }));
                    } else {
                        out.push(mk(Signature::D { singles, doubles, orientation: None }));
                    }
                }
            }
            out
        }
    }
}

/// The standard Cayley roots of a class: the table entries for E; pairs
/// `e_{2k−1} ∓ e_{2k}` for A and D (double pairs first, a `Minus`
/// orientation flips the last single pair).
pub fn class_cayley_roots(sys: &RootSystem, c: &CartanClass) -> Result<Vec<RootIdx>> {
    if c.family != sys.family() {
        return Err(Error::Argument(format!("class {} does not belong to {}", c, sys.family())));
    }
    let pair = |k: usize, sign: Sign| -> Result<RootIdx> {
        let tok = match sign {
            Sign::Plus => format!("s{{{},{}}}", 2 * k - 1, 2 * k),
            Sign::Minus => format!("s{{{},{}}}b", 2 * k - 1, 2 * k),
        };
        sys.parse_reflection(&tok)
    };
    match c.signature {
        Signature::E { r, m, s } => {
            let row = e_table(sys.rank())
                .iter()
                .find(|(sig, _)| *sig == (r, m, s))
                .ok_or_else(|| Error::Classification(format!("no table row {}", c.label())))?;
            row.1.split_whitespace().map(|t| sys.parse_reflection(t)).collect()
        }
        Signature::A { pairs } => (1..=pairs).map(|k| pair(k, Sign::Plus)).collect(),
        Signature::D { singles, doubles, orientation } => {
            let mut out = Vec::new();
            for k in 1..=doubles {
                out.push(pair(k, Sign::Plus)?);
                out.push(pair(k, Sign::Minus)?);
            }
            for k in doubles + 1..=doubles + singles {
                let last = k == doubles + singles;
                let sign = if last && orientation == Some(Sign::Minus) { Sign::Minus } else { Sign::Plus };
                out.push(pair(k, sign)?);
            }
            Ok(out)
        }
    }
}

/// `θ` for a class.
pub fn involution_for_class(sys: &RootSystem, c: &CartanClass) -> Result<Involution> {
    if !classes(sys.family()).contains(c) {
        return Err(Error::Classification(format!("{} is not a Cartan class of {}", c, sys.family())));
    }
    Involution::from_cayley_roots(sys, &class_cayley_roots(sys, c)?)
}

fn e_invariants(sys: &RootSystem, theta: &Involution) -> (usize, usize, usize) {
    (
        theta.count_type(sys, RootTypeTag::Real),
        theta.count_type(sys, RootTypeTag::Imaginary),
        theta.cayley_roots().len(),
    )
}

/// The class of an involution of the form `(−Id)∘∏ s_α`.
///
/// Type E classes are recognised by the numbers of real and imaginary roots
/// and the dimension of the fixed space, which separate all rows of the
/// tables. Types A and D are read off from the supports of the Cayley roots.
pub fn classify(sys: &RootSystem, theta: &Involution) -> Result<CartanClass> {
    let family = sys.family();
    let mk = |signature| CartanClass { family, signature };
    match family.family() {
        Family::E => {
            let inv = e_invariants(sys, theta);
            for c in classes(family) {
                let t = involution_for_class(sys, &c)?;
                if e_invariants(sys, &t) == inv {
                    return Ok(c);
                }
            }
            Err(Error::Classification(format!("no class with invariants {inv:?}")))
        }
        Family::A => Ok(mk(Signature::A { pairs: theta.cayley_roots().len() })),
        Family::D => {
            let mut support: BTreeMap<(usize, usize), Vec<Sign>> = BTreeMap::new();
            for &a in theta.cayley_roots() {
                let v = sys.root(a).coords();
                let nz: Vec<usize> = (0..v.len()).filter(|&k| v[k] != int(0)).collect();
                let sign = if v[nz[0]] == v[nz[1]] { Sign::Minus } else { Sign::Plus };
                support.entry((nz[0], nz[1])).or_default().push(sign);
            }
            let doubles = support.values().filter(|s| s.len() == 2).count();
            let singles = support.values().filter(|s| s.len() == 1).count();
            let orientation = if doubles == 0 && 2 * singles == family.n() {
                let minus = support.values().filter(|s| s[0] == Sign::Minus).count();
                Some(if minus % 2 == 0 { Sign::Plus } else { Sign::Minus })
            } else {
                None
            };
            let c = mk(Signature::D { singles, doubles, orientation });
            if classes(family).contains(&c) {
                Ok(c)
            } else {
                Err(Error::Classification(format!("{} does not occur", c.label())))
            }
        }
    }
}

/// Shape of the Cartan subgroup of a class.
pub fn cartan_shape(sys: &RootSystem, c: &CartanClass) -> Result<TorusShape> {
    TorusShape::from_involution(sys, &involution_for_class(sys, c)?)
}

/// The closed-form shapes for type A: for `n = 2p` and real rank `p−1` the
/// torus is `S¹×(ℂ^×)^{p−1}`; otherwise it is `(ℂ^×)^{n−1−i}×(ℝ^×)^{2i−n+1}`.
///
/// For `n = 2p+1` at real rank `p` this gives `(ℂ^×)^p`, which is what the
/// lattice computation finds (the centraliser is `{(z₁,…,z_p,t) : t∏|z_k|² = 1}`,
/// a connected group).
pub fn type_a_shape_formula(n: usize, real_rank: usize) -> TorusShape {
    let p = n / 2;
    if n % 2 == 0 && real_rank + 1 == p {
        TorusShape { compact_circles: 1, complex_factors: p - 1, split_lines: 0 }
    } else {
        TorusShape {
            compact_circles: 0,
            complex_factors: n - 1 - real_rank,
            split_lines: 2 * real_rank + 1 - n,
        }
    }
}

/// Covering relations between Cartan classes: `from → to` when a single
/// Cayley transform through a real root of `from` reaches `to`.
#[derive(Debug, Clone, Serialize)]
pub struct HasseDiagram {
    pub schema: &'static str,
    pub family: String,
    pub classes: Vec<HasseNode>,
    /// Pairs of indices into `classes`, from higher to lower real rank.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HasseNode {
    pub label: String,
    pub class: CartanClass,
    pub real_rank: usize,
    pub shape: String,
}

pub fn hasse_diagram(sys: &RootSystem) -> Result<HasseDiagram> {
    let cls = classes(sys.family());
    let mut edges = Vec::new();
    let mut nodes = Vec::new();
    for (i, c) in cls.iter().enumerate() {
        let theta = involution_for_class(sys, c)?;
        nodes.push(HasseNode {
            label: c.label(),
            class: *c,
            real_rank: c.real_rank(),
            shape: TorusShape::from_involution(sys, &theta)?.to_string(),
        });
        for a in 0..sys.num_positive() {
            if theta.root_type(sys, a) != RootTypeTag::Real {
                continue;
            }
            let target = classify(sys, &theta.with_cayley_root(sys, a)?)?;
            let j = cls.iter().position(|x| *x == target).expect("classified into the list");
            if !edges.contains(&(i, j)) {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    Ok(HasseDiagram { schema: crate::SCHEMA, family: sys.family().label(), classes: nodes, edges })
}

impl HasseDiagram {
    /// Text rendering by real rank, one line per class with its covers.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut ranks: Vec<usize> = self.classes.iter().map(|c| c.real_rank).collect();
        ranks.sort_unstable();
        ranks.dedup();
        for r in ranks.into_iter().rev() {
            let row: Vec<String> = self
                .classes
                .iter()
                .enumerate()
                .filter(|(_, c)| c.real_rank == r)
                .map(|(i, c)| {
                    let below: Vec<&str> = self
                        .edges
                        .iter()
                        .filter(|e| e.0 == i)
                        .map(|e| self.classes[e.1].label.as_str())
                        .collect();
                    if below.is_empty() {
                        format!("{} [{}]", c.label, c.shape)
                    } else {
                        format!("{} [{}] -> {}", c.label, c.shape, below.join(", "))
                    }
                })
                .collect();
            out.push_str(&format!("{r:>2} | {}\n", row.join("   ")));
        }
        out
    }
}

/// A finite abelian group given by invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|k| format!("ℤ{}", subscript(*k)))
            .collect();
        f.write_str(&parts.join(" × "))
    }
}

fn subscript(k: u64) -> String {
    k.to_string()
        .chars()
        .map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

/// The quotient `[2P∨ ∩ R∨]/2R∨`, with classes given by coroot
/// coefficients in `{0,1}`.
#[derive(Debug, Clone, Serialize)]
pub struct LatticeQuotient {
    pub family: String,
    pub order: usize,
    /// Coset representatives in the simple-coroot basis (coefficients 0/1).
    pub classes: Vec<Vec<i64>>,
    /// The same representatives as ambient vectors.
    #[serde(serialize_with = "serialize_vecs")]
    pub ambient: Vec<Vec<Rational>>,
    /// Invariant factors of the Cartan matrix (cross-check).
    pub cartan_invariant_factors: Vec<i64>,
}

fn serialize_vecs<S: serde::Serializer>(v: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        let strs: Vec<String> = x.iter().map(crate::rational::format_rational).collect();
        seq.serialize_element(&strs)?;
    }
    seq.end()
}

/// Computes `[2P∨ ∩ R∨]/2R∨`. A coroot `Σ c_j α_j∨` lies in `2P∨` iff
/// `Cc ≡ 0 (mod 2)`, so the quotient is the kernel of the Cartan matrix
/// mod 2; it is enumerated over the box `{0,1}^r` and cross-checked against
/// the number of even invariant factors.
pub fn lattice_quotient(sys: &RootSystem) -> Result<LatticeQuotient> {
    let c = sys.cartan_matrix();
    let r = c.len();
    if r > 16 {
        return Err(Error::Resource { what: "box enumeration rank".into(), cap: 16 });
    }
    let mut classes = Vec::new();
    for mask in 0u32..(1u32 << r) {
        let v: Vec<i64> = (0..r).map(|k| (mask >> k & 1) as i64).collect();
        let even = c.iter().all(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>() % 2 == 0);
        if even {
            classes.push(v);
        }
    }
    let snf = linalg::smith_invariants(&c.to_vec());
    let even = snf.iter().filter(|&&d| d % 2 == 0).count();
    if classes.len() != 1usize << even {
        return Err(Error::Consistency(format!(
            "box enumeration found {} classes but the Smith form predicts {}",
            classes.len(),
            1usize << even
        )));
    }
    let ambient = classes
        .iter()
        .map(|v| {
            let mut x = vec![int(0); sys.ambient_dim()];
            for (k, &ck) in v.iter().enumerate() {
                for (acc, y) in x.iter_mut().zip(sys.root(sys.simple_indices()[k]).coords()) {
                    *acc += y * int(ck);
                }
            }
            x
        })
        .collect();
    Ok(LatticeQuotient {
        family: sys.family().label(),
        order: classes.len(),
        classes,
        ambient,
        cartan_invariant_factors: snf,
    })
}

/// The class in `[2P∨ ∩ R∨]/2R∨` of `2y`, where `y` is given in
/// fundamental-coweight coordinates. Errors if `2y` is not a coroot.
pub fn coweight_class(sys: &RootSystem, y: &[i64]) -> Result<Vec<i64>> {
    let c = sys.cartan_matrix();
    if y.len() != c.len() {
        return Err(Error::DimensionMismatch { expected: c.len(), found: y.len() });
    }
    let inv = linalg::inverse(&linalg::to_rational(&c.to_vec())).expect("Cartan matrices are invertible");
    let x: Vec<Rational> = y.iter().map(|&k| int(2 * k)).collect();
    linalg::mul_vec(&inv, &x)
        .into_iter()
        .map(|q| {
            if q.is_integer() {
                Ok(q.to_integer().rem_euclid(2))
            } else {
                Err(Error::Argument("2y is not in the coroot lattice".into()))
            }
        })
        .collect()
}

/// `Z(G̃)`: the kernel `ℤ₂` of the cover extended by `[2P∨ ∩ R∨]/2R∨`.
/// The extension is taken to be split (elementary abelian), which matches
/// the stated centers for types A and E.
pub fn cover_center(sys: &RootSystem) -> Result<FiniteAbelianGroup> {
    let q = lattice_quotient(sys)?;
    let k = q.order.trailing_zeros() as usize;
    Ok(FiniteAbelianGroup { invariant_factors: vec![2; k + 1] })
}

/// Number of genuine central characters, `|Z(G̃)|/2`.
pub fn genuine_central_character_count(sys: &RootSystem) -> Result<usize> {
    Ok(lattice_quotient(sys)?.order)
}
