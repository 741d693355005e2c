//! Simply-laced root systems in exact coordinates.
//!
//! Coordinates follow the usual conventions: `A_{n-1}` lives in ℚⁿ with roots
//! `e_i − e_j`; `D_n` lives in ℚⁿ with roots `±e_i ± e_j`; all three
//! exceptional systems live in the 8-dimensional Bourbaki ambient space, with
//! `E7` cut out by `x7 = −x8` and `E6` additionally by `x6 = x7`.
//!
//! Internally every root is also kept as an integer vector scaled by 2, which
//! makes pairings and reflections cheap and exact; the public API speaks
//! [`Root`] and [`Weight`] with [`Rational`] coordinates.

use std::collections::HashMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, int, rat, Rational};
use crate::weyl::{RootPerm, WeylWord};

/// Index of a root inside its [`RootSystem`]. Positive roots occupy
/// `0..n_pos`; the negative of root `i < n_pos` is `i + n_pos`.
pub type RootIdx = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    D,
    E,
}

/// A split simply-laced group, identified by Cartan type and rank.
///
/// For type A the rank is `n − 1` (the group is `SL(n,ℝ)`); for type D the
/// rank is `n` (`Spin(n,n)`); for type E the rank is 6, 7 or 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupFamily {
    family: Family,
    rank: usize,
}

impl GroupFamily {
    /// Largest `n` accepted for `SL(n,ℝ)`.
    pub const MAX_A_N: usize = 10;
    /// Largest `n` accepted for `Spin(n,n)`.
    pub const MAX_D_N: usize = 8;

    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let (valid, cap) = match family {
            Family::A => (rank >= 1, rank < Self::MAX_A_N),
            Family::D => (rank >= 3, rank <= Self::MAX_D_N),
            Family::E => ((6..=8).contains(&rank), true),
        };
        if !valid {
            return Err(Error::Configuration(format!("rank {rank} is not valid for type {family:?}")));
        }
        if !cap {
            return Err(Error::Scope(format!("rank {rank} exceeds the supported range for type {family:?}")));
        }
        Ok(Self { family, rank })
    }

    /// `SL(n,ℝ)`, i.e. type `A_{n−1}`.
    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Configuration(format!("SL({n}) is not supported")));
        }
        Self::new(Family::A, n - 1)
    }

    /// `Spin(n,n)`, i.e. type `D_n`.
    pub fn spin(n: usize) -> Result<Self> {
        Self::new(Family::D, n)
    }

    pub fn e(rank: usize) -> Result<Self> {
        Self::new(Family::E, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the ambient coordinate space.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::D => self.rank,
            Family::E => 8,
        }
    }

    /// The `n` of `SL(n)` or `Spin(n,n)`; the rank for type E.
    pub fn n(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// Short label such as `A3`, `D4`, `E7`.
    pub fn label(&self) -> String {
        format!("{:?}{}", self.family, self.rank)
    }

    /// Name of the linear group, e.g. `SL(4,R)`.
    pub fn group_name(&self) -> String {
        match self.family {
            Family::A => format!("SL({},R)", self.rank + 1),
            Family::D => format!("Spin({0},{0})", self.rank),
            Family::E => format!("E{} (split)", self.rank),
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A root, as an exact coordinate vector in the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root(#[serde(with = "rational::serde_vec")] pub Vec<Rational>);

/// A weight (any exact vector in the ambient space).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight(#[serde(with = "rational::serde_vec")] pub Vec<Rational>);

impl Root {
    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }
}

impl Weight {
    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn scaled(&self, q: Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * q).collect())
    }
}

impl From<&Root> for Weight {
    fn from(r: &Root) -> Self {
        Weight(r.0.clone())
    }
}

/// A closed subsystem of a [`RootSystem`], stored by root index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSubsystem {
    pub roots: Vec<RootIdx>,
    pub positive: Vec<RootIdx>,
    pub simple: Vec<RootIdx>,
}

impl RootSubsystem {
    /// The subsystem of all roots satisfying `pred`. `pred` must describe a
    /// closed, negation-stable set (integrality or orthogonality conditions
    /// do); simple roots are the positive roots that are not sums of two
    /// positive roots of the subsystem.
    pub fn from_predicate(sys: &RootSystem, pred: impl Fn(RootIdx) -> bool) -> Self {
        let roots: Vec<RootIdx> = (0..sys.len()).filter(|&i| pred(i)).collect();
        let positive: Vec<RootIdx> = roots.iter().copied().filter(|&i| sys.is_positive(i)).collect();
        let in_sub: std::collections::HashSet<RootIdx> = positive.iter().copied().collect();
        let simple = positive
            .iter()
            .copied()
            .filter(|&b| {
                !positive.iter().any(|&g| {
                    g != b && sys.difference(b, g).is_some_and(|d| in_sub.contains(&d))
                })
            })
            .collect();
        RootSubsystem { roots, positive, simple }
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, idx: RootIdx) -> bool {
        self.roots.binary_search(&idx).is_ok()
    }

    /// Cartan type of the subsystem, e.g. `"A1×A5"`, `"D8"`, or `"∅"`.
    pub fn dynkin_type(&self, sys: &RootSystem) -> String {
        dynkin_type(sys, &self.simple)
    }
}

/// A chain β₁,…,β_{2l+1} attached to a palindromic word for a reflection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaChain {
    pub word: WeylWord,
    pub steps: Vec<Root>,
    #[serde(skip)]
    pub indices: Vec<RootIdx>,
}

/// A simply-laced root system with a fixed positive system and ordered
/// simple roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: GroupFamily,
    dim: usize,
    scaled: Vec<Vec<i32>>,
    roots: Vec<Root>,
    n_pos: usize,
    simple: Vec<RootIdx>,
    index: HashMap<Vec<i32>, RootIdx>,
    reflections: Vec<RootPerm>,
    coefficients: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    rho: Weight,
}

impl RootSystem {
    /// Builds the root system of `family` with its standard simple roots.
    pub fn new(family: GroupFamily) -> Result<Self> {
        let dim = family.ambient_dim();
        let (all, simple_scaled, height): (Vec<Vec<i32>>, Vec<Vec<i32>>, Vec<i32>) =
            match family.family() {
                Family::A => type_a(dim),
                Family::D => type_d(dim),
                Family::E => type_e(family.rank()),
            };
        let dot_h = |v: &Vec<i32>| v.iter().zip(&height).map(|(a, b)| a * b).sum::<i32>();
        let mut positive: Vec<Vec<i32>> = all.iter().filter(|v| dot_h(v) > 0).cloned().collect();
        if positive.len() * 2 != all.len() {
            return Err(Error::Consistency("height functional is not regular".into()));
        }
        let rank = family.rank();
        let cartan: Vec<Vec<i64>> = simple_scaled
            .iter()
            .map(|a| simple_scaled.iter().map(|b| (sdot(a, b) / 4) as i64).collect())
            .collect();
        let cartan_inv = linalg::inverse(&linalg::to_rational(&cartan))
            .ok_or_else(|| Error::Consistency("singular Cartan matrix".into()))?;
        let coeffs_of = |v: &Vec<i32>| -> Result<Vec<i64>> {
            let p: Vec<Rational> = simple_scaled.iter().map(|a| rat(sdot(v, a) as i64, 4)).collect();
            linalg::mul_vec(&cartan_inv, &p)
                .into_iter()
                .map(|q| {
                    if q.is_integer() {
                        Ok(q.to_integer())
                    } else {
                        Err(Error::Consistency("root outside the root lattice".into()))
                    }
                })
                .collect()
        };
        let mut keyed: Vec<(i64, Vec<i64>, Vec<i32>)> = positive
            .drain(..)
            .map(|v| {
                let c = coeffs_of(&v)?;
                if c.iter().any(|&x| x < 0) {
                    return Err(Error::Consistency("positive root with negative coefficient".into()));
                }
                Ok((c.iter().sum(), c, v))
            })
            .collect::<Result<_>>()?;
        keyed.sort();
        let n_pos = keyed.len();
        let mut scaled: Vec<Vec<i32>> = keyed.iter().map(|(_, _, v)| v.clone()).collect();
        scaled.extend(keyed.iter().map(|(_, _, v)| v.iter().map(|x| -x).collect::<Vec<_>>()));
        let coefficients: Vec<Vec<i64>> = keyed.iter().map(|(_, c, _)| c.clone()).collect();
        let index: HashMap<Vec<i32>, RootIdx> =
            scaled.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let simple: Vec<RootIdx> = simple_scaled
            .iter()
            .map(|v| {
                index
                    .get(v)
                    .copied()
                    .filter(|&i| i < n_pos)
                    .ok_or_else(|| Error::Consistency("simple root is not a positive root".into()))
            })
            .collect::<Result<_>>()?;
        debug_assert_eq!(simple.len(), rank);
        let roots: Vec<Root> = scaled
            .iter()
            .map(|v| Root(v.iter().map(|&x| rat(x as i64, 2)).collect()))
            .collect();
        let mut rho = vec![Rational::zero(); dim];
        for r in &roots[..n_pos] {
            for (acc, x) in rho.iter_mut().zip(&r.0) {
                *acc += x;
            }
        }
        let rho = Weight(rho.into_iter().map(|x| x / int(2)).collect());
        let mut sys = RootSystem {
            family,
            dim,
            scaled,
            roots,
            n_pos,
            simple,
            index,
            reflections: Vec::new(),
            coefficients,
            cartan,
            rho,
        };
        sys.reflections = (0..n_pos).map(|a| sys.compute_reflection(a)).collect();
        Ok(sys)
    }

    fn compute_reflection(&self, a: RootIdx) -> RootPerm {
        let av = &self.scaled[a];
        let images = self
            .scaled
            .iter()
            .map(|b| {
                let c = sdot(av, b) / 4;
                let img: Vec<i32> = b.iter().zip(av).map(|(x, y)| x - c * y).collect();
                self.index[&img]
            })
            .collect();
        RootPerm::from_images(images)
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Total number of roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn root(&self, i: RootIdx) -> &Root {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    /// Indices of the simple roots α₁, α₂, … in order.
    pub fn simple_indices(&self) -> &[RootIdx] {
        &self.simple
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        self.simple.iter().map(|&i| self.roots[i].clone()).collect()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn half_rho(&self) -> Weight {
        self.rho.scaled(rat(1, 2))
    }

    /// The Cartan matrix `(α_i, α_j)` of the simple roots.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn is_positive(&self, i: RootIdx) -> bool {
        i < self.n_pos
    }

    pub fn negate(&self, i: RootIdx) -> RootIdx {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    /// The positive root among `±root(i)`.
    pub fn positive_of(&self, i: RootIdx) -> RootIdx {
        if i < self.n_pos {
            i
        } else {
            i - self.n_pos
        }
    }

    /// Coefficients of a positive root in the simple-root basis.
    pub fn simple_coefficients(&self, i: RootIdx) -> Vec<i64> {
        if i < self.n_pos {
            self.coefficients[i].clone()
        } else {
            self.coefficients[i - self.n_pos].iter().map(|x| -x).collect()
        }
    }

    pub fn height(&self, i: RootIdx) -> i64 {
        self.simple_coefficients(i).iter().sum()
    }

    /// Position of `i` in the simple-root list, if it is simple.
    pub fn simple_position(&self, i: RootIdx) -> Option<usize> {
        self.simple.iter().position(|&s| s == i)
    }

    /// Integer inner product `(α_i, α_j)` of two roots.
    pub fn inner(&self, i: RootIdx, j: RootIdx) -> i32 {
        sdot(&self.scaled[i], &self.scaled[j]) / 4
    }

    /// Index of `root(i) − root(j)` if that is a root.
    pub fn difference(&self, i: RootIdx, j: RootIdx) -> Option<RootIdx> {
        let v: Vec<i32> = self.scaled[i].iter().zip(&self.scaled[j]).map(|(a, b)| a - b).collect();
        self.index.get(&v).copied()
    }

    /// Index of a root given by its coordinates.
    pub fn index_of(&self, r: &Root) -> Option<RootIdx> {
        if r.0.len() != self.dim {
            return None;
        }
        let mut v = Vec::with_capacity(self.dim);
        for x in &r.0 {
            let y = x * int(2);
            if !y.is_integer() {
                return None;
            }
            v.push(y.to_integer() as i32);
        }
        self.index.get(&v).copied()
    }

    /// The reflection `s_α` as a permutation of the root set.
    pub fn reflection(&self, i: RootIdx) -> &RootPerm {
        &self.reflections[self.positive_of(i)]
    }

    /// The simple reflection `s_{α_k}` (0-based `k`).
    pub fn simple_reflection(&self, k: usize) -> &RootPerm {
        &self.reflections[self.simple[k]]
    }

    /// Conventional label of a root: `−e3+e4`, `e1+e2`, or `β37` for
    /// half-integral E roots (β with −½ at the listed positions).
    pub fn root_label(&self, i: RootIdx) -> String {
        let v = &self.scaled[i];
        if v.iter().all(|x| x.abs() == 1) {
            let neg: String = v
                .iter()
                .enumerate()
                .filter(|(_, &x)| x < 0)
                .map(|(k, _)| digit(k + 1))
                .collect();
            return format!("β{neg}");
        }
        let mut s = String::new();
        for (k, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            if x < 0 {
                s.push('−');
            } else if !s.is_empty() {
                s.push('+');
            }
            s.push_str(&format!("e{}", k + 1));
        }
        s
    }

    /// Token naming the reflection in root `i`: `s35` for `e5−e3`, `s35b`
    /// for `e3+e5`, `r234567` for β₂₃₄₅₆₇.
    pub fn reflection_token(&self, i: RootIdx) -> String {
        let v = &self.scaled[self.positive_of(i)];
        if v.iter().all(|x| x.abs() == 1) {
            let s: String = v
                .iter()
                .enumerate()
                .filter(|(_, &x)| x < 0)
                .map(|(k, _)| digit(k + 1))
                .collect();
            return format!("r{s}");
        }
        let nz: Vec<usize> = (0..self.dim).filter(|&k| v[k] != 0).collect();
        let (a, b) = (nz[0], nz[1]);
        let bar = if v[a].signum() == v[b].signum() { "b" } else { "" };
        if a + 1 >= 10 || b + 1 >= 10 {
            format!("s{{{},{}}}{bar}", a + 1, b + 1)
        } else {
            format!("s{}{}{bar}", a + 1, b + 1)
        }
    }

    /// Parses a reflection token (see [`Self::reflection_token`]) into the
    /// positive root it reflects in.
    pub fn parse_reflection(&self, token: &str) -> Result<RootIdx> {
        let bad = |why: &str| Error::Parse(format!("bad reflection token {token:?}: {why}"));
        let t = token.trim();
        let mut v = vec![0i32; self.dim];
        if let Some(rest) = t.strip_prefix('r') {
            v.iter_mut().for_each(|x| *x = 1);
            for ch in rest.chars() {
                let k = ch.to_digit(10).ok_or_else(|| bad("expected digits"))? as usize;
                if k == 0 || k > self.dim {
                    return Err(bad("index out of range"));
                }
                v[k - 1] = -1;
            }
        } else if let Some(rest) = t.strip_prefix('s') {
            let (body, bar) = match rest.strip_suffix('b') {
                Some(b) => (b, true),
                None => (rest, false),
            };
            let (i, j) = parse_index_pair(body).ok_or_else(|| bad("expected two indices"))?;
            if i == 0 || j == 0 || i > self.dim || j > self.dim || i == j {
                return Err(bad("index out of range"));
            }
            v[i - 1] = 2;
            v[j - 1] = if bar { 2 } else { -2 };
        } else {
            return Err(bad("expected `s` or `r` prefix"));
        }
        let idx = self
            .index
            .get(&v)
            .copied()
            .ok_or_else(|| bad(&format!("not a root of {}", self.family)))?;
        Ok(self.positive_of(idx))
    }

    /// Parses a root label as produced by [`Self::root_label`] (ASCII `-`
    /// and `b` for β are accepted).
    pub fn parse_root(&self, label: &str) -> Result<RootIdx> {
        let bad = || Error::Parse(format!("bad root label {label:?}"));
        let t = label.trim().replace('−', "-");
        let mut v = vec![0i32; self.dim];
        if let Some(rest) = t.strip_prefix('β').or_else(|| t.strip_prefix('b')) {
            v.iter_mut().for_each(|x| *x = 1);
            for ch in rest.chars() {
                let k = ch.to_digit(10).ok_or_else(bad)? as usize;
                if k == 0 || k > self.dim {
                    return Err(bad());
                }
                v[k - 1] = -1;
            }
        } else {
            let mut sign = 1;
            let mut chars = t.chars().peekable();
            while let Some(c) = chars.next() {
                match c {
                    '+' => sign = 1,
                    '-' => sign = -1,
                    'e' => {
                        let mut num = String::new();
                        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                            num.push(*d);
                            chars.next();
                        }
                        let k: usize = num.parse().map_err(|_| bad())?;
                        if k == 0 || k > self.dim {
                            return Err(bad());
                        }
                        v[k - 1] += 2 * sign;
                        sign = 1;
                    }
                    ' ' => {}
                    _ => return Err(bad()),
                }
            }
        }
        self.index.get(&v).copied().ok_or_else(bad)
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: n });
        }
        Ok(())
    }
}

/// `⟨λ, α∨⟩ = (λ, α)` under the simply-laced normalisation `(α, α) = 2`.
pub fn pairing(lambda: &Weight, alpha: &Root) -> Result<Rational> {
    if lambda.0.len() != alpha.0.len() {
        return Err(Error::DimensionMismatch { expected: alpha.0.len(), found: lambda.0.len() });
    }
    let aa = rational::dot(&alpha.0, &alpha.0);
    if aa.is_zero() {
        return Err(Error::Argument("zero vector is not a root".into()));
    }
    Ok(rational::dot(&lambda.0, &alpha.0) * int(2) / aa)
}

/// `s_α(v) = v − ⟨v, α∨⟩ α`.
pub fn reflect(alpha: &Root, v: &Weight) -> Result<Weight> {
    let c = pairing(v, alpha)?;
    Ok(Weight(v.0.iter().zip(&alpha.0).map(|(x, a)| x - c * a).collect()))
}

/// The integral root system `R(λ) = {α : ⟨α, λ⟩ ∈ ℤ}` with its positive and
/// simple roots.
pub fn integral_system(lambda: &Weight, sys: &RootSystem) -> Result<RootSubsystem> {
    sys.check_dim(lambda.0.len())?;
    let integral: Vec<bool> = sys
        .roots
        .iter()
        .map(|r| rational::dot(&lambda.0, &r.0).is_integer())
        .collect();
    Ok(RootSubsystem::from_predicate(sys, |i| integral[i]))
}

/// The positive roots that are half-integral at `ρ/2`, i.e. `Δ⁺_{1/2}`.
pub fn half_integral_roots(sys: &RootSystem) -> Vec<RootIdx> {
    let lambda = sys.half_rho();
    (0..sys.num_positive())
        .filter(|&i| rational::is_half_odd_integer(&rational::dot(&lambda.0, &sys.roots[i].0)))
        .collect()
}

/// The positive roots that are integral at `ρ/2`, i.e. `Δ⁺₁`.
pub fn integral_positive_roots(sys: &RootSystem) -> Vec<RootIdx> {
    let lambda = sys.half_rho();
    (0..sys.num_positive())
        .filter(|&i| rational::dot(&lambda.0, &sys.roots[i].0).is_integer())
        .collect()
}

/// The canonical palindromic word for `s_α`: conjugate `α` down to a simple
/// root, at each step by the lowest-indexed simple reflection that lowers
/// its height.
pub fn canonical_reflection_word(sys: &RootSystem, alpha: RootIdx) -> WeylWord {
    let mut a = sys.positive_of(alpha);
    let mut prefix = Vec::new();
    while sys.simple_position(a).is_none() {
        let k = (0..sys.rank())
            .find(|&k| sys.inner(a, sys.simple[k]) > 0)
            .expect("a non-simple positive root has a descent");
        a = sys.simple_reflection(k).apply(a);
        prefix.push(k);
    }
    let mut letters = prefix.clone();
    letters.push(sys.simple_position(a).unwrap());
    letters.extend(prefix.iter().rev());
    WeylWord::new(letters)
}

/// Decomposes `s_α` along a palindromic word `s_{α_{2l+1}}⋯s_{α_1}` into the
/// chain `β_k = s_{β_{k−1}}⋯s_{β_1}(α_k)`, whose reflections compose to
/// `s_α`. Without a word the canonical one is used.
pub fn decompose_to_chain(
    alpha: &Root,
    sys: &RootSystem,
    word: Option<&WeylWord>,
) -> Result<BetaChain> {
    sys.check_dim(alpha.0.len())?;
    let a = sys
        .index_of(alpha)
        .ok_or_else(|| Error::Argument("vector is not a root of this system".into()))?;
    let word = match word {
        Some(w) => {
            w.validate(sys)?;
            let l = &w.letters;
            if l.len() % 2 == 0 || l.iter().ne(l.iter().rev()) {
                return Err(Error::Word(format!("word {} is not palindromic", w.render(sys))));
            }
            if RootPerm::from_word(sys, w)? != *sys.reflection(a) {
                return Err(Error::Word(format!(
                    "word {} does not compose to the reflection in {}",
                    w.render(sys),
                    sys.root_label(a)
                )));
            }
            w.clone()
        }
        None => canonical_reflection_word(sys, a),
    };
    let indices = chain_roots(sys, &word);
    Ok(BetaChain {
        steps: indices.iter().map(|&i| sys.roots[i].clone()).collect(),
        word,
        indices,
    })
}

/// The roots `β_k = s_{α_1}⋯s_{α_{k−1}}(α_k)` for a word whose rightmost
/// letter is `α_1`.
pub fn chain_roots(sys: &RootSystem, word: &WeylWord) -> Vec<RootIdx> {
    let mut u = RootPerm::identity(sys.len());
    let mut out = Vec::with_capacity(word.len());
    for &k in word.letters.iter().rev() {
        out.push(u.apply(sys.simple[k]));
        u = u.compose(sys.simple_reflection(k));
    }
    out
}

/// Cartan type of the root system with the given simple roots.
pub fn dynkin_type(sys: &RootSystem, simple: &[RootIdx]) -> String {
    let n = simple.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && sys.inner(simple[i], simple[j]) != 0).collect())
        .collect();
    let mut seen = vec![false; n];
    let mut parts: Vec<(char, usize)> = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            for &j in &adj[comp[k]] {
                if !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        let size = comp.len();
        let branch = comp.iter().find(|&&v| adj[v].len() >= 3);
        let letter = match branch {
            None => 'A',
            Some(&b) => {
                // Arm lengths from the branch node.
                let mut arms: Vec<usize> = adj[b]
                    .iter()
                    .map(|&start| {
                        let (mut prev, mut cur, mut len) = (b, start, 1);
                        loop {
                            let next: Vec<usize> =
                                adj[cur].iter().copied().filter(|&x| x != prev).collect();
                            if next.is_empty() {
                                break len;
                            }
                            prev = cur;
                            cur = next[0];
                            len += 1;
                        }
                    })
                    .collect();
                arms.sort();
                if arms[0] == 1 && arms[1] == 1 {
                    'D'
                } else {
                    'E'
                }
            }
        };
        parts.push((letter, size));
    }
    if parts.is_empty() {
        return "∅".into();
    }
    parts.sort();
    parts.iter().map(|(l, s)| format!("{l}{s}")).collect::<Vec<_>>().join("×")
}

/// JSON form of a root system.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystemJson {
    pub schema: &'static str,
    pub family: String,
    pub rank: usize,
    pub group: String,
    pub simple_roots: Vec<Root>,
    pub positive_roots: Vec<Root>,
    pub rho: Weight,
    pub half_rho: Weight,
    pub integral_type_at_half_rho: String,
}

impl RootSystem {
    pub fn to_json(&self) -> RootSystemJson {
        let lambda = self.half_rho();
        let integral = integral_system(&lambda, self).expect("ρ/2 has the right dimension");
        RootSystemJson {
            schema: crate::SCHEMA,
            family: format!("{:?}", self.family.family()),
            rank: self.family.rank(),
            group: self.family.group_name(),
            simple_roots: self.simple_roots(),
            positive_roots: self.positive_roots().to_vec(),
            rho: self.rho.clone(),
            half_rho: lambda,
            integral_type_at_half_rho: integral.dynkin_type(self),
        }
    }
}

fn sdot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn digit(k: usize) -> char {
    char::from_digit(k as u32, 10).unwrap_or('?')
}

fn parse_index_pair(body: &str) -> Option<(usize, usize)> {
    let body = body.trim_start_matches('_');
    if let Some(inner) = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
        let (a, b) = inner.split_once(',')?;
        return Some((a.trim().parse().ok()?, b.trim().parse().ok()?));
    }
    let d: Vec<usize> = body.chars().map(|c| c.to_digit(10).map(|x| x as usize)).collect::<Option<_>>()?;
    (d.len() == 2).then(|| (d[0], d[1]))
}

fn unit(n: usize, i: usize, scale: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

fn add(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

type Construction = (Vec<Vec<i32>>, Vec<Vec<i32>>, Vec<i32>);

fn type_a(n: usize) -> Construction {
    let mut all = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                all.push(add(&unit(n, i, 2), &unit(n, j, -2)));
            }
        }
    }
    let simple = (0..n - 1).map(|i| add(&unit(n, i, 2), &unit(n, i + 1, -2))).collect();
    (all, simple, (0..n).map(|i| (n - i) as i32).collect())
}

fn type_d(n: usize) -> Construction {
    let mut all = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                all.push(add(&unit(n, i, si), &unit(n, j, sj)));
            }
        }
    }
    let mut simple: Vec<Vec<i32>> =
        (0..n - 1).map(|i| add(&unit(n, i, 2), &unit(n, i + 1, -2))).collect();
    simple.push(add(&unit(n, n - 2, 2), &unit(n, n - 1, 2)));
    (all, simple, (0..n).map(|i| (n - i) as i32).collect())
}

fn type_e(rank: usize) -> Construction {
    let n = 8;
    let mut all = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                all.push(add(&unit(n, i, si), &unit(n, j, sj)));
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            all.push((0..n).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    if rank <= 7 {
        all.retain(|v| v[6] == -v[7]);
    }
    if rank == 6 {
        all.retain(|v| v[5] == v[6]);
    }
    let mut simple = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], add(&unit(n, 0, 2), &unit(n, 1, 2))];
    for i in 0..6 {
        simple.push(add(&unit(n, i + 1, 2), &unit(n, i, -2)));
    }
    simple.truncate(rank);
    (all, simple, vec![0, 1, 2, 3, 4, 5, 6, 23])
}

/// Convenience: `ρ/2` for a family.
pub fn half_rho(family: GroupFamily) -> Result<Weight> {
    Ok(RootSystem::new(family)?.half_rho())
}

/// True iff `v` is integral against every root (used by tests and the
/// lattice computations).
pub fn is_integral_weight(sys: &RootSystem, v: &Weight) -> bool {
    sys.roots().iter().all(|r| rational::dot(&v.0, &r.0).is_integer())
}

/// `|x|` helper kept local to avoid pulling `Signed` into callers.
pub fn abs_rational(x: &Rational) -> Rational {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[(i64, i64)]) -> Weight {
        Weight(v.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    #[test]
    fn root_counts() {
        let cases = [
            (GroupFamily::sl(4).unwrap(), 12),
            (GroupFamily::spin(4).unwrap(), 24),
            (GroupFamily::e(6).unwrap(), 72),
            (GroupFamily::e(7).unwrap(), 126),
            (GroupFamily::e(8).unwrap(), 240),
        ];
        for (f, n) in cases {
            let sys = RootSystem::new(f).unwrap();
            assert_eq!(sys.len(), n, "{f}");
            assert_eq!(sys.num_positive() * 2, n);
            assert_eq!(sys.rank(), f.rank());
        }
    }

    #[test]
    fn e6_first_simple_root_is_beta_234567() {
        let sys = RootSystem::new(GroupFamily::e(6).unwrap()).unwrap();
        let a1 = &sys.simple_roots()[0];
        assert_eq!(a1.0, [1, -1, -1, -1, -1, -1, -1, 1].map(|x| rat(x, 2)).to_vec());
        assert_eq!(sys.root_label(sys.simple_indices()[0]), "β234567");
    }

    #[test]
    fn half_rho_matches_tabulated_values() {
        let e6 = RootSystem::new(GroupFamily::e(6).unwrap()).unwrap();
        assert_eq!(e6.half_rho(), w(&[(0, 1), (1, 2), (1, 1), (3, 2), (2, 1), (-2, 1), (-2, 1), (2, 1)]));
        let e7 = RootSystem::new(GroupFamily::e(7).unwrap()).unwrap();
        assert_eq!(
            e7.half_rho(),
            w(&[(0, 1), (1, 2), (1, 1), (3, 2), (2, 1), (5, 2), (-17, 4), (17, 4)])
        );
        let e8 = RootSystem::new(GroupFamily::e(8).unwrap()).unwrap();
        assert_eq!(
            e8.half_rho(),
            w(&[(0, 1), (1, 2), (1, 1), (3, 2), (2, 1), (5, 2), (3, 1), (23, 2)])
        );
    }

    #[test]
    fn pairing_examples() {
        let e6 = RootSystem::new(GroupFamily::e(6).unwrap()).unwrap();
        let a = e6.root(e6.parse_root("e2+e4").unwrap()).clone();
        assert_eq!(pairing(&e6.half_rho(), &a).unwrap(), int(2));
        let a3 = RootSystem::new(GroupFamily::sl(4).unwrap()).unwrap();
        let a12 = a3.root(a3.parse_root("e1-e2").unwrap()).clone();
        assert_eq!(pairing(&a3.half_rho(), &a12).unwrap(), rat(1, 2));
        for r in a3.roots() {
            assert_eq!(pairing(&Weight::from(r), r).unwrap(), int(2));
        }
        assert!(matches!(
            pairing(&Weight(vec![int(1)]), &a12),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reflect_basics() {
        let sys = RootSystem::new(GroupFamily::spin(4).unwrap()).unwrap();
        let a = sys.root(0).clone();
        assert_eq!(reflect(&a, &Weight::from(&a)).unwrap(), Weight::from(&a.neg()));
        let v = sys.rho().clone();
        assert_eq!(reflect(&a, &reflect(&a, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn integral_system_types() {
        for (f, ty) in [(6, "A1×A5"), (7, "A7"), (8, "D8")] {
            let sys = RootSystem::new(GroupFamily::e(f).unwrap()).unwrap();
            let sub = integral_system(&sys.half_rho(), &sys).unwrap();
            assert_eq!(sub.dynkin_type(&sys), ty);
        }
        let sys = RootSystem::new(GroupFamily::e(7).unwrap()).unwrap();
        let all = integral_system(sys.rho(), &sys).unwrap();
        assert_eq!(all.roots.len(), sys.len());
        assert_eq!(all.dynkin_type(&sys), "E7");
    }

    #[test]
    fn a3_half_integral_roots() {
        let sys = RootSystem::new(GroupFamily::sl(4).unwrap()).unwrap();
        let mut got: Vec<String> = half_integral_roots(&sys).iter().map(|&i| sys.root_label(i)).collect();
        got.sort();
        assert_eq!(got, ["e1−e2", "e1−e4", "e2−e3", "e3−e4"]);
    }

    #[test]
    fn e7_integral_root_example() {
        let sys = RootSystem::new(GroupFamily::e(7).unwrap()).unwrap();
        let r = sys.parse_root("-e1+e3").unwrap();
        assert!(integral_positive_roots(&sys).contains(&r));
    }

    #[test]
    fn chain_for_s35_matches_published_word() {
        for rank in [6, 7] {
            let sys = RootSystem::new(GroupFamily::e(rank).unwrap()).unwrap();
            let word = WeylWord::parse(&sys, "s45 s34 s45").unwrap();
            let alpha = sys.root(sys.parse_reflection("s35").unwrap()).clone();
            let chain = decompose_to_chain(&alpha, &sys, Some(&word)).unwrap();
            let labels: Vec<String> = chain.indices.iter().map(|&i| sys.root_label(i)).collect();
            assert_eq!(labels, ["−e4+e5", "−e3+e5", "−e3+e4"]);
        }
        let sys = RootSystem::new(GroupFamily::e(8).unwrap()).unwrap();
        let word = WeylWord::parse(&sys, "s67 s56 s67").unwrap();
        let alpha = sys.root(sys.parse_reflection("s57").unwrap()).clone();
        let chain = decompose_to_chain(&alpha, &sys, Some(&word)).unwrap();
        let labels: Vec<String> = chain.indices.iter().map(|&i| sys.root_label(i)).collect();
        assert_eq!(labels, ["−e6+e7", "−e5+e7", "−e5+e6"]);
    }

    #[test]
    fn chain_rejects_bad_words() {
        let sys = RootSystem::new(GroupFamily::e(6).unwrap()).unwrap();
        let alpha = sys.root(sys.parse_reflection("s35").unwrap()).clone();
        let not_pal = WeylWord::parse(&sys, "s45 s34").unwrap();
        assert!(matches!(decompose_to_chain(&alpha, &sys, Some(&not_pal)), Err(Error::Word(_))));
        let wrong = WeylWord::parse(&sys, "s23 s34 s23").unwrap();
        assert!(matches!(decompose_to_chain(&alpha, &sys, Some(&wrong)), Err(Error::Word(_))));
    }

    #[test]
    fn simple_root_chain_is_itself() {
        let sys = RootSystem::new(GroupFamily::spin(5).unwrap()).unwrap();
        for &s in sys.simple_indices() {
            let chain = decompose_to_chain(sys.root(s), &sys, None).unwrap();
            assert_eq!(chain.indices, vec![s]);
        }
    }

    #[test]
    fn reflection_tokens_round_trip() {
        let sys = RootSystem::new(GroupFamily::e(8).unwrap()).unwrap();
        for i in 0..sys.num_positive() {
            assert_eq!(sys.parse_reflection(&sys.reflection_token(i)).unwrap(), i);
            assert_eq!(sys.parse_root(&sys.root_label(i)).unwrap(), i);
        }
        let a = RootSystem::new(GroupFamily::sl(10).unwrap()).unwrap();
        for i in 0..a.num_positive() {
            assert_eq!(a.parse_reflection(&a.reflection_token(i)).unwrap(), i);
        }
    }

    #[test]
    fn unsupported_ranks() {
        assert!(GroupFamily::e(5).is_err());
        assert!(GroupFamily::spin(2).is_err());
        assert!(GroupFamily::spin(9).is_err());
        assert!(GroupFamily::sl(11).is_err());
        assert!(GroupFamily::sl(1).is_err());
    }
}
