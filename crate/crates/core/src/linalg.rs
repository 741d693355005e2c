//! Small exact linear algebra over ℚ and ℤ: rank, inverse, determinant,
//! Smith invariant factors and saturated integer kernels.
//!
//! Matrices are dense row-major `Vec<Vec<_>>`; sizes never exceed 10×10 in
//! this crate, so plain Gaussian elimination is adequate.

use crate::rational::{int, Rational};
use num_traits::{Signed, Zero};

pub type QMatrix = Vec<Vec<Rational>>;
pub type ZMatrix = Vec<Vec<i64>>;

pub fn to_rational(m: &ZMatrix) -> QMatrix {
    m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

pub fn identity(n: usize) -> QMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| int((i == j) as i64)).collect())
        .collect()
}

pub fn mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    out
}

pub fn mul_vec(a: &QMatrix, v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Rational::zero(), |s, (x, y)| s + x * y))
        .collect()
}

/// Row-reduces a copy of `m`, returning the rank.
pub fn rank(m: &QMatrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c] / a[r][c];
                for j in c..cols {
                    let t = a[r][j];
                    a[i][j] -= f * t;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    let n = m.len();
    let mut a: QMatrix = m
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let piv = a[c][c];
        for x in a[c].iter_mut() {
            *x /= piv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c];
                for j in 0..2 * n {
                    let t = a[c][j];
                    a[i][j] -= f * t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(m: &QMatrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = int(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(c, p);
            det = -det;
        }
        det *= a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = a[i][c] / a[c][c];
                for j in c..n {
                    let t = a[c][j];
                    a[i][j] -= f * t;
                }
            }
        }
    }
    det
}

/// Invariant factors (nonzero diagonal of the Smith normal form), each
/// dividing the next. Zero diagonal entries are reported as `0` at the end.
pub fn smith_invariants(m: &ZMatrix) -> Vec<i64> {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pick the smallest nonzero entry in the remaining block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                let q = num_integer::Integer::div_floor(&a[i][t], &a[t][t]);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                    a.swap(t, i);
                }
            }
            for j in t + 1..cols {
                let q = num_integer::Integer::div_floor(&a[t][j], &a[t][t]);
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                }
            }
            if clean {
                // Enforce divisibility of the rest of the block by the pivot.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % a[t][t] != 0);
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                    }
                    None => break,
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    while diag.len() < rows.min(cols) {
        diag.push(0);
    }
    diag
}

/// A basis (as columns, returned as a list of vectors) of the saturated
/// integer kernel {x ∈ ℤⁿ : M x = 0}, via unimodular column reduction.
pub fn integer_kernel(m: &ZMatrix) -> Vec<Vec<i64>> {
    let rows = m.len();
    let n = m.first().map_or(0, |r| r.len());
    let mut a = m.clone();
    // u tracks the unimodular column transform: a = m · u.
    let mut u: ZMatrix = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    let mut pivot_col = 0;
    for r in 0..rows {
        if pivot_col == n {
            break;
        }
        loop {
            let nz: Vec<usize> = (pivot_col..n).filter(|&j| a[r][j] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&j| a[r][j].abs()).unwrap();
            swap_cols(&mut a, pivot_col, p);
            swap_cols(&mut u, pivot_col, p);
            let mut done = true;
            for j in pivot_col + 1..n {
                if a[r][j] != 0 {
                    let q = num_integer::Integer::div_floor(&a[r][j], &a[r][pivot_col]);
                    add_col(&mut a, j, pivot_col, -q);
                    add_col(&mut u, j, pivot_col, -q);
                    if a[r][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                pivot_col += 1;
                break;
            }
        }
    }
    (pivot_col..n)
        .map(|j| (0..n).map(|i| u[i][j]).collect())
        .collect()
}

fn swap_cols(a: &mut ZMatrix, i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn add_col(a: &mut ZMatrix, target: usize, source: usize, factor: i64) {
    for row in a.iter_mut() {
        row[target] += factor * row[source];
    }
}

/// |det| of an integer square matrix, computed exactly.
pub fn abs_det_int(m: &ZMatrix) -> i64 {
    determinant(&to_rational(m)).abs().to_integer()
}
