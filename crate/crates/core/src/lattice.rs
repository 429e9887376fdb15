//! Integer linear algebra: unimodular row reduction, saturated kernels,
//! lattice indices and integer feasibility of affine systems.
//!
//! Matrices are dense `Vec<Vec<T>>` in row-major order.

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::scalar::ExactInt;

pub type Matrix<T> = Vec<Vec<T>>;

/// Row echelon form `h = u * m` with `u` unimodular.
#[derive(Debug, Clone)]
pub struct Echelon<T> {
    pub h: Matrix<T>,
    pub u: Matrix<T>,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows of `h`.
    pub pivots: Vec<usize>,
}

fn identity<T: ExactInt>(n: usize) -> Matrix<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

/// Replaces rows `(i, j)` by `(a*ri + b*rj, c*ri + d*rj)`.
fn combine_rows<T: ExactInt>(m: &mut Matrix<T>, i: usize, j: usize, a: &T, b: &T, c: &T, d: &T) {
    for col in 0..m[i].len() {
        let x = m[i][col].clone();
        let y = m[j][col].clone();
        m[i][col] = a.clone() * x.clone() + b.clone() * y.clone();
        m[j][col] = c.clone() * x + d.clone() * y;
    }
}

/// Computes a row echelon form of `m` using only unimodular integer row
/// operations. `m` has `rows` rows, each of length `cols`.
pub fn echelon_unimodular<T: ExactInt>(m: &[Vec<T>], cols: usize) -> Echelon<T> {
    let rows = m.len();
    let mut h: Matrix<T> = m.to_vec();
    let mut u = identity::<T>(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        // Euclid on column `col` below row `r`.
        for i in r + 1..rows {
            if h[i][col].is_zero() {
                continue;
            }
            if h[r][col].is_zero() {
                h.swap(r, i);
                u.swap(r, i);
                continue;
            }
            let egcd = h[r][col].extended_gcd(&h[i][col]);
            let g = egcd.gcd;
            let p = h[r][col].clone() / g.clone();
            let q = h[i][col].clone() / g;
            // [x y; -q p] has determinant x*p + y*q = 1.
            let (x, y) = (egcd.x, egcd.y);
            let (nq, pp) = (-q, p);
            combine_rows(&mut h, r, i, &x, &y, &nq, &pp);
            combine_rows(&mut u, r, i, &x, &y, &nq, &pp);
        }
        if h[r][col].is_zero() {
            continue;
        }
        if h[r][col].is_negative() {
            for v in h[r].iter_mut() {
                *v = -v.clone();
            }
            for v in u[r].iter_mut() {
                *v = -v.clone();
            }
        }
        pivots.push(col);
        r += 1;
    }
    Echelon { h, u, rank: r, pivots }
}

/// Matrix whose rows are the given column vectors transposed, i.e. an
/// `r x k` matrix with the vectors as columns.
pub fn columns_to_matrix<T: ExactInt>(vectors: &[Vec<T>], r: usize) -> Matrix<T> {
    (0..r)
        .map(|i| vectors.iter().map(|v| v[i].clone()).collect())
        .collect()
}

pub fn rank<T: ExactInt>(vectors: &[Vec<T>], r: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    echelon_unimodular(vectors, r).rank
}

/// A basis of `{y in Z^r : y . v = 0 for all v}`. The basis spans a
/// saturated sublattice, so it extends to a basis of `Z^r`.
pub fn left_kernel<T: ExactInt>(vectors: &[Vec<T>], r: usize) -> Matrix<T> {
    if vectors.is_empty() {
        return identity(r);
    }
    let m = columns_to_matrix(vectors, r);
    let e = echelon_unimodular(&m, vectors.len());
    e.u[e.rank..].to_vec()
}

/// Index of the lattice generated by the independent vectors `w` inside
/// `span(w) ∩ Z^r`.
pub fn relative_volume<T: ExactInt>(w: &[Vec<T>], r: usize) -> Result<T> {
    if w.is_empty() {
        return Ok(T::one());
    }
    let m = columns_to_matrix(w, r);
    let e = echelon_unimodular(&m, w.len());
    if e.rank < w.len() {
        return invalid("relative volume of a dependent set");
    }
    Ok((0..e.rank).fold(T::one(), |acc, i| acc * e.h[i][e.pivots[i]].clone()).abs())
}

/// Determinant by fraction-free Bareiss elimination.
pub fn determinant<T: ExactInt>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut a: Matrix<T> = m.to_vec();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone())
                    / prev.clone();
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// gcd of all `k x k` minors of the `rows x cols` matrix `m`.
pub fn determinantal_divisor<T: ExactInt>(m: &[Vec<T>], k: usize) -> T {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut g = T::zero();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let minor: Matrix<T> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            g = g.gcd(&determinant(&minor));
        }
    }
    g
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Whether the affine subspace `point + span(vectors)` contains an integer
/// point.
pub fn affine_meets_lattice<T: ExactInt>(point: &[Ratio<T>], vectors: &[Vec<T>]) -> bool {
    let r = point.len();
    left_kernel(vectors, r).iter().all(|y| {
        let s = y
            .iter()
            .zip(point)
            .fold(Ratio::<T>::zero(), |acc, (a, p)| acc + p.clone() * Ratio::from_integer(a.clone()));
        s.is_integer()
    })
}

/// Finds an integer solution of `a x = b`, where `a` has `n` columns.
pub fn solve_integer<T: ExactInt>(a: &[Vec<T>], b: &[Ratio<T>], n: usize) -> Option<Vec<T>> {
    if b.iter().any(|q| !q.is_integer()) {
        return None;
    }
    let b: Vec<T> = b.iter().map(|q| q.to_integer()).collect();
    let m = a.len();
    if m == 0 {
        return Some(vec![T::zero(); n]);
    }
    // Row-reduce the transpose: u * a^T = h, hence a * u^T = h^T.
    let at: Matrix<T> = (0..n).map(|j| (0..m).map(|i| a[i][j].clone()).collect()).collect();
    let e = echelon_unimodular(&at, m);
    let mut y = vec![T::zero(); n];
    let mut next = 0;
    for (j, bj) in b.iter().enumerate() {
        let known = (0..next).fold(T::zero(), |acc, i| acc + e.h[i][j].clone() * y[i].clone());
        let rest = bj.clone() - known;
        if next < e.rank && e.pivots[next] == j {
            let piv = e.h[next][j].clone();
            if !rest.is_multiple_of(&piv) {
                return None;
            }
            y[next] = rest / piv;
            next += 1;
        } else if !rest.is_zero() {
            return None;
        }
    }
    // x = u^T y
    Some(
        (0..n)
            .map(|k| (0..n).fold(T::zero(), |acc, i| acc + e.u[i][k].clone() * y[i].clone()))
            .collect(),
    )
}

/// Reduced row echelon form over the rationals. Returns the pivot columns
/// and the reduced rows (only the first `pivots.len()` rows are nonzero).
pub fn rref<T: ExactInt>(m: &[Vec<Ratio<T>>], cols: usize) -> (Vec<usize>, Vec<Vec<Ratio<T>>>) {
    let mut a: Vec<Vec<Ratio<T>>> = m.to_vec();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let d = f.clone() * a[r][j].clone();
                    a[i][j] = a[i][j].clone() - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(pivots.len());
    (pivots, a)
}

pub fn dot<T: ExactInt>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn is_unit<T: ExactInt>(t: &T) -> bool {
    t.abs().is_one()
}
