//! Dense univariate and sparse bivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::ExactInt;

/// Univariate polynomial; `coeffs[k]` is the coefficient of `q^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: ExactInt> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64_exact(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, q: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * q.clone() + c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// `p(−q)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() })
                .collect(),
        )
    }

    /// Display with a custom variable name.
    pub fn display_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = power(var, k);
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            if mono.is_empty() || !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

fn write_term<T: ExactInt>(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &T,
    mono: &str,
) -> fmt::Result {
    let neg = c.is_negative();
    if neg {
        write!(f, "-")?;
    } else if !first {
        write!(f, "+")?;
    }
    let a = c.abs();
    if mono.is_empty() {
        write!(f, "{a}")
    } else if a.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{a}{mono}")
    }
}

fn power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

impl<T: ExactInt> fmt::Display for Poly<T> {
    /// Descending powers of `q`, e.g. `16q^3+15q^2+6q+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("q"))
    }
}

/// Bivariate polynomial keyed by `(x-degree, y-degree)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: ExactInt> BivariatePoly<T> {
    pub fn zero() -> Self {
        BivariatePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(T::one(), 0, 0)
    }

    pub fn monomial(c: T, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, i, j);
        p
    }

    pub fn add_term(&mut self, c: T, i: u32, j: u32) {
        let e = self.terms.entry((i, j)).or_insert_with(T::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &T)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &other.terms {
                out.add_term(c.clone() * d.clone(), i + k, j + l);
            }
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(c.clone() * s.clone(), i, j);
        }
        out
    }

    /// Substitutes `x = 1`, giving a polynomial in `y` as a bivariate with
    /// zero x-degree.
    pub fn at_x_one(&self) -> Self {
        let mut out = Self::zero();
        for (&(_, j), c) in &self.terms {
            out.add_term(c.clone(), 0, j);
        }
        out
    }

    /// Evaluates at `y = 1`, returning a univariate polynomial in `x`.
    pub fn at_y_one(&self) -> Poly<T> {
        let deg = self.terms.keys().map(|&(i, _)| i as usize).max().unwrap_or(0);
        let mut c = vec![T::zero(); deg + 1];
        for (&(i, _), v) in &self.terms {
            c[i as usize] = c[i as usize].clone() + v.clone();
        }
        Poly::new(c)
    }
}

impl<T: ExactInt> fmt::Display for BivariatePoly<T> {
    /// Terms by descending x-degree, then ascending y-degree:
    /// `x^3+3x^2+2x+4xy+2y+3y^2+y^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let mono = power("x", i as usize) + &power("y", j as usize);
            write_term(f, n == 0, &self.terms[&(i, j)], &mono)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_univariate() {
        assert_eq!(Poly::<i64>::from_i64(&[1, 6, 15, 16]).to_string(), "16q^3+15q^2+6q+1");
        assert_eq!(Poly::<i64>::from_i64(&[-1, 0, 1]).to_string(), "q^2-1");
        assert_eq!(Poly::<i64>::from_i64(&[0, 0]).to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let p = Poly::<i64>::from_i64(&[1, 1]);
        assert_eq!(p.mul(&p).to_string(), "q^2+2q+1");
        assert_eq!(p.reflect().display_in("e"), "-e+1");
        assert_eq!(p.add(&p.scale(&-1)).degree(), None);
    }

    #[test]
    fn eval_negative() {
        let p = Poly::<i64>::from_i64(&[1, 3, 3]);
        assert_eq!(p.eval(&-1), 1);
        assert_eq!(p.eval(&2), 19);
    }

    #[test]
    fn bivariate_arith_and_display() {
        let x = BivariatePoly::<i64>::monomial(1, 1, 0);
        let y = BivariatePoly::<i64>::monomial(1, 0, 1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.to_string(), "x^2+2xy+y^2");
        assert_eq!(sq.coeff(1, 1), 2);
        assert_eq!(sq.at_y_one().to_string(), "q^2+2q+1");
        assert_eq!(sq.scale(&-1).to_string(), "-x^2-2xy-y^2");
    }
}
