//! Exact scalar types.
//!
//! Every numeric kernel in this crate is generic over an exact integer type
//! (machine integers or arbitrary precision), with rationals built on top of
//! it as [`Ratio`]. Nothing here ever touches floating point.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// An exact, signed integer type usable by the lattice and polytope kernels.
pub trait ExactInt:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Send
    + Sync
    + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("integer type cannot hold an i64 value")
    }

    fn to_i64_exact(&self) -> i64 {
        self.to_i64()
            .unwrap_or_else(|| panic!("value {self} does not fit in i64"))
    }
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// Rational number over an exact integer type.
pub type Q<T> = Ratio<T>;

pub fn int<T: ExactInt>(v: i64) -> T {
    T::from_i64_exact(v)
}

pub fn rat<T: ExactInt>(n: i64, d: i64) -> Ratio<T> {
    Ratio::new(int(n), int(d))
}

pub fn is_integral<T: ExactInt>(q: &Ratio<T>) -> bool {
    q.denom().is_one()
}

/// `q` lies in `(1/2)Z \ Z`.
pub fn is_strict_half<T: ExactInt>(q: &Ratio<T>) -> bool {
    q.denom() == &int::<T>(2)
}

/// Least common multiple of the denominators of a rational vector.
pub fn common_denominator<T: ExactInt>(v: &[Ratio<T>]) -> T {
    v.iter().fold(T::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn parse_fraction<T: ExactInt>(s: &str) -> Result<Ratio<T>> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid fraction `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: T = n.trim().parse().map_err(|_| bad())?;
            let d: T = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Ratio::new(n, d))
        }
        None => Ok(Ratio::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parses a comma-separated list of fractions such as `"1/2,1/2,0"`.
pub fn parse_fraction_list<T: ExactInt>(s: &str) -> Result<Vec<Ratio<T>>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_fraction).collect()
}

/// Formats a rational as `p/q`, or `p` when integral.
pub fn format_fraction<T: ExactInt>(q: &Ratio<T>) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_fraction_list<T: ExactInt>(v: &[Ratio<T>]) -> String {
    v.iter().map(format_fraction).collect::<Vec<_>>().join(",")
}

/// 2-adic valuation of a positive integer.
pub fn v2(mut n: u64) -> u32 {
    assert!(n > 0, "2-adic valuation of zero");
    let mut k = 0;
    while n % 2 == 0 {
        n /= 2;
        k += 1;
    }
    k
}

pub fn factorial(n: u64) -> i64 {
    (1..=n as i64).product()
}

pub fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
