//! Exact rationals and the small integer helpers shared across modules.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub use num_rational::BigRational as Rational;

/// Error returned when a textual rational cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse rational from {0:?}")]
pub struct ParseRationalError(pub String);

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// `1/k!` as a rational.
pub fn inv_factorial(k: u64) -> Rational {
    Rational::new(BigInt::one(), factorial(k))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` with optional surrounding whitespace.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| err())?;
    let q: BigInt = den.parse().map_err(|_| err())?;
    if q.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(p, q))
}

/// Canonical text of a rational: `p` for integers, `p/q` otherwise.
pub fn render_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Wrapper giving a rational the canonical `Display`.
pub struct Canonical<'a>(pub &'a Rational);

impl fmt::Display for Canonical<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_rational(self.0))
    }
}

/// Sign of a permutation or Koszul rule, stored as `+1`/`-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn of_power(exponent: i64) -> Self {
        Sign::from_parity(exponent.rem_euclid(2) == 1)
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply(self, r: Rational) -> Rational {
        match self {
            Sign::Plus => r,
            Sign::Minus => -r,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_minus() != rhs.is_minus())
    }
}

/// True when the rational is strictly negative.
pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
