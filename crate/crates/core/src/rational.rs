//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`, which is always stored in lowest
//! terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// `r^e` for a non-negative exponent.
pub fn pow(r: &Rational, e: u32) -> Rational {
    num_traits::pow(r.clone(), e as usize)
}

/// `2^a 3^b 5^c 7^d` with signed exponents, the shape of every normalizing constant.
pub fn smooth(a: i32, b: i32, c: i32, d: i32) -> Rational {
    let mut r = Rational::one();
    for (p, e) in [(2i64, a), (3, b), (5, c), (7, d)] {
        let f = pow(&int(p), e.unsigned_abs());
        if e >= 0 {
            r *= f;
        } else {
            r /= f;
        }
    }
    r
}

/// Parse `"a"` or `"a/b"` with optional sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Gcd of the numerators (0 when all entries vanish).
pub fn numerator_gcd<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter().fold(BigInt::zero(), |acc, r| acc.gcd(r.numer())).abs()
}
