use crate::error::{Error, Result};
use crate::forms::BinaryForm;
use crate::rational::{int, Rational};
use num_traits::{One, Zero};

/// `(q2, q3, D6)` of `x⁴ + a x²z² + b xz³ + c z⁴`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuarticInvariants {
    pub q2: Rational,
    pub q3: Rational,
    pub d6: Rational,
}

/// `q2 = a² + 12c`, `q3 = −2a³ + 72ac − 27b²`, `27·D6 = 4q2³ − q3²`.
pub fn picard_scalars(a: &Rational, b: &Rational, c: &Rational) -> BinaryQuarticInvariants {
    let q2 = a * a + int(12) * c;
    let q3 = int(-2) * a * a * a + int(72) * a * c - int(27) * b * b;
    let d6 = (int(4) * &q2 * &q2 * &q2 - &q3 * &q3) / int(27);
    BinaryQuarticInvariants { q2, q3, d6 }
}

/// Invariants of a binary quartic in the reduced shape `x⁴ + a x²z² + b xz³ + c z⁴`.
pub fn binary_quartic_invariants(q: &BinaryForm) -> Result<BinaryQuarticInvariants> {
    if q.degree() != 4 {
        return Err(Error::WrongDegree { expected: 4, found: q.degree() });
    }
    if !q.coeff(0).is_one() || !q.coeff(1).is_zero() {
        return Err(Error::Shape("expected leading coefficient 1 and no x³z term".into()));
    }
    Ok(picard_scalars(q.coeff(2), q.coeff(3), q.coeff(4)))
}
