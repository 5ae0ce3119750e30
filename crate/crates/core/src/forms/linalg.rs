//! Determinants and resultants.

use crate::rational::{big, common_denominator, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Fraction-free Bareiss elimination over the integers.
pub fn det_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Exact determinant of a square rational matrix.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            assert_eq!(row.len(), m.len(), "determinant of a non-square matrix");
            let l = common_denominator(row.iter());
            scale *= &l;
            row.iter().map(|r| (r * big(&l)).to_integer()).collect()
        })
        .collect();
    Rational::new(det_int(rows), scale)
}

/// Sylvester matrix of two coefficient lists given in descending powers,
/// using their formal degrees `len − 1`.
pub fn sylvester(a: &[Rational], b: &[Rational]) -> Vec<Vec<Rational>> {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let mut out = vec![vec![Rational::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.iter().enumerate() {
            out[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().enumerate() {
            out[n + i][i + j] = c.clone();
        }
    }
    out
}

/// Univariate polynomial, coefficients in ascending powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(pub Vec<Rational>);

impl UniPoly {
    pub fn from_i64(c: &[i64]) -> Self {
        UniPoly(c.iter().map(|&x| crate::rational::int(x)).collect())
    }

    /// Drop vanishing leading coefficients.
    pub fn trimmed(&self) -> Vec<Rational> {
        let mut v = self.0.clone();
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    pub fn degree(&self) -> Option<usize> {
        let t = self.trimmed();
        (!t.is_empty()).then(|| t.len() - 1)
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.0.is_empty() || o.0.is_empty() {
            return UniPoly(vec![]);
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly(out)
    }
}

/// Resultant of two univariate polynomials with respect to their actual degrees.
/// The resultant with the zero polynomial is 0; two nonzero constants give 1.
pub fn resultant_univariate(a: &UniPoly, b: &UniPoly) -> Rational {
    let (mut a, mut b) = (a.trimmed(), b.trimmed());
    if a.is_empty() || b.is_empty() {
        return Rational::zero();
    }
    if a.len() == 1 && b.len() == 1 {
        return Rational::one();
    }
    a.reverse();
    b.reverse();
    det(&sylvester(&a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn small_determinants() {
        let m = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        assert_eq!(det(&m), int(5));
        let m = vec![vec![rat(1, 2), int(1)], vec![int(1), rat(1, 3)]];
        assert_eq!(det(&m), rat(1, 6) - int(1));
        let m = vec![vec![int(0), int(1), int(2)], vec![int(1), int(0), int(3)], vec![int(4), int(-3), int(8)]];
        assert_eq!(det(&m), int(-2));
    }

    #[test]
    fn resultant_examples() {
        let r = resultant_univariate(&UniPoly::from_i64(&[-1, 1]), &UniPoly::from_i64(&[1, 1]));
        assert_eq!(r, int(2));
        let r = resultant_univariate(&UniPoly::from_i64(&[-1, 0, 1]), &UniPoly::from_i64(&[-4, 0, 1]));
        assert_eq!(r, int(9));
        let a = UniPoly::from_i64(&[-1, 0, 1]);
        let b = UniPoly::from_i64(&[1, 1]);
        assert_eq!(resultant_univariate(&a, &b), int(0));
    }
}
