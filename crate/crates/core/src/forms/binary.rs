use super::linalg::{det, sylvester};
use super::linear::LinearMap2;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Homogeneous form in `x, z`; index `i` holds the coefficient of `x^(d−i) z^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<Rational>,
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn factorial(n: u32) -> Rational {
    (1..=n).fold(Rational::one(), |acc, i| acc * int(i as i64))
}

impl BinaryForm {
    pub fn zero(degree: u32) -> Self {
        BinaryForm { degree, coeffs: vec![Rational::zero(); degree as usize + 1] }
    }

    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { degree: coeffs.len() as u32 - 1, coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^(d−i) z^i`.
    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    /// The constant term of a degree 0 form (transvectant invariants land here).
    pub fn constant_value(&self) -> Rational {
        assert_eq!(self.degree, 0);
        self.coeffs[0].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BinaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn evaluate(&self, x: &Rational, z: &Rational) -> Rational {
        let d = self.degree;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * crate::rational::pow(x, d - i as u32) * crate::rational::pow(z, i as u32))
            .sum()
    }

    /// `∂^a/∂x^a ∂^b/∂z^b`.
    pub fn derivative(&self, a: u32, b: u32) -> Self {
        if a + b > self.degree {
            return Self::zero(0);
        }
        let d = self.degree;
        let mut out = Self::zero(d - a - b);
        for (i, c) in self.coeffs.iter().enumerate() {
            let (ex, ez) = (d - i as u32, i as u32);
            if ex < a || ez < b || c.is_zero() {
                continue;
            }
            let f: i64 =
                (0..a).map(|t| (ex - t) as i64).product::<i64>() * (0..b).map(|t| (ez - t) as i64).product::<i64>();
            out.coeffs[(ez - b) as usize] += c * int(f);
        }
        out
    }

    /// Right action `(f.T)(x, z) = f(a x + b z, c x + d z)` for `T = [[a, b], [c, d]]`.
    pub fn act(&self, t: &LinearMap2) -> Self {
        let l1 = BinaryForm::new(vec![t.0[0][0].clone(), t.0[0][1].clone()]);
        let l2 = BinaryForm::new(vec![t.0[1][0].clone(), t.0[1][1].clone()]);
        let d = self.degree as usize;
        let pw = |l: &BinaryForm| {
            let mut p = vec![BinaryForm::new(vec![Rational::one()])];
            for k in 0..d {
                let next = &p[k] * l;
                p.push(next);
            }
            p
        };
        let (p1, p2) = (pw(&l1), pw(&l2));
        let mut out = Self::zero(self.degree);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = &p1[d - i] * &p2[i];
            for (o, mc) in out.coeffs.iter_mut().zip(&m.coeffs) {
                *o += c * mc;
            }
        }
        out
    }

    /// Coefficients of `f(x, 1)` in ascending powers of `x`.
    pub fn dehomogenize(&self) -> Vec<Rational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Discriminant normalized so that for a nonzero leading coefficient it equals
    /// the univariate discriminant `(−1)^(d(d−1)/2) Res(f, f′)/a0` of `f(x, 1)`.
    /// Computed homogeneously from `Res(∂f/∂x, ∂f/∂z) = (−1)^(d(d−1)/2) d^(d−2)·Disc(f)`, so it stays
    /// a polynomial in the coefficients when `a0 = 0`.
    pub fn discriminant(&self) -> Rational {
        let d = self.degree;
        match d {
            0 => Rational::zero(),
            1 => Rational::one(),
            _ => {
                let fx = self.derivative(1, 0);
                let fz = self.derivative(0, 1);
                let m = sylvester(&fx.coeffs, &fz.coeffs);
                let sign = if (d * (d - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
                det(&m) / crate::rational::pow(&int(d as i64), d - 2) * int(sign)
            }
        }
    }
}

/// Transvectant `(f, g)_r` with the normalization
/// `(m−r)!(n−r)!/(m! n!) · Σ_k (−1)^k C(r,k) ∂^r f/∂x^(r−k)∂z^k · ∂^r g/∂x^k∂z^(r−k)`.
pub fn transvectant(f: &BinaryForm, g: &BinaryForm, r: u32) -> Result<BinaryForm> {
    let (m, n) = (f.degree, g.degree);
    if r > m || r > n {
        return Err(Error::TransvectantOrder { r, m, n });
    }
    let mut acc = BinaryForm::zero(m + n - 2 * r);
    for k in 0..=r {
        let t = &f.derivative(r - k, k) * &g.derivative(k, r - k);
        let c = int(if k % 2 == 0 { 1 } else { -1 } * binom(r, k));
        acc = &acc + &t.scale(&c);
    }
    let norm = factorial(m - r) * factorial(n - r) / (factorial(m) * factorial(n));
    Ok(acc.scale(&norm))
}

impl Add for &BinaryForm {
    type Output = BinaryForm;
    fn add(self, o: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, o.degree, "adding binary forms of different degree");
        BinaryForm { degree: self.degree, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Neg for &BinaryForm {
    type Output = BinaryForm;
    fn neg(self) -> BinaryForm {
        self.scale(&-Rational::one())
    }
}

impl Sub for &BinaryForm {
    type Output = BinaryForm;
    fn sub(self, o: &BinaryForm) -> BinaryForm {
        self + &(-o)
    }
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;
    fn mul(self, o: &BinaryForm) -> BinaryForm {
        let mut out = BinaryForm::zero(self.degree + o.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree;
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*x^{}*z^{i}", d - i as u32))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
