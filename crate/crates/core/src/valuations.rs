//! p-adic valuations and weighted-projective normalization.

use crate::error::{Error, Result};
use crate::forms::{reduce_mod_p, Fp, TernaryForm};
use crate::rational::{big, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

/// A rational valuation or `∞` (the valuation of 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ValOrInf {
    Finite(Rational),
    Infinite,
}

impl ValOrInf {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ValOrInf::Finite(r) => Some(r),
            ValOrInf::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ValOrInf::Infinite)
    }

    pub fn is_zero(&self) -> bool {
        self.finite().is_some_and(Zero::is_zero)
    }

    pub fn is_positive(&self) -> bool {
        match self {
            ValOrInf::Finite(r) => r.is_positive(),
            ValOrInf::Infinite => true,
        }
    }

    pub fn from_int(n: i64) -> Self {
        ValOrInf::Finite(Rational::from_integer(n.into()))
    }

    /// Divide a finite value by a positive weight.
    pub fn div(&self, d: u32) -> Self {
        match self {
            ValOrInf::Finite(r) => ValOrInf::Finite(r / big(&BigInt::from(d))),
            ValOrInf::Infinite => ValOrInf::Infinite,
        }
    }

    pub fn mul(&self, d: u32) -> Self {
        match self {
            ValOrInf::Finite(r) => ValOrInf::Finite(r * big(&BigInt::from(d))),
            ValOrInf::Infinite => ValOrInf::Infinite,
        }
    }

    /// Minimum of a family; `∞` for the empty family.
    pub fn min_of<'a>(it: impl IntoIterator<Item = &'a ValOrInf>) -> ValOrInf {
        it.into_iter().fold(ValOrInf::Infinite, |a, b| if b < &a { b.clone() } else { a })
    }
}

impl PartialOrd for ValOrInf {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for ValOrInf {
    fn cmp(&self, o: &Self) -> Ordering {
        match (self, o) {
            (ValOrInf::Finite(a), ValOrInf::Finite(b)) => a.cmp(b),
            (ValOrInf::Finite(_), ValOrInf::Infinite) => Ordering::Less,
            (ValOrInf::Infinite, ValOrInf::Finite(_)) => Ordering::Greater,
            (ValOrInf::Infinite, ValOrInf::Infinite) => Ordering::Equal,
        }
    }
}

impl Add for &ValOrInf {
    type Output = ValOrInf;
    fn add(self, o: &ValOrInf) -> ValOrInf {
        match (self, o) {
            (ValOrInf::Finite(a), ValOrInf::Finite(b)) => ValOrInf::Finite(a + b),
            _ => ValOrInf::Infinite,
        }
    }
}

/// Finite minus finite; `∞ − finite = ∞`. Subtracting `∞` is not defined.
impl Sub for &ValOrInf {
    type Output = ValOrInf;
    fn sub(self, o: &ValOrInf) -> ValOrInf {
        match (self, o) {
            (ValOrInf::Finite(a), ValOrInf::Finite(b)) => ValOrInf::Finite(a - b),
            (ValOrInf::Infinite, ValOrInf::Finite(_)) => ValOrInf::Infinite,
            (_, ValOrInf::Infinite) => panic!("subtracting an infinite valuation"),
        }
    }
}

impl fmt::Display for ValOrInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValOrInf::Finite(r) => write!(f, "{r}"),
            ValOrInf::Infinite => write!(f, "inf"),
        }
    }
}

fn int_val(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// Exact valuation as an integer; `None` for 0.
pub fn val_int(r: &Rational, p: &BigInt) -> Option<i64> {
    (!r.is_zero()).then(|| int_val(r.numer(), p) - int_val(r.denom(), p))
}

/// `v_p(r)`, with `v_p(0) = ∞`.
pub fn val_p(r: &Rational, p: &BigInt) -> ValOrInf {
    match val_int(r, p) {
        Some(k) => ValOrInf::from_int(k),
        None => ValOrInf::Infinite,
    }
}

/// Values with positive weights over a prime, viewed as a weighted projective point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedValuationPoint {
    pub values: Vec<Rational>,
    pub weights: Vec<u32>,
    pub p: BigInt,
}

impl WeightedValuationPoint {
    pub fn new(values: Vec<Rational>, weights: Vec<u32>, p: BigInt) -> Self {
        assert_eq!(values.len(), weights.len(), "one weight per value");
        assert!(weights.iter().all(|&d| d > 0), "weights must be positive");
        WeightedValuationPoint { values, weights, p }
    }

    pub fn valuations(&self) -> Vec<ValOrInf> {
        self.values.iter().map(|v| val_p(v, &self.p)).collect()
    }

    /// `v(x_i)/d_i` slot by slot.
    pub fn slopes(&self) -> Vec<ValOrInf> {
        self.valuations().iter().zip(&self.weights).map(|(v, &d)| v.div(d)).collect()
    }

    pub fn is_all_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Replace `x_i` by `c^(d_i)·x_i`.
    pub fn rescale(&self, c: &Rational) -> Self {
        WeightedValuationPoint {
            values: self.values.iter().zip(&self.weights).map(|(v, &d)| v * crate::rational::pow(c, d)).collect(),
            weights: self.weights.clone(),
            p: self.p.clone(),
        }
    }
}

/// `λ = min_i v(x_i)/d_i`.
pub fn min_slope(x: &WeightedValuationPoint) -> Result<ValOrInf> {
    if x.is_all_zero() {
        return Err(Error::AllZero);
    }
    Ok(ValOrInf::min_of(&x.slopes()))
}

/// Normalized valuation of degree `e`:
/// `v_x(y) = v(y)/e − min{v(y)/e, v(x_i)/d_i}`.
pub fn normalized_valuation(x: &WeightedValuationPoint, y: &Rational, e: u32) -> Result<ValOrInf> {
    if y.is_zero() {
        if x.is_all_zero() {
            return Err(Error::AllZero);
        }
        return Ok(ValOrInf::Infinite);
    }
    let vy = val_p(y, &x.p).div(e);
    let mut slopes = x.slopes();
    slopes.push(vy.clone());
    let m = ValOrInf::min_of(&slopes);
    Ok(&vy - &m)
}

/// Outcome of reducing a minimal representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalResidues {
    /// Residues of `x_i·p^(−λ d_i)`.
    Residues(Vec<Fp>),
    /// Some `λ·d_i` is fractional; a ramified extension would be needed.
    NeedsExtension { slope: Rational },
}

pub fn minimal_residues(x: &WeightedValuationPoint) -> Result<MinimalResidues> {
    let lambda = match min_slope(x)? {
        ValOrInf::Finite(l) => l,
        ValOrInf::Infinite => return Err(Error::AllZero),
    };
    let mut out = Vec::with_capacity(x.values.len());
    for (v, &d) in x.values.iter().zip(&x.weights) {
        let shift = &lambda * big(&BigInt::from(d));
        if !shift.is_integer() {
            return Ok(MinimalResidues::NeedsExtension { slope: lambda });
        }
        let k = shift.to_integer();
        let k: i64 = (&k).try_into().expect("valuation shift fits in i64");
        let pk = crate::rational::pow(&big(&x.p), k.unsigned_abs() as u32);
        let scaled = if k >= 0 { v / pk } else { v * pk };
        out.push(reduce_mod_p(&scaled, &x.p)?);
    }
    Ok(MinimalResidues::Residues(out))
}

/// Residue of `x_i / x_j^(d_i/d_j)`, defined when `d_j | d_i` and `x_j` attains
/// the minimal slope (so it is a unit in a minimal representative).
pub fn ratio_residue(x: &WeightedValuationPoint, i: usize, j: usize) -> Result<Fp> {
    let (di, dj) = (x.weights[i], x.weights[j]);
    if di % dj != 0 {
        return Err(Error::RatioUndefined(format!("weight {dj} does not divide {di}")));
    }
    let lambda = min_slope(x)?;
    if x.values[j].is_zero() || x.slopes()[j] != lambda {
        return Err(Error::RatioUndefined(format!("slot {j} is not a unit after normalization")));
    }
    let r = &x.values[i] / crate::rational::pow(&x.values[j], di / dj);
    reduce_mod_p(&r, &x.p)
}

/// Degree 0 ratio `x_i^(d_j/g) / x_j^(d_i/g)` with `g = gcd(d_i, d_j)`, reduced
/// mod p. Defined whenever `x_j` attains the minimal slope; no divisibility needed.
pub fn weighted_ratio_residue(x: &WeightedValuationPoint, i: usize, j: usize) -> Result<Fp> {
    let (di, dj) = (x.weights[i], x.weights[j]);
    let g = di.gcd(&dj);
    let lambda = min_slope(x)?;
    if x.values[j].is_zero() || x.slopes()[j] != lambda {
        return Err(Error::RatioUndefined(format!("slot {j} is not a unit after normalization")));
    }
    let r = crate::rational::pow(&x.values[i], dj / g) / crate::rational::pow(&x.values[j], di / g);
    reduce_mod_p(&r, &x.p)
}

/// Rescale a form by a power of `p` so that its coefficients are p-integral with
/// at least one p-unit. Returns the form and the exponent `k` with `F' = p^k·F`.
pub fn primitive_at(f: &TernaryForm, p: &BigInt) -> (TernaryForm, i64) {
    let m = f.coeffs().iter().filter_map(|c| val_int(c, p)).min();
    match m {
        None => (f.clone(), 0),
        Some(m) => {
            let pk = crate::rational::pow(&big(p), m.unsigned_abs() as u32);
            let g = if m >= 0 { f.scale(&(Rational::one() / pk)) } else { f.scale(&pk) };
            (g, -m)
        }
    }
}
