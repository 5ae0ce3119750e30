//! Prime field elements and reduction of p-integral data.

use super::binary::BinaryForm;
use super::ternary::{monomial_count, monomial_index, monomials, TernaryForm};
use crate::error::{Error, Result};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// An element of `F_p` stored as a residue in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: BigInt,
    r: BigInt,
}

impl Fp {
    pub fn new(r: BigInt, p: &BigInt) -> Self {
        Fp { r: r.mod_floor(p), p: p.clone() }
    }

    pub fn from_i64(r: i64, p: u64) -> Self {
        Self::new(BigInt::from(r), &BigInt::from(p))
    }

    pub fn residue(&self) -> &BigInt {
        &self.r
    }

    pub fn prime(&self) -> &BigInt {
        &self.p
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    pub fn add(&self, o: &Fp) -> Fp {
        Fp::new(&self.r + &o.r, &self.p)
    }

    pub fn sub(&self, o: &Fp) -> Fp {
        Fp::new(&self.r - &o.r, &self.p)
    }

    pub fn mul(&self, o: &Fp) -> Fp {
        Fp::new(&self.r * &o.r, &self.p)
    }

    pub fn neg(&self) -> Fp {
        Fp::new(-&self.r, &self.p)
    }

    pub fn pow(&self, e: &BigInt) -> Fp {
        Fp { r: self.r.modpow(e, &self.p), p: self.p.clone() }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Fp> {
        if self.r.is_zero() {
            return None;
        }
        let e = self.r.extended_gcd(&self.p);
        Some(Fp::new(e.x, &self.p))
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.r)
    }
}

/// Residue of a p-integral rational.
pub fn reduce_mod_p(r: &Rational, p: &BigInt) -> Result<Fp> {
    let den = Fp::new(r.denom().clone(), p);
    let inv = den.inv().ok_or_else(|| Error::NotIntegral { p: p.clone() })?;
    Ok(Fp::new(r.numer().clone(), p).mul(&inv))
}

/// Ternary form over `F_p`, same storage order as [`TernaryForm`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryFormModP {
    pub p: BigInt,
    pub degree: u32,
    pub coeffs: Vec<Fp>,
}

impl TernaryFormModP {
    pub fn reduce(f: &TernaryForm, p: &BigInt) -> Result<Self> {
        let coeffs = f.coeffs().iter().map(|c| reduce_mod_p(c, p)).collect::<Result<_>>()?;
        Ok(TernaryFormModP { p: p.clone(), degree: f.degree(), coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Fp::is_zero)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.degree + o.degree;
        let mut out = vec![Fp::new(BigInt::zero(), &self.p); monomial_count(d)];
        let (ma, mb) = (monomials(self.degree), monomials(o.degree));
        for (a, ca) in ma.iter().zip(&self.coeffs) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in mb.iter().zip(&o.coeffs) {
                let i = monomial_index([a[0] + b[0], a[1] + b[1], a[2] + b[2]]);
                out[i] = out[i].add(&ca.mul(cb));
            }
        }
        TernaryFormModP { p: self.p.clone(), degree: d, coeffs: out }
    }

    pub fn scale(&self, c: &Fp) -> Self {
        TernaryFormModP {
            p: self.p.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Lift residues to integers in `[0, p)`.
    pub fn lift(&self) -> TernaryForm {
        TernaryForm::from_coeffs(
            self.degree,
            self.coeffs.iter().map(|c| Rational::from_integer(c.residue().clone())).collect(),
        )
        .expect("coefficient count matches degree")
    }
}

/// Binary form over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryFormModP {
    pub p: BigInt,
    pub coeffs: Vec<Fp>,
}

impl BinaryFormModP {
    pub fn reduce(f: &BinaryForm, p: &BigInt) -> Result<Self> {
        let coeffs = f.coeffs().iter().map(|c| reduce_mod_p(c, p)).collect::<Result<_>>()?;
        Ok(BinaryFormModP { p: p.clone(), coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Fp::is_zero)
    }

    pub fn lift(&self) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|c| Rational::from_integer(c.residue().clone())).collect())
    }
}

/// Decide whether a quartic over `F_p` (p odd) is `c·q²` for a conic `q`.
/// The returned `q` has leading coefficient 1 in storage order.
pub fn conic_square_root(f: &TernaryFormModP) -> Option<(TernaryFormModP, Fp)> {
    assert_eq!(f.degree, 4, "conic_square_root expects a quartic");
    assert!(f.p != BigInt::from(2), "conic_square_root needs p odd");
    let p = &f.p;
    let mons4 = monomials(4);
    let lead = f.coeffs.iter().position(|c| !c.is_zero())?;
    let le = mons4[lead];
    if le.iter().any(|e| e % 2 == 1) {
        return None;
    }
    let c = f.coeffs[lead].clone();
    let cinv = c.inv().expect("leading coefficient is nonzero");
    let target: Vec<Fp> = f.coeffs.iter().map(|a| a.mul(&cinv)).collect();
    let lq = [le[0] / 2, le[1] / 2, le[2] / 2];
    let mons2 = monomials(2);
    let li = monomial_index(lq);
    let mut q = vec![Fp::new(BigInt::zero(), p); 6];
    q[li] = Fp::new(BigInt::one(), p);
    let two_inv = Fp::new(BigInt::from(2), p).inv().expect("p odd");
    // Graded lex is a monomial order, so the coefficient of lq·m in q² is
    // 2·q_m plus products of already determined coefficients.
    for mi in li + 1..6 {
        let m = mons2[mi];
        let e = [lq[0] + m[0], lq[1] + m[1], lq[2] + m[2]];
        let mut known = Fp::new(BigInt::zero(), p);
        for a in li + 1..mi {
            for b in li + 1..mi {
                let (ma, mb) = (mons2[a], mons2[b]);
                if [ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]] == e {
                    known = known.add(&q[a].mul(&q[b]));
                }
            }
        }
        q[mi] = target[monomial_index(e)].sub(&known).mul(&two_inv);
    }
    let qf = TernaryFormModP { p: p.clone(), degree: 2, coeffs: q };
    let sq = qf.mul(&qf);
    (sq.coeffs == target).then_some((qf, c))
}

/// Exact quotient `f / q` over `F_p`, or `None` when `q` does not divide `f`.
/// Storage order is a monomial order, so leading-term division decides divisibility.
pub fn divide_exact(f: &TernaryFormModP, q: &TernaryFormModP) -> Option<TernaryFormModP> {
    let p = &f.p;
    let lq = q.coeffs.iter().position(|c| !c.is_zero())?;
    if f.degree < q.degree {
        return f.is_zero().then(|| TernaryFormModP {
            p: p.clone(),
            degree: 0,
            coeffs: vec![Fp::new(BigInt::zero(), p)],
        });
    }
    let qd = q.degree;
    let dq = f.degree - qd;
    let mq = monomials(qd);
    let lead = mq[lq];
    let linv = q.coeffs[lq].inv().expect("nonzero leading coefficient");
    let mut rem = f.coeffs.clone();
    let mut quot = vec![Fp::new(BigInt::zero(), p); monomial_count(dq)];
    let mf = monomials(f.degree);
    for idx in 0..rem.len() {
        if rem[idx].is_zero() {
            continue;
        }
        let e = mf[idx];
        if (0..3).any(|v| e[v] < lead[v]) {
            return None;
        }
        let m = [e[0] - lead[0], e[1] - lead[1], e[2] - lead[2]];
        let c = rem[idx].mul(&linv);
        for (b, cb) in mq.iter().zip(&q.coeffs) {
            let k = monomial_index([m[0] + b[0], m[1] + b[1], m[2] + b[2]]);
            rem[k] = rem[k].sub(&c.mul(cb));
        }
        quot[monomial_index(m)] = c;
    }
    Some(TernaryFormModP { p: p.clone(), degree: dq, coeffs: quot })
}
