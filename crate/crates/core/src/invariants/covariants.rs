//! The covariant and contravariant chain behind the Dixmier–Ohno invariants.
//!
//! Dual forms live in the same [`TernaryForm`] type, read in line coordinates
//! `u = (u1, u2, u3)`. A form in `x` acts on a form in `u` through
//! differentiation and vice versa ([`TernaryForm::apply_to`]).

use crate::forms::{LinearMap3, TernaryForm};
use crate::rational::{int, Rational};

/// Polynomial in `(s, t)` homogeneous of fixed degree, with coefficients forms in `u`.
/// Index `k` holds the coefficient of `s^(d−k) t^k`.
#[derive(Clone)]
struct LinePoly(Vec<TernaryForm>);

impl LinePoly {
    fn one() -> Self {
        LinePoly(vec![TernaryForm::constant(Rational::from_integer(1.into()))])
    }

    fn mul(&self, o: &LinePoly) -> LinePoly {
        let mut out: Vec<TernaryForm> = Vec::with_capacity(self.0.len() + o.0.len() - 1);
        for i in 0..self.0.len() + o.0.len() - 1 {
            let mut acc: Option<TernaryForm> = None;
            for j in 0..=i {
                if j < self.0.len() && i - j < o.0.len() {
                    let t = &self.0[j] * &o.0[i - j];
                    acc = Some(match acc {
                        Some(a) => &a + &t,
                        None => t,
                    });
                }
            }
            out.push(acc.expect("nonempty convolution"));
        }
        LinePoly(out)
    }
}

/// The contravariants `σ` (degree 2, order 4) and `ψ` (degree 3, order 6):
/// the invariants S and T of the binary quartic cut out by `F` on the line `u`.
pub fn sigma_psi(f: &TernaryForm) -> (TernaryForm, TernaryForm) {
    assert_eq!(f.degree(), 4);
    let u = |i: usize| TernaryForm::variable(i);
    let zero = TernaryForm::zero(1);
    // Points spanning the line u: P = (u2, −u1, 0), Q = (u3, 0, −u1), with P × Q = u1·u.
    let p = [u(1), -&u(0), zero.clone()];
    let q = [u(2), zero, -&u(0)];
    let lines: Vec<LinePoly> = (0..3).map(|i| LinePoly(vec![p[i].clone(), q[i].clone()])).collect();
    let powers: Vec<Vec<LinePoly>> = lines
        .iter()
        .map(|l| {
            let mut v = vec![LinePoly::one()];
            for k in 0..4 {
                let next = v[k].mul(l);
                v.push(next);
            }
            v
        })
        .collect();
    let mut c: Vec<TernaryForm> = vec![TernaryForm::zero(4); 5];
    for (e, coef) in f.terms() {
        let m = powers[0][e[0] as usize].mul(&powers[1][e[1] as usize]).mul(&powers[2][e[2] as usize]);
        for (ck, mk) in c.iter_mut().zip(&m.0) {
            *ck = &*ck + &mk.scale(coef);
        }
    }
    let quarter = Rational::new(1.into(), 4.into());
    let sixth = Rational::new(1.into(), 6.into());
    let a0 = c[0].clone();
    let a1 = c[1].scale(&quarter);
    let a2 = c[2].scale(&sixth);
    let a3 = c[3].scale(&quarter);
    let a4 = c[4].clone();
    let s = &(&(&a0 * &a4) - &(&a1 * &a3).scale(&int(4))) + &(&a2 * &a2).scale(&int(3));
    let t = {
        let m1 = &(&a0 * &a2) * &a4;
        let m2 = (&(&a1 * &a2) * &a3).scale(&int(2));
        let m3 = &(&a2 * &a2) * &a2;
        let m4 = &(&a0 * &a3) * &a3;
        let m5 = &(&a1 * &a1) * &a4;
        &(&(&(&m1 + &m2) - &m3) - &m4) - &m5
    };
    let sigma = s.div_x1_pow(4).expect("S is divisible by u1^4");
    let psi = t.div_x1_pow(6).expect("T is divisible by u1^6");
    (sigma, psi)
}

/// Every intermediate object needed for the 13 invariants.
#[derive(Clone, Debug)]
pub struct CovariantChain {
    pub sigma: TernaryForm,
    pub psi: TernaryForm,
    pub hessian: TernaryForm,
    pub rho: TernaryForm,
    pub tau: TernaryForm,
    pub xi: TernaryForm,
    pub eta: TernaryForm,
    pub nu: TernaryForm,
}

impl CovariantChain {
    pub fn new(f: &TernaryForm) -> Self {
        let (sigma, psi) = sigma_psi(f);
        let hessian = f.hessian_det();
        let rho = f.apply_to(&psi);
        let tau = rho.apply_to(f);
        let xi = sigma.apply_to(&hessian);
        let eta = xi.apply_to(&sigma);
        let nu = eta.apply_to(&rho.apply_to(&hessian));
        CovariantChain { sigma, psi, hessian, rho, tau, xi, eta, nu }
    }
}

/// The order 2 contravariant `ρ(F)`, a dual quadric in `(v1, v2, v3)`.
/// It satisfies `ρ(F.T)(v) = det(T)^6 · ρ(F)(T^(−t) v)`.
pub fn rho(f: &TernaryForm) -> TernaryForm {
    let (_, psi) = sigma_psi(f);
    f.apply_to(&psi)
}

/// Contragredient action on a dual form: `(ρ ↦ ρ(T^(−t) v))`.
pub fn act_dual(rho: &TernaryForm, t: &LinearMap3) -> Option<TernaryForm> {
    Some(rho.act(&t.inverse()?.transpose()))
}

fn constant(f: &TernaryForm) -> Rational {
    assert_eq!(f.degree(), 0, "pairing did not produce a scalar");
    f.coeffs()[0].clone()
}

/// Full contraction of a covariant and a contravariant of equal order.
pub fn pair(a: &TernaryForm, b: &TernaryForm) -> Rational {
    constant(&a.apply_to(b))
}

/// Determinant of the matrix of a quadric.
pub fn quadric_det(a: &TernaryForm) -> Rational {
    a.quadric_matrix().det()
}

/// `trace(adj(M_A) · adj(M_B))` for two quadrics.
pub fn adjugate_pairing(a: &TernaryForm, b: &TernaryForm) -> Rational {
    (&a.quadric_matrix().adjugate() * &b.quadric_matrix().adjugate()).trace()
}

/// The 12 unnormalized invariants of degrees 3 … 21, in Dixmier–Ohno order.
pub fn raw_invariants(f: &TernaryForm) -> [Rational; 12] {
    let c = CovariantChain::new(f);
    [
        pair(f, &c.sigma),
        pair(&c.hessian, &c.psi),
        pair(&c.tau, &c.rho),
        pair(&c.xi, &c.rho),
        quadric_det(&c.rho),
        pair(&c.tau, &c.eta),
        quadric_det(&c.tau),
        quadric_det(&c.xi),
        adjugate_pairing(&c.tau, &c.rho),
        adjugate_pairing(&c.xi, &c.rho),
        quadric_det(&c.eta),
        pair(&c.nu, &c.eta),
    ]
}
