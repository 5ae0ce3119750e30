use super::linear::LinearMap3;
use crate::rational::{int, Rational};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An exponent triple `(i, j, k)` for the monomial `x1^i x2^j x3^k`.
pub type Exponent = [u32; 3];

/// Homogeneous form in three variables with dense storage.
///
/// Coefficients are kept in graded-lexicographic order: for fixed degree `d`,
/// `(i, j, k)` precedes `(i', j', k')` when `i > i'`, or `i = i'` and `j > j'`.
/// For a quartic this gives the 15 slots
/// `x1^4, x1^3x2, x1^3x3, x1^2x2^2, x1^2x2x3, x1^2x3^2, x1x2^3, x1x2^2x3,
///  x1x2x3^2, x1x3^3, x2^4, x2^3x3, x2^2x3^2, x2x3^3, x3^4`.
/// The same type stores dual forms, reading the variables as line coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    degree: u32,
    coeffs: Vec<Rational>,
}

/// Number of monomials of degree `d` in three variables.
pub fn monomial_count(d: u32) -> usize {
    ((d + 1) * (d + 2) / 2) as usize
}

/// Exponents of degree `d` in storage order.
pub fn monomials(d: u32) -> Vec<Exponent> {
    let mut out = Vec::with_capacity(monomial_count(d));
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

/// Storage index of an exponent of total degree `d`.
pub fn monomial_index(e: Exponent) -> usize {
    let d = e[0] + e[1] + e[2];
    let a = (d - e[0]) as usize;
    a * (a + 1) / 2 + e[2] as usize
}

fn falling(n: u32, k: u32) -> i64 {
    (0..k).map(|t| (n - t) as i64).product()
}

impl TernaryForm {
    pub fn zero(degree: u32) -> Self {
        TernaryForm { degree, coeffs: vec![Rational::zero(); monomial_count(degree)] }
    }

    /// Build from a coefficient vector in storage order.
    pub fn from_coeffs(degree: u32, coeffs: Vec<Rational>) -> Option<Self> {
        (coeffs.len() == monomial_count(degree)).then_some(TernaryForm { degree, coeffs })
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rational)>>(degree: u32, terms: I) -> Self {
        let mut f = Self::zero(degree);
        for (e, c) in terms {
            assert_eq!(e[0] + e[1] + e[2], degree, "inhomogeneous term");
            f.coeffs[monomial_index(e)] += c;
        }
        f
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(degree: u32, terms: &[(Exponent, i64)]) -> Self {
        Self::from_terms(degree, terms.iter().map(|(e, c)| (*e, int(*c))))
    }

    pub fn constant(c: Rational) -> Self {
        TernaryForm { degree: 0, coeffs: vec![c] }
    }

    /// The coordinate `x_{i+1}`.
    pub fn variable(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::from_terms(1, [(e, Rational::one())])
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: Exponent) -> &Rational {
        &self.coeffs[monomial_index(e)]
    }

    pub fn set_coeff(&mut self, e: Exponent, c: Rational) {
        let i = monomial_index(e);
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &Rational)> + '_ {
        monomials(self.degree).into_iter().zip(self.coeffs.iter()).filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TernaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        TernaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::constant(Rational::one());
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Partial derivative with respect to `x_{var+1}`. The derivative of a
    /// constant is the zero constant.
    pub fn derivative(&self, var: usize) -> Self {
        self.derivative_multi(std::array::from_fn(|i| u32::from(i == var)))
    }

    /// `∂^a` for a multi-index `a`.
    pub fn derivative_multi(&self, a: Exponent) -> Self {
        let da = a[0] + a[1] + a[2];
        if da > self.degree {
            return Self::zero(0);
        }
        let mut out = Self::zero(self.degree - da);
        for (e, c) in self.terms() {
            if e[0] < a[0] || e[1] < a[1] || e[2] < a[2] {
                continue;
            }
            let f = falling(e[0], a[0]) * falling(e[1], a[1]) * falling(e[2], a[2]);
            let ne = [e[0] - a[0], e[1] - a[1], e[2] - a[2]];
            out.coeffs[monomial_index(ne)] += c * int(f);
        }
        out
    }

    /// Apply `self(∂)` to `g`: the sum over monomials `m` of `self` of `c_m ∂^m g`.
    /// The result has degree `deg g − deg self`, or is the zero constant if negative.
    pub fn apply_to(&self, g: &TernaryForm) -> TernaryForm {
        if self.degree > g.degree {
            return Self::zero(0);
        }
        let mut out = Self::zero(g.degree - self.degree);
        for (a, c) in self.terms() {
            for (e, gc) in g.terms() {
                if e[0] < a[0] || e[1] < a[1] || e[2] < a[2] {
                    continue;
                }
                let f = falling(e[0], a[0]) * falling(e[1], a[1]) * falling(e[2], a[2]);
                let ne = [e[0] - a[0], e[1] - a[1], e[2] - a[2]];
                out.coeffs[monomial_index(ne)] += c * gc * int(f);
            }
        }
        out
    }

    pub fn evaluate(&self, pt: &[Rational; 3]) -> Rational {
        let mut powers: [Vec<Rational>; 3] = Default::default();
        for (v, p) in powers.iter_mut().enumerate() {
            p.push(Rational::one());
            for k in 0..self.degree as usize {
                let next = &p[k] * &pt[v];
                p.push(next);
            }
        }
        self.terms()
            .map(|(e, c)| c * &powers[0][e[0] as usize] * &powers[1][e[1] as usize] * &powers[2][e[2] as usize])
            .sum()
    }

    /// Right action `(F.T)(x) = F(T·x)`.
    pub fn act(&self, t: &LinearMap3) -> TernaryForm {
        let lin: Vec<TernaryForm> = (0..3)
            .map(|i| {
                TernaryForm::from_terms(
                    1,
                    (0..3).map(|j| {
                        let mut e = [0; 3];
                        e[j] = 1;
                        (e, t.0[i][j].clone())
                    }),
                )
            })
            .collect();
        let d = self.degree as usize;
        let powers: Vec<Vec<TernaryForm>> = lin
            .iter()
            .map(|l| {
                let mut p = vec![TernaryForm::constant(Rational::one())];
                for k in 0..d {
                    let next = &p[k] * l;
                    p.push(next);
                }
                p
            })
            .collect();
        let mut out = Self::zero(self.degree);
        for (e, c) in self.terms() {
            let m = &(&powers[0][e[0] as usize] * &powers[1][e[1] as usize]) * &powers[2][e[2] as usize];
            for (o, mc) in out.coeffs.iter_mut().zip(m.coeffs.iter()) {
                *o += c * mc;
            }
        }
        out
    }

    /// Exact division by `x1^k`; `None` if some surviving term has a smaller `x1` power.
    pub fn div_x1_pow(&self, k: u32) -> Option<TernaryForm> {
        if k > self.degree {
            return self.is_zero().then(|| Self::zero(0));
        }
        let mut out = Self::zero(self.degree - k);
        for (e, c) in self.terms() {
            if e[0] < k {
                return None;
            }
            out.coeffs[monomial_index([e[0] - k, e[1], e[2]])] = c.clone();
        }
        Some(out)
    }

    /// Symmetric matrix `M` of a quadric with `A(v) = vᵀ M v`.
    pub fn quadric_matrix(&self) -> LinearMap3 {
        assert_eq!(self.degree, 2, "quadric_matrix needs a degree 2 form");
        let half = Rational::new(1.into(), 2.into());
        LinearMap3(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut e = [0u32; 3];
                e[i] += 1;
                e[j] += 1;
                let c = self.coeff(e).clone();
                if i == j {
                    c
                } else {
                    c * &half
                }
            })
        }))
    }

    /// Determinant of the Hessian matrix of second partials.
    pub fn hessian_det(&self) -> TernaryForm {
        let h: Vec<Vec<TernaryForm>> =
            (0..3).map(|i| (0..3).map(|j| self.derivative(i).derivative(j)).collect()).collect();
        let minor = |a: usize, b: usize, c: usize, d: usize| &(&h[1][a] * &h[2][b]) - &(&h[1][c] * &h[2][d]);
        let t0 = &h[0][0] * &minor(1, 2, 2, 1);
        let t1 = &h[0][1] * &minor(0, 2, 2, 0);
        let t2 = &h[0][2] * &minor(0, 1, 1, 0);
        &(&t0 - &t1) + &t2
    }

    /// Discriminant `D3 = 4abc + def − af² − be² − cd²` of a conic
    /// `a x1² + b x2² + c x3² + d x1x2 + e x1x3 + f x2x3` (equal to 4·det of its matrix).
    pub fn conic_discriminant(&self) -> Rational {
        assert_eq!(self.degree, 2);
        self.quadric_matrix().det() * int(4)
    }
}

impl Add for &TernaryForm {
    type Output = TernaryForm;
    fn add(self, o: &TernaryForm) -> TernaryForm {
        if self.is_zero() && self.degree != o.degree {
            return o.clone();
        }
        if o.is_zero() && self.degree != o.degree {
            return self.clone();
        }
        assert_eq!(self.degree, o.degree, "adding forms of different degree");
        TernaryForm { degree: self.degree, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &TernaryForm {
    type Output = TernaryForm;
    fn sub(self, o: &TernaryForm) -> TernaryForm {
        self + &(-o)
    }
}

impl Neg for &TernaryForm {
    type Output = TernaryForm;
    fn neg(self) -> TernaryForm {
        self.map_coeffs(|c| -c)
    }
}

impl Mul for &TernaryForm {
    type Output = TernaryForm;
    fn mul(self, o: &TernaryForm) -> TernaryForm {
        let mut out = TernaryForm::zero(self.degree + o.degree);
        for (a, ca) in self.terms() {
            for (b, cb) in o.terms() {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                out.coeffs[monomial_index(e)] += ca * cb;
            }
        }
        out
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let mut mono = String::new();
            for (v, k) in ["x", "y", "z"].iter().zip(e) {
                match k {
                    0 => {}
                    1 => mono.push_str(&format!("*{v}")),
                    _ => mono.push_str(&format!("*{v}^{k}")),
                }
            }
            let neg = c < &Rational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let body = if mono.is_empty() {
                a.to_string()
            } else if a.is_one() {
                mono[1..].to_string()
            } else if a.is_integer() {
                format!("{a}{mono}")
            } else {
                format!("({a}){mono}")
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The fixed conic `Q0 = x2² − 4 x1 x3`.
pub fn q0() -> TernaryForm {
    TernaryForm::from_int_terms(2, &[([0, 2, 0], 1), ([1, 0, 1], -4)])
}

/// `x1^4 + x2^4 + x3^4`.
pub fn fermat_quartic() -> TernaryForm {
    TernaryForm::from_int_terms(4, &[([4, 0, 0], 1), ([0, 4, 0], 1), ([0, 0, 4], 1)])
}

/// Klein quartic `x1^3 x2 + x2^3 x3 + x3^3 x1`.
pub fn klein_quartic() -> TernaryForm {
    TernaryForm::from_int_terms(4, &[([3, 1, 0], 1), ([0, 3, 1], 1), ([1, 0, 3], 1)])
}
