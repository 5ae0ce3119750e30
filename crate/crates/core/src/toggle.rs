//! Toggle models `F = Q² + p^s·G` near the conic-square locus, the map `b8`
//! to binary octics and the hyperelliptic special fiber.

use crate::error::{Error, Result};
use crate::forms::{
    conic_square_root, divide_exact, q0, reduce_mod_p, BinaryForm, BinaryFormModP, Fp, LinearMap2, LinearMap3,
    TernaryForm, TernaryFormModP,
};
use crate::invariants::{binary_octic_discriminant, discriminant_quartic, dixmier_ohno, iota, shioda};
use crate::rational::{big, int, pow, Rational};
use crate::valuations::{primitive_at, val_int, ValOrInf};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `b_{2d}(F) = F(x², 2xz, z²)`.
pub fn b8(f: &TernaryForm) -> BinaryForm {
    let d = f.degree();
    let mut out = vec![Rational::zero(); 2 * d as usize + 1];
    for (e, c) in f.terms() {
        let zdeg = (e[1] + 2 * e[2]) as usize;
        out[zdeg] += c * pow(&int(2), e[1]);
    }
    BinaryForm::new(out)
}

/// The symmetric-square embedding `[[a,b],[c,d]] ↦ [[a², 2ab, b²], [ac, ad+bc, bd], [c², 2cd, d²]]`.
///
/// The matrix is written for forms acted on by row vectors; with the crate's
/// `F.T(x) = F(T·x)` convention the intertwining identity reads
/// `b8(F.act(h(T)ᵗ)) = b8(F).act(Tᵗ)`, and `h(T)ᵗ` fixes `Q0` when `det T = 1`.
pub fn h_embed(t: &LinearMap2) -> LinearMap3 {
    let [[a, b], [c, d]] = &t.0;
    let two = int(2);
    LinearMap3([[a * a, &two * a * b, b * b], [a * c, a * d + b * c, b * d], [c * c, &two * c * d, d * d]])
}

/// A decomposition `F = Q² + p^s·G` with `G` p-integral and nonzero mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToggleModel {
    pub q: TernaryForm,
    pub s: u32,
    pub g: TernaryForm,
    pub p: BigInt,
    /// `Q ≡ ±Q0 mod p`, the case the special-fiber formulas cover.
    pub normalized: bool,
}

impl ToggleModel {
    pub fn new(q: TernaryForm, s: u32, g: TernaryForm, p: BigInt) -> Result<Self> {
        if q.degree() != 2 {
            return Err(Error::WrongDegree { expected: 2, found: q.degree() });
        }
        if g.degree() != 4 {
            return Err(Error::WrongDegree { expected: 4, found: g.degree() });
        }
        if s == 0 {
            return Err(Error::Toggle("exponent s must be positive".into()));
        }
        let gbar = TernaryFormModP::reduce(&g, &p)?;
        if gbar.is_zero() {
            return Err(Error::Toggle("G vanishes mod p".into()));
        }
        let qbar = TernaryFormModP::reduce(&q, &p)?;
        let q0bar = TernaryFormModP::reduce(&q0(), &p)?;
        let normalized = qbar == q0bar || qbar.scale(&Fp::new(BigInt::from(-1), &p)) == q0bar;
        Ok(ToggleModel { q, s, g, p, normalized })
    }

    /// `Q² + p^s·G`.
    pub fn reassemble(&self) -> TernaryForm {
        &self.q.pow(2) + &self.g.scale(&pow(&big(&self.p), self.s))
    }

    /// Whether `s` is even, as required of a good model.
    pub fn s_is_even(&self) -> bool {
        self.s.is_multiple_of(2)
    }
}

fn sqrt_mod_p(a: &Fp) -> Option<Fp> {
    let p = a.prime().clone();
    if a.is_zero() {
        return Some(a.clone());
    }
    let half = (&p - 1u32) / 2u32;
    if !a.pow(&half).residue().is_one() {
        return None;
    }
    // Small primes suffice for the normalization step; fall back to search.
    let mut x = BigInt::one();
    while x < p {
        let c = Fp::new(x.clone(), &p);
        if c.mul(&c) == *a {
            return Some(c);
        }
        x += 1u32;
    }
    None
}

fn lift_signed(c: &Fp) -> Rational {
    let p = c.prime();
    let r = c.residue();
    if r * 2u32 > *p {
        big(&(r - p))
    } else {
        big(r)
    }
}

fn lift_form(f: &TernaryFormModP) -> TernaryForm {
    TernaryForm::from_coeffs(f.degree, f.coeffs.iter().map(lift_signed).collect())
        .expect("coefficient count matches degree")
}

/// Search for `F = Q² + p^r·G` with `Q̄` a nondegenerate conic, extracting the
/// maximal `r` by absorbing conic multiples of `Ḡ` into `Q`.
///
/// `F` must be p-integral and primitive. Returns `None` when `F̄` is not the
/// square of a nondegenerate conic (up to a square unit), or when `F` is an
/// exact square.
pub fn detect_toggle(f: &TernaryForm, p: &BigInt) -> Result<Option<ToggleModel>> {
    if f.degree() != 4 {
        return Err(Error::WrongDegree { expected: 4, found: f.degree() });
    }
    if *p == BigInt::from(2) {
        return Err(Error::UnsupportedPrime { p: p.clone(), reason: "toggle models need p odd".into() });
    }
    let fbar = TernaryFormModP::reduce(f, p)?;
    if fbar.is_zero() {
        return Err(Error::Toggle("F is not primitive at p".into()));
    }
    let Some((qbar, c)) = conic_square_root(&fbar) else { return Ok(None) };
    if reduce_mod_p(&qbar.lift().conic_discriminant(), p)?.is_zero() {
        return Ok(None);
    }
    let Some(root) = sqrt_mod_p(&c) else { return Ok(None) };
    let qbar = qbar.scale(&root);
    let q0bar = TernaryFormModP::reduce(&q0(), p)?;
    let mut q =
        if qbar == q0bar || qbar.scale(&Fp::new(BigInt::from(-1), p)) == q0bar { q0() } else { lift_form(&qbar) };

    let bound = match val_int(&discriminant_quartic(f), p) {
        Some(v) => 4 * v.max(1) as usize,
        None => 64,
    };
    let pz = big(p);
    let two = int(2);
    for _ in 0..=bound {
        let h = f - &q.pow(2);
        if h.is_zero() {
            return Ok(None);
        }
        let r = h.coeffs().iter().filter_map(|c| val_int(c, p)).min().expect("h is nonzero");
        if r <= 0 {
            return Err(Error::Toggle("F̄ is not a conic square after lifting".into()));
        }
        let (g, _) = primitive_at(&h, p);
        let gbar = TernaryFormModP::reduce(&g, p)?;
        let qb = TernaryFormModP::reduce(&q, p)?;
        match divide_exact(&gbar, &qb) {
            Some(l) => {
                // (Q + p^r L/2)² = Q² + p^r Q L + p^(2r) L²/4 removes the Q-multiple.
                let shift = lift_form(&l).scale(&(pow(&pz, r as u32) / &two));
                q = &q + &shift;
            }
            None => return ToggleModel::new(q, r as u32, g, p.clone()).map(Some),
        }
    }
    Err(Error::Toggle("absorption did not terminate within the discriminant bound".into()))
}

/// Reduction of `b8(G)` and whether it has 8 distinct roots on `ℙ¹(F̄_p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialFiber {
    pub octic: BinaryFormModP,
    pub distinct_roots: bool,
}

/// The special fiber `y² = b8(Ḡ)` of a toggle model with `Q ≡ Q0`.
pub fn good_toggle_check(m: &ToggleModel) -> Result<SpecialFiber> {
    if !m.normalized {
        return Err(Error::Toggle("conic is not congruent to Q0; normalization unsupported".into()));
    }
    let f = b8(&m.g);
    let octic = BinaryFormModP::reduce(&f, &m.p)?;
    let d14 = reduce_mod_p(&binary_octic_discriminant(&f), &m.p)?;
    Ok(SpecialFiber { octic, distinct_roots: !d14.is_zero() })
}

/// One line of the congruence suite: `v_p(lhs − rhs)` against the required bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceEntry {
    pub label: String,
    /// `v_p` of the octic side `p^(s i)·j_i(f)` (or `p^(14s)·D14(f)`).
    pub leading_valuation: ValOrInf,
    pub margin: ValOrInf,
    pub required: i64,
}

impl CongruenceEntry {
    pub fn holds(&self) -> bool {
        self.margin >= ValOrInf::from_int(self.required)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub entries: Vec<CongruenceEntry>,
}

impl CongruenceReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(CongruenceEntry::holds)
    }
}

/// Compare `p^(s i)·j_i(b8(G))` with `ι_{3i}(Q0² + p^s G)` for `i = 2..7`, and
/// `p^(14s)·D14(b8(G))` with `ι42`.
pub fn congruence_suite(m: &ToggleModel) -> Result<CongruenceReport> {
    if !m.normalized {
        return Err(Error::Toggle("conic is not congruent to Q0".into()));
    }
    let fq = &q0().pow(2) + &m.g.scale(&pow(&big(&m.p), m.s));
    let io = iota(&dixmier_ohno(&fq));
    let oct = b8(&m.g);
    let sh = shioda(&oct);
    let pp = big(&m.p);
    let s = m.s as i64;
    let mut entries = Vec::with_capacity(7);
    for i in 2..=7usize {
        let lhs = pow(&pp, m.s * i as u32) * sh.j(i);
        let diff = &lhs - &io.values[i - 2];
        entries.push(CongruenceEntry {
            label: format!("j{i}/iota{}", 3 * i),
            leading_valuation: crate::valuations::val_p(&lhs, &m.p),
            margin: crate::valuations::val_p(&diff, &m.p),
            required: s * (i as i64 + 1),
        });
    }
    let lhs = pow(&pp, 14 * m.s) * binary_octic_discriminant(&oct);
    let diff = &lhs - &io.iota42;
    entries.push(CongruenceEntry {
        label: "D14/iota42".into(),
        leading_valuation: crate::valuations::val_p(&lhs, &m.p),
        margin: crate::valuations::val_p(&diff, &m.p),
        required: 15 * s,
    });
    Ok(CongruenceReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::klein_quartic;

    fn p(n: u64) -> BigInt {
        BigInt::from(n)
    }

    fn x1x3_quartic() -> TernaryForm {
        TernaryForm::from_int_terms(4, &[([4, 0, 0], 1), ([0, 0, 4], 1)])
    }

    fn toggle11() -> TernaryForm {
        &q0().pow(2) + &x1x3_quartic().scale(&int(11 * 11 * 11 * 11))
    }

    #[test]
    fn b8_examples() {
        assert!(b8(&q0().pow(2)).is_zero());
        assert_eq!(b8(&x1x3_quartic()), BinaryForm::from_i64(&[1, 0, 0, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn b8_of_reduced_nine_term_form() {
        // β8 x1⁴ + β7 x1³x2 + β6 x1³x3 + β5 x1x2³ + β4 x1x2²x3 + β3 x2³x3 + β2 x2²x3² + β1 x2x3³ + β0 x3⁴
        let beta: Vec<i64> = (0..9).map(|k| 3 + 2 * k).collect();
        let g = TernaryForm::from_int_terms(
            4,
            &[
                ([4, 0, 0], beta[8]),
                ([3, 1, 0], beta[7]),
                ([3, 0, 1], beta[6]),
                ([1, 3, 0], beta[5]),
                ([1, 2, 1], beta[4]),
                ([0, 3, 1], beta[3]),
                ([0, 2, 2], beta[2]),
                ([0, 1, 3], beta[1]),
                ([0, 0, 4], beta[0]),
            ],
        );
        let b = &beta;
        let want = [b[8], 2 * b[7], b[6], 8 * b[5], 4 * b[4], 8 * b[3], 4 * b[2], 2 * b[1], b[0]];
        assert_eq!(b8(&g), BinaryForm::from_i64(&want));
    }

    #[test]
    fn h_embed_shape() {
        assert_eq!(h_embed(&LinearMap2::identity()), LinearMap3::identity());
        let t = LinearMap2::from_i64([[2, 3], [5, 7]]);
        let h = h_embed(&t);
        assert_eq!(h.0[1], [int(10), int(29), int(21)]);
        assert_eq!(h.det(), pow(&t.det(), 3));
    }

    #[test]
    fn h_embed_intertwines_b8() {
        let t = LinearMap2::from_i64([[2, 1], [3, 2]]);
        let f = &klein_quartic() + &x1x3_quartic();
        let ht = h_embed(&t).transpose();
        assert_eq!(b8(&f.act(&ht)), b8(&f).act(&t.transpose()));
        assert_eq!(q0().act(&ht), q0());
    }

    #[test]
    fn toggle_model_at_11() {
        let m = detect_toggle(&toggle11(), &p(11)).unwrap().unwrap();
        assert_eq!(m.q, q0());
        assert_eq!(m.s, 4);
        assert_eq!(m.g, x1x3_quartic());
        assert!(m.s_is_even());
        assert_eq!(m.reassemble(), toggle11());
        let sf = good_toggle_check(&m).unwrap();
        assert!(sf.distinct_roots);
        assert_eq!(sf.octic, BinaryFormModP::reduce(&b8(&x1x3_quartic()), &p(11)).unwrap());
        let rep = congruence_suite(&m).unwrap();
        assert!(rep.all_hold(), "{rep:?}");
        assert_eq!(rep.entries[6].leading_valuation, ValOrInf::from_int(56));
    }

    #[test]
    fn non_toggle_inputs() {
        assert!(detect_toggle(&klein_quartic(), &p(11)).unwrap().is_none());
        let g = klein_quartic().scale(&int(7));
        let f = &TernaryForm::from_int_terms(4, &[([4, 0, 0], 1)]) + &g;
        assert!(detect_toggle(&f, &p(7)).unwrap().is_none());
    }

    #[test]
    fn absorption_raises_exponent() {
        // Q0² + 11²·Q0·L + 11⁵·G has maximal exponent 4 after absorbing Q0·L.
        let l = TernaryForm::from_int_terms(2, &[([2, 0, 0], 1), ([0, 1, 1], 2)]);
        let g = x1x3_quartic();
        let f = &(&q0().pow(2) + &(&q0() * &l).scale(&int(121))) + &g.scale(&int(11i64.pow(5)));
        let m = detect_toggle(&f, &p(11)).unwrap().unwrap();
        assert_eq!(m.s, 4);
        assert_eq!(m.reassemble(), f);
        assert!(m.normalized);
    }

    #[test]
    fn kernel_octic_is_not_good() {
        let g = &q0() * &TernaryForm::from_int_terms(2, &[([2, 0, 0], 1)]);
        let m = ToggleModel::new(q0(), 2, g, p(11)).unwrap();
        let sf = good_toggle_check(&m).unwrap();
        assert!(sf.octic.is_zero());
        assert!(!sf.distinct_roots);
        assert!(ToggleModel::new(q0(), 2, TernaryForm::zero(4), p(11)).is_err());
    }
}
