//! The quartic discriminant via the Macaulay resultant of the three partials.

use crate::forms::linalg::det;
use crate::forms::ternary::{monomial_index, monomials};
use crate::forms::{LinearMap3, TernaryForm};
use crate::rational::{big, common_denominator, int, pow, Rational};
use num_traits::{One, Zero};

/// Unimodular changes of variables tried when the extraneous Macaulay minor
/// degenerates in the given coordinates.
const RETRY_TRANSFORMS: [[[i64; 3]; 3]; 8] = [
    [[-2, 0, -1], [-1, -2, -2], [0, 1, 1]],
    [[-1, 2, -2], [2, -1, 2], [0, -2, 1]],
    [[1, 2, 0], [1, 1, 0], [0, 0, -1]],
    [[0, 0, 1], [-1, 1, -1], [-1, 0, -2]],
    [[-1, 2, 2], [-1, -2, -1], [0, 1, 1]],
    [[0, 0, -1], [0, -1, 2], [-1, 2, 1]],
    [[1, 1, 1], [1, 2, 1], [-2, 2, -1]],
    [[0, 0, -1], [0, -1, 2], [-1, 1, -2]],
];

struct Layout {
    rows: Vec<(usize, [u32; 3])>,
    minor: Vec<usize>,
}

fn layout() -> Layout {
    let mons = monomials(7);
    let rows = mons
        .iter()
        .map(|m| {
            let i = (0..3).find(|&i| m[i] >= 3).expect("every degree 7 monomial has an exponent ≥ 3");
            let mut e = *m;
            e[i] -= 3;
            (i, e)
        })
        .collect();
    let minor =
        mons.iter().enumerate().filter(|(_, m)| m.iter().filter(|&&e| e >= 3).count() >= 2).map(|(k, _)| k).collect();
    Layout { rows, minor }
}

fn macaulay_matrices(cubics: &[TernaryForm; 3], lay: &Layout) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let n = lay.rows.len();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (r, (i, e)) in lay.rows.iter().enumerate() {
        for (mon, c) in cubics[*i].terms() {
            let col = monomial_index([mon[0] + e[0], mon[1] + e[1], mon[2] + e[2]]);
            m[r][col] += c;
        }
    }
    let e: Vec<Vec<Rational>> =
        lay.minor.iter().map(|&r| lay.minor.iter().map(|&c| m[r][c].clone()).collect()).collect();
    (m, e)
}

/// Resultant of three ternary cubics normalized by `Res(x1³, x2³, x3³) = 1`,
/// or `None` when the extraneous minor vanishes in these coordinates.
fn macaulay_resultant(cubics: &[TernaryForm; 3], lay: &Layout) -> Option<Rational> {
    let (m, e) = macaulay_matrices(cubics, lay);
    let de = det(&e);
    if de.is_zero() {
        return None;
    }
    Some(det(&m) / de)
}

fn partials(f: &TernaryForm) -> [TernaryForm; 3] {
    [f.derivative(0), f.derivative(1), f.derivative(2)]
}

/// Resultant of the perturbed system `∂_i F + t·x_i³` at `t = 0`, recovered by
/// interpolating the degree 27 polynomial in `t`. Always succeeds.
fn perturbed_resultant(f: &TernaryForm, lay: &Layout) -> Rational {
    let base = partials(f);
    let cube = |i: usize| {
        let mut e = [0u32; 3];
        e[i] = 3;
        TernaryForm::from_terms(3, [(e, Rational::one())])
    };
    let mut pts: Vec<(Rational, Rational)> = Vec::new();
    let mut t = 1i64;
    while pts.len() < 28 {
        let tt = int(t);
        let sys = [&base[0] + &cube(0).scale(&tt), &base[1] + &cube(1).scale(&tt), &base[2] + &cube(2).scale(&tt)];
        if let Some(r) = macaulay_resultant(&sys, lay) {
            pts.push((tt, r));
        }
        t += 1;
    }
    // Lagrange interpolation evaluated at t = 0.
    let mut acc = Rational::zero();
    for (i, (ti, ri)) in pts.iter().enumerate() {
        let mut w = ri.clone();
        for (j, (tj, _)) in pts.iter().enumerate() {
            if i != j {
                w *= tj / (tj - ti);
            }
        }
        acc += w;
    }
    acc
}

/// `Res(∂1F, ∂2F, ∂3F)` with `Res(x1³, x2³, x3³) = 1`.
pub fn partials_resultant(f: &TernaryForm) -> Rational {
    assert_eq!(f.degree(), 4, "partials_resultant expects a quartic");
    if f.is_zero() {
        return Rational::zero();
    }
    // Work with an integral multiple; the resultant has degree 27 in F.
    let den = common_denominator(f.coeffs().iter());
    let g = f.scale(&big(&den));
    let scale_back = pow(&big(&den), 27);
    let lay = layout();
    if let Some(r) = macaulay_resultant(&partials(&g), &lay) {
        return r / scale_back;
    }
    // The resultant of the partials is SL3-invariant, so unimodular changes
    // of variables do not change it.
    for t in RETRY_TRANSFORMS {
        let gt = g.act(&LinearMap3::from_i64(t));
        if let Some(r) = macaulay_resultant(&partials(&gt), &lay) {
            return r / scale_back;
        }
    }
    perturbed_resultant(&g, &lay) / scale_back
}

/// The discriminant `D27 = −Res(∂1F, ∂2F, ∂3F)/2^14`, equal to `2^40·I27`.
/// Vanishes exactly when `F` is singular.
pub fn discriminant_quartic(f: &TernaryForm) -> Rational {
    -partials_resultant(f) / pow(&int(2), 14)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{fermat_quartic, klein_quartic};

    #[test]
    fn unimodular_retries_have_det_one() {
        for t in RETRY_TRANSFORMS {
            assert_eq!(LinearMap3::from_i64(t).det(), int(1));
        }
    }

    #[test]
    fn layout_sizes() {
        let l = layout();
        assert_eq!(l.rows.len(), 36);
        assert_eq!(l.minor.len(), 9);
    }

    #[test]
    fn fermat() {
        // Res(4x³, 4y³, 4z³) = 4^27.
        assert_eq!(partials_resultant(&fermat_quartic()), pow(&int(2), 54));
        assert_eq!(discriminant_quartic(&fermat_quartic()), -pow(&int(2), 40));
    }

    #[test]
    fn singular_and_smooth() {
        let x14 = TernaryForm::from_int_terms(4, &[([4, 0, 0], 1)]);
        assert_eq!(discriminant_quartic(&x14), int(0));
        assert!(!discriminant_quartic(&klein_quartic()).is_zero());
    }

    #[test]
    fn perturbation_agrees_with_direct() {
        let f = klein_quartic();
        let lay = layout();
        let direct = macaulay_resultant(&partials(&f), &lay);
        let pert = perturbed_resultant(&f, &lay);
        if let Some(d) = direct {
            assert_eq!(d, pert);
        }
        assert_eq!(pert, partials_resultant(&f));
    }
}
