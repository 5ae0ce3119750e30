use super::covariants::raw_invariants;
use super::discriminant::discriminant_quartic;
use crate::forms::TernaryForm;
use crate::rational::{int, pow, rat, smooth, Rational};
use num_traits::Zero;

/// Degrees of `(I3, I6, I9, J9, I12, J12, I15, J15, I18, J18, I21, J21, I27)`.
pub const DO_WEIGHTS: [u32; 13] = [3, 6, 9, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27];

pub const DO_LABELS: [&str; 13] =
    ["I3", "I6", "I9", "J9", "I12", "J12", "I15", "J15", "I18", "J18", "I21", "J21", "I27"];

/// The 13 Dixmier–Ohno invariants of a ternary quartic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DixmierOhnoVector {
    pub values: [Rational; 13],
}

macro_rules! slot {
    ($name:ident, $i:expr) => {
        pub fn $name(&self) -> &Rational {
            &self.values[$i]
        }
    };
}

impl DixmierOhnoVector {
    pub const WEIGHTS: [u32; 13] = DO_WEIGHTS;

    pub fn new(values: [Rational; 13]) -> Self {
        DixmierOhnoVector { values }
    }

    pub fn zero() -> Self {
        DixmierOhnoVector { values: std::array::from_fn(|_| Rational::zero()) }
    }

    pub fn weights(&self) -> [u32; 13] {
        DO_WEIGHTS
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// `D27 = 2^40·I27`.
    pub fn d27(&self) -> Rational {
        self.i27() * pow(&int(2), 40)
    }

    slot!(i3, 0);
    slot!(i6, 1);
    slot!(i9, 2);
    slot!(j9, 3);
    slot!(i12, 4);
    slot!(j12, 5);
    slot!(i15, 6);
    slot!(j15, 7);
    slot!(i18, 8);
    slot!(j18, 9);
    slot!(i21, 10);
    slot!(j21, 11);
    slot!(i27, 12);
}

/// Normalizing constants turning [`raw_invariants`] into the Dixmier–Ohno values
/// (I6 additionally receives an `I3²` correction).
fn scales() -> [Rational; 12] {
    [
        smooth(-3, -2, 0, 0),
        smooth(-15, -5, 0, 0),
        smooth(-11, -5, 0, 0),
        smooth(-14, -7, 0, 0),
        smooth(-12, -6, 0, 0),
        smooth(-18, -9, 0, 0),
        smooth(-18, -9, 0, 0),
        smooth(-27, -15, 0, 0),
        smooth(-20, -10, 0, 0),
        smooth(-26, -14, 0, 0),
        smooth(-33, -18, 0, 0),
        smooth(-36, -17, 0, 0),
    ]
}

/// The 13 Dixmier–Ohno invariants of a quartic.
pub fn dixmier_ohno(f: &TernaryForm) -> DixmierOhnoVector {
    assert_eq!(f.degree(), 4, "dixmier_ohno expects a quartic");
    if f.is_zero() {
        return DixmierOhnoVector::zero();
    }
    let raw = raw_invariants(f);
    let sc = scales();
    let mut v: [Rational; 13] = std::array::from_fn(|i| if i < 12 { &raw[i] * &sc[i] } else { Rational::zero() });
    v[1] -= &v[0] * &v[0] / int(576);
    v[12] = discriminant_quartic(f) / pow(&int(2), 40);
    DixmierOhnoVector { values: v }
}

/// Ratios `I_d(Q²)/I3(Q²)^(d/3)` for a nondegenerate conic, i.e. the
/// weighted point `(1 : 1/180 : 49/36 : … : 0)`.
pub fn conic_square_point() -> [Rational; 13] {
    [
        int(1),
        rat(1, 180),
        rat(49, 36),
        rat(49, 60),
        rat(343, 1620),
        rat(49, 36),
        rat(1715, 3888),
        rat(343, 3600),
        rat(2401, 3888),
        rat(2401, 10800),
        rat(343, 1620),
        rat(2401, 720),
        int(0),
    ]
}

/// Closed form of the invariants of `Q²`, with `I3 = 5/36·D3(Q)²`.
pub fn conic_square_invariants(q: &TernaryForm) -> DixmierOhnoVector {
    assert_eq!(q.degree(), 2, "conic_square_invariants expects a conic");
    let d3 = q.conic_discriminant();
    let i3 = rat(5, 36) * &d3 * &d3;
    let pt = conic_square_point();
    DixmierOhnoVector { values: std::array::from_fn(|k| &pt[k] * pow(&i3, DO_WEIGHTS[k] / 3)) }
}
