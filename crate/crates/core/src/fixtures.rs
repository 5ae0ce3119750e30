//! Reference curves used by the regression suites and the CLI corpus.

use crate::forms::{q0, TernaryForm};
use crate::invariants::DixmierOhnoVector;
use crate::rational::{int, pow};

/// A model of the non-split Cartan modular curve of level 13:
/// `(y+z)x³ − (2y² + zy)x² + (y³ − zy² + 2z²y − z³)x − 2z²y² + 3z³y`.
/// Its discriminant is `D27 = −13⁶`.
pub fn cartan13() -> TernaryForm {
    TernaryForm::from_int_terms(
        4,
        &[
            ([3, 1, 0], 1),
            ([3, 0, 1], 1),
            ([2, 2, 0], -2),
            ([2, 1, 1], -1),
            ([1, 3, 0], 1),
            ([1, 2, 1], -1),
            ([1, 1, 2], 2),
            ([1, 0, 3], -1),
            ([0, 2, 2], -2),
            ([0, 1, 3], 3),
        ],
    )
}

/// `x1⁴ + x3⁴`.
pub fn x1_x3_quartic() -> TernaryForm {
    TernaryForm::from_int_terms(4, &[([4, 0, 0], 1), ([0, 0, 4], 1)])
}

/// `Q0² + 11⁴(x1⁴ + x3⁴)`: good hyperelliptic reduction at 11.
pub fn toggle11() -> TernaryForm {
    &q0().pow(2) + &x1_x3_quartic().scale(&pow(&int(11), 4))
}

/// The 11-adic valuations `(0,0,0,1,0,0,2,0,1,0,0,0,9)` of the Dixmier–Ohno
/// invariants of the genus 3 curve `X12`.
pub const X12_VALUATIONS: [u32; 13] = [0, 0, 0, 1, 0, 0, 2, 0, 1, 0, 0, 0, 9];

/// A synthetic invariant vector with exactly the valuations of `X12` at 11,
/// standing in for the curve equation (which is not reproduced here).
pub fn x12_synthetic_invariants() -> DixmierOhnoVector {
    let units = [1i64, 2, 3, 5, 7, 13, 17, 19, 23, 29, 31, 37, 41];
    DixmierOhnoVector::new(std::array::from_fn(|k| int(units[k]) * pow(&int(11), X12_VALUATIONS[k])))
}
