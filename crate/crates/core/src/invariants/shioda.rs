use crate::forms::{transvectant, BinaryForm};
use crate::rational::Rational;

pub const SHIODA_WEIGHTS: [u32; 9] = [2, 3, 4, 5, 6, 7, 8, 9, 10];

/// The invariants `j2, …, j10` of a binary octic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiodaVector {
    pub values: [Rational; 9],
}

impl ShiodaVector {
    pub const WEIGHTS: [u32; 9] = SHIODA_WEIGHTS;

    /// `j_i` for `i` in `2..=10`.
    pub fn j(&self, i: usize) -> &Rational {
        &self.values[i - 2]
    }
}

fn tv(f: &BinaryForm, g: &BinaryForm, r: u32) -> BinaryForm {
    transvectant(f, g, r).expect("orders fit the octic covariant degrees")
}

/// Shioda invariants through the covariants
/// `g = (f,f)_4, k = (f,f)_6, h = (k,k)_2, m = (f,k)_4, n = (f,h)_4, p = (g,k)_4, q = (g,h)_4`.
pub fn shioda(f: &BinaryForm) -> ShiodaVector {
    assert_eq!(f.degree(), 8, "shioda expects an octic");
    let g = tv(f, f, 4);
    let k = tv(f, f, 6);
    let h = tv(&k, &k, 2);
    let m = tv(f, &k, 4);
    let n = tv(f, &h, 4);
    let p = tv(&g, &k, 4);
    let q = tv(&g, &h, 4);
    let c = |x: BinaryForm| x.constant_value();
    ShiodaVector {
        values: [
            c(tv(f, f, 8)),
            c(tv(f, &g, 8)),
            c(tv(&k, &k, 4)),
            c(tv(&m, &k, 4)),
            c(tv(&k, &h, 4)),
            c(tv(&m, &h, 4)),
            c(tv(&p, &h, 4)),
            c(tv(&n, &h, 4)),
            c(tv(&q, &h, 4)),
        ],
    }
}

/// Discriminant of binary octics normalized so that for a toggle model
/// `F = Q0² + p^s·G` one has `p^(14s)·D14(b8(G)) ≡ ι42(F)` to order `p^(15s)`.
pub fn binary_octic_discriminant(f: &BinaryForm) -> Rational {
    assert_eq!(f.degree(), 8, "binary_octic_discriminant expects an octic");
    -f.discriminant()
}
