#![allow(dead_code)]

use quartic_reduction::forms::{LinearMap2, LinearMap3, TernaryForm};
use quartic_reduction::rational::{int, rat, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_int(r: &mut ChaCha8Rng, b: i64) -> Rational {
    int(r.gen_range(-b..=b))
}

pub fn small_rat(r: &mut ChaCha8Rng) -> Rational {
    rat(r.gen_range(-6..=6), r.gen_range(1..=4))
}

pub fn random_form(r: &mut ChaCha8Rng, degree: u32, b: i64) -> TernaryForm {
    let n = ((degree + 1) * (degree + 2) / 2) as usize;
    TernaryForm::from_coeffs(degree, (0..n).map(|_| small_int(r, b)).collect()).unwrap()
}

pub fn random_rational_form(r: &mut ChaCha8Rng, degree: u32) -> TernaryForm {
    let n = ((degree + 1) * (degree + 2) / 2) as usize;
    TernaryForm::from_coeffs(degree, (0..n).map(|_| small_rat(r)).collect()).unwrap()
}

/// Product of random elementary matrices, so the determinant is 1.
pub fn random_sl3(r: &mut ChaCha8Rng) -> LinearMap3 {
    let mut t = LinearMap3::identity();
    for _ in 0..4 {
        let (i, j) = loop {
            let i = r.gen_range(0..3);
            let j = r.gen_range(0..3);
            if i != j {
                break (i, j);
            }
        };
        let mut e = LinearMap3::identity();
        e.0[i][j] = int(r.gen_range(-2..=2));
        t = &t * &e;
    }
    t
}

pub fn random_gl3(r: &mut ChaCha8Rng) -> LinearMap3 {
    loop {
        let t = LinearMap3(std::array::from_fn(|_| std::array::from_fn(|_| small_int(r, 3))));
        if t.det() != int(0) {
            return t;
        }
    }
}

pub fn random_sl2(r: &mut ChaCha8Rng) -> LinearMap2 {
    let mut t = LinearMap2::identity();
    for k in 0..3 {
        let c = small_rat(r);
        let e = if k % 2 == 0 {
            LinearMap2::new(int(1), c, int(0), int(1))
        } else {
            LinearMap2::new(int(1), int(0), c, int(1))
        };
        t = &t * &e;
    }
    t
}
