//! Exact forms, linear actions, transvectants, resultants and mod-p reduction.

pub mod binary;
pub mod linalg;
pub mod linear;
pub mod modp;
pub mod ternary;

pub use binary::{transvectant, BinaryForm};
pub use linalg::{det, resultant_univariate, UniPoly};
pub use linear::{LinearMap2, LinearMap3};
pub use modp::{conic_square_root, divide_exact, reduce_mod_p, BinaryFormModP, Fp, TernaryFormModP};
pub use ternary::{fermat_quartic, klein_quartic, monomials, q0, Exponent, TernaryForm};
