//! Dixmier–Ohno, ι, Shioda and discriminant invariants.

pub mod binary_quartic;
pub mod covariants;
pub mod discriminant;
pub mod dixmier_ohno;
pub mod hsop;
pub mod iota;
pub mod shioda;

pub use binary_quartic::{binary_quartic_invariants, picard_scalars, BinaryQuarticInvariants};
pub use covariants::{act_dual, rho, CovariantChain};
pub use discriminant::discriminant_quartic;
pub use dixmier_ohno::{
    conic_square_invariants, conic_square_point, dixmier_ohno, DixmierOhnoVector, DO_LABELS, DO_WEIGHTS,
};
pub use hsop::{hsop_catalog, CatalogSelector, HsopCatalogEntry, HsopGenerator};
pub use iota::{iota, iota42, IotaVector, IOTA_LABELS, IOTA_WEIGHTS};
pub use shioda::{binary_octic_discriminant, shioda, ShiodaVector, SHIODA_WEIGHTS};
