use super::dixmier_ohno::DixmierOhnoVector;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use num_bigint::BigInt;

/// Which list of HSOP generators applies at a characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogSelector {
    /// Characteristic 0 or a generic prime.
    Generic,
    /// `p ∈ {7, 19, 47, 277, 523}`, where `I9 − J9` replaces `I9`.
    Exceptional,
    /// `p = 5`.
    Five,
}

pub const EXCEPTIONAL_PRIMES: [u64; 5] = [7, 19, 47, 277, 523];

/// One generator: a label, its degree, and an evaluator on DO values.
#[derive(Clone, Copy)]
pub struct HsopGenerator {
    pub label: &'static str,
    pub degree: u32,
    pub eval: fn(&DixmierOhnoVector) -> Rational,
}

impl std::fmt::Debug for HsopGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}[{}]", self.label, self.degree)
    }
}

#[derive(Clone, Debug)]
pub struct HsopCatalogEntry {
    pub selector: CatalogSelector,
    pub generators: Vec<HsopGenerator>,
}

impl HsopCatalogEntry {
    pub fn labels(&self) -> Vec<&'static str> {
        self.generators.iter().map(|g| g.label).collect()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn evaluate(&self, d: &DixmierOhnoVector) -> Vec<Rational> {
        self.generators.iter().map(|g| (g.eval)(d)).collect()
    }
}

/// `(J9 + 3·I9)/5`.
pub fn i9_5(d: &DixmierOhnoVector) -> Rational {
    (d.j9() + int(3) * d.i9()) / int(5)
}

/// The degree 15 generator replacing `I15` at `p = 5`.
pub fn j15_5(d: &DixmierOhnoVector) -> Rational {
    let (i3, i6, i9, j9, i12, j12, i15, j15) = (d.i3(), d.i6(), d.i9(), d.j9(), d.i12(), d.j12(), d.i15(), d.j15());
    let a = int(-64) * i3 * i3 * i3 * i6 - int(24) * i3 * i6 * i6 + int(39) * i3 * i12 - int(11) * i3 * j12
        + int(42) * i6 * i9
        - int(21) * i6 * j9
        - int(1143) * i15
        + j15;
    let b = int(253) * i3 * i3 * i9 - int(79) * i3 * i3 * j9;
    a / int(125) + b / int(625)
}

macro_rules! gen {
    ($label:expr, $deg:expr, $f:expr) => {
        HsopGenerator { label: $label, degree: $deg, eval: $f }
    };
}

fn base() -> Vec<HsopGenerator> {
    vec![
        gen!("I3", 3, |d| d.i3().clone()),
        gen!("I6", 6, |d| d.i6().clone()),
        gen!("I9", 9, |d| d.i9().clone()),
        gen!("I12", 12, |d| d.i12().clone()),
        gen!("I15", 15, |d| d.i15().clone()),
        gen!("I18", 18, |d| d.i18().clone()),
        gen!("I27", 27, |d| d.i27().clone()),
    ]
}

/// HSOP generators over `Z_(p)` (`p = 0` for characteristic zero).
pub fn hsop_catalog(p: &BigInt) -> Result<HsopCatalogEntry> {
    let small = u64::try_from(p).ok();
    if matches!(small, Some(2) | Some(3)) {
        return Err(Error::UnsupportedPrime {
            p: p.clone(),
            reason: "no HSOP catalog in characteristic 2 or 3".into(),
        });
    }
    let mut gens = base();
    let selector = match small {
        Some(5) => {
            gens[2] = gen!("I9^(5)", 9, i9_5);
            gens[4] = gen!("J15^(5)", 15, j15_5);
            CatalogSelector::Five
        }
        Some(q) if EXCEPTIONAL_PRIMES.contains(&q) => {
            gens[2] = gen!("I9-J9", 9, |d| d.i9() - d.j9());
            CatalogSelector::Exceptional
        }
        _ => CatalogSelector::Generic,
    };
    Ok(HsopCatalogEntry { selector, generators: gens })
}
