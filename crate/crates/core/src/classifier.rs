//! Potential reduction type of a plane quartic at a prime, decided from
//! Dixmier–Ohno invariants, with a certificate of every valuation used.

use crate::error::{Error, Result};
use crate::forms::{reduce_mod_p, BinaryForm, BinaryFormModP, Fp, TernaryForm};
use crate::invariants::{
    binary_octic_discriminant, conic_square_point, dixmier_ohno, hsop_catalog, iota, picard_scalars, shioda,
    DixmierOhnoVector, IotaVector, DO_WEIGHTS, IOTA_WEIGHTS,
};
use crate::rational::{big, int, Rational};
use crate::valuations::{
    min_slope, minimal_residues, normalized_valuation, primitive_at, val_p, weighted_ratio_residue, MinimalResidues,
    ValOrInf, WeightedValuationPoint,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// Why a prime is outside the supported range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnsupportedReason {
    /// `p ∈ {2, 3}`: no HSOP catalog.
    NoHsopCatalog,
    /// `p ∈ {5, 7}` with a failed quartic test: the hyperelliptic criterion does not apply.
    HyperellipticBranchUnavailable,
}

impl UnsupportedReason {
    pub fn code(&self) -> &'static str {
        match self {
            UnsupportedReason::NoHsopCatalog => "no_hsop_catalog",
            UnsupportedReason::HyperellipticBranchUnavailable => "hyperelliptic_branch_unavailable",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionType {
    GoodQuartic,
    GoodHyperelliptic,
    Bad,
    Unsupported(UnsupportedReason),
}

impl ReductionType {
    pub fn name(&self) -> &'static str {
        match self {
            ReductionType::GoodQuartic => "GoodQuartic",
            ReductionType::GoodHyperelliptic => "GoodHyperelliptic",
            ReductionType::Bad => "Bad",
            ReductionType::Unsupported(_) => "Unsupported",
        }
    }
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionType::Unsupported(r) => write!(f, "Unsupported({})", r.code()),
            t => f.write_str(t.name()),
        }
    }
}

/// Weights of the special-fiber point `(j2, …, j7, D14)`.
pub const FIBER_WEIGHTS: [u32; 7] = [2, 3, 4, 5, 6, 7, 14];

/// A point of `ℙ(2, 3, 4, 5, 6, 7, 14)(F_p)` in one of two normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberPoint {
    /// A minimal representative `(x_i·p^(−λ d_i))` mod p.
    Residues(Vec<Fp>),
    /// `λ·d_i` is fractional: degree 0 ratios `x_i^(d_j/g)/x_j^(d_i/g)` against
    /// the unit slot `j`.
    Ratios { unit_slot: usize, ratios: Vec<Fp> },
}

impl FiberPoint {
    /// Whether `(j2, …, j7, D14)` of an octic mod p is the same weighted point.
    pub fn matches(&self, other: &[Fp]) -> bool {
        let w = FIBER_WEIGHTS;
        match self {
            FiberPoint::Residues(a) => weighted_points_equal(a, other, &w),
            FiberPoint::Ratios { unit_slot, ratios } => {
                let j = *unit_slot;
                let Some(inv) = other[j].inv() else { return false };
                (0..w.len()).all(|i| {
                    let g = w[i].gcd(&w[j]);
                    let num = other[i].pow(&BigInt::from(w[j] / g));
                    let den = inv.pow(&BigInt::from(w[i] / g));
                    num.mul(&den) == ratios[i]
                })
            }
        }
    }
}

/// Equality in weighted projective space: same zero pattern and equal
/// degree 0 cross ratios `a_i^(d_j/g) b_j^(d_i/g) = b_i^(d_j/g) a_j^(d_i/g)`.
pub fn weighted_points_equal(a: &[Fp], b: &[Fp], weights: &[u32]) -> bool {
    if a.len() != b.len() || a.iter().zip(b).any(|(x, y)| x.is_zero() != y.is_zero()) {
        return false;
    }
    if a.iter().all(Fp::is_zero) {
        return false;
    }
    for i in 0..a.len() {
        for j in 0..a.len() {
            let g = weights[i].gcd(&weights[j]);
            let (ei, ej) = (BigInt::from(weights[j] / g), BigInt::from(weights[i] / g));
            if a[i].pow(&ei).mul(&b[j].pow(&ej)) != b[i].pow(&ei).mul(&a[j].pow(&ej)) {
                return false;
            }
        }
    }
    true
}

/// `(j2, …, j7, D14)` of an octic, reduced mod p.
pub fn octic_fiber_values(f: &BinaryForm, p: &BigInt) -> Result<Vec<Fp>> {
    let sh = shioda(f);
    let mut out = (2..=7).map(|i| reduce_mod_p(sh.j(i), p)).collect::<Result<Vec<_>>>()?;
    out.push(reduce_mod_p(&binary_octic_discriminant(f), p)?);
    Ok(out)
}

/// Same as [`octic_fiber_values`] for an octic over `F_p`, via its lift.
pub fn octic_fiber_values_mod_p(f: &BinaryFormModP) -> Result<Vec<Fp>> {
    octic_fiber_values(&f.lift(), &f.p)
}

/// Outcome of the good-quartic test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticTest {
    pub passes: bool,
    /// `v_I(D27)` with `I` the HSOP catalog together with all DO invariants.
    pub v_d27: ValOrInf,
    pub hsop_labels: Vec<&'static str>,
}

/// Outcome of the hyperelliptic test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticTest {
    pub passes: bool,
    pub v_do_i3: ValOrInf,
    pub v_do_i27: ValOrInf,
    pub v_iota_42: ValOrInf,
}

/// Everything computed while classifying one quartic at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub p: BigInt,
    pub reduction: ReductionType,
    /// `v_I(D27)` over HSOP ∪ DO; absent when no catalog exists.
    pub v_do_d27: Option<ValOrInf>,
    pub v_do_i3: ValOrInf,
    pub v_iota_42: ValOrInf,
    /// Ratio check against the conic-square point; absent for `p ≤ 7` or nonunit `I3`.
    pub toggle_locus: Option<bool>,
    pub special_fiber_shioda: Option<FiberPoint>,
    pub hsop_labels: Vec<&'static str>,
    pub do_valuations: Vec<ValOrInf>,
    pub iota_valuations: Vec<ValOrInf>,
    pub iota42_valuation: ValOrInf,
    pub invariants: DixmierOhnoVector,
    pub iota: IotaVector,
}

fn witness_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if p.is_multiple_of(q) {
            return p == q;
        }
    }
    let (mut d, mut r) = (p - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulmod(x, x);
            if x == p - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Reject non-primes (deterministic Miller–Rabin for 64-bit inputs).
pub fn ensure_prime(p: &BigInt) -> Result<u64> {
    match p.to_u64() {
        Some(q) if witness_prime(q) => Ok(q),
        _ => Err(Error::UnsupportedPrime { p: p.clone(), reason: "not a prime below 2^64".into() }),
    }
}

fn do_point(d: &DixmierOhnoVector, p: &BigInt) -> WeightedValuationPoint {
    WeightedValuationPoint::new(d.values.to_vec(), DO_WEIGHTS.to_vec(), p.clone())
}

fn iota_point(io: &IotaVector, p: &BigInt) -> WeightedValuationPoint {
    WeightedValuationPoint::new(io.values.to_vec(), IOTA_WEIGHTS.to_vec(), p.clone())
}

/// Good quartic criterion: `v_I(D27) = 0` with `I = hsop_catalog(p) ∪ DO`.
pub fn good_quartic_test(d: &DixmierOhnoVector, p: &BigInt) -> Result<QuarticTest> {
    if d.i27().is_zero() {
        return Err(Error::Singular);
    }
    let cat = hsop_catalog(p)?;
    let mut values = cat.evaluate(d);
    let mut weights = cat.degrees();
    values.extend(d.values.iter().cloned());
    weights.extend(DO_WEIGHTS);
    let x = WeightedValuationPoint::new(values, weights, p.clone());
    let v = normalized_valuation(&x, &d.d27(), 27)?;
    Ok(QuarticTest { passes: v.is_zero(), v_d27: v, hsop_labels: cat.labels() })
}

/// Whether the invariants reduce to those of a conic square: every ratio
/// `I_d/I3^(d/3)` matches the conic-square point mod p, the last slot vanishing.
pub fn toggle_locus_test(d: &DixmierOhnoVector, p: &BigInt) -> Result<bool> {
    let x = do_point(d, p);
    if !normalized_valuation(&x, d.i3(), 3)?.is_zero() {
        return Err(Error::I3NotUnit);
    }
    let target = conic_square_point();
    for (k, t) in target.iter().enumerate() {
        let want = reduce_mod_p(t, p)?;
        if crate::valuations::ratio_residue(&x, k, 0)? != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hyperelliptic criterion: `v_DO(I3) = 0`, `v_DO(I27) > 0`, `v_ι(ι42) = 0`.
pub fn hyperelliptic_test(d: &DixmierOhnoVector, io: &IotaVector, p: &BigInt) -> Result<HyperellipticTest> {
    if let Some(q) = p.to_u64() {
        if q <= 7 {
            return Err(Error::UnsupportedPrime { p: p.clone(), reason: "hyperelliptic criterion needs p > 7".into() });
        }
    }
    if d.i27().is_zero() {
        return Err(Error::Singular);
    }
    let x = do_point(d, p);
    let v_do_i3 = normalized_valuation(&x, d.i3(), 3)?;
    let v_do_i27 = normalized_valuation(&x, d.i27(), 27)?;
    let xi = iota_point(io, p);
    let v_iota_42 = if xi.is_all_zero() { ValOrInf::Infinite } else { normalized_valuation(&xi, &io.iota42, 42)? };
    let passes = v_do_i3.is_zero() && v_do_i27.is_positive() && v_iota_42.is_zero();
    Ok(HyperellipticTest { passes, v_do_i3, v_do_i27, v_iota_42 })
}

/// The special fiber as a point `(j2 : … : j7 : D14)` recovered from
/// `(ι6, …, ι21, ι42)`; only meaningful in the hyperelliptic case.
pub fn fiber_point_from_iota(io: &IotaVector, p: &BigInt) -> Result<FiberPoint> {
    let mut values = io.values.to_vec();
    values.push(io.iota42.clone());
    let x = WeightedValuationPoint::new(values, FIBER_WEIGHTS.to_vec(), p.clone());
    match minimal_residues(&x)? {
        MinimalResidues::Residues(r) => Ok(FiberPoint::Residues(r)),
        MinimalResidues::NeedsExtension { .. } => {
            let lambda = min_slope(&x)?;
            let slopes = x.slopes();
            let j = (0..FIBER_WEIGHTS.len())
                .rev()
                .find(|&j| slopes[j] == lambda)
                .expect("some slot attains the minimal slope");
            let ratios =
                (0..FIBER_WEIGHTS.len()).map(|i| weighted_ratio_residue(&x, i, j)).collect::<Result<Vec<_>>>()?;
            Ok(FiberPoint::Ratios { unit_slot: j, ratios })
        }
    }
}

/// Special-fiber Shioda point of a quartic with good hyperelliptic reduction.
pub fn special_fiber_shioda(f: &TernaryForm, p: &BigInt) -> Result<FiberPoint> {
    let r = classify(f, p)?;
    r.special_fiber_shioda.ok_or(Error::NotHyperelliptic)
}

/// Classify a quartic at `p`.
pub fn classify(f: &TernaryForm, p: &BigInt) -> Result<ReductionReport> {
    if f.degree() != 4 {
        return Err(Error::WrongDegree { expected: 4, found: f.degree() });
    }
    ensure_prime(p)?;
    let (g, _) = primitive_at(f, p);
    classify_invariants(&dixmier_ohno(&g), p)
}

/// Classify from a Dixmier–Ohno vector directly.
pub fn classify_invariants(d: &DixmierOhnoVector, p: &BigInt) -> Result<ReductionReport> {
    let q = ensure_prime(p)?;
    if d.i27().is_zero() {
        return Err(Error::Singular);
    }
    let io = iota(d);
    let x = do_point(d, p);
    let v_do_i3 = normalized_valuation(&x, d.i3(), 3)?;
    let xi = iota_point(&io, p);
    let v_iota_42 = if xi.is_all_zero() { ValOrInf::Infinite } else { normalized_valuation(&xi, &io.iota42, 42)? };
    let toggle_locus = if q > 7 && v_do_i3.is_zero() { Some(toggle_locus_test(d, p)?) } else { None };

    let mut report = ReductionReport {
        p: p.clone(),
        reduction: ReductionType::Bad,
        v_do_d27: None,
        v_do_i3,
        v_iota_42,
        toggle_locus,
        special_fiber_shioda: None,
        hsop_labels: Vec::new(),
        do_valuations: x.valuations(),
        iota_valuations: xi.valuations(),
        iota42_valuation: val_p(&io.iota42, p),
        invariants: d.clone(),
        iota: io.clone(),
    };

    if q == 2 || q == 3 {
        report.reduction = ReductionType::Unsupported(UnsupportedReason::NoHsopCatalog);
        return Ok(report);
    }
    let qt = good_quartic_test(d, p)?;
    report.v_do_d27 = Some(qt.v_d27.clone());
    report.hsop_labels = qt.hsop_labels;
    if qt.passes {
        report.reduction = ReductionType::GoodQuartic;
        return Ok(report);
    }
    if q == 5 || q == 7 {
        report.reduction = ReductionType::Unsupported(UnsupportedReason::HyperellipticBranchUnavailable);
        return Ok(report);
    }
    let ht = hyperelliptic_test(d, &io, p)?;
    if ht.passes {
        assert_eq!(report.toggle_locus, Some(true), "good hyperelliptic reduction forces the conic-square locus");
        report.reduction = ReductionType::GoodHyperelliptic;
        report.special_fiber_shioda = Some(fiber_point_from_iota(&io, p)?);
    }
    Ok(report)
}

/// The Picard quartic `−x2³x3 + x1⁴ + a x1²x3² + b x1x3³ + c x3⁴`.
pub fn picard_quartic(a: &Rational, b: &Rational, c: &Rational) -> TernaryForm {
    TernaryForm::from_terms(
        4,
        [
            ([0, 3, 1], int(-1)),
            ([4, 0, 0], int(1)),
            ([2, 0, 2], a.clone()),
            ([1, 0, 3], b.clone()),
            ([0, 0, 4], c.clone()),
        ],
    )
}

/// Result of the Picard valuation criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardReport {
    pub p: BigInt,
    pub reduction: ReductionType,
    pub q2: Rational,
    pub q3: Rational,
    pub d6: Rational,
    pub v_a: ValOrInf,
    pub v_c: ValOrInf,
    pub v_q2: ValOrInf,
    pub v_q3: ValOrInf,
    pub v_d6: ValOrInf,
    /// `min(6 v(a), 3 v(c)) ≥ v(D6)`; reported for `p ≥ 5`.
    pub corollary_holds: Option<bool>,
    /// `v(D6)/36`, the exponent of the stable-model substitution `(𝔭³x1 : 𝔭⁴x2 : x3)`.
    pub stable_exponent: Rational,
    /// The exponent is fractional, so the stable model needs a ramified extension.
    pub extension_required: bool,
    /// `p = 3` uses the extra inequality whose sufficiency is not established here.
    pub caveat_p3: bool,
}

/// Potential good quartic reduction of a Picard curve from `(a, b, c)`.
pub fn picard_classify(a: &Rational, b: &Rational, c: &Rational, p: &BigInt) -> Result<PicardReport> {
    let q = ensure_prime(p)?;
    if q == 2 {
        return Err(Error::UnsupportedPrime { p: p.clone(), reason: "the Picard criterion excludes p = 2".into() });
    }
    let inv = picard_scalars(a, b, c);
    if inv.d6.is_zero() {
        return Err(Error::Singular);
    }
    let v = |r: &Rational| val_p(r, p);
    let (v_a, v_c, v_q2, v_q3, v_d6) = (v(a), v(c), v(&inv.q2), v(&inv.q3), v(&inv.d6));
    let v27d6 = v(&(int(27) * &inv.d6));
    let mut good = v(&(int(24) * a)).mul(6) >= v_d6 && v_q2.mul(3) >= v27d6;
    if q == 3 {
        good = good && v(&(a * &inv.q3 * &inv.q3 * &inv.q3)).mul(3) >= v27d6.mul(5);
    }
    let corollary_holds = (q >= 5).then(|| std::cmp::min(v_a.mul(6), v_c.mul(3)) >= v_d6);
    let dv = v_d6.finite().cloned().expect("D6 is nonzero");
    let stable_exponent = dv / big(&BigInt::from(36));
    Ok(PicardReport {
        p: p.clone(),
        reduction: if good { ReductionType::GoodQuartic } else { ReductionType::Bad },
        q2: inv.q2,
        q3: inv.q3,
        d6: inv.d6,
        v_a,
        v_c,
        v_q2,
        v_q3,
        v_d6,
        corollary_holds,
        extension_required: !stable_exponent.is_integer(),
        stable_exponent,
        caveat_p3: q == 3,
    })
}
