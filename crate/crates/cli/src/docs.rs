//! JSON documents. Rationals are `{ "num": "...", "den": "..." }` with decimal
//! strings; valuations are such a rational or the string `"inf"`.

use num_bigint::BigInt;
use quartic_reduction::classifier::{FiberPoint, PicardReport, ReductionReport, ReductionType, FIBER_WEIGHTS};
use quartic_reduction::forms::{monomials, TernaryForm};
use quartic_reduction::invariants::{
    discriminant_quartic, dixmier_ohno, iota, rho, DixmierOhnoVector, DO_LABELS, IOTA_LABELS,
};
use quartic_reduction::rational::Rational;
use quartic_reduction::valuations::ValOrInf;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for JsonRational {
    fn from(r: &Rational) -> Self {
        JsonRational { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

impl JsonRational {
    pub fn to_rational(&self) -> Option<Rational> {
        let n: BigInt = self.num.parse().ok()?;
        let d: BigInt = self.den.parse().ok()?;
        (d != BigInt::from(0)).then(|| Rational::new(n, d))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InfTag {
    #[serde(rename = "inf")]
    Inf,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonValuation {
    Finite(JsonRational),
    Infinite(InfTag),
}

impl From<&ValOrInf> for JsonValuation {
    fn from(v: &ValOrInf) -> Self {
        match v {
            ValOrInf::Finite(r) => JsonValuation::Finite(r.into()),
            ValOrInf::Infinite => JsonValuation::Infinite(InfTag::Inf),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeled<T> {
    pub label: String,
    pub value: T,
}

fn labeled<T, U>(labels: &[&str], values: &[U], f: impl Fn(&U) -> T) -> Vec<Labeled<T>> {
    labels.iter().zip(values).map(|(l, v)| Labeled { label: l.to_string(), value: f(v) }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberDocument {
    /// `"residues"` for a minimal representative, `"ratios"` for degree 0 ratios.
    pub kind: String,
    pub weights: Vec<u32>,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_slot: Option<usize>,
    pub values: Vec<String>,
}

pub const FIBER_LABELS: [&str; 7] = ["j2", "j3", "j4", "j5", "j6", "j7", "D14"];

impl From<&FiberPoint> for FiberDocument {
    fn from(p: &FiberPoint) -> Self {
        let (kind, unit_slot, vals) = match p {
            FiberPoint::Residues(v) => ("residues", None, v),
            FiberPoint::Ratios { unit_slot, ratios } => ("ratios", Some(*unit_slot), ratios),
        };
        FiberDocument {
            kind: kind.into(),
            weights: FIBER_WEIGHTS.to_vec(),
            labels: FIBER_LABELS.iter().map(|s| s.to_string()).collect(),
            unit_slot,
            values: vals.iter().map(|v| v.residue().to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub do_valuations: Vec<Labeled<JsonValuation>>,
    pub iota_valuations: Vec<Labeled<JsonValuation>>,
    pub iota42_valuation: JsonValuation,
    pub dixmier_ohno: Vec<Labeled<JsonRational>>,
    pub iota: Vec<Labeled<JsonRational>>,
    pub iota42: JsonRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub prime: String,
    pub reduction: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unsupported_reason: Option<String>,
    pub v_do_d27: Option<JsonValuation>,
    pub v_do_i3: JsonValuation,
    pub v_iota_42: JsonValuation,
    pub toggle_locus: Option<bool>,
    pub special_fiber_shioda: Option<FiberDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hsop: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDocument>,
}

/// Which optional sections to include.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Detail {
    pub hsop: bool,
    pub certificate: bool,
}

impl ReportDocument {
    pub fn new(r: &ReductionReport, detail: Detail) -> Self {
        let unsupported_reason = match r.reduction {
            ReductionType::Unsupported(reason) => Some(reason.code().to_string()),
            _ => None,
        };
        let certificate = detail.certificate.then(|| CertificateDocument {
            do_valuations: labeled(&DO_LABELS, &r.do_valuations, |v| v.into()),
            iota_valuations: labeled(&IOTA_LABELS, &r.iota_valuations, |v| v.into()),
            iota42_valuation: (&r.iota42_valuation).into(),
            dixmier_ohno: labeled(&DO_LABELS, &r.invariants.values, |v| v.into()),
            iota: labeled(&IOTA_LABELS, &r.iota.values, |v| v.into()),
            iota42: (&r.iota.iota42).into(),
        });
        ReportDocument {
            prime: r.p.to_string(),
            reduction: r.reduction.name().to_string(),
            unsupported_reason,
            v_do_d27: r.v_do_d27.as_ref().map(|v| v.into()),
            v_do_i3: (&r.v_do_i3).into(),
            v_iota_42: (&r.v_iota_42).into(),
            toggle_locus: r.toggle_locus,
            special_fiber_shioda: r.special_fiber_shioda.as_ref().map(FiberDocument::from),
            hsop: detail.hsop.then(|| r.hsop_labels.iter().map(|s| s.to_string()).collect()),
            certificate,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDocument {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub reports: Vec<ReportDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsDocument {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<Labeled<JsonRational>>>,
    pub dixmier_ohno: Vec<Labeled<JsonRational>>,
    pub iota: Vec<Labeled<JsonRational>>,
    pub iota42: JsonRational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d27: Option<JsonRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<Labeled<JsonRational>>>,
}

fn monomial_label(e: [u32; 3], names: [&str; 3]) -> String {
    let parts: Vec<String> = (0..3)
        .filter(|&i| e[i] > 0)
        .map(|i| if e[i] == 1 { names[i].to_string() } else { format!("{}^{}", names[i], e[i]) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Labels of the storage slots of a degree `d` form.
pub fn slot_labels(d: u32, names: [&str; 3]) -> Vec<String> {
    monomials(d).into_iter().map(|e| monomial_label(e, names)).collect()
}

fn form_slots(f: &TernaryForm, names: [&str; 3]) -> Vec<Labeled<JsonRational>> {
    slot_labels(f.degree(), names)
        .into_iter()
        .zip(f.coeffs())
        .map(|(label, c)| Labeled { label, value: c.into() })
        .collect()
}

impl InvariantsDocument {
    pub fn from_form(label: Option<String>, f: &TernaryForm) -> Self {
        let d = dixmier_ohno(f);
        let mut doc = Self::from_invariants(label, &d);
        doc.coefficients = Some(form_slots(f, ["x", "y", "z"]));
        doc.d27 = Some((&discriminant_quartic(f)).into());
        doc.rho = Some(form_slots(&rho(f), ["u", "v", "w"]));
        doc
    }

    pub fn from_invariants(label: Option<String>, d: &DixmierOhnoVector) -> Self {
        let io = iota(d);
        InvariantsDocument {
            schema_version: SCHEMA_VERSION,
            label,
            coefficients: None,
            dixmier_ohno: labeled(&DO_LABELS, &d.values, |v| v.into()),
            iota: labeled(&IOTA_LABELS, &io.values, |v| v.into()),
            iota42: (&io.iota42).into(),
            d27: None,
            rho: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardReportDocument {
    pub prime: String,
    pub reduction: String,
    pub q2: JsonRational,
    pub q3: JsonRational,
    pub d6: JsonRational,
    pub v_a: JsonValuation,
    pub v_c: JsonValuation,
    pub v_q2: JsonValuation,
    pub v_q3: JsonValuation,
    pub v_d6: JsonValuation,
    pub corollary_holds: Option<bool>,
    pub stable_exponent: JsonRational,
    pub extension_required: bool,
    pub caveat_p3: bool,
}

impl From<&PicardReport> for PicardReportDocument {
    fn from(r: &PicardReport) -> Self {
        PicardReportDocument {
            prime: r.p.to_string(),
            reduction: r.reduction.name().to_string(),
            q2: (&r.q2).into(),
            q3: (&r.q3).into(),
            d6: (&r.d6).into(),
            v_a: (&r.v_a).into(),
            v_c: (&r.v_c).into(),
            v_q2: (&r.v_q2).into(),
            v_q3: (&r.v_q3).into(),
            v_d6: (&r.v_d6).into(),
            corollary_holds: r.corollary_holds,
            stable_exponent: (&r.stable_exponent).into(),
            extension_required: r.extension_required,
            caveat_p3: r.caveat_p3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardDocument {
    pub schema_version: u32,
    pub a: JsonRational,
    pub b: JsonRational,
    pub c: JsonRational,
    pub reports: Vec<PicardReportDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDocument {
    pub kind: String,
    pub message: String,
}

/// One line of batch output: either reports or an error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchLine {
    pub schema_version: u32,
    pub line: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reports: Option<Vec<ReportDocument>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorDocument>,
}
