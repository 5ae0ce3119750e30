//! Subcommand implementations. Each returns an [`Outcome`] so that the binary
//! and the tests share one code path.

use crate::docs::{
    BatchLine, ClassifyDocument, Detail, ErrorDocument, InvariantsDocument, PicardDocument, PicardReportDocument,
    ReportDocument, SCHEMA_VERSION,
};
use crate::parse::{parse_coefficient, parse_quartic, ParseError};
use num_bigint::BigInt;
use quartic_reduction::batch::map_ordered_with_threads;
use quartic_reduction::classifier::{classify, classify_invariants, picard_classify};
use quartic_reduction::forms::TernaryForm;
use quartic_reduction::invariants::DixmierOhnoVector;
use quartic_reduction::rational::Rational;
use quartic_reduction::Error;
use serde::Deserialize;
use std::fmt;
use std::fmt::Write as _;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;
pub const EXIT_UNSUPPORTED: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Singular,
    UnsupportedPrime,
    Io,
    Internal,
}

impl ErrorKind {
    pub fn code(&self) -> &'static str {
        match self {
            ErrorKind::Parse => "parse",
            ErrorKind::Singular => "singular",
            ErrorKind::UnsupportedPrime => "unsupported_prime",
            ErrorKind::Io => "io",
            ErrorKind::Internal => "internal",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            ErrorKind::Parse => EXIT_PARSE,
            ErrorKind::Singular => EXIT_SINGULAR,
            ErrorKind::UnsupportedPrime => EXIT_UNSUPPORTED,
            ErrorKind::Io | ErrorKind::Internal => EXIT_FAILURE,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Parse, message: message.into() }
    }

    pub fn to_document(&self) -> ErrorDocument {
        ErrorDocument { kind: self.kind.code().into(), message: self.message.clone() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} error: {}", self.kind.code(), self.message)
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::parse(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::Singular => ErrorKind::Singular,
            Error::UnsupportedPrime { .. } => ErrorKind::UnsupportedPrime,
            Error::WrongDegree { .. } => ErrorKind::Parse,
            _ => ErrorKind::Internal,
        };
        CliError { kind, message: e.to_string() }
    }
}

/// What a command printed and how it exits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn error(e: &CliError) -> Self {
        Outcome { stdout: String::new(), stderr: format!("{e}\n"), code: e.kind.exit_code() }
    }
}

/// A curve given by an equation or directly by its invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveSource {
    Form(TernaryForm),
    Invariants(Box<DixmierOhnoVector>),
}

/// Raw curve input as it appears on the command line or in a batch line.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveInput {
    #[serde(default)]
    pub label: Option<String>,
    #[serde(default)]
    pub expr: Option<String>,
    #[serde(default)]
    pub coeffs: Option<Vec<Scalar>>,
    #[serde(default, rename = "do")]
    pub dixmier_ohno: Option<Vec<Scalar>>,
}

/// A rational given as a JSON integer or a string such as `"-3/4"`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Str(String),
}

impl Scalar {
    fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            Scalar::Int(n) => Ok(Rational::from_integer(BigInt::from(*n))),
            Scalar::Str(s) => Ok(parse_coefficient(s)?),
        }
    }
}

fn rationals(items: &[Scalar], n: usize, what: &str) -> Result<Vec<Rational>, CliError> {
    if items.len() != n {
        return Err(CliError::parse(format!("{what} needs {n} entries, got {}", items.len())));
    }
    items.iter().map(Scalar::to_rational).collect()
}

impl CurveInput {
    pub fn resolve(&self) -> Result<CurveSource, CliError> {
        match (&self.expr, &self.coeffs, &self.dixmier_ohno) {
            (Some(e), None, None) => Ok(CurveSource::Form(parse_quartic(e)?)),
            (None, Some(c), None) => {
                let c = rationals(c, 15, "a coefficient array")?;
                let f = TernaryForm::from_coeffs(4, c).expect("length checked");
                if f.is_zero() {
                    return Err(CliError::parse("the polynomial is zero"));
                }
                Ok(CurveSource::Form(f))
            }
            (None, None, Some(d)) => {
                let d = rationals(d, 13, "a Dixmier-Ohno vector")?;
                let arr: [Rational; 13] = d.try_into().expect("length checked");
                Ok(CurveSource::Invariants(Box::new(DixmierOhnoVector::new(arr))))
            }
            (None, None, None) => Err(CliError::parse("no curve given: use an expression, coeffs or do")),
            _ => Err(CliError::parse("give exactly one of an expression, coeffs or do")),
        }
    }
}

/// Parse a comma separated list of coefficients.
pub fn split_scalars(s: &str) -> Vec<Scalar> {
    s.split(',').map(|t| Scalar::Str(t.trim().to_string())).collect()
}

fn to_json<T: serde::Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize") + "\n"
}

fn primes_as_bigint(primes: &[u64]) -> Result<Vec<BigInt>, CliError> {
    if primes.is_empty() {
        return Err(CliError::parse("no primes given"));
    }
    Ok(primes.iter().map(|&p| BigInt::from(p)).collect())
}

/// Classify a resolved curve at each prime, in order.
pub fn classify_source(src: &CurveSource, primes: &[u64], detail: Detail) -> Result<Vec<ReportDocument>, CliError> {
    primes_as_bigint(primes)?
        .iter()
        .map(|p| {
            let r = match src {
                CurveSource::Form(f) => classify(f, p)?,
                CurveSource::Invariants(d) => classify_invariants(d, p)?,
            };
            Ok(ReportDocument::new(&r, detail))
        })
        .collect()
}

fn format_valuation(v: &crate::docs::JsonValuation) -> String {
    match v {
        crate::docs::JsonValuation::Finite(r) if r.den == "1" => r.num.clone(),
        crate::docs::JsonValuation::Finite(r) => format!("{}/{}", r.num, r.den),
        crate::docs::JsonValuation::Infinite(_) => "inf".into(),
    }
}

fn format_rational(r: &crate::docs::JsonRational) -> String {
    if r.den == "1" {
        r.num.clone()
    } else {
        format!("{}/{}", r.num, r.den)
    }
}

fn opt<T>(v: &Option<T>, f: impl Fn(&T) -> String) -> String {
    v.as_ref().map(f).unwrap_or_else(|| "-".into())
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    out += &line(widths.iter().map(|w| "-".repeat(*w)).collect());
    for row in rows {
        out += &line(row.clone());
    }
    out
}

/// Human-readable rendering of classification reports.
pub fn render_reports(label: Option<&str>, reports: &[ReportDocument]) -> String {
    let mut out = String::new();
    if let Some(l) = label {
        let _ = writeln!(out, "curve: {l}");
    }
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let reduction = match &r.unsupported_reason {
                Some(why) => format!("{} ({why})", r.reduction),
                None => r.reduction.clone(),
            };
            vec![
                r.prime.clone(),
                reduction,
                opt(&r.v_do_d27, format_valuation),
                format_valuation(&r.v_do_i3),
                format_valuation(&r.v_iota_42),
                opt(&r.toggle_locus, |b| b.to_string()),
            ]
        })
        .collect();
    out += &table(&["p", "reduction", "v_DO(D27)", "v_DO(I3)", "v_iota(iota42)", "toggle_locus"], &rows);
    for r in reports {
        if let Some(f) = &r.special_fiber_shioda {
            let pairs: Vec<String> = f.labels.iter().zip(&f.values).map(|(l, v)| format!("{l}={v}")).collect();
            let kind = match f.unit_slot {
                Some(k) => format!("ratios to {}", f.labels[k]),
                None => "residues".into(),
            };
            let _ = writeln!(out, "special fiber at {} ({kind}): {}", r.prime, pairs.join(" "));
        }
        if let Some(h) = r.hsop.as_ref().filter(|h| !h.is_empty()) {
            let _ = writeln!(out, "hsop at {}: {}", r.prime, h.join(", "));
        }
        if let Some(c) = &r.certificate {
            let _ = writeln!(out, "certificate at {}:", r.prime);
            for (name, list) in [("v_p(DO)", &c.do_valuations), ("v_p(iota)", &c.iota_valuations)] {
                let vals: Vec<String> =
                    list.iter().map(|e| format!("{}={}", e.label, format_valuation(&e.value))).collect();
                let _ = writeln!(out, "  {name}: {}", vals.join(" "));
            }
            let _ = writeln!(out, "  v_p(iota42): {}", format_valuation(&c.iota42_valuation));
        }
    }
    out
}

fn render_invariants(doc: &InvariantsDocument) -> String {
    let mut out = String::new();
    if let Some(l) = &doc.label {
        let _ = writeln!(out, "curve: {l}");
    }
    let section = |out: &mut String, title: &str, list: &[crate::docs::Labeled<crate::docs::JsonRational>]| {
        let _ = writeln!(out, "{title}:");
        for e in list {
            let _ = writeln!(out, "  {} = {}", e.label, format_rational(&e.value));
        }
    };
    if let Some(c) = &doc.coefficients {
        section(&mut out, "coefficients", c);
    }
    section(&mut out, "Dixmier-Ohno", &doc.dixmier_ohno);
    section(&mut out, "iota", &doc.iota);
    let _ = writeln!(out, "  iota42 = {}", format_rational(&doc.iota42));
    if let Some(d) = &doc.d27 {
        let _ = writeln!(out, "D27 = {}", format_rational(d));
    }
    if let Some(r) = &doc.rho {
        if r.iter().all(|e| e.value.num == "0") {
            let _ = writeln!(out, "rho = 0");
        } else {
            section(&mut out, "rho", r);
        }
    }
    out
}

pub fn cmd_invariants(input: &CurveInput, json: bool) -> Outcome {
    let doc = match input.resolve() {
        Ok(CurveSource::Form(f)) => InvariantsDocument::from_form(input.label.clone(), &f),
        Ok(CurveSource::Invariants(d)) => InvariantsDocument::from_invariants(input.label.clone(), &d),
        Err(e) => return Outcome::error(&e),
    };
    Outcome::ok(if json { to_json(&doc) } else { render_invariants(&doc) })
}

pub fn cmd_classify(input: &CurveInput, primes: &[u64], json: bool, detail: Detail) -> Outcome {
    let reports = match input.resolve().and_then(|s| classify_source(&s, primes, detail)) {
        Ok(r) => r,
        Err(e) => return Outcome::error(&e),
    };
    let unsupported = reports.iter().any(|r| r.unsupported_reason.is_some());
    let doc = ClassifyDocument { schema_version: SCHEMA_VERSION, label: input.label.clone(), reports };
    let stdout = if json { to_json(&doc) } else { render_reports(doc.label.as_deref(), &doc.reports) };
    let mut out = Outcome::ok(stdout);
    if unsupported {
        out.code = EXIT_UNSUPPORTED;
        out.stderr = "some primes are outside the supported range\n".into();
    }
    out
}

pub fn cmd_picard(a: &str, b: &str, c: &str, primes: &[u64], json: bool) -> Outcome {
    let run = || -> Result<PicardDocument, CliError> {
        let (a, b, c) = (parse_coefficient(a)?, parse_coefficient(b)?, parse_coefficient(c)?);
        let reports = primes_as_bigint(primes)?
            .iter()
            .map(|p| Ok(PicardReportDocument::from(&picard_classify(&a, &b, &c, p)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(PicardDocument { schema_version: SCHEMA_VERSION, a: (&a).into(), b: (&b).into(), c: (&c).into(), reports })
    };
    let doc = match run() {
        Ok(d) => d,
        Err(e) => return Outcome::error(&e),
    };
    if json {
        return Outcome::ok(to_json(&doc));
    }
    let rows: Vec<Vec<String>> = doc
        .reports
        .iter()
        .map(|r| {
            vec![
                r.prime.clone(),
                r.reduction.clone(),
                format_valuation(&r.v_d6),
                opt(&r.corollary_holds, |b| b.to_string()),
                format_rational(&r.stable_exponent),
                r.extension_required.to_string(),
            ]
        })
        .collect();
    let mut out =
        format!("a = {}, b = {}, c = {}\n", format_rational(&doc.a), format_rational(&doc.b), format_rational(&doc.c));
    out += &table(&["p", "reduction", "v_p(D6)", "corollary", "stable_exponent", "ramified"], &rows);
    if doc.reports.iter().any(|r| r.caveat_p3) {
        out += "note: at p = 3 the criterion includes an extra inequality whose sufficiency is not established\n";
    }
    Outcome::ok(out)
}

/// One batch input line: a curve plus its primes.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BatchInput {
    #[serde(flatten)]
    curve: CurveInput,
    primes: Vec<u64>,
}

fn batch_line(index: usize, text: &str, detail: Detail) -> BatchLine {
    let mut line =
        BatchLine { schema_version: SCHEMA_VERSION, line: index + 1, label: None, reports: None, error: None };
    let input: BatchInput = match serde_json::from_str(text) {
        Ok(i) => i,
        Err(e) => {
            line.error = Some(CliError::parse(format!("invalid JSON input: {e}")).to_document());
            return line;
        }
    };
    line.label = input.curve.label.clone();
    match input.curve.resolve().and_then(|s| classify_source(&s, &input.primes, detail)) {
        Ok(r) => line.reports = Some(r),
        Err(e) => line.error = Some(e.to_document()),
    }
    line
}

/// Classify every line of an NDJSON document. Blank lines are skipped but
/// still count toward line numbers; output order matches input order.
pub fn run_batch(contents: &str, threads: usize, detail: Detail) -> String {
    let lines: Vec<(usize, &str)> = contents.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).collect();
    let out = map_ordered_with_threads(threads, &lines, |(i, l)| batch_line(*i, l, detail));
    let mut s = String::new();
    for l in out {
        s += &serde_json::to_string(&l).expect("documents serialize");
        s.push('\n');
    }
    s
}

pub fn cmd_batch(path: &std::path::Path, threads: usize, detail: Detail) -> Outcome {
    match std::fs::read_to_string(path) {
        Ok(c) => Outcome::ok(run_batch(&c, threads, detail)),
        Err(e) => Outcome::error(&CliError { kind: ErrorKind::Io, message: format!("{}: {e}", path.display()) }),
    }
}
