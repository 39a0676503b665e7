//! Text interfaces: the polynomial expression parser, the JSON curve-file
//! format, and report serialization (human text and the versioned machine
//! format).
//!
//! Expression grammar (whitespace insignificant, `*` mandatory):
//!
//! ```text
//! expr     := ['-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := primary ('^' nat)*
//! primary  := rational | 'x' | 'y' | 'z' | 'r' | '(' expr ')'
//! rational := nat ('/' nat)?
//! ```
//!
//! `r` denotes `sqrt(d)` and is only legal when the declared field is
//! quadratic.

use crate::curvelab::{Component, ComponentKind, Curve, CurveError};
use crate::polyring::{Poly, Var};
use crate::scalars::{normalize, FieldElement, FieldKind, Rational};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        msg: msg.into(),
    })
}

const MAX_EXPONENT: u32 = 512;
const MAX_DEGREE: i64 = 4096;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: FieldKind,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_expr(&mut self) -> Result<Poly, ParseError> {
        let negate_head = self.eat(b'-');
        let mut acc = self.parse_term()?;
        if negate_head {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                let t = self.parse_term()?;
                acc = acc.add(&t);
            } else if self.eat(b'-') {
                let t = self.parse_term()?;
                acc = acc.sub(&t);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.eat(b'*') {
            let f = self.parse_factor()?;
            acc = acc.mul(&f);
            self.check_degree(&acc)?;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Poly, ParseError> {
        let mut base = self.parse_primary()?;
        while self.eat(b'^') {
            let at = self.pos;
            let n = self.parse_nat_u32()?;
            if n > MAX_EXPONENT {
                return err(at, format!("exponent exceeds {MAX_EXPONENT}"));
            }
            base = base.pow(n);
            self.check_degree(&base)?;
        }
        Ok(base)
    }

    fn parse_primary(&mut self) -> Result<Poly, ParseError> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                if !self.eat(b')') {
                    return err(self.pos, "expected ')'");
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::var(Var::X))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Poly::var(Var::Y))
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(Poly::var(Var::Z))
            }
            Some(b'r') => {
                self.pos += 1;
                match self.field {
                    FieldKind::Quadratic(d) => {
                        Ok(Poly::constant(FieldElement::sqrt_d(d).map_err(|e| {
                            ParseError {
                                pos: at,
                                msg: e.to_string(),
                            }
                        })?))
                    }
                    FieldKind::Rational => {
                        err(at, "'r' denotes sqrt(d) and needs a quadratic field")
                    }
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let q = self.parse_rational()?;
                Ok(Poly::constant(FieldElement::from_rational(q)))
            }
            Some(c) => err(self.pos, format!("unexpected character '{}'", c as char)),
            None => err(self.pos, "unexpected end of input"),
        }
    }

    fn parse_rational(&mut self) -> Result<Rational, ParseError> {
        let n = self.parse_int()?;
        if self.eat(b'/') {
            let at = self.pos;
            let m = self.parse_int()?;
            normalize(n, m).map_err(|e| ParseError {
                pos: at,
                msg: e.to_string(),
            })
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    fn parse_int(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return err(start, "expected a number");
        }
        let digits = &self.src[start..self.pos];
        Ok(BigInt::parse_bytes(digits, 10).expect("ascii digits"))
    }

    fn parse_nat_u32(&mut self) -> Result<u32, ParseError> {
        let at = self.pos;
        let n = self.parse_int()?;
        u32::try_from(n).map_err(|_| ParseError {
            pos: at,
            msg: "exponent out of range".into(),
        })
    }

    fn check_degree(&self, p: &Poly) -> Result<(), ParseError> {
        match p.degree() {
            Some(d) if d > MAX_DEGREE => {
                err(self.pos, format!("polynomial degree exceeds {MAX_DEGREE}"))
            }
            _ => Ok(()),
        }
    }
}

/// Parse a polynomial expression over the declared field.
pub fn parse_poly(src: &str, field: FieldKind) -> Result<Poly, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        field,
    };
    let poly = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return err(p.pos, "trailing input after expression");
    }
    Ok(poly)
}

/// Canonical textual form; reparses to an identical polynomial.
pub fn render_poly(p: &Poly) -> String {
    p.to_string()
}

// ---------------------------------------------------------------------------
// Curve files
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Quadratic { d: i64 },
}

impl FieldSpec {
    pub fn to_kind(&self) -> Result<FieldKind, TextIoError> {
        match self {
            FieldSpec::Rational => Ok(FieldKind::Rational),
            FieldSpec::Quadratic { d } => {
                FieldKind::quadratic(*d).map_err(|e| TextIoError::Schema {
                    path: "field.d".into(),
                    msg: e.to_string(),
                })
            }
        }
    }

    pub fn from_kind(kind: FieldKind) -> FieldSpec {
        match kind {
            FieldKind::Rational => FieldSpec::Rational,
            FieldKind::Quadratic(d) => FieldSpec::Quadratic { d },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub label: String,
    pub kind: String,
    pub poly: String,
}

/// On-disk curve description: a declared field, a name, and the component
/// polynomials as expression strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub field: FieldSpec,
    pub name: String,
    pub components: Vec<ComponentSpec>,
}

#[derive(Debug, thiserror::Error)]
pub enum TextIoError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("schema error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema error at {path}: {msg}")]
    Schema { path: String, msg: String },
    #[error("{path}: {source}")]
    BadPoly {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Curve(#[from] CurveError),
}

pub fn curve_from_file_struct(file: &CurveFile) -> Result<Curve, TextIoError> {
    let field = file.field.to_kind()?;
    let mut components = Vec::with_capacity(file.components.len());
    for (i, spec) in file.components.iter().enumerate() {
        let kind = ComponentKind::parse(&spec.kind).ok_or_else(|| TextIoError::Schema {
            path: format!("components[{i}].kind"),
            msg: format!("unknown component kind '{}'", spec.kind),
        })?;
        let poly = parse_poly(&spec.poly, field).map_err(|e| TextIoError::BadPoly {
            path: format!("components[{i}].poly"),
            source: e,
        })?;
        components.push(Component {
            label: spec.label.clone(),
            kind,
            poly,
        });
    }
    Ok(Curve::new(file.name.clone(), field, components)?)
}

pub fn curve_to_file_struct(curve: &Curve) -> CurveFile {
    CurveFile {
        field: FieldSpec::from_kind(curve.field),
        name: curve.name.clone(),
        components: curve
            .components
            .iter()
            .map(|c| ComponentSpec {
                label: c.label.clone(),
                kind: c.kind.as_str().to_string(),
                poly: render_poly(&c.poly),
            })
            .collect(),
    }
}

pub fn parse_curve_json(text: &str) -> Result<Curve, TextIoError> {
    let file: CurveFile = serde_json::from_str(text)?;
    curve_from_file_struct(&file)
}

pub fn read_curve_file(path: impl AsRef<Path>) -> Result<Curve, TextIoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| TextIoError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_curve_json(&text)
}

pub fn curve_json(curve: &Curve) -> String {
    let mut s =
        serde_json::to_string_pretty(&curve_to_file_struct(curve)).expect("curve files serialize");
    s.push('\n');
    s
}

pub fn write_curve_file(curve: &Curve, path: impl AsRef<Path>) -> Result<(), TextIoError> {
    let path = path.as_ref();
    std::fs::write(path, curve_json(curve)).map_err(|source| TextIoError::Io {
        path: path.display().to_string(),
        source,
    })
}

// ---------------------------------------------------------------------------
// Reports (machine format_version 1)
// ---------------------------------------------------------------------------

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct CurveReport {
    pub name: String,
    pub degree: i64,
    pub field: String,
    /// Betti entries as `(i, j, beta)` triples.
    pub betti: Vec<(i64, i64, i64)>,
    pub resolution: String,
    pub regularity: i64,
    pub tjurina: i64,
    pub reduced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert_profile: Option<Vec<(i64, i64)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturated_dims: Option<Vec<(i64, i64)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ar_generator_degrees: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub key: String,
    pub pass: bool,
    pub detail: String,
    pub tjurina: Option<i64>,
    pub reduced: Option<bool>,
}

/// Flat machine-readable report; one document per CLI invocation.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub format_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub curves: Vec<CurveReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti_equal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub combinatorics_asserted: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_difference: Option<(i64, i64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<VerifyRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub keys: Option<Vec<String>>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            format_version: FORMAT_VERSION,
            command: command.to_string(),
            curves: Vec::new(),
            verdict: None,
            betti_equal: None,
            combinatorics_asserted: None,
            first_difference: None,
            rows: None,
            keys: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Machine,
}

pub fn write_report(report: &Report, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Machine => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s.into_bytes()
        }
        ReportFormat::Text => render_text_report(report).into_bytes(),
    }
}

fn render_text_report(report: &Report) -> String {
    use fmt::Write;
    let mut out = String::new();
    for c in &report.curves {
        let _ = writeln!(
            out,
            "curve {} (degree {}, over {})",
            c.name, c.degree, c.field
        );
        let _ = writeln!(out, "  resolution: {}", c.resolution);
        let _ = writeln!(
            out,
            "  regularity: {}   tjurina: {}   reduced: {}",
            c.regularity, c.tjurina, c.reduced
        );
        if let Some(profile) = &c.hilbert_profile {
            let rendered: Vec<String> = profile.iter().map(|(t, d)| format!("{t}:{d}")).collect();
            let _ = writeln!(out, "  hilbert profile: {}", rendered.join(" "));
        }
        if let Some(dims) = &c.saturated_dims {
            let rendered: Vec<String> = dims
                .iter()
                .map(|(k, d)| format!("dim (J^sat)_{k} = {d}"))
                .collect();
            let _ = writeln!(out, "  saturated ideal: {}", rendered.join(", "));
        }
        if let Some(ar) = &c.ar_generator_degrees {
            let _ = writeln!(out, "  AR generator degrees: {ar:?}");
        }
    }
    if let Some(v) = &report.verdict {
        let _ = writeln!(out, "verdict: {v}");
    }
    if let Some(eq) = report.betti_equal {
        let _ = writeln!(out, "betti tables equal: {eq}");
    }
    if let Some(at) = report.first_difference {
        let _ = writeln!(out, "first differing entry: ({}, {})", at.0, at.1);
    }
    if let Some(rows) = &report.rows {
        for r in rows {
            let _ = writeln!(
                out,
                "{}  {}  {}",
                if r.pass { "PASS" } else { "FAIL" },
                r.key,
                r.detail
            );
        }
    }
    if let Some(keys) = &report.keys {
        for k in keys {
            let _ = writeln!(out, "{k}");
        }
    }
    out
}
