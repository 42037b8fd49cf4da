//! JSON and CSV documents.
//!
//! Scalars are written as `"p/q"` strings (`"p"` for integers) or as
//! `{"conductor": n, "coeffs": ["p/q", ...]}` in the power basis of Q(ζ_n).
//! Every document carries `"version": 1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use supersolve_core::resolution::ChainReport;
use supersolve_core::unexpected::UnexpectedRow;
use supersolve_core::{
    Arrangement, CyclotomicField, CyclotomicNumber, ExponentTriple, ExtSsMode, ExtSsResult,
    FieldKind, Matrix3, ProjLine, ProjPoint, Rational, ResolutionChain, Scalar, WeakCombinatorics,
};

pub const VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid scalar {0:?}")]
    Scalar(String),
    #[error("unsupported document version {0}")]
    Version(u32),
    #[error(transparent)]
    Kernel(#[from] supersolve_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        if e.is_io() {
            return Self::Io(e.into());
        }
        Self::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

pub type Result<T, E = FormatError> = std::result::Result<T, E>;

fn default_version() -> u32 {
    VERSION
}

fn check_version(v: u32) -> Result<()> {
    if v == VERSION {
        Ok(())
    } else {
        Err(FormatError::Version(v))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Text(String),
    Integer(i64),
    Cyclotomic {
        conductor: u32,
        coeffs: Vec<ScalarRepr>,
    },
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || FormatError::Scalar(s.to_string());
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

fn rational_text(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl ScalarRepr {
    fn rational(&self) -> Result<Rational> {
        match self {
            Self::Text(s) => parse_rational(s),
            Self::Integer(n) => Ok(Rational::from_integer((*n).into())),
            Self::Cyclotomic { .. } => {
                Err(FormatError::Scalar("nested cyclotomic coefficient".into()))
            }
        }
    }

    pub fn to_scalar(&self) -> Result<Scalar> {
        match self {
            Self::Cyclotomic { conductor, coeffs } => {
                if *conductor == 0 {
                    return Err(FormatError::Scalar("conductor 0".into()));
                }
                let field = CyclotomicField::new(*conductor);
                if coeffs.len() > field.degree() {
                    return Err(FormatError::Scalar(format!(
                        "{} coefficients for a field of degree {}",
                        coeffs.len(),
                        field.degree()
                    )));
                }
                let c = coeffs
                    .iter()
                    .map(Self::rational)
                    .collect::<Result<Vec<_>>>()?;
                Ok(CyclotomicNumber::from_coeffs(&field, &c).into())
            }
            other => Ok(other.rational()?.into()),
        }
    }
}

impl From<&Scalar> for ScalarRepr {
    fn from(s: &Scalar) -> Self {
        match s {
            Scalar::Rational(q) => Self::Text(rational_text(q)),
            Scalar::Cyclotomic(c) => Self::Cyclotomic {
                conductor: c.conductor(),
                coeffs: c
                    .coeffs()
                    .iter()
                    .map(|q| Self::Text(rational_text(q)))
                    .collect(),
            },
        }
    }
}

pub type Triple = [ScalarRepr; 3];

fn triple(c: &[Scalar; 3]) -> Triple {
    [(&c[0]).into(), (&c[1]).into(), (&c[2]).into()]
}

fn scalars(t: &Triple) -> Result<[Scalar; 3]> {
    Ok([t[0].to_scalar()?, t[1].to_scalar()?, t[2].to_scalar()?])
}

pub fn point_repr(p: &ProjPoint) -> Triple {
    triple(p.coords())
}

pub fn line_repr(l: &ProjLine) -> Triple {
    triple(l.coords())
}

pub fn point_from(t: &Triple) -> Result<ProjPoint> {
    Ok(ProjPoint::from_coords(scalars(t)?)?)
}

pub fn line_from(t: &Triple) -> Result<ProjLine> {
    Ok(ProjLine::from_coords(scalars(t)?)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldRepr {
    Rational,
    Cyclotomic(u32),
}

impl From<FieldKind> for FieldRepr {
    fn from(f: FieldKind) -> Self {
        match f {
            FieldKind::Rational => Self::Rational,
            FieldKind::Cyclotomic(n) => Self::Cyclotomic(n),
        }
    }
}

impl From<FieldRepr> for FieldKind {
    fn from(f: FieldRepr) -> Self {
        match f {
            FieldRepr::Rational => Self::Rational,
            FieldRepr::Cyclotomic(n) => Self::Cyclotomic(n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrangementDoc {
    #[serde(default = "default_version")]
    pub version: u32,
    pub field: FieldRepr,
    pub lines: Vec<Triple>,
}

impl ArrangementDoc {
    pub fn new(a: &Arrangement) -> Self {
        Self {
            version: VERSION,
            field: a.field().into(),
            lines: a.lines().iter().map(line_repr).collect(),
        }
    }

    /// Rejects coordinates outside the declared field, zero lines and duplicates.
    pub fn build(&self) -> Result<Arrangement> {
        check_version(self.version)?;
        let field = FieldKind::from(self.field);
        let lines = self
            .lines
            .iter()
            .map(line_from)
            .collect::<Result<Vec<_>>>()?;
        for l in &lines {
            if field.join(l.field())? != field {
                return Err(supersolve_core::Error::ConductorMismatch {
                    left: field.conductor(),
                    right: l.field().conductor(),
                }
                .into());
            }
        }
        Ok(Arrangement::with_field(field, lines)?)
    }
}

pub fn arrangement_to_json(a: &Arrangement) -> String {
    to_json(&ArrangementDoc::new(a))
}

pub fn arrangement_from_json(s: &str) -> Result<Arrangement> {
    serde_json::from_str::<ArrangementDoc>(s)?.build()
}

pub fn from_file(path: &Path) -> Result<Arrangement> {
    arrangement_from_json(&std::fs::read_to_string(path)?)
}

pub fn to_file(a: &Arrangement, path: &Path) -> Result<()> {
    std::fs::write(path, arrangement_to_json(a))?;
    Ok(())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReflectionGroupDoc {
    pub name: String,
    pub conductor: u32,
    pub generators: Vec<[Triple; 3]>,
}

impl ReflectionGroupDoc {
    pub fn build(&self) -> Result<supersolve_core::generators::ReflectionGroupData> {
        let generators = self
            .generators
            .iter()
            .map(|rows| {
                Ok(Matrix3::from_rows([
                    scalars(&rows[0])?,
                    scalars(&rows[1])?,
                    scalars(&rows[2])?,
                ])?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(supersolve_core::generators::ReflectionGroupData {
            name: self.name.clone(),
            conductor: self.conductor,
            generators,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainDoc {
    #[serde(default = "default_version")]
    pub version: u32,
    pub base: ArrangementDoc,
    pub added: Vec<Triple>,
    pub apex: Triple,
}

impl ChainDoc {
    pub fn new(c: &ResolutionChain) -> Self {
        Self {
            version: VERSION,
            base: ArrangementDoc::new(&c.base),
            added: c.added.iter().map(line_repr).collect(),
            apex: point_repr(&c.apex),
        }
    }

    pub fn build(&self) -> Result<ResolutionChain> {
        check_version(self.version)?;
        Ok(ResolutionChain {
            base: self.base.build()?,
            added: self
                .added
                .iter()
                .map(line_from)
                .collect::<Result<Vec<_>>>()?,
            apex: point_from(&self.apex)?,
        })
    }
}

/// `t_r` keyed by `r`.
pub fn t_vector(w: &WeakCombinatorics) -> BTreeMap<usize, usize> {
    w.counts().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NotSplit {
    NotSplit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExponentsRepr {
    Split([u64; 3]),
    NotSplit(NotSplit),
}

impl From<Option<ExponentTriple>> for ExponentsRepr {
    fn from(e: Option<ExponentTriple>) -> Self {
        match e {
            Some(e) => Self::Split(e.as_array()),
            None => Self::NotSplit(NotSplit::NotSplit),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessRepr {
    pub point: Triple,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    #[serde(default = "default_version")]
    pub version: u32,
    pub field: FieldRepr,
    pub lines: usize,
    pub t: BTreeMap<usize, usize>,
    pub poincare: [i64; 4],
    pub exponents: ExponentsRepr,
    pub supersolvable: Option<WitnessRepr>,
    /// Minimum cone cost over singular apexes.
    pub extss_upper_bound: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeRepr {
    Exact,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    #[serde(default = "default_version")]
    pub version: u32,
    /// Exact extSS; `null` when only an upper bound was computed.
    pub extss: Option<usize>,
    pub upper_bound: usize,
    pub mode: ModeRepr,
    pub apex: Triple,
    pub added_lines: Vec<Triple>,
}

impl SolveReport {
    pub fn new(r: &ExtSsResult) -> Self {
        let mode = match r.mode {
            ExtSsMode::Exact => ModeRepr::Exact,
            ExtSsMode::SingularOnly => ModeRepr::Upper,
        };
        Self {
            version: VERSION,
            extss: (mode == ModeRepr::Exact).then_some(r.k),
            upper_bound: r.k,
            mode,
            apex: point_repr(&r.apex),
            added_lines: r.lines.iter().map(line_repr).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepRepr {
    pub lines: usize,
    pub t: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainReportDoc {
    #[serde(default = "default_version")]
    pub version: u32,
    pub steps: Vec<StepRepr>,
    pub witness: WitnessRepr,
    pub exponents: ExponentsRepr,
}

impl ChainReportDoc {
    pub fn new(r: &ChainReport) -> Self {
        let last = r.steps.last().expect("a report has at least the base step");
        Self {
            version: VERSION,
            steps: r
                .steps
                .iter()
                .map(|w| StepRepr {
                    lines: w.lines(),
                    t: t_vector(w),
                })
                .collect(),
            witness: WitnessRepr {
                point: point_repr(&r.witness.point),
                multiplicity: r.witness.multiplicity,
            },
            exponents: supersolve_core::poincare(last).split_exponents().into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRepr {
    pub degree: usize,
    pub expected: usize,
    pub dim_without_point: usize,
    pub dim_with_point: usize,
    pub threshold: usize,
    pub unexpected: bool,
}

impl From<&UnexpectedRow> for RowRepr {
    fn from(r: &UnexpectedRow) -> Self {
        Self {
            degree: r.degree,
            expected: r.expected,
            dim_without_point: r.dim_without_point,
            dim_with_point: r.dim_with_point,
            threshold: r.threshold,
            unexpected: r.unexpected,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnexpectedReport {
    #[serde(default = "default_version")]
    pub version: u32,
    pub seed: u64,
    pub trials: usize,
    pub rows: Vec<RowRepr>,
    pub unexpected_degrees: Vec<usize>,
    /// `d > 2m`; `null` when the arrangement is not supersolvable.
    pub supersolvable_criterion: Option<bool>,
}

/// `r,t_r` rows for every multiplicity that occurs.
pub fn t_vector_csv(w: &WeakCombinatorics) -> String {
    let mut s = String::from("r,t_r\n");
    for (r, t) in w.counts() {
        writeln!(s, "{r},{t}").expect("writing to a String");
    }
    s
}
