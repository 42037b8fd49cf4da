//! Command-line frontend. [`run`] is what the binary calls; it never panics on
//! bad input and reports failures as a JSON object on the error stream.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use supersolve_core::generators::GeneratorSpec;
use supersolve_core::unexpected::{supersolvable_criterion, unexpected_scan, DualPoints};
use supersolve_core::{
    cone_extension, is_supersolvable, poincare, validate_chain, Arrangement, Error as KernelError,
    ProjPoint, DEFAULT_CANDIDATE_BUDGET,
};

use crate::format::{
    self, AnalyzeReport, ChainDoc, ChainReportDoc, SolveReport, UnexpectedReport, WitnessRepr,
};
use crate::render::{self, Chart, RenderOptions};
use crate::{data, parallel};

#[derive(Debug, Parser)]
#[command(
    name = "supersolve",
    version,
    about = "Exact analysis of line arrangements and their supersolvable extensions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit an arrangement as JSON.
    Generate(GenerateArgs),
    /// Weak combinatorics, Poincaré polynomial, exponents and supersolvability.
    Analyze(AnalyzeArgs),
    /// extSS, exactly or as the singular-apex upper bound.
    Solve(SolveArgs),
    /// A supersolvable resolution built as a cone.
    Resolve(ResolveArgs),
    /// Unexpected-curve table for the dual point configuration.
    Unexpected(UnexpectedArgs),
    /// Draw a real arrangement as SVG or TikZ.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    Generic,
    PaperL,
    Pappus,
    NearPencil,
    Fermat,
    FermatExtended,
    Boroczky,
    Klein,
    Wiman,
    Reflection,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    pub family: Family,
    /// Family size parameter (n for fermat and boroczky).
    #[arg(long)]
    pub n: Option<u32>,
    /// Number of lines (generic, near-pencil).
    #[arg(long)]
    pub d: Option<usize>,
    /// Required for the generic family.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Generator file for the reflection family.
    #[arg(long)]
    pub data: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub input: PathBuf,
    /// Emit only the multiplicity table as CSV.
    #[arg(long)]
    pub csv: bool,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Upper,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Largest candidate set the exact search may build.
    #[arg(long, default_value_t = DEFAULT_CANDIDATE_BUDGET)]
    pub budget: u64,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct ResolveArgs {
    /// Arrangement JSON, or a chain JSON with --check.
    pub input: PathBuf,
    /// Apex as `x:y:z` with rational entries, or a JSON array of scalars.
    #[arg(long)]
    pub apex: Option<String>,
    /// How to pick the apex when --apex is absent.
    #[arg(long, value_enum, default_value_t = Mode::Upper)]
    pub strategy: Mode,
    #[arg(long, default_value_t = DEFAULT_CANDIDATE_BUDGET)]
    pub budget: u64,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Validate a chain file and print the per-step report.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct UnexpectedArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    /// Lowest degree scanned.
    #[arg(long, default_value_t = 2)]
    pub from: usize,
    /// Highest degree scanned; defaults to d − 1.
    #[arg(long)]
    pub to: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub tikz: bool,
    #[arg(long, value_enum, default_value_t = Chart::Identity)]
    pub chart: Chart,
    /// Exponent k in ζ_n ↦ exp(2πik/n).
    #[arg(long, default_value_t = 1)]
    pub embedding: u32,
    /// Dash lines through three or more singular points that are not arrangement lines.
    #[arg(long)]
    pub show_span_line: bool,
}

#[derive(Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
}

#[derive(Serialize)]
struct ErrorDoc {
    error: ErrorBody,
}

fn error_kind(e: &anyhow::Error) -> &'static str {
    if let Some(k) = e.downcast_ref::<KernelError>() {
        return kernel_kind(k);
    }
    if let Some(f) = e.downcast_ref::<format::FormatError>() {
        return match f {
            format::FormatError::Parse { .. } => "parse",
            format::FormatError::Scalar(_) | format::FormatError::Version(_) => "format",
            format::FormatError::Kernel(k) => kernel_kind(k),
            format::FormatError::Io(_) => "io",
        };
    }
    if e.downcast_ref::<render::RenderError>().is_some() {
        return "render";
    }
    if e.downcast_ref::<std::io::Error>().is_some() {
        return "io";
    }
    "invalid-argument"
}

fn kernel_kind(k: &KernelError) -> &'static str {
    match k {
        KernelError::BudgetExceeded { .. } => "budget-exceeded",
        KernelError::DuplicateLine { .. } => "duplicate-line",
        KernelError::ConductorMismatch { .. } => "mixed-fields",
        KernelError::InvalidChain { .. } => "invalid-chain",
        KernelError::NotSupersolvable => "not-supersolvable",
        KernelError::TrialsDisagree { .. } => "trials-disagree",
        _ => "kernel",
    }
}

fn error_json(kind: &'static str, message: String) -> String {
    format::to_json(&ErrorDoc {
        error: ErrorBody { kind, message },
    })
}

/// Parse `argv` (including the program name), execute, and return the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            let _ = stderr
                .write_all(error_json("usage", e.to_string().trim_end().to_string()).as_bytes());
            return 2;
        }
    };
    match execute(&cli).and_then(|text| emit(&cli.out, &text, stdout)) {
        Ok(()) => 0,
        Err(e) => {
            let _ = stderr.write_all(error_json(error_kind(&e), format!("{e:#}")).as_bytes());
            1
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load(path: &Path) -> anyhow::Result<Arrangement> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(format::arrangement_from_json(&text)?)
}

fn positive(threads: usize) -> anyhow::Result<usize> {
    if threads == 0 {
        bail!("--threads must be at least 1");
    }
    Ok(threads)
}

pub fn execute(cli: &Cli) -> anyhow::Result<String> {
    match &cli.command {
        Command::Generate(args) => generate(args),
        Command::Analyze(args) => analyze(args),
        Command::Solve(args) => solve(args),
        Command::Resolve(args) => resolve(args),
        Command::Unexpected(args) => unexpected(args),
        Command::Render(args) => render_cmd(args),
    }
}

fn generate(args: &GenerateArgs) -> anyhow::Result<String> {
    let need_n = || {
        args.n
            .ok_or_else(|| anyhow!("--n is required for this family"))
    };
    let need_d = || {
        args.d
            .ok_or_else(|| anyhow!("--d is required for this family"))
    };
    let spec = match args.family {
        Family::Generic => GeneratorSpec::Generic {
            d: need_d()?,
            seed: args
                .seed
                .ok_or_else(|| anyhow!("--seed is required for the generic family"))?,
        },
        Family::PaperL => GeneratorSpec::PaperL,
        Family::Pappus => GeneratorSpec::Pappus,
        Family::NearPencil => GeneratorSpec::NearPencil { d: need_d()? },
        Family::Fermat => GeneratorSpec::Fermat { n: need_n()? },
        Family::FermatExtended => GeneratorSpec::FermatExtended { n: need_n()? },
        Family::Boroczky => GeneratorSpec::Boroczky { n: need_n()? },
        Family::Klein => GeneratorSpec::ReflectionGroup(data::group("klein").expect("bundled")),
        Family::Wiman => GeneratorSpec::ReflectionGroup(data::group("wiman").expect("bundled")),
        Family::Reflection => {
            let path = args
                .data
                .as_ref()
                .ok_or_else(|| anyhow!("--data is required for the reflection family"))?;
            GeneratorSpec::ReflectionGroup(data::group_from_file(path)?)
        }
    };
    Ok(format::arrangement_to_json(&spec.build()?))
}

pub fn analyze_report(a: &Arrangement, threads: usize) -> AnalyzeReport {
    let w = a.weak_combinatorics();
    let p = poincare(&w);
    AnalyzeReport {
        version: format::VERSION,
        field: a.field().into(),
        lines: a.len(),
        t: format::t_vector(&w),
        poincare: p.coeffs(),
        exponents: p.split_exponents().into(),
        supersolvable: is_supersolvable(a).map(|m| WitnessRepr {
            point: format::point_repr(&m.point),
            multiplicity: m.multiplicity,
        }),
        extss_upper_bound: parallel::extss_upper_bound(a, threads).k,
    }
}

fn analyze(args: &AnalyzeArgs) -> anyhow::Result<String> {
    let a = load(&args.input)?;
    if args.csv {
        return Ok(format::t_vector_csv(&a.weak_combinatorics()));
    }
    Ok(format::to_json(&analyze_report(
        &a,
        positive(args.threads)?,
    )))
}

fn solve(args: &SolveArgs) -> anyhow::Result<String> {
    let a = load(&args.input)?;
    let threads = positive(args.threads)?;
    let r = match args.mode {
        Mode::Exact => parallel::extss_exact(&a, args.budget, threads)?,
        Mode::Upper => parallel::extss_upper_bound(&a, threads),
    };
    Ok(format::to_json(&SolveReport::new(&r)))
}

fn parse_apex(s: &str) -> anyhow::Result<ProjPoint> {
    if s.trim_start().starts_with('[') {
        let t: format::Triple = serde_json::from_str(s).context("apex JSON")?;
        return Ok(format::point_from(&t)?);
    }
    let parts: Vec<&str> = s.split(':').collect();
    let [x, y, z] = parts[..] else {
        bail!("apex must look like x:y:z, got {s:?}");
    };
    let t = [x, y, z].map(|c| format::ScalarRepr::Text(c.to_string()));
    Ok(format::point_from(&t)?)
}

fn resolve(args: &ResolveArgs) -> anyhow::Result<String> {
    if args.check {
        let text = std::fs::read_to_string(&args.input)
            .with_context(|| format!("reading {}", args.input.display()))?;
        let doc: ChainDoc = serde_json::from_str(&text).map_err(format::FormatError::from)?;
        let report = validate_chain(&doc.build()?)?;
        return Ok(format::to_json(&ChainReportDoc::new(&report)));
    }
    let a = load(&args.input)?;
    let threads = positive(args.threads)?;
    let apex = match &args.apex {
        Some(s) => parse_apex(s)?,
        None => match args.strategy {
            Mode::Exact => parallel::extss_exact(&a, args.budget, threads)?.apex,
            Mode::Upper => parallel::extss_upper_bound(&a, threads).apex,
        },
    };
    let chain = cone_extension(&a, &apex);
    validate_chain(&chain)?;
    Ok(format::to_json(&ChainDoc::new(&chain)))
}

fn unexpected(args: &UnexpectedArgs) -> anyhow::Result<String> {
    let a = load(&args.input)?;
    let z = DualPoints::of(&a);
    let to = args.to.unwrap_or(a.len() - 1);
    if args.from < 2 || to < args.from {
        bail!(
            "degree range {}..={} is empty or starts below 2",
            args.from,
            to
        );
    }
    let threads = positive(args.threads)?;
    let rows = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?
        .install(|| {
            use rayon::prelude::*;
            (args.from..=to)
                .into_par_iter()
                .map(|d| unexpected_scan(&z, [d], args.trials, args.seed).map(|mut r| r.remove(0)))
                .collect::<Result<Vec<_>, _>>()
        })?;
    let criterion = match supersolvable_criterion(&a) {
        Ok(b) => Some(b),
        Err(KernelError::NotSupersolvable) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(format::to_json(&UnexpectedReport {
        version: format::VERSION,
        seed: args.seed,
        trials: args.trials,
        unexpected_degrees: rows
            .iter()
            .filter(|r| r.unexpected)
            .map(|r| r.degree)
            .collect(),
        rows: rows.iter().map(Into::into).collect(),
        supersolvable_criterion: criterion,
    }))
}

fn render_cmd(args: &RenderArgs) -> anyhow::Result<String> {
    let a = load(&args.input)?;
    let opts = RenderOptions {
        chart: args.chart,
        embedding: args.embedding,
        show_span_lines: args.show_span_line,
    };
    Ok(if args.tikz {
        render::tikz(&a, &opts)?
    } else {
        render::svg(&a, &opts)?
    })
}
