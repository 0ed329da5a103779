//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
//! 3 window too small or inconclusive verdict.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use superwhit_core::nilpotent::{
    check_simplicity, choose_polarization, induce_from, psi_block_decomposition, Eigen, Simplicity,
};
use superwhit_core::{Certificate, Character, Error, FieldElement, LieSuperalgebra, ParamSet, RootDatum, WhittakerModule};

use crate::alg::{builtin, parse_alg};
use crate::expr::parse_assignments;
use crate::modfile::parse_module;
use crate::report::{VerifyReport, WhittakerReport};
use crate::FormatError;

#[derive(Parser, Debug)]
#[command(name = "superwhit", version, about = "Exact computations for Lie superalgebras and Whittaker modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate an algebra's grading, super-antisymmetry and super-Jacobi identity.
    CheckAlgebra(Source),
    /// Root decomposition with respect to a Cartan subalgebra.
    Roots(RootsArgs),
    /// Induce the simple module I(psi) of a nilpotent superalgebra.
    IPsi(IPsiArgs),
    /// Split a finite-dimensional module into generalized eigenspaces.
    Blocks(BlocksArgs),
    /// Whittaker spaces and a simplicity verdict for the sl(1,2) module.
    Whittaker(WhittakerArgs),
    /// Run the full sl(1,2) check suite; exits 1 on any mismatch.
    #[command(visible_alias = "verify-paper")]
    Verify(ModuleArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Built-in algebra name (`sl12`).
    #[arg(long)]
    pub builtin: Option<String>,
    /// Algebra definition file (`.alg`).
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    #[default]
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Symbolic,
}

#[derive(Args, Debug)]
pub struct RootsArgs {
    #[command(flatten)]
    pub source: Source,
    /// Cartan generators, comma separated (default for sl12: h,z).
    #[arg(long, value_delimiter = ',')]
    pub cartan: Vec<String>,
    /// Positive root vectors, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub positive: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    pub emit: Emit,
}

#[derive(Args, Debug)]
pub struct IPsiArgs {
    #[command(flatten)]
    pub source: Source,
    /// Character values, e.g. `w=3` (unlisted generators map to 0).
    #[arg(long, default_value = "")]
    pub psi: String,
    /// Random vectors tried when simplicity cannot be decided exactly.
    #[arg(long, default_value_t = 16)]
    pub samples: usize,
    /// Write the module table here as well.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BlocksArgs {
    #[command(flatten)]
    pub source: Source,
    /// Module table file.
    #[arg(long)]
    pub module: PathBuf,
}

#[derive(Args, Debug)]
pub struct ModuleArgs {
    /// Keep a, b, c as indeterminates (the default).
    #[arg(long, value_enum, conflicts_with = "spec")]
    pub mode: Option<Mode>,
    /// Specialize the parameters, e.g. `a=1,b=0,c=2`.
    #[arg(long)]
    pub spec: Option<String>,
    /// Largest h-degree of the computation window.
    #[arg(long, env = "WHITTAKER_WINDOW", default_value_t = 6,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub window: u32,
    #[arg(long, value_enum, default_value_t)]
    pub emit: Emit,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct WhittakerArgs {
    /// Algebra; only `sl12` carries a Whittaker model.
    pub algebra: String,
    #[command(flatten)]
    pub module: ModuleArgs,
}

/// A failed run and its exit code.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{0}")]
    Invalid(#[from] FormatError),
    #[error("{0}")]
    Window(Error),
    #[error("verification failed")]
    Mismatch,
    #[error("verdict inconclusive at window {0}; try a larger --window")]
    Inconclusive(u32),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Mismatch => 1,
            Failure::Invalid(_) => 2,
            Failure::Window(_) | Failure::Inconclusive(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::WindowTooSmall { .. } => Failure::Window(e),
            e => Failure::Invalid(e.into()),
        }
    }
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

fn write(path: &Path, text: &str) -> Result<(), FormatError> {
    std::fs::write(path, text).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

fn load(source: &Source) -> Result<LieSuperalgebra, FormatError> {
    match (&source.builtin, &source.file) {
        (Some(name), _) => builtin(name),
        (None, Some(path)) => parse_alg(&read(path)?),
        (None, None) => unreachable!("clap requires a source"),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), FormatError> {
    match output {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check_algebra(source: &Source) -> Result<String, Failure> {
    let g = load(source)?;
    let (even, odd) = (g.even_indices().len(), g.odd_indices().len());
    Ok(format!("ok: {} generators ({even} even, {odd} odd), all axioms hold\n", g.dim()))
}

#[derive(Serialize)]
struct RootLine {
    label: String,
    parity: &'static str,
    weight: Vec<String>,
    positive: bool,
    simple: bool,
}

fn roots(args: &RootsArgs) -> Result<String, Failure> {
    let g = load(&args.source)?;
    let rd = if args.cartan.is_empty() && args.source.builtin.is_some() {
        RootDatum::sl12(&g)?
    } else {
        if args.cartan.is_empty() {
            return Err(FormatError::Expr(String::new(), "--cartan is required for algebra files".into()).into());
        }
        let cartan: Vec<&str> = args.cartan.iter().map(String::as_str).collect();
        let rd = RootDatum::root_decomposition(&g, &cartan)?;
        if args.positive.is_empty() {
            rd
        } else {
            rd.with_positive(&args.positive.iter().map(String::as_str).collect::<Vec<_>>())?
        }
    };
    let lines: Vec<RootLine> = rd
        .roots()
        .map(|(i, w)| RootLine {
            label: g.label(i).into(),
            parity: g.parity(i).name(),
            weight: w.iter().map(|q| q.to_string()).collect(),
            positive: rd.is_positive(i),
            simple: rd.simple().contains(&i),
        })
        .collect();
    if args.emit == Emit::Json {
        return Ok(json(&lines));
    }
    let cartan: Vec<&str> = rd.cartan().iter().map(|&i| g.label(i)).collect();
    let mut out = format!("cartan: {}\n", cartan.join(" "));
    for l in &lines {
        let sign = if l.positive { "positive" } else { "negative" };
        let simple = if l.simple { " simple" } else { "" };
        writeln!(out, "{} {} ({}) {sign}{simple}", l.label, l.parity, l.weight.join(", ")).unwrap();
    }
    Ok(out)
}

fn character(n: &LieSuperalgebra, spec: &str) -> Result<Character, FormatError> {
    let values = parse_assignments(spec, n.params())?;
    let refs: Vec<(&str, FieldElement)> = values.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
    Ok(Character::new(n, &refs)?)
}

fn i_psi(args: &IPsiArgs) -> Result<String, Failure> {
    let n = load(&args.source)?;
    let psi = character(&n, &args.psi)?;
    let h = choose_polarization(&n, &psi)?;
    let v = induce_from(&n, &psi, &h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let simple = match check_simplicity(&v, &n, &mut rng, args.samples)? {
        Simplicity::Simple => "yes",
        Simplicity::ProbablySimple => "probably (sampled)",
        Simplicity::NotSimple(_) => "no",
    };
    let table = v.to_text(&n);
    if let Some(p) = &args.output {
        write(p, &table)?;
    }
    let labels: Vec<&str> = h.iter().map(|&i| n.label(i)).collect();
    Ok(format!("polarization: {}\nsimple: {simple}\n{table}", labels.join(" ")))
}

fn eigen_text(e: &Eigen, params: &ParamSet) -> String {
    match e {
        Eigen::Value(v) => v.to_string_with(params),
        Eigen::Factor(coeffs) => {
            let terms: Vec<String> = coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("({})*t^{k}", c.to_string_with(params)))
                .collect();
            format!("root of {}", terms.join(" + "))
        }
    }
}

fn blocks(args: &BlocksArgs) -> Result<String, Failure> {
    let n = load(&args.source)?;
    let v = parse_module(&read(&args.module)?, &n)?;
    let blocks = psi_block_decomposition(&v, &n)?;
    let even: Vec<&str> = n.even_indices().into_iter().map(|i| n.label(i)).collect();
    let mut out = format!("{} block(s); eigenvalues of {}\n", blocks.len(), even.join(", "));
    for (k, b) in blocks.iter().enumerate() {
        let key: Vec<String> = b.key.iter().map(|e| eigen_text(e, n.params())).collect();
        writeln!(out, "block {}: ({}) dim {}", k + 1, key.join(", "), b.basis.len()).unwrap();
        for u in &b.basis {
            let coords: Vec<String> = u.iter().map(|c| c.to_string_with(n.params())).collect();
            writeln!(out, "  [{}]", coords.join(", ")).unwrap();
        }
    }
    Ok(out)
}

fn module(args: &ModuleArgs) -> Result<WhittakerModule, Failure> {
    let Some(spec) = &args.spec else {
        return Ok(WhittakerModule::symbolic()?);
    };
    let values = parse_assignments(spec, &ParamSet::empty())?;
    let get = |name: &str| -> Result<_, FormatError> {
        let v = values
            .iter()
            .find(|(k, _)| k == name)
            .ok_or_else(|| FormatError::Expr(spec.clone(), format!("missing `{name}`")))?;
        v.1.as_rational().ok_or_else(|| FormatError::Expr(spec.clone(), format!("`{name}` is not rational")))
    };
    if let Some((k, _)) = values.iter().find(|(k, _)| !["a", "b", "c"].contains(&k.as_str())) {
        return Err(FormatError::Expr(spec.clone(), format!("unknown parameter `{k}`")).into());
    }
    Ok(WhittakerModule::specialized(get("a")?, get("b")?, get("c")?)?)
}

fn whittaker(args: &WhittakerArgs, start: Instant) -> Result<String, Failure> {
    if args.algebra != "sl12" {
        return Err(FormatError::UnknownBuiltin(args.algebra.clone()).into());
    }
    let a = &args.module;
    let m = module(a)?;
    let (mut report, cert) = WhittakerReport::build(&m, a.window)?;
    report.runtime_ms = start.elapsed().as_millis() as u64;
    let text = match a.emit {
        Emit::Json => json(&report),
        Emit::Text => report.to_text(),
    };
    emit(&text, a.output.as_deref())?;
    if let Certificate::Inconclusive { window } = cert {
        return Err(Failure::Inconclusive(window));
    }
    Ok(String::new())
}

fn verify(args: &ModuleArgs, start: Instant) -> Result<String, Failure> {
    let m = module(args)?;
    let (mut report, cert) = VerifyReport::build(&m, args.window)?;
    report.report.runtime_ms = start.elapsed().as_millis() as u64;
    let text = match args.emit {
        Emit::Json => json(&report),
        Emit::Text => report.to_text(),
    };
    emit(&text, args.output.as_deref())?;
    if let Certificate::Inconclusive { window } = cert {
        return Err(Failure::Inconclusive(window));
    }
    if !report.all_passed() {
        return Err(Failure::Mismatch);
    }
    Ok(String::new())
}

pub fn run(cli: &Cli) -> Result<String, Failure> {
    let start = Instant::now();
    match &cli.command {
        Command::CheckAlgebra(s) => check_algebra(s),
        Command::Roots(a) => roots(a),
        Command::IPsi(a) => i_psi(a),
        Command::Blocks(a) => blocks(a),
        Command::Whittaker(a) => whittaker(a, start),
        Command::Verify(a) => verify(a, start),
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
