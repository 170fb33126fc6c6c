//! Command-line frontend.
//!
//! Exit codes: 0 for a positive answer (prehomogeneous, certified, clean
//! report), 1 for a negative one, 2 for usage and input errors, 3 when the
//! prehomogeneity engine stays inconclusive.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::classify::{
    construct_type1, construct_type2, cross_check_vinberg_with, search_type12_with, sk_reduced_table, vinberg_table,
    ClassifyError, TypedModuleCandidate,
};
use crate::liealg::{semidirect, semisimple_algebra, AlgebraFile, LieAlgebra, LieError, SemisimpleSpec, Subspace};
use crate::modexpr::{parse_algebra, parse_module, ExprError, ModuleExpr};
use crate::prehom::{
    certify_disemisimple_with, is_prehomogeneous, levi_module, Certification, CertifyError, Mode, PrehomCertificate,
    Verdict, DEFAULT_SEED, DEFAULT_TRIALS,
};
use crate::rational::format_q;
use crate::repbuilder::{IrrLabel, RepError};
use crate::rootdata::SimpleType;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "disemisimple", version, about = "Prehomogeneous modules and disemisimple Lie algebras")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct ModeArgs {
    /// Seed for the randomized rank test.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of random points tried before escalating.
    #[arg(long)]
    pub trials: Option<usize>,
    /// Decide symbolically; never samples without a certificate.
    #[arg(long, conflicts_with_all = ["seed", "trials"])]
    pub exact: bool,
}

impl ModeArgs {
    pub fn mode(&self) -> Mode {
        if self.exact {
            Mode::Symbolic
        } else {
            Mode::Randomized { seed: self.seed.unwrap_or(DEFAULT_SEED), trials: self.trials.unwrap_or(DEFAULT_TRIALS) }
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Dimension bound; defaults to dim s − 1.
    #[arg(long)]
    pub bound: Option<u64>,
    /// Worker threads.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Type1,
    Type2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a module has a dense orbit.
    Prehom {
        /// Semisimple algebra, e.g. `A1xA2`.
        algebra: String,
        /// Module expression, e.g. `L(1)#L(0,1)` or `wedge2(nat)`.
        module: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Certify `s ⋉ V` (or a structure-constant file) as disemisimple.
    Certify {
        #[arg(required_unless_present = "sc")]
        algebra: Option<String>,
        #[arg(required_unless_present = "sc")]
        module: Option<String>,
        /// JSON structure constants with a `levi` basis.
        #[arg(long, conflicts_with_all = ["algebra", "module"])]
        sc: Option<PathBuf>,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Decompose a module into irreducibles.
    Decompose { algebra: String, module: String },
    /// Dimension of a module.
    Dim { algebra: String, module: String },
    /// Prehomogeneous modules of a simple type, or `SK` for the reduced triples.
    Table { simple_type: String },
    /// Compare exhaustive verdicts with the table of a simple type.
    Crosscheck {
        simple_type: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Search for prehomogeneous modules of type 1 or 2.
    Search12 {
        simple_type: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Build the two-step nilpotent extension of a type-1 or type-2 module.
    Construct {
        kind: ConstructKind,
        algebra: String,
        /// Irreducible labels `A B` (type 1) or `A B C` (type 2).
        #[arg(num_args = 2..=3, required = true)]
        labels: Vec<String>,
        /// Write the structure constants, with the Levi basis, to a file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        mode: ModeArgs,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn simple_type(text: &str) -> Result<SimpleType, CliError> {
    match parse_algebra(text)?.factors.as_slice() {
        [t] => Ok(*t),
        _ => Err(CliError::Usage(format!("expected a simple type, got {text}"))),
    }
}

fn irr_label(text: &str, spec: &SemisimpleSpec) -> Result<IrrLabel, CliError> {
    match parse_module(text, spec)? {
        ModuleExpr::Irr(blocks) => Ok(IrrLabel(blocks.into_iter().map(crate::rootdata::DominantWeight).collect())),
        _ => Err(CliError::Usage(format!("expected an irreducible label, got {text}"))),
    }
}

fn vector(v: &[crate::rational::Q]) -> String {
    format!("[{}]", v.iter().map(format_q).collect::<Vec<_>>().join(", "))
}

fn verdict_code(c: &PrehomCertificate) -> i32 {
    match c.verdict {
        Verdict::Prehomogeneous { .. } => EXIT_YES,
        Verdict::NotPrehomogeneous(_) => EXIT_NO,
        Verdict::Inconclusive { .. } => EXIT_INCONCLUSIVE,
    }
}

fn describe_prehom(c: &PrehomCertificate, out: &mut dyn Write) -> std::io::Result<()> {
    match &c.verdict {
        Verdict::Prehomogeneous { witness, rank } => {
            writeln!(out, "prehomogeneous: yes")?;
            writeln!(out, "witness: {}", vector(witness))?;
            writeln!(out, "rank: {rank} = dim V")?;
        }
        Verdict::NotPrehomogeneous(reason) => {
            writeln!(out, "prehomogeneous: no")?;
            writeln!(out, "reason: {}", serde_json::to_string(reason).expect("reason serializes"))?;
        }
        Verdict::Inconclusive { lower_rank } => {
            writeln!(out, "prehomogeneous: undecided")?;
            writeln!(out, "largest rank found: {lower_rank} of {}", c.dim_v)?;
        }
    }
    writeln!(out, "dim V = {}, dim s = {}, mode: {:?}", c.dim_v, c.dim_s, c.mode)
}

fn write_json(out: &mut dyn Write, v: &impl serde::Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn report_certification(c: &Certification, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    match c {
        Certification::Certified(cert) => {
            if json {
                write_json(out, &json!({"certified": true, "certificate": cert.to_json_view()}))?;
            } else {
                writeln!(out, "disemisimple: yes")?;
                writeln!(out, "levi dim: {}, radical dim: {}", cert.levi_basis.dim(), cert.radical_basis.dim())?;
                writeln!(out, "z: {}", vector(&cert.z))?;
                writeln!(out, "phi = exp(ad z) ({}x{})", cert.phi.matrix.rows(), cert.phi.matrix.cols())?;
                for row in cert.phi.matrix.to_rows() {
                    writeln!(out, "  {}", vector(&row))?;
                }
                writeln!(out, "intersection dim: {}", cert.intersection_dim)?;
            }
            Ok(EXIT_YES)
        }
        Certification::Refused(r) => {
            if json {
                write_json(out, &json!({"certified": false, "refusal": r}))?;
            } else {
                writeln!(out, "disemisimple: no")?;
                writeln!(out, "refusal: {}", serde_json::to_string(r)?)?;
            }
            Ok(match r {
                crate::prehom::Refusal::Inconclusive { .. } => EXIT_INCONCLUSIVE,
                _ => EXIT_NO,
            })
        }
    }
}

fn semidirect_of(spec: &SemisimpleSpec, module: &str) -> Result<LieAlgebra, CliError> {
    let r = parse_module(module, spec)?.evaluate(spec)?;
    let s = semisimple_algebra(spec)?;
    Ok(semidirect(&s, &r, &LieAlgebra::abelian(r.dim()))?)
}

/// Runs one parsed command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::Prehom { algebra, module, mode } => {
            let spec = parse_algebra(algebra)?;
            let r = parse_module(module, &spec)?.evaluate(&spec)?;
            let c = is_prehomogeneous(&r, mode.mode());
            if json {
                write_json(out, &c)?;
            } else {
                describe_prehom(&c, out)?;
            }
            Ok(verdict_code(&c))
        }
        Command::Certify { algebra, module, sc, mode } => {
            let (g, levi) = match (sc, algebra, module) {
                (Some(path), _, _) => {
                    let file: AlgebraFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                    let g = LieAlgebra::from_file(&file)?;
                    let rows =
                        file.levi_rows()?.ok_or_else(|| CliError::Usage("structure file has no levi basis".into()))?;
                    let levi = Subspace::new(g.dim(), &rows);
                    (g, levi)
                }
                (None, Some(a), Some(m)) => {
                    let spec = parse_algebra(a)?;
                    let g = semidirect_of(&spec, m)?;
                    let levi = Subspace::coordinate(g.dim(), 0..spec.dim());
                    (g, levi)
                }
                _ => return Err(CliError::Usage("certify needs an algebra and a module, or --sc".into())),
            };
            let c = certify_disemisimple_with(&g, &levi, mode.mode())?;
            report_certification(&c, json, out)
        }
        Command::Decompose { algebra, module } => {
            let spec = parse_algebra(algebra)?;
            let d = parse_module(module, &spec)?.descriptor(&spec)?;
            if json {
                write_json(out, &json!({"module": d.to_string(), "pretty": d.pretty(), "dim": d.dim(&spec)?}))?;
            } else {
                writeln!(out, "{d}")?;
                writeln!(out, "{}", d.pretty())?;
            }
            Ok(EXIT_YES)
        }
        Command::Dim { algebra, module } => {
            let spec = parse_algebra(algebra)?;
            let dim = parse_module(module, &spec)?.evaluate(&spec)?.dim();
            if json {
                write_json(out, &json!({ "dim": dim }))?;
            } else {
                writeln!(out, "{dim}")?;
            }
            Ok(EXIT_YES)
        }
        Command::Table { simple_type: text } => {
            if text.eq_ignore_ascii_case("sk") {
                let rows = sk_reduced_table();
                if json {
                    write_json(out, &rows)?;
                } else {
                    for r in rows {
                        writeln!(out, "{:<10} {:<20} dim {:<12} {}", r.algebra, r.module, r.dim_formula, r.conditions)?;
                    }
                }
                return Ok(EXIT_YES);
            }
            let t = simple_type(text)?;
            let spec = SemisimpleSpec::simple(t);
            let mut entries = Vec::new();
            for d in vinberg_table(t) {
                entries.push(json!({"module": d.to_string(), "pretty": d.pretty(), "dim": d.dim(&spec)?}));
            }
            if json {
                write_json(out, &json!({"type": t.to_string(), "entries": entries}))?;
            } else if entries.is_empty() {
                writeln!(out, "{t}: no nonzero prehomogeneous modules")?;
            } else {
                for e in &entries {
                    writeln!(
                        out,
                        "{:<24} {:<24} dim {}",
                        e["module"].as_str().unwrap_or(""),
                        e["pretty"].as_str().unwrap_or(""),
                        e["dim"]
                    )?;
                }
            }
            Ok(EXIT_YES)
        }
        Command::Crosscheck { simple_type: text, search } => {
            let t = simple_type(text)?;
            let bound = search.bound.unwrap_or(t.algebra_dim() as u64 - 1);
            let report = cross_check_vinberg_with(t, bound, search.jobs)?;
            if json {
                write_json(out, &report)?;
            } else {
                writeln!(out, "{t}: {} modules up to dim {bound}", report.tested_count)?;
                writeln!(out, "prehomogeneous: {}", report.positives.join("; "))?;
                writeln!(out, "table:          {}", report.table.join("; "))?;
                writeln!(out, "missing: {:?}", report.diff.missing)?;
                writeln!(out, "extra: {:?}", report.diff.extra)?;
                if !report.inconclusive.is_empty() {
                    writeln!(out, "inconclusive: {:?}", report.inconclusive)?;
                }
                writeln!(out, "{}", if report.is_clean() { "diff empty" } else { "diff NOT empty" })?;
            }
            Ok(if report.is_clean() { EXIT_YES } else { EXIT_NO })
        }
        Command::Search12 { simple_type: text, search } => {
            let t = simple_type(text)?;
            let bound = search.bound.unwrap_or(t.algebra_dim() as u64 - 1);
            let outcome = search_type12_with(t, bound, Mode::Symbolic, search.jobs)?;
            if json {
                write_json(out, &outcome)?;
            } else {
                writeln!(out, "{t}: {} type 1/2 candidates up to dim {bound}", outcome.tested_count)?;
                if outcome.prehomogeneous.is_empty() && outcome.inconclusive.is_empty() {
                    writeln!(out, "no type 1 or type 2 prehomogeneous modules found")?;
                }
                for c in &outcome.prehomogeneous {
                    writeln!(out, "prehomogeneous: {}", c.descriptor())?;
                }
                for c in &outcome.inconclusive {
                    writeln!(out, "undecided: {}", c.descriptor())?;
                }
            }
            Ok(if !outcome.prehomogeneous.is_empty() {
                EXIT_NO
            } else if !outcome.inconclusive.is_empty() {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_YES
            })
        }
        Command::Construct { kind, algebra, labels, out: path, mode } => {
            let spec = parse_algebra(algebra)?;
            let ls: Vec<IrrLabel> = labels.iter().map(|l| irr_label(l, &spec)).collect::<Result<_, _>>()?;
            let (g, candidate) = match (kind, ls.as_slice()) {
                (ConstructKind::Type1, [a, b]) => {
                    (construct_type1(&spec, a, b)?, TypedModuleCandidate::Type1 { a: a.clone(), b: b.clone() })
                }
                (ConstructKind::Type2, [a, b, c]) => (
                    construct_type2(&spec, a, b, c)?,
                    TypedModuleCandidate::Type2 { a: a.clone(), b: b.clone(), c: c.clone() },
                ),
                _ => return Err(CliError::Usage("type1 takes two labels, type2 three".into())),
            };
            let levi = Subspace::coordinate(g.dim(), 0..spec.dim());
            if let Some(path) = path {
                let mut file = g.to_file();
                file.levi = Some(levi.vectors().iter().map(|r| r.iter().map(format_q).collect()).collect());
                std::fs::write(path, serde_json::to_string_pretty(&file)?)?;
            }
            let radical = levi_module(&g, &levi, &g.solvable_radical())?.decompose()?;
            let cert = certify_disemisimple_with(&g, &levi, mode.mode())?;
            if json {
                let refusal = cert.refusal();
                write_json(
                    out,
                    &json!({
                        "candidate": candidate,
                        "dim": g.dim(),
                        "radical": radical.to_string(),
                        "derived_radical": candidate.derived_label().to_string(),
                        "certified": cert.certificate().is_some(),
                        "refusal": refusal,
                    }),
                )?;
            } else {
                writeln!(out, "algebra dim: {}", g.dim())?;
                writeln!(out, "radical: {radical} (class 2, [rad, rad] = {})", candidate.derived_label())?;
                match cert.refusal() {
                    Some(r) => writeln!(out, "disemisimple: no ({})", serde_json::to_string(r)?)?,
                    None => writeln!(out, "disemisimple: yes")?,
                }
            }
            Ok(if cert.certificate().is_some() { EXIT_YES } else { EXIT_NO })
        }
    }
}

/// Parses arguments, runs the command and maps failures to exit codes.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
