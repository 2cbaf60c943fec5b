//! Command-line front end.
//!
//! Exit codes: 0 success (including hypothesis-not-met verdicts), 1 input or
//! validation error, 2 unknown family or parameter constraint violation,
//! 3 a theorem check failed.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, Instance, Params};
use crate::document::InstanceDocument;
use crate::error::Error;
use crate::exact::parse_rational;
use crate::lie::LieAlgebra;
use crate::random;
use crate::report::analyze;
use crate::verify::{run_check, Check, Verdict, VerdictReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CONSTRAINT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "lieconf", version, about = "Exact left-invariant conformal fields, curvature, and Yamabe solitons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for one instance (document file, `-` for stdin, or --family).
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run theorem checks over instances (default: the built-in catalog plus seeded random metrics).
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        /// Random metrics per signature for each unimodular control algebra.
        #[arg(long, default_value_t = 5)]
        random_metrics: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Inspect the built-in families.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Show { name: String },
    /// Write an instance document usable as `analyze` input.
    Emit {
        name: String,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct Source {
    /// Instance document path, or `-` for standard input.
    pub input: Option<String>,
    #[arg(long, conflicts_with = "input")]
    pub family: Option<String>,
    #[arg(long = "param", value_name = "KEY=VALUE", requires = "family")]
    pub params: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Unimodular,
    Bounds,
    Lightlike,
    Degenerate,
    Corollary,
    All,
}

impl Scope {
    fn checks(self) -> Vec<Check> {
        match self {
            Scope::Unimodular => vec![Check::Unimodular],
            Scope::Bounds => vec![Check::Bounds],
            Scope::Lightlike => vec![Check::Lightlike],
            Scope::Degenerate => vec![Check::Degenerate],
            Scope::Corollary => vec![Check::Corollary],
            Scope::All => Check::ALL.to_vec(),
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownFamily(_) | Error::ConstraintViolated { .. } => EXIT_CONSTRAINT,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

/// Parses repeated `key=value` flags with exact rational values.
pub fn parse_params(raw: &[String]) -> Result<Params, Error> {
    let mut params = Params::new();
    for kv in raw {
        let (k, v) = kv.split_once('=').ok_or_else(|| Error::Parse {
            path: format!("--param {kv}"),
            message: "expected KEY=VALUE".into(),
        })?;
        let value = parse_rational(v).ok_or_else(|| Error::Parse {
            path: format!("--param {k}"),
            message: format!("`{v}` is not an exact rational"),
        })?;
        params.insert(k.trim().to_string(), value);
    }
    Ok(params)
}

fn load_source(src: &Source, stdin: &mut dyn Read) -> Result<Option<Instance>, Failure> {
    if let Some(name) = &src.family {
        let params = parse_params(&src.params)?;
        return Ok(Some(catalog::instantiate(name, &params)?));
    }
    let Some(path) = &src.input else {
        return Ok(None);
    };
    let text = if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| input_failure(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| input_failure(format!("reading {path}: {e}")))?
    };
    Ok(Some(InstanceDocument::from_json(&text)?.to_instance()?))
}

#[derive(Debug, Serialize)]
struct InstanceVerdicts {
    instance: String,
    verdicts: Vec<VerdictReport>,
}

#[derive(Debug, Default, Serialize)]
struct Summary {
    instances: usize,
    pass: usize,
    hypothesis_not_met: usize,
    theorem_violated: usize,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    scope: Scope,
    seed: u64,
    samples: usize,
    summary: Summary,
    results: Vec<InstanceVerdicts>,
}

/// Catalog instances plus seeded random metrics on each unimodular control
/// algebra, one batch per achievable signature.
pub fn default_verify_instances(seed: u64, per_signature: usize) -> Vec<Instance> {
    let mut out = catalog::default_instances();
    let controls: Vec<(&str, LieAlgebra)> = ["heisenberg3", "so3", "sl2"]
        .iter()
        .map(|name| (*name, catalog::instantiate(name, &Params::new()).expect("control").algebra))
        .chain((2..=4).map(|n| ("abelian", LieAlgebra::abelian(n))))
        .collect();
    let mut rng = random::rng(seed);
    for (name, g) in controls {
        let n = g.dim();
        for q in 0..=n {
            for k in 0..per_signature {
                let m = random::metric_with_signature(&mut rng, n - q, q);
                let mut inst = Instance::new(format!("{name}-dim{n}-random-p{}q{q}-{k}", n - q), g.clone(), m)
                    .expect("dimensions agree");
                inst.family = Some(name.to_string());
                out.push(inst);
            }
        }
    }
    out
}

fn cmd_verify(
    scope: Scope,
    instances: Vec<Instance>,
    seed: u64,
    samples: usize,
) -> Result<(VerifyReport, bool), Failure> {
    let checks = scope.checks();
    let results: Vec<Result<InstanceVerdicts, Error>> = instances
        .par_iter()
        .map(|inst| {
            let verdicts = checks
                .iter()
                .map(|&c| run_check(c, &inst.algebra, &inst.metric, samples, seed))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(InstanceVerdicts {
                instance: inst.label(),
                verdicts,
            })
        })
        .collect();
    let results = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut summary = Summary {
        instances: results.len(),
        ..Summary::default()
    };
    for v in results.iter().flat_map(|r| &r.verdicts) {
        match v.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::HypothesisNotMet { .. } => summary.hypothesis_not_met += 1,
            Verdict::TheoremViolated { .. } => summary.theorem_violated += 1,
        }
    }
    let violated = summary.theorem_violated > 0;
    Ok((
        VerifyReport {
            scope,
            seed,
            samples,
            summary,
            results,
        },
        violated,
    ))
}

fn verify_table(r: &VerifyReport) -> String {
    let mut out = String::new();
    for inst in &r.results {
        for v in &inst.verdicts {
            let status = match &v.verdict {
                Verdict::Pass => "pass",
                Verdict::HypothesisNotMet { .. } => "n/a",
                Verdict::TheoremViolated { .. } => "VIOLATED",
            };
            out.push_str(&format!("{:<48} {:<10} {status}\n", inst.instance, v.check.name()));
        }
    }
    let s = &r.summary;
    out.push_str(&format!(
        "instances {}  pass {}  hypothesis-not-met {}  violated {}\n",
        s.instances, s.pass, s.hypothesis_not_met, s.theorem_violated
    ));
    out
}

fn execute(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let write = |stdout: &mut dyn Write, text: &str| -> Result<(), Failure> {
        match writeln!(stdout, "{text}").and_then(|_| stdout.flush()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                Err(input_failure(format!("writing output: {e}")))
            }
            _ => Ok(()),
        }
    };
    match cli.command {
        Command::Analyze {
            source,
            seed,
            samples,
            format,
        } => {
            let inst = load_source(&source, stdin)?
                .ok_or_else(|| input_failure("analyze needs an input document or --family"))?;
            let report = analyze(&inst, seed, samples)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Table => report.to_table(),
            };
            write(stdout, text.trim_end())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            scope,
            source,
            seed,
            samples,
            random_metrics,
            format,
        } => {
            let instances = match load_source(&source, stdin)? {
                Some(inst) => vec![inst],
                None => default_verify_instances(seed, random_metrics),
            };
            let (report, violated) = cmd_verify(scope, instances, seed, samples)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
                Format::Table => verify_table(&report),
            };
            write(stdout, text.trim_end())?;
            Ok(if violated { EXIT_VIOLATION } else { EXIT_OK })
        }
        Command::Catalog { action } => {
            let text = match action {
                CatalogAction::List => {
                    serde_json::to_string_pretty(&catalog::list_families()).expect("serializes")
                }
                CatalogAction::Show { name } => {
                    serde_json::to_string_pretty(&catalog::family(&name)?).expect("serializes")
                }
                CatalogAction::Emit { name, params } => {
                    let params = parse_params(&params)?;
                    InstanceDocument::from_instance(&catalog::instantiate(&name, &params)?).to_json()
                }
            };
            write(stdout, &text)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_INPUT,
            };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    match execute(cli, stdin, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
