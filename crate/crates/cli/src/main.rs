use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use myb_core::catalog::{lookup, NAMES};
use myb_core::jordan::{triple_r, TripleMode, TripleWithOperator};
use myb_core::lie::{convert_params, convert_params_inverse, derived_bracket, LieBiOperator};
use myb_core::rrho::{bracket_rho, from_bi_myb, RRhoAlgebra};
use myb_core::scalar;
use myb_core::{Error, JtsVariant, Polynomial};
use myb_cli::search::{search, SearchParams, TARGETS};
use myb_cli::suite::{run_suite, SuiteOptions, SUITES};
use myb_cli::{findings, AlgebraFile, CliError, RunReport};

#[derive(Parser)]
#[command(name = "myb", version, about = "Exact checks for operator identities on Lie algebras and Jordan triple systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Algebra file (JSON).
    #[arg(conflicts_with = "catalog", required_unless_present = "catalog")]
    input: Option<PathBuf>,
    /// Catalog entry, e.g. `example2-gl2?q=diag:1,2`.
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Derived {
    BracketR,
    BracketRho,
    TripleR,
    TripleRFull,
    FromBiMyb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Params {
    /// (R1, R2) -> (R, xi)
    Rxi,
    /// (R, xi) -> (R1, R2)
    R1r2,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite.
    Check {
        #[command(flatten)]
        input: Input,
        /// Suite name; see `myb check --list`.
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Allow checks above the dimension guard.
        #[arg(long)]
        force: bool,
        /// Map an operator role to a name in the file, e.g. `R=Ra`.
        #[arg(long = "op", value_name = "ROLE=NAME")]
        ops: Vec<String>,
        #[arg(long, default_value = "jacobson")]
        variant: JtsVariant,
        /// Skip JTS validation of the triple (reports are marked).
        #[arg(long)]
        unchecked: bool,
        /// Polynomial coefficients, constant term first, e.g. `1,1/2,0,3`.
        #[arg(long, default_value = "1,1")]
        poly: String,
        #[command(flatten)]
        output: Output,
    },
    /// Compute a derived structure and write it as an algebra file.
    Derive {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        what: Derived,
        #[arg(long = "op", value_name = "ROLE=NAME")]
        ops: Vec<String>,
        #[arg(long, default_value = "jacobson")]
        variant: JtsVariant,
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        output: Output,
    },
    /// List or export catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Seeded search for an instance behind a claim.
    Search {
        /// Target name; `myb search --list` shows them.
        #[arg(required_unless_present = "list")]
        target: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Matrix size n of the base algebra.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = myb_core::sample::DEFAULT_ENTRY_BOUND)]
        entry_bound: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Convert operator parameters between (R1, R2) and (R, xi).
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        to: Params,
        #[command(flatten)]
        output: Output,
    },
    /// Emit the findings document.
    Findings {
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the entry names.
    List,
    /// Write an entry as an algebra file.
    Export {
        name: String,
        #[command(flatten)]
        output: Output,
    },
}

/// Outcome of a command: text to emit and the exit status.
struct Done {
    text: String,
    code: u8,
}

fn ok(text: String) -> Done {
    Done { text, code: 0 }
}

fn load(input: &Input) -> Result<(AlgebraFile, String, Vec<u8>), CliError> {
    match (&input.input, &input.catalog) {
        (Some(path), _) => {
            let bytes = fs::read(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok((AlgebraFile::parse(&bytes)?, path.display().to_string(), bytes))
        }
        (None, Some(name)) => {
            let file = AlgebraFile::from_entry(&lookup(name)?);
            let bytes = file.render().into_bytes();
            Ok((file, format!("catalog:{name}"), bytes))
        }
        (None, None) => Err(CliError::Missing("input file or --catalog".into())),
    }
}

fn roles(ops: &[String]) -> Result<BTreeMap<String, String>, CliError> {
    ops.iter()
        .map(|spec| match spec.split_once('=') {
            Some((role, name)) if !role.is_empty() && !name.is_empty() => Ok((role.into(), name.into())),
            _ => Err(CliError::field("--op", format!("expected ROLE=NAME, got {spec:?}"))),
        })
        .collect()
}

fn role<'a>(map: &'a BTreeMap<String, String>, role: &'a str) -> &'a str {
    map.get(role).map(String::as_str).unwrap_or(role)
}

fn parse_poly(text: &str) -> Result<Polynomial, CliError> {
    text.split(',')
        .map(|t| scalar::parse(t.trim()).map_err(|e| CliError::field("--poly", e)))
        .collect::<Result<Vec<_>, _>>()
        .map(Polynomial)
}

fn write_out(output: &Output, text: &str) -> Result<(), CliError> {
    match &output.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render_report(report: &RunReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    }
}

/// A failed precondition during derivation is a failed asserted check.
fn derive_failure(e: Error) -> Result<Done, CliError> {
    match e {
        Error::Precondition {
            report: Some(report), ..
        }
        | Error::InvalidBase { report, .. } => {
            let mut r = RunReport::new("derive", "", None);
            r.push_check(*report);
            Ok(Done {
                text: r.to_text(),
                code: 1,
            })
        }
        other => Err(other.into()),
    }
}

fn run(cli: Cli) -> Result<(Done, Option<Output>), CliError> {
    match cli.command {
        Command::Check {
            input,
            suite,
            list,
            format,
            force,
            ops,
            variant,
            unchecked,
            poly,
            output,
        } => {
            if list {
                let text: String = SUITES.iter().map(|(n, d)| format!("{n:16} {d}\n")).collect();
                return Ok((ok(text), None));
            }
            let suite = suite.expect("clap requires --suite");
            let (file, source, bytes) = load(&input)?;
            let opts = SuiteOptions {
                variant,
                force,
                unchecked,
                roles: roles(&ops)?,
                poly: parse_poly(&poly)?,
            };
            let mut report = RunReport::new("check", &source, Some(&bytes));
            report.suite = Some(suite.clone());
            for c in run_suite(&file, &suite, &opts)? {
                report.push_check(c);
            }
            let code = report.exit_code() as u8;
            Ok((
                Done {
                    text: render_report(&report, format),
                    code,
                },
                Some(output),
            ))
        }
        Command::Derive {
            input,
            what,
            ops,
            variant,
            force,
            output,
        } => {
            let (mut file, _, _) = load(&input)?;
            let map = roles(&ops)?;
            let dim = file.dimension;
            let result: Result<(), Error> = (|| {
                match what {
                    Derived::BracketR => {
                        let r = file.operators.get(role(&map, "R")).cloned();
                        let r = r.ok_or_else(|| Error::InvalidArgument("operator R missing".into()))?;
                        let b = file.bracket.as_ref().ok_or_else(|| Error::InvalidArgument("bracket missing".into()))?;
                        file.bracket = Some(derived_bracket(b, &r));
                    }
                    Derived::BracketRho => {
                        let get = |k| {
                            file.operators
                                .get(role(&map, k))
                                .cloned()
                                .ok_or_else(|| Error::InvalidArgument(format!("operator {k} missing")))
                        };
                        let b = file.bracket.clone().ok_or_else(|| Error::InvalidArgument("bracket missing".into()))?;
                        let a = RRhoAlgebra::new(b, get("R")?, get("rho")?)?;
                        file.bracket = Some(bracket_rho(&a));
                    }
                    Derived::TripleR | Derived::TripleRFull => {
                        myb_core::check::ensure_within_guard(dim, 5, force)?;
                        let r = file.operators.get(role(&map, "R")).cloned();
                        let r = r.ok_or_else(|| Error::InvalidArgument("operator R missing".into()))?;
                        let t = file.triple.clone().ok_or_else(|| Error::InvalidArgument("triple missing".into()))?;
                        let s = TripleWithOperator::new(t, r, variant)?;
                        let mode = if matches!(what, Derived::TripleR) {
                            TripleMode::Reduced
                        } else {
                            TripleMode::Full
                        };
                        file.triple = Some(triple_r(&s, mode)?);
                    }
                    Derived::FromBiMyb => {
                        let get = |k| {
                            file.operators
                                .get(role(&map, k))
                                .cloned()
                                .ok_or_else(|| Error::InvalidArgument(format!("operator {k} missing")))
                        };
                        let b = file.bracket.clone().ok_or_else(|| Error::InvalidArgument("bracket missing".into()))?;
                        let a = from_bi_myb(&LieBiOperator::new(b, get("R1")?, get("R2")?)?)?;
                        file.operators.insert("R".into(), a.r().clone());
                        file.operators.insert("rho".into(), a.rho().clone());
                    }
                }
                Ok(())
            })();
            match result {
                Ok(()) => Ok((ok(file.render()), Some(output))),
                Err(e) => Ok((derive_failure(e)?, None)),
            }
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let text: String = NAMES.iter().map(|n| format!("{n}\n")).collect();
                Ok((ok(text), None))
            }
            CatalogAction::Export { name, output } => {
                let file = AlgebraFile::from_entry(&lookup(&name)?);
                Ok((ok(file.render()), Some(output)))
            }
        },
        Command::Search {
            target,
            list,
            seed,
            trials,
            dim,
            entry_bound,
            format,
            output,
        } => {
            if list {
                let text: String = TARGETS.iter().map(|(n, d)| format!("{n:30} {d}\n")).collect();
                return Ok((ok(text), None));
            }
            let mut params = SearchParams::new(&target.expect("clap requires a target"), seed, trials);
            params.dim = dim;
            params.entry_bound = entry_bound;
            let report = search(&params)?;
            Ok((ok(render_report(&report, format)), Some(output)))
        }
        Command::Convert { input, to, output } => {
            let (mut file, _, _) = load(&input)?;
            match to {
                Params::Rxi => {
                    let (r, xi) = convert_params(file.operator("R1")?, file.operator("R2")?)?;
                    file.operators.insert("R".into(), r);
                    file.operators.insert("xi".into(), xi);
                }
                Params::R1r2 => {
                    let (r1, r2) = convert_params_inverse(file.operator("R")?, file.operator("xi")?)?;
                    file.operators.insert("R1".into(), r1);
                    file.operators.insert("R2".into(), r2);
                }
            }
            Ok((ok(file.render()), Some(output)))
        }
        Command::Findings { output } => Ok((ok(findings::render(&findings::findings()?)), Some(output))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((done, output)) => {
            let written = match output {
                Some(o) => write_out(&o, &done.text),
                None => write_out(&Output { output: None }, &done.text),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(done.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
