//! Command-line front end. [`run`] parses arguments, dispatches, and returns
//! the exit code with the text for stdout and stderr, so tests can drive it
//! without a process.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::GradedAlgebra;
use crate::error::Error;
use crate::exact::Field;
use crate::oracle::{self, Budget, Zp};
use crate::quiver::{classify_diagram, classify_via_quiver, positive_roots, Diagram, Quiver};
use crate::species::Superspecies;
use crate::superquiver::{classify_via_table, match_components, Superquiver};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "superrep", version, about = "Graded algebras, superspecies and their representation type")]
struct Cli {
    /// Q or Fp:<p>. Defaults to Q for algebra commands, Fp:2 for oracle commands.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Emit Graphviz DOT instead of JSON where supported.
    #[arg(long, global = true)]
    dot: bool,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check an algebra, species, superquiver or quiver file.
    Validate { file: PathBuf },
    /// The quiver Q_S of a species.
    Quiver { file: PathBuf },
    /// The superquiver Q(S) of a species.
    Superquiver { file: PathBuf },
    /// Representation type of a species or realizable superquiver.
    Classify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Positive roots of a Dynkin diagram, by name or from a quiver file.
    Roots {
        #[arg(long, conflicts_with = "file")]
        diagram: Option<String>,
        file: Option<PathBuf>,
    },
    /// K-dimension of the tensor algebra of a species.
    TensorDim { file: PathBuf },
    /// Smash product A # K[Z2]* of an algebra.
    Smash { file: PathBuf },
    /// Graded species of an algebra from a complete set of idempotents.
    SpeciesOf {
        file: PathBuf,
        /// JSON list of coordinate vectors; defaults to the algebra file's
        /// "idempotents" entry.
        #[arg(long)]
        idempotents: Option<PathBuf>,
    },
    /// Count indecomposable representations by brute force.
    CountIndec {
        file: PathBuf,
        /// For species: enumerate on the species side or on Q_S.
        #[arg(long, value_enum, default_value_t = Side::Species)]
        side: Side,
    },
    /// Check the functor between species and Q_S representations.
    VerifyEquivalence { file: PathBuf },
    /// Graphviz DOT of a quiver, superquiver or species.
    Dot { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Quiver,
    Table,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Side {
    Species,
    Quiver,
}

/// Exit code and output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

enum Output {
    Json(Value),
    Text(String),
}

type Run<T> = std::result::Result<T, Failure>;

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let result = dispatch(&cli).and_then(|(code, out)| {
        let text = match out {
            Output::Json(v) => serde_json::to_string(&v).expect("serializable") + "\n",
            Output::Text(t) => t,
        };
        match &cli.out {
            Some(path) => {
                std::fs::write(path, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                Ok((code, String::new()))
            }
            None => Ok((code, text)),
        }
    });
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Lib(e)) => {
            let code = match e {
                Error::Budget(_) | Error::Undecided(_) => EXIT_UNDECIDED,
                _ => EXIT_INVALID,
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn read(path: &Path) -> Run<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Run<Value> {
    Ok(serde_json::from_str(&read(path)?).map_err(Error::from)?)
}

enum Document {
    Algebra,
    Species,
    Superquiver,
    Quiver,
}

fn kind_of(v: &Value) -> Document {
    if v.get("table").is_some() {
        return Document::Algebra;
    }
    if v.get("bimodules").is_some() {
        return Document::Species;
    }
    let first = v.get("vertices").and_then(|x| x.get(0));
    if first.and_then(|x| x.get("type")).is_some() {
        Document::Species
    } else if first.and_then(|x| x.get("color")).is_some() {
        Document::Superquiver
    } else {
        Document::Quiver
    }
}

fn algebra_field(cli: &Cli) -> Run<Option<Field>> {
    cli.field
        .as_deref()
        .map(|f| Field::parse(f).map_err(|e| Failure::Usage(e.to_string())))
        .transpose()
}

fn load_algebra(cli: &Cli, path: &Path) -> Run<GradedAlgebra> {
    let mut v = read_json(path)?;
    let field = algebra_field(cli)?;
    if let Some(obj) = v.as_object_mut() {
        match field {
            Some(f) => {
                obj.insert("field".into(), json!(f.to_string()));
            }
            None => {
                obj.entry("field").or_insert(json!("Q"));
            }
        }
    }
    Ok(GradedAlgebra::from_json(&v.to_string())?)
}

fn oracle_field(cli: &Cli) -> Run<Zp> {
    let text = cli.field.as_deref().unwrap_or("Fp:2").trim();
    let digits = text.strip_prefix("Fp:").or_else(|| text.strip_prefix('F'));
    let p = digits
        .and_then(|d| d.parse::<u32>().ok())
        .ok_or_else(|| Failure::Usage(format!("oracle commands need a prime field Fp:<p>, got {text}")))?;
    Zp::new(p).map_err(|e| Failure::Usage(e.to_string()))
}

fn load_species(path: &Path) -> Run<Superspecies> {
    let v = read_json(path)?;
    let text = v.to_string();
    match kind_of(&v) {
        Document::Species => Ok(Superspecies::from_json(&text)?),
        Document::Superquiver => Ok(Superquiver::from_json(&text)?.species_from()?),
        _ => Err(Failure::Lib(Error::invalid("expected a species or superquiver file"))),
    }
}

fn budget() -> Run<Budget> {
    Budget::from_env().map_err(|e| Failure::Usage(e.to_string()))
}

fn dispatch(cli: &Cli) -> Run<(i32, Output)> {
    let ok = |o: Output| Ok((EXIT_OK, o));
    if let Some(f) = cli.field.as_deref() {
        // F2 is oracle-only, so accept anything either side understands
        if Field::parse(f).is_err() && oracle_field(cli).is_err() {
            return Err(Failure::Usage(format!("unknown field {f:?}; expected Q or Fp:<p>")));
        }
    }
    match &cli.command {
        Command::Validate { file } => {
            let v = read_json(file)?;
            let text = v.to_string();
            let (kind, report) = match kind_of(&v) {
                Document::Algebra => ("algebra", load_algebra(cli, file)?.validate().violations),
                Document::Species => ("species", Superspecies::from_json(&text)?.validate().violations),
                Document::Superquiver => ("superquiver", Superquiver::from_json(&text)?.realizability_violations()),
                Document::Quiver => {
                    Quiver::from_json(&text)?;
                    ("quiver", Vec::new())
                }
            };
            let code = if report.is_empty() { EXIT_OK } else { EXIT_INVALID };
            Ok((
                code,
                Output::Json(json!({"kind": kind, "valid": report.is_empty(), "violations": report})),
            ))
        }
        Command::Quiver { file } => {
            let q = load_species(file)?.quiver_of();
            ok(if cli.dot { Output::Text(q.dot()) } else { Output::Json(q.to_json_value()) })
        }
        Command::Superquiver { file } => {
            let q = load_species(file)?.superquiver_of();
            ok(if cli.dot { Output::Text(q.dot()) } else { Output::Json(q.to_json_value()) })
        }
        Command::Classify { file, method } => classify(file, *method).map(|v| (EXIT_OK, Output::Json(v))),
        Command::Roots { diagram, file } => {
            let (name, d) = match (diagram, file) {
                (Some(n), _) => (n.clone(), Diagram::by_name(n).map_err(|e| Failure::Usage(e.to_string()))?),
                (None, Some(f)) => {
                    let d = Quiver::from_json(&read(f)?)?.underlying_diagram();
                    (classify_diagram(&d).name(), d)
                }
                (None, None) => return Err(Failure::Usage("roots needs --diagram or a quiver file".into())),
            };
            let roots = positive_roots(&d)?;
            ok(Output::Json(json!({"diagram": name, "count": roots.len(), "roots": roots})))
        }
        Command::TensorDim { file } => {
            let s = Superspecies::from_json(&read(file)?)?;
            ok(Output::Json(json!({"dim": s.tensor_algebra_dim()})))
        }
        Command::Smash { file } => {
            let a = load_algebra(cli, file)?.smash_product();
            ok(Output::Json(serde_json::from_str(&a.to_json()).map_err(Error::from)?))
        }
        Command::SpeciesOf { file, idempotents } => {
            let a = load_algebra(cli, file)?;
            let raw = match idempotents {
                Some(p) => read_json(p)?,
                None => read_json(file)?
                    .get("idempotents")
                    .cloned()
                    .ok_or_else(|| Failure::Usage("no --idempotents and no \"idempotents\" entry in the file".into()))?,
            };
            let list: Vec<Vec<Value>> = serde_json::from_value(raw).map_err(Error::from)?;
            let idems = list
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|x| match x {
                            Value::String(s) => a.field().parse_scalar(s),
                            other => a.field().parse_scalar(&other.to_string()),
                        })
                        .collect::<crate::error::Result<Vec<_>>>()
                })
                .collect::<crate::error::Result<Vec<_>>>()?;
            let s = crate::algebra::graded_species_of(&a, &idems)?;
            ok(Output::Json(s.to_json_value()))
        }
        Command::CountIndec { file, side } => {
            let field = oracle_field(cli)?;
            let b = budget()?;
            let v = read_json(file)?;
            let report = match (kind_of(&v), side) {
                (Document::Quiver, _) => oracle::count_quiver_indecomposables(&Quiver::from_json(&v.to_string())?, field, &b)?,
                (_, Side::Species) => oracle::count_species_indecomposables(&load_species(file)?, field, &b)?,
                (_, Side::Quiver) => {
                    let s = load_species(file)?;
                    s.check_acyclic()?;
                    oracle::count_quiver_indecomposables(&s.quiver_of(), field, &b)?
                }
            };
            ok(Output::Json(serde_json::to_value(report).map_err(Error::from)?))
        }
        Command::VerifyEquivalence { file } => {
            let field = oracle_field(cli)?;
            let b = budget()?;
            let report = oracle::verify_equivalence(&load_species(file)?, field, &b)?;
            let code = if report.passed { EXIT_OK } else { EXIT_INVALID };
            Ok((code, Output::Json(serde_json::to_value(report).map_err(Error::from)?)))
        }
        Command::Dot { file } => {
            let v = read_json(file)?;
            let text = v.to_string();
            let dot = match kind_of(&v) {
                Document::Quiver => Quiver::from_json(&text)?.dot(),
                Document::Superquiver => Superquiver::from_json(&text)?.dot(),
                Document::Species => Superspecies::from_json(&text)?.superquiver_of().dot(),
                Document::Algebra => return Err(Failure::Lib(Error::invalid("algebras have no DOT form"))),
            };
            ok(Output::Text(dot))
        }
    }
}

fn classify(file: &Path, method: Method) -> Run<Value> {
    let s = load_species(file)?;
    let by_quiver = classify_via_quiver(&s)?;
    let by_table = classify_via_table(&s)?;
    let ty = match method {
        Method::Quiver => by_quiver,
        Method::Table => by_table,
        Method::Both if by_quiver == by_table => by_quiver,
        Method::Both => {
            return Err(Failure::Lib(Error::Internal(format!(
                "quiver route says {by_quiver}, table route says {by_table}"
            ))))
        }
    };
    let parts = match_components(&s.superquiver_of());
    let family = if parts.iter().all(|(_, m, _)| m.is_some()) {
        let names: Vec<String> = parts.iter().filter_map(|(_, m, _)| m.map(|m| m.to_string())).collect();
        json!(names.join("+"))
    } else {
        Value::Null
    };
    let quiver_class = classify_diagram(&s.quiver_of().underlying_diagram()).name();
    Ok(json!({"type": ty, "family": family, "quiver_class": quiver_class}))
}
