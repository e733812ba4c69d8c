//! Argument parsing and subcommand dispatch.

use clap::{Args, Parser, Subcommand, ValueEnum};
use discmath::finite::{ClosureKind, Element, FiniteSet, Relation};
use discmath::logic::{are_equivalent, is_satisfiable, is_valid, parse_formula, truth_table};
use discmath::numbers::{factorize, parse_rational, primes_stream};
use discmath::poly::{closed_form, difs, fits_samples};
use discmath::{Error, Integer};
use serde_json::{json, Value};
use thiserror::Error as ThisError;

use crate::parse::{parse_poly, parse_relation, parse_sequence, parse_series};
use crate::render::{
    json_poly, json_rationals, json_table, render_list, render_poly, render_table,
};

#[derive(Debug, Parser)]
#[command(
    name = "discmath",
    version,
    about = "Exact discrete mathematics from the command line"
)]
pub struct Cli {
    /// Emit JSON on stdout instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recover a polynomial f with f(i) equal to the i-th sample
    Closedform {
        /// Samples f(0), f(1), ... separated by commas or spaces
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Consecutive differences of a sequence
    Difs {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Prime factorization of an integer >= 2
    Factor {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// The first K primes
    Primes {
        #[arg(long)]
        count: usize,
    },
    /// Propositional truth-table queries
    Logic(LogicArgs),
    /// Polynomial operations
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Power-series expansions
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Finite binary relations
    #[command(subcommand)]
    Relation(RelationCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LogicQuery {
    Valid,
    Sat,
    Equiv,
    Table,
}

#[derive(Debug, Args)]
pub struct LogicArgs {
    pub query: LogicQuery,
    #[arg(allow_hyphen_values = true)]
    pub formula: String,
    /// Second formula, required by `equiv`
    #[arg(allow_hyphen_values = true)]
    pub other: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum PolyCommand {
    /// Evaluate at a rational point
    Eval {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        at: String,
    },
    Add {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// outer(inner(x))
    Compose {
        #[arg(allow_hyphen_values = true)]
        outer: String,
        #[arg(allow_hyphen_values = true)]
        inner: String,
    },
    Derive {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum SeriesCommand {
    /// Expand numerator / denominator as a power series
    Div {
        #[arg(allow_hyphen_values = true)]
        numerator: String,
        #[arg(allow_hyphen_values = true)]
        denominator: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Expand an expression such as "1 / (1 - x)"
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClosureArg {
    Reflexive,
    Symmetric,
    Transitive,
}

#[derive(Debug, Subcommand)]
pub enum RelationCommand {
    /// Reflexivity, symmetry, transitivity and related flags
    Props {
        #[arg(allow_hyphen_values = true)]
        relation: String,
    },
    /// Smallest reflexive, symmetric or transitive superset
    Closure {
        kind: ClosureArg,
        #[arg(allow_hyphen_values = true)]
        relation: String,
    },
    /// Equivalence classes of an equivalence relation
    Quotient {
        #[arg(allow_hyphen_values = true)]
        relation: String,
    },
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] Error),
}

impl CliError {
    /// 1 for usage and parse errors, 2 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Math(e) if e.is_parse() => 1,
            CliError::Math(_) => 2,
        }
    }
}

/// What one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Output of a successful command: the text and JSON renderings.
struct Rendered {
    text: String,
    json: Value,
}

fn rendered(text: impl Into<String>, json: Value) -> Rendered {
    Rendered {
        text: text.into(),
        json,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: msg,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: msg,
                    code,
                }
            };
        }
    };
    dispatch(&cli)
}

pub fn dispatch(cli: &Cli) -> Outcome {
    match execute(&cli.command) {
        Ok(out) => {
            let stdout = if cli.json {
                out.json.to_string()
            } else {
                out.text
            };
            Outcome {
                stdout: stdout + "\n",
                stderr: String::new(),
                code: 0,
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

fn execute(cmd: &Command) -> Result<Rendered, CliError> {
    match cmd {
        Command::Closedform { seq } => {
            let samples = parse_sequence(seq)?;
            let f = closed_form(&samples)?;
            let verified = fits_samples(&f, &samples);
            let mut json = json_poly(&f);
            json["verified"] = Value::Bool(verified);
            Ok(rendered(format!("f(x) = {}", render_poly(&f)), json))
        }
        Command::Difs { seq } => {
            let d = difs(&parse_sequence(seq)?);
            Ok(rendered(
                render_list(&d),
                json!({ "terms": json_rationals(&d) }),
            ))
        }
        Command::Factor { n } => {
            let value = parse_integer(n)?;
            let factors = factorize(&value)?;
            let text = factors
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" * ");
            let json = json!({
                "n": value.to_string(),
                "factors": factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            Ok(rendered(format!("{value} = {text}"), json))
        }
        Command::Primes { count } => {
            let ps: Vec<String> = primes_stream()
                .take(*count)
                .map(|p| p.to_string())
                .collect();
            Ok(rendered(ps.join(", "), json!({ "primes": ps })))
        }
        Command::Logic(args) => logic(args),
        Command::Poly(cmd) => poly(cmd),
        Command::Series(cmd) => {
            let (series, terms) = match cmd {
                SeriesCommand::Div {
                    numerator,
                    denominator,
                    terms,
                } => {
                    let num = parse_series(numerator)?;
                    let den = parse_series(denominator)?;
                    (num.div(&den)?, *terms)
                }
                SeriesCommand::Expand { expr, terms } => (parse_series(expr)?, *terms),
            };
            let cs = series.take(terms);
            Ok(rendered(
                render_list(&cs),
                json!({ "coefficients": json_rationals(&cs) }),
            ))
        }
        Command::Relation(cmd) => relation(cmd),
    }
}

fn parse_integer(text: &str) -> Result<Integer, CliError> {
    let r = parse_rational(text)?;
    if !r.is_integer() {
        return Err(Error::parse(0, format!("expected an integer, got {r}")).into());
    }
    Ok(r.to_integer())
}

fn logic(args: &LogicArgs) -> Result<Rendered, CliError> {
    let f = parse_formula(&args.formula)?;
    let second = args.other.as_deref().map(parse_formula).transpose()?;
    match (args.query, second) {
        (LogicQuery::Equiv, Some(g)) => {
            let eq = are_equivalent(&f, &g);
            let text = if eq { "equivalent" } else { "not equivalent" };
            Ok(rendered(text, json!({ "equivalent": eq })))
        }
        (LogicQuery::Equiv, None) => Err(CliError::Usage("equiv needs two formulas".into())),
        (_, Some(_)) => Err(CliError::Usage("only equiv takes a second formula".into())),
        (LogicQuery::Valid, None) => {
            let v = is_valid(&f);
            Ok(rendered(
                if v { "valid" } else { "not valid" },
                json!({ "valid": v }),
            ))
        }
        (LogicQuery::Sat, None) => {
            let s = is_satisfiable(&f);
            let text = if s { "satisfiable" } else { "unsatisfiable" };
            Ok(rendered(text, json!({ "satisfiable": s })))
        }
        (LogicQuery::Table, None) => {
            let t = truth_table(&f);
            Ok(rendered(render_table(&t, &f.to_string()), json_table(&t)))
        }
    }
}

fn poly(cmd: &PolyCommand) -> Result<Rendered, CliError> {
    let result = match cmd {
        PolyCommand::Eval { poly, at } => {
            let p = parse_poly(poly)?;
            let v = p.eval(&parse_rational(at)?);
            return Ok(rendered(v.to_string(), json!({ "value": v.to_string() })));
        }
        PolyCommand::Add { a, b } => parse_poly(a)? + parse_poly(b)?,
        PolyCommand::Mul { a, b } => parse_poly(a)? * parse_poly(b)?,
        PolyCommand::Compose { outer, inner } => parse_poly(outer)?.compose(&parse_poly(inner)?),
        PolyCommand::Derive { poly } => parse_poly(poly)?.derivative(),
    };
    Ok(rendered(render_poly(&result), json_poly(&result)))
}

fn elements(set: &FiniteSet<Element>) -> Vec<String> {
    set.iter().map(ToString::to_string).collect()
}

fn relation(cmd: &RelationCommand) -> Result<Rendered, CliError> {
    match cmd {
        RelationCommand::Props { relation } => {
            let p = parse_relation(relation)?.properties();
            let flags = [
                ("reflexive", p.reflexive),
                ("irreflexive", p.irreflexive),
                ("symmetric", p.symmetric),
                ("antisymmetric", p.antisymmetric),
                ("transitive", p.transitive),
                ("equivalence", p.equivalence),
            ];
            let text = flags
                .iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect::<Vec<_>>()
                .join("\n");
            let json = Value::Object(
                flags
                    .iter()
                    .map(|(k, v)| (k.to_string(), Value::Bool(*v)))
                    .collect(),
            );
            Ok(rendered(text, json))
        }
        RelationCommand::Closure { kind, relation } => {
            let kind = match kind {
                ClosureArg::Reflexive => ClosureKind::Reflexive,
                ClosureArg::Symmetric => ClosureKind::Symmetric,
                ClosureArg::Transitive => ClosureKind::Transitive,
            };
            let c: Relation<Element> = parse_relation(relation)?.closure(kind);
            let pairs: Vec<[String; 2]> = c
                .pairs()
                .iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect();
            let json = json!({ "domain": elements(c.domain()), "pairs": pairs });
            Ok(rendered(c.to_string(), json))
        }
        RelationCommand::Quotient { relation } => {
            let classes = parse_relation(relation)?.quotient()?;
            let json = json!({ "classes": classes.iter().map(elements).collect::<Vec<_>>() });
            Ok(rendered(classes.to_string(), json))
        }
    }
}
