use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use confluent::expr::{parse_laurent, to_latex};
use confluent::laurent::LaurentJson;
use confluent::verify::{self, CheckConfig, Mode, RunReport, Status, Suite};
use confluent::{
    AlgebraId, Family, FamilyKind, HeckeError, LaurentPoly, NCExpression, ParamRat, Params, Representation,
};

#[derive(Parser)]
#[command(name = "confluent", version, about = "Exact computations in the confluent Cherednik algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbolic,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Print the non-symmetric polynomial E_n of a family.
    Poly {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Apply an element of an algebra to a Laurent polynomial.
    Apply {
        #[arg(long)]
        algebra: AlgebraId,
        /// Word or linear combination of words, e.g. "q*T0*Xi + c - X*T0 - X".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Inline polynomial such as "z + q*z^-1 - q*a", or its JSON form.
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification suites and print the report.
    Verify {
        #[arg(long)]
        algebra: AlgebraId,
        /// Comma-separated suite names, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: ModeArg,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<u32>,
        /// Include per-check wall time in milliseconds.
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Tabulate the extreme coefficients of E_-n and E_n.
    Table {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        nmax: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Exit status 1: a check failed or an operator left the polynomial ring.
/// Exit status 2: bad usage or unparsable input.
enum Failure {
    Check(String),
    Usage(String),
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Check(msg) => {
                if !msg.is_empty() {
                    eprintln!("error: {msg}");
                }
                ExitCode::from(1)
            }
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

#[derive(Serialize)]
struct PolyJson {
    family: &'static str,
    n: i64,
    poly: LaurentJson,
}

#[derive(Serialize)]
struct RowJson {
    index: i64,
    low_exp: i64,
    low_coeff: String,
    high_exp: i64,
    high_coeff: String,
}

fn render(f: &LaurentPoly<ParamRat>, format: Format) -> String {
    match format {
        Format::Text => f.to_string(),
        Format::Json => serde_json::to_string(&f.to_json()).expect("serializable"),
        Format::Latex => to_latex(f),
    }
}

fn cmd_poly(kind: FamilyKind, n: i64, format: Format) -> Result<String, Failure> {
    let f = Family::symbolic(kind).nonsym_poly(n).map_err(usage)?;
    Ok(match format {
        Format::Json => serde_json::to_string(&PolyJson {
            family: kind.name(),
            n,
            poly: f.to_json(),
        })
        .expect("serializable"),
        other => render(&f, other),
    })
}

fn cmd_apply(algebra: AlgebraId, word: &str, input: &str, format: Format) -> Result<String, Failure> {
    let expr: NCExpression<ParamRat> = word.parse().map_err(usage)?;
    let f = parse_laurent(input).map_err(usage)?;
    let rep = Representation::new(algebra, &Params::symbolic());
    let expr = expr.at(rep.params()).map_err(usage)?;
    match rep.eval_word(&expr, &f) {
        Ok(g) => Ok(render(&g, format)),
        Err(e @ HeckeError::OperatorNotPolynomial { .. }) => Err(Failure::Check(e.to_string())),
        Err(e) => Err(usage(e)),
    }
}

fn parse_suites(text: &str, algebra: AlgebraId) -> Result<Vec<Suite>, Failure> {
    if text.trim() == "all" {
        return Ok(Suite::all_for(algebra));
    }
    text.split(',').map(|s| s.trim().parse::<Suite>().map_err(usage)).collect()
}

fn render_report(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json_pretty(),
        _ => {
            let mut out = String::new();
            for c in &report.checks {
                let status = if c.status == Status::Pass { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status} {} ({} inputs)\n", c.id, c.items));
                if c.status != Status::Pass {
                    if let Some(w) = &c.witness {
                        out.push_str(&format!("     at {}", w.input));
                        if let Some(p) = &w.point {
                            out.push_str(&format!(" [{p}]"));
                        }
                        if let Some(e) = &w.error {
                            out.push_str(&format!(": {e}"));
                        }
                        out.push('\n');
                    }
                }
            }
            out.push_str(&format!("{} passed, {} failed", report.summary.pass, report.summary.fail));
            out
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    algebra: AlgebraId,
    suite: &str,
    nmax: u32,
    mode: ModeArg,
    seed: Option<u64>,
    trials: Option<u32>,
    timings: bool,
    format: Format,
) -> Result<String, Failure> {
    let mode = match mode {
        ModeArg::Symbolic => {
            if seed.is_some() || trials.is_some() {
                return Err(usage("--seed and --trials require --mode random"));
            }
            Mode::Symbolic
        }
        ModeArg::Random => Mode::Specialized {
            seed: seed.unwrap_or(0),
            trials: trials.unwrap_or(3),
        },
    };
    let cfg = CheckConfig::new(algebra, parse_suites(suite, algebra)?, nmax, mode);
    let mut report = verify::run(&cfg).map_err(usage)?;
    if timings {
        report = report.with_timings();
    }
    let text = render_report(&report, format);
    if report.all_pass() {
        Ok(text)
    } else {
        println!("{text}");
        Err(Failure::Check(String::new()))
    }
}

fn cmd_table(kind: FamilyKind, nmax: u32, format: Format) -> Result<String, Failure> {
    if nmax < 1 {
        return Err(usage("nmax must be at least 1"));
    }
    let family = Family::symbolic(kind);
    let mut rows = Vec::new();
    for n in 1..=nmax as i64 {
        for idx in [-n, n] {
            let d = family.leading_data(idx).map_err(usage)?;
            rows.push(RowJson {
                index: idx,
                low_exp: d.low_exp,
                low_coeff: d.low_coeff.to_string(),
                high_exp: d.high_exp,
                high_coeff: d.high_coeff.to_string(),
            });
        }
    }
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("serializable"),
        _ => {
            let mut out = String::from("index\tlow_exp\tlow_coeff\thigh_exp\thigh_coeff");
            for r in &rows {
                out.push_str(&format!(
                    "\n{}\t{}\t{}\t{}\t{}",
                    r.index, r.low_exp, r.low_coeff, r.high_exp, r.high_coeff
                ));
            }
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Poly { family, n, format } => cmd_poly(family, n, format),
        Command::Apply {
            algebra,
            word,
            input,
            format,
        } => cmd_apply(algebra, &word, &input, format),
        Command::Verify {
            algebra,
            suite,
            nmax,
            mode,
            seed,
            trials,
            timings,
            format,
        } => cmd_verify(algebra, &suite, nmax, mode, seed, trials, timings, format),
        Command::Table { family, nmax, format } => cmd_table(family, nmax, format),
    };
    match result {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => f.report(),
    }
}
