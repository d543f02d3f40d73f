use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mzv::report::reports_json;
use mzv::{Options, RelationDb, Runner, Suite};
use mzv_core::numeric::NumericEvaluator;
use mzv_core::{Flavor, Modulus, Spaces, SymCombo};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "mzv", version, about = "Exact congruences of multiple zeta values modulo products and lower depth")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build or validate a relation database.
    #[command(subcommand)]
    Db(DbCommand),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Reduce a combination modulo a sum of subspaces.
    Reduce(ReduceArgs),
    /// Evaluate a combination numerically by truncated nested sums.
    Eval(EvalArgs),
}

#[derive(Subcommand)]
enum DbCommand {
    Build {
        #[arg(long, default_value_t = 8)]
        max_weight: usize,
        #[arg(long)]
        out: PathBuf,
        /// Permit weight 9.
        #[arg(long)]
        allow_weight_9: bool,
    },
    Check {
        file: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    Star,
    Sh,
    Both,
}

#[derive(Args)]
struct VerifyArgs {
    /// parity, thm1, thm2, table1, cor, lemma33, sums, weight6, groupring, reg, lemma31, numeric or all.
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 8)]
    max_weight: usize,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = FlavorArg::Both)]
    flavor: FlavorArg,
    /// Load subspaces from a database instead of rebuilding them.
    #[arg(long)]
    db: Option<PathBuf>,
    #[arg(long = "numeric-tol", default_value_t = mzv_core::numeric::DEFAULT_TOL)]
    numeric_tol: f64,
    #[arg(long = "numeric-N", default_value_t = mzv_core::numeric::DEFAULT_N)]
    numeric_n: u64,
    #[arg(long)]
    allow_weight_9: bool,
    /// List every case in text output, not only failures.
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    weight: usize,
    /// For example "2z(3,1) - z(4)".
    expr: String,
    /// For example "Zd:2,P,R".
    #[arg(long = "mod")]
    modulus: String,
    #[arg(long)]
    db: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Combination to evaluate, for example "z(2,1) - z(3)".
    #[arg(long)]
    numeric: String,
    #[arg(long = "N", default_value_t = mzv_core::numeric::DEFAULT_N)]
    n: u64,
}

fn check_weight(w: usize, allow9: bool) -> Result<()> {
    match w {
        0..=8 => Ok(()),
        9 if allow9 => Ok(()),
        9 => bail!("weight 9 is expensive; pass --allow-weight-9"),
        _ => bail!("weights above 9 are not supported"),
    }
}

fn spaces_from(db: Option<&PathBuf>) -> Result<Spaces> {
    let mut spaces = Spaces::new();
    if let Some(path) = db {
        let db = RelationDb::load(path).with_context(|| format!("loading {}", path.display()))?;
        db.install(&mut spaces);
    }
    Ok(spaces)
}

#[derive(Serialize)]
struct DbSummary {
    format: &'static str,
    #[serde(rename = "maxWeight")]
    max_weight: usize,
    subspaces: Vec<SubspaceDim>,
}

#[derive(Serialize)]
struct SubspaceDim {
    weight: usize,
    label: String,
    dim: usize,
}

fn db_summary(db: &RelationDb) -> DbSummary {
    DbSummary {
        format: mzv::db::FORMAT,
        max_weight: db.max_weight(),
        subspaces: db.summary().into_iter().map(|(weight, label, dim)| SubspaceDim { weight, label, dim }).collect(),
    }
}

fn print_db(db: &RelationDb, format: Format) {
    let s = db_summary(db);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&s).expect("serializable")),
        Format::Text => {
            println!("{} up to weight {}", s.format, s.max_weight);
            for d in s.subspaces {
                println!("  weight {:>2}  {:<6} dim {}", d.weight, d.label, d.dim);
            }
        }
    }
}

#[derive(Serialize)]
struct ReduceOutput {
    weight: usize,
    input: String,
    modulus: String,
    verdict: &'static str,
    residue: String,
}

#[derive(Serialize)]
struct EvalOutput {
    input: String,
    #[serde(rename = "N")]
    n: u64,
    value: f64,
    #[serde(rename = "errorBound")]
    error_bound: f64,
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Db(DbCommand::Build { max_weight, out, allow_weight_9 }) => {
            check_weight(max_weight, allow_weight_9)?;
            let start = Instant::now();
            let db = RelationDb::build(max_weight);
            db.save(&out).with_context(|| format!("writing {}", out.display()))?;
            print_db(&db, cli.format);
            if cli.format == Format::Text {
                println!("built in {:.2?}", start.elapsed());
            }
            Ok(true)
        }
        Command::Db(DbCommand::Check { file }) => {
            let db = RelationDb::load(&file).with_context(|| format!("checking {}", file.display()))?;
            print_db(&db, cli.format);
            Ok(true)
        }
        Command::Verify(args) => {
            check_weight(args.max_weight, args.allow_weight_9)?;
            let suites: Vec<Suite> = if args.suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![args.suite.parse::<Suite>().map_err(anyhow::Error::msg)?]
            };
            let flavors = match args.flavor {
                FlavorArg::Star => vec![Flavor::Harmonic],
                FlavorArg::Sh => vec![Flavor::Shuffle],
                FlavorArg::Both => Flavor::BOTH.to_vec(),
            };
            let opts = Options {
                max_weight: args.max_weight,
                n_max: args.n_max,
                flavors,
                numeric_n: args.numeric_n,
                numeric_tol: args.numeric_tol,
                ..Options::default()
            };
            let mut runner = Runner::with_spaces(spaces_from(args.db.as_ref())?, opts);
            let reports: Vec<_> = suites.iter().map(|&s| runner.run(s)).collect();
            match cli.format {
                Format::Json => print!("{}", reports_json(&reports)),
                Format::Text => {
                    for r in &reports {
                        print!("{}", r.to_text(args.verbose));
                    }
                }
            }
            Ok(reports.iter().all(|r| r.ok()))
        }
        Command::Reduce(args) => {
            check_weight(args.weight, true)?;
            let v = SymCombo::parse_with_weight(&args.expr, Some(args.weight))
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            let m: Modulus = args.modulus.parse().map_err(|e| anyhow::anyhow!("{e}"))?;
            let mut spaces = spaces_from(args.db.as_ref())?;
            let verdict = spaces.verdict(args.weight, &v, &m)?;
            let residue = spaces.reduce(args.weight, &v, &m)?;
            let out = ReduceOutput {
                weight: args.weight,
                input: v.to_string(),
                modulus: m.to_string(),
                verdict: verdict.name(),
                residue: residue.to_string(),
            };
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out)?),
                Format::Text => {
                    println!("{}  mod {}: {}", out.input, out.modulus, out.verdict);
                    println!("residue: {}", out.residue);
                }
            }
            Ok(verdict.is_ok())
        }
        Command::Eval(args) => {
            let v: SymCombo = args.numeric.parse().map_err(|e| anyhow::anyhow!("{e}"))?;
            let x = NumericEvaluator::new(args.n).combo(&v)?;
            let out = EvalOutput { input: v.to_string(), n: args.n, value: x.to_f64(), error_bound: x.error_bound };
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out)?),
                Format::Text => println!("{} = {x}", out.input),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
