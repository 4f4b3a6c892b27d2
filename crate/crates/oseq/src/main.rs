//! `oseq`: Hilbert functions of graded Artinian algebras from the command
//! line. Validate O-sequences, build lex-segment ideals, compute graded
//! Betti numbers, certify sequences as not level, check Weak-Lefschetz
//! necessary conditions, construct level sequences, and cross-check the
//! closed formulas against the exact rational oracle.
//!
//! Exit codes: 0 success (and `Unknown` verdicts), 2 invalid input,
//! 3 internal failure, 10 `NotLevel` (for `level` only).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use oseq::formats;
use oseq_core::betti::{
    ek_betti, gin_betti_plateau, gin_betti_plateau_with_reduction_number, gin_top_betti,
    gin_top_betti_with_reduction_number,
};
use oseq_core::level::{
    check_level, check_wlp_necessary, for_each_valid_osequence, iarrobino_extend,
    plateau_level_family, r1_upper_bound, VerdictStatus,
};
use oseq_core::lexideal::{lex_segment_ideal, lex_segment_ideal_to};
use oseq_core::oracle::{
    gin_sample, koszul_betti, r1_general, socle_dims, verify_cancellation,
};
use oseq_core::osequence::{lower_shift, macaulay_expansion, upper_shift, OSequence};

#[derive(Parser)]
#[command(name = "oseq", version, about = "Hilbert-function combinatorics of graded Artinian algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check Macaulay's growth bound on a sequence.
    Validate { seq: String },
    /// Shape analysis: first drop, plateaus, strict unimodality.
    Shape { seq: String },
    /// The i-binomial expansion of h, with both growth operators.
    Expand { h: String, i: u32 },
    /// Tabulate the Macaulay and Green operators along a sequence.
    Bound { seq: String },
    /// Build the lex-segment ideal of a sequence.
    Lex(LexArgs),
    /// Graded Betti numbers of the lex ideal (Eliahou-Kervaire).
    Betti(BettiArgs),
    /// Betti numbers of the generic initial ideal from Hilbert data.
    GinBetti(GinBettiArgs),
    /// Certify a sequence as not level, or report Unknown.
    Level(LevelArgs),
    /// Necessary conditions for the Weak Lefschetz Property.
    Wlp(WlpArgs),
    /// Construct level sequences.
    Construct {
        #[command(subcommand)]
        family: ConstructCommand,
    },
    /// Exact rational linear-algebra oracle on an explicit ideal.
    Oracle {
        #[command(subcommand)]
        op: OracleCommand,
    },
    /// Enumerate and classify every valid O-sequence with the given
    /// codimension and socle degree, writing a CSV atlas.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct LexArgs {
    seq: String,
    #[arg(long)]
    n: usize,
    /// List minimal generators per degree as text.
    #[arg(long)]
    gens: bool,
    /// Materialize slices through this degree.
    #[arg(long)]
    degree: Option<usize>,
}

#[derive(Args)]
struct BettiArgs {
    seq: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct GinBettiArgs {
    seq: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    /// Use a sharper reduction number known from the algebra itself.
    #[arg(long)]
    r1: Option<usize>,
}

#[derive(Args)]
struct LevelArgs {
    seq: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct WlpArgs {
    seq: String,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Extend a level base sequence by a generic form of its socle degree.
    Iarrobino {
        #[arg(long)]
        base: String,
        #[arg(long)]
        r: u32,
    },
    /// The level family with tail (2d+k+1, 2d+k, 2d+k).
    Plateau {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u64,
    },
}

#[derive(Args)]
struct OracleArgs {
    /// JSON file holding the ideal.
    #[arg(long)]
    ideal: PathBuf,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Degree cap for Artinian detection (default from OSEQ_MAX_DEGREE,
    /// else 20).
    #[arg(long)]
    max_degree: Option<usize>,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Koszul-homology Betti numbers of the ideal.
    Betti {
        #[command(flatten)]
        common: OracleArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Hilbert function of the quotient through one past the socle degree.
    Hilbert {
        #[command(flatten)]
        common: OracleArgs,
    },
    /// Sampled generic initial ideal (degrevlex).
    Gin {
        #[command(flatten)]
        common: OracleArgs,
    },
    /// Socle dimensions of the quotient.
    Socle {
        #[command(flatten)]
        common: OracleArgs,
    },
    /// Reduction number via a general linear form.
    R1 {
        #[command(flatten)]
        common: OracleArgs,
    },
    /// Cross-check the cancellation chain beta(I) <= beta(Gin) <= beta(lex).
    Cancel {
        #[command(flatten)]
        common: OracleArgs,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 3)]
    codim: u64,
    #[arg(long)]
    socle_degree: usize,
    #[arg(long)]
    out: PathBuf,
}

/// Failures are split by exit code: bad input (2) vs internal trouble (3).
enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::Input(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            CliError::Internal(msg) => {
                eprintln!("internal error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn internal_err(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => e.report(),
    }
}

fn parse_seq(text: &str) -> Result<OSequence, CliError> {
    OSequence::from_str(text).map_err(input_err)
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn max_degree_cap(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| {
            std::env::var("OSEQ_MAX_DEGREE")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(20)
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Validate { seq } => {
            let h = parse_seq(&seq)?;
            match h.validate() {
                Ok(()) => {
                    print_json(&json!({
                        "valid": true,
                        "sequence": formats::sequence_json(&h),
                        "socle_degree": h.socle_degree(),
                        "codim": formats::biguint_json(&h.codim()),
                    }));
                    Ok(ExitCode::SUCCESS)
                }
                Err(violation) => {
                    print_json(&json!({
                        "valid": false,
                        "degree": violation.degree,
                        "found": formats::biguint_json(&violation.found),
                        "bound": formats::biguint_json(&violation.bound),
                    }));
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Shape { seq } => {
            let h = parse_seq(&seq)?;
            h.validate().map_err(input_err)?;
            print_json(&formats::shape_json(&h.shape()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand { h, i } => {
            let value = BigUint::from_str(&h).map_err(input_err)?;
            if value.to_string() == "0" || i == 0 {
                return Err(CliError::Input(String::from("expand requires h >= 1 and i >= 1")));
            }
            let expansion = macaulay_expansion(&value, i);
            let mut out = formats::expansion_json(&expansion);
            out["upper"] = formats::biguint_json(&upper_shift(&value, i));
            out["lower"] = formats::biguint_json(&lower_shift(&value, i));
            print_json(&out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound { seq } => {
            let h = parse_seq(&seq)?;
            h.validate().map_err(input_err)?;
            let rows: Vec<Value> = (1..=h.socle_degree())
                .map(|d| {
                    let hd = h.entry(d);
                    json!({
                        "d": d,
                        "h": formats::biguint_json(&hd),
                        "upper": formats::biguint_json(&upper_shift(&hd, d as u32)),
                        "lower": formats::biguint_json(&lower_shift(&hd, d as u32)),
                    })
                })
                .collect();
            print_json(&json!({ "bounds": rows, "r1_upper_bound": r1_upper_bound(&h) }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Lex(args) => {
            let h = parse_seq(&args.seq)?;
            let ideal = match args.degree {
                Some(d) => lex_segment_ideal_to(&h, args.n, d),
                None => lex_segment_ideal(&h, args.n),
            }
            .map_err(input_err)?;
            if args.gens {
                for d in 0..=ideal.max_degree() {
                    let gens = ideal.minimal_generators(d).map_err(internal_err)?;
                    if gens.is_empty() {
                        continue;
                    }
                    let list: Vec<String> = gens.iter().map(|m| m.to_string()).collect();
                    println!("{d}: {}", list.join(" "));
                }
            } else {
                print_json(&formats::stable_ideal_json(&ideal));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Betti(args) => {
            let h = parse_seq(&args.seq)?;
            let ideal = lex_segment_ideal(&h, args.n).map_err(input_err)?;
            let diagram = ek_betti(&ideal).map_err(internal_err)?;
            match args.format {
                Format::Text => print!("{}", diagram.render()),
                Format::Json => print_json(&formats::betti_json(&diagram)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::GinBetti(args) => {
            let h = parse_seq(&args.seq)?;
            h.validate().map_err(input_err)?;
            let row = match args.r1 {
                Some(r1) => gin_betti_plateau_with_reduction_number(&h, args.n, args.d, r1),
                None => gin_betti_plateau(&h, args.n, args.d),
            }
            .map_err(input_err)?;
            let top = if args.n == 3 {
                let value = match args.r1 {
                    Some(r1) => gin_top_betti_with_reduction_number(&h, args.d, r1),
                    None => gin_top_betti(&h, args.d),
                };
                value.ok().map(|v| formats::biguint_json(&v))
            } else {
                None
            };
            print_json(&json!({
                "d": args.d,
                "row": row.iter().map(formats::biguint_json).collect::<Vec<_>>(),
                "top_from_previous_drop": top,
                "r1_upper_bound": r1_upper_bound(&h),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Level(args) => {
            let h = parse_seq(&args.seq)?;
            let verdict = check_level(&h);
            match args.format {
                Format::Json => print_json(&formats::verdict_json(&verdict)),
                Format::Text => print!("{}", formats::verdict_text(&verdict)),
            }
            Ok(match verdict.status {
                VerdictStatus::Unknown => ExitCode::SUCCESS,
                VerdictStatus::NotLevel => ExitCode::from(10),
                VerdictStatus::Invalid => ExitCode::from(2),
            })
        }
        Command::Wlp(args) => {
            let h = parse_seq(&args.seq)?;
            let check = check_wlp_necessary(&h, args.n).map_err(input_err)?;
            print_json(&formats::wlp_json(&check));
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { family } => {
            let result = match family {
                ConstructCommand::Iarrobino { base, r } => {
                    let base = parse_seq(&base)?;
                    iarrobino_extend(&base, r).map_err(input_err)?
                }
                ConstructCommand::Plateau { d, k } => {
                    plateau_level_family(d, k).map_err(input_err)?
                }
            };
            println!("{result}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { op } => run_oracle(op),
        Command::Sweep(args) => run_sweep(args),
    }
}

fn load_ideal(args: &OracleArgs) -> Result<oseq_core::oracle::GradedIdeal, CliError> {
    let text = fs::read_to_string(&args.ideal)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", args.ideal.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(input_err)?;
    formats::ideal_from_json(&value).map_err(input_err)
}

fn run_oracle(op: OracleCommand) -> Result<ExitCode, CliError> {
    match op {
        OracleCommand::Betti { common, format } => {
            let ideal = load_ideal(&common)?;
            let tmax = max_degree_cap(common.max_degree);
            let diagram = koszul_betti(&ideal, tmax).map_err(input_err)?;
            match format {
                Format::Text => print!("{}", diagram.render()),
                Format::Json => print_json(&formats::betti_json(&diagram)),
            }
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::Hilbert { common } => {
            let ideal = load_ideal(&common)?;
            let tmax = max_degree_cap(common.max_degree);
            let s = ideal.socle_degree(tmax).map_err(input_err)?;
            print_json(&json!({
                "hilbert": ideal.hilbert_quotient(0, s + 1),
                "socle_degree": s,
            }));
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::Gin { common } => {
            let ideal = load_ideal(&common)?;
            let tmax = max_degree_cap(common.max_degree);
            let slices = gin_sample(&ideal, common.seed, tmax).map_err(input_err)?;
            print_json(&formats::slices_json(&slices));
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::Socle { common } => {
            let ideal = load_ideal(&common)?;
            let tmax = max_degree_cap(common.max_degree);
            let s = ideal.socle_degree(tmax).map_err(input_err)?;
            print_json(&json!({ "socle_dims": socle_dims(&ideal, s) }));
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::R1 { common } => {
            let ideal = load_ideal(&common)?;
            let tmax = max_degree_cap(common.max_degree);
            let r1 = r1_general(&ideal, common.seed, tmax).map_err(input_err)?;
            print_json(&json!({ "r1": r1 }));
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::Cancel { common } => {
            let ideal = load_ideal(&common)?;
            let tmax = max_degree_cap(common.max_degree);
            let report = verify_cancellation(&ideal, common.seed, tmax).map_err(input_err)?;
            print_json(&formats::cancellation_json(&report));
            Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::from(3) })
        }
    }
}

fn run_sweep(args: SweepArgs) -> Result<ExitCode, CliError> {
    let mut sequences: Vec<OSequence> = Vec::new();
    for_each_valid_osequence(args.codim, args.socle_degree, |h| sequences.push(h.clone()));
    let mut rows: Vec<[String; 4]> = sequences
        .par_iter()
        .map(|h| formats::atlas_record(h, &check_level(h)))
        .collect();
    rows.sort();
    let mut writer = csv::Writer::from_path(&args.out)
        .map_err(|e| CliError::Input(format!("cannot open {}: {e}", args.out.display())))?;
    writer
        .write_record(["sequence", "status", "certificates", "witness_degrees"])
        .map_err(internal_err)?;
    for row in &rows {
        writer.write_record(row).map_err(internal_err)?;
    }
    writer.flush().map_err(internal_err)?;
    eprintln!("classified {} sequences into {}", rows.len(), args.out.display());
    Ok(ExitCode::SUCCESS)
}
