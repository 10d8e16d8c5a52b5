//! Thin command-line front end over the `superfock` library.
//!
//! Exit codes: 0 when every check passes (or fails exactly as predicted),
//! 1 when a check fails, 2 on configuration or parse errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num::BigRational;

use superfock::fock::GramForm;
use superfock::group::{act_word, parse_word, NumericFockVector, OneParamFamily, VectorFile};
use superfock::report::{render, OutputFormat, RunConfig, VerificationReport};
use superfock::scalar::parse_rational;
use superfock::{
    gram_csv, verify_algebra, verify_all, verify_fock, verify_group, witness_not_strong,
    AlphaParam,
};

/// Padding degrees appended above the cutoff when a word contains the
/// numeric-exponential factor.
const A2_PADDING: u32 = 16;

/// Deformation parameters exercised when no `--alpha` is given: three
/// negative (form-preserving) and two positive (form-breaking) points.
const ALPHA_SWEEP: [(i64, i64); 5] = [(-1, 2), (-2, 1), (-7, 3), (1, 2), (5, 2)];

#[derive(Parser)]
#[command(
    name = "superfock",
    about = "Exact verification and group actions for the deformed Fock model",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Deformation parameter as a rational, e.g. -2 or -7/3. Natural numbers
    /// are rejected unless --allow-natural is set. Default: a five-point
    /// sweep for `verify`, -2 elsewhere.
    #[arg(long, global = true, allow_hyphen_values = true)]
    alpha: Option<String>,

    /// Truncation degree for basis scans.
    #[arg(long = "N", global = true, default_value_t = 8)]
    n: u32,

    /// Tolerance for floating-point checks (exact checks ignore it).
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,

    /// Seed for randomized probes; reports are deterministic given
    /// (alpha, N, seed).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Report rendering: json, csv, or text.
    #[arg(long, global = true, default_value = "text")]
    output: String,

    /// Permit natural-number alpha so its predicted degeneracy can be
    /// exercised.
    #[arg(long, global = true)]
    allow_natural: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification battery: algebra, fock, group, or all.
    Verify {
        /// Which battery to run.
        target: String,
    },
    /// Print the exact Gram table of the chosen form as CSV.
    Gram {
        /// Which form: `bf` (indefinite pairing) or `s` (positive form).
        #[arg(long, default_value = "bf")]
        form: String,
    },
    /// Apply a word of one-parameter group elements to a coefficient vector.
    Act {
        /// Whitespace-separated factors, rightmost applied first,
        /// e.g. "K2(0.3) A3(-1.2)". An empty word echoes the vector.
        word: String,
        /// JSON file with the four coefficient families
        /// {"f1": [[re, im], ...], "f2": ..., "f3": ..., "f4": ...}.
        file: PathBuf,
    },
    /// Check that one explicit generator obstructs every positive rescaling
    /// of the pairing.
    Witness {
        /// Four positive rationals, comma-separated.
        #[arg(long, default_value = "1,1,1,1")]
        eps: String,
    },
}

fn parse_alpha(text: &str, allow_natural: bool) -> Result<AlphaParam, String> {
    let r = parse_rational(text).map_err(|e| e.to_string())?;
    if allow_natural {
        Ok(AlphaParam::new_unchecked(r))
    } else {
        AlphaParam::new(r).map_err(|e| e.to_string())
    }
}

fn single_alpha(cli: &Cli) -> Result<AlphaParam, String> {
    match &cli.alpha {
        Some(s) => parse_alpha(s, cli.allow_natural),
        None => Ok(AlphaParam::new(BigRational::new((-2).into(), 1.into())).expect("-2 is regular")),
    }
}

fn config(cli: &Cli, alpha: AlphaParam) -> RunConfig {
    RunConfig {
        alpha,
        n: cli.n,
        tol: cli.tol,
        seed: cli.seed,
        allow_natural: cli.allow_natural,
    }
}

/// Write to stdout, treating a closed pipe (e.g. `| head`) as success.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn report_exit(reports: &[VerificationReport], format: OutputFormat) -> i32 {
    emit(&render(reports, format));
    emit("\n");
    if reports.iter().all(|r| r.acceptable()) {
        0
    } else {
        1
    }
}

fn run(cli: &Cli) -> Result<i32, String> {
    let format: OutputFormat = cli.output.parse()?;
    match &cli.command {
        Command::Verify { target } => {
            let battery: fn(&RunConfig) -> Vec<VerificationReport> = match target.as_str() {
                "algebra" => verify_algebra,
                "fock" => verify_fock,
                "group" => verify_group,
                "all" => verify_all,
                other => {
                    return Err(format!(
                        "unknown verify target `{other}` (expected algebra, fock, group, or all)"
                    ))
                }
            };
            let alphas: Vec<AlphaParam> = match &cli.alpha {
                Some(s) => vec![parse_alpha(s, cli.allow_natural)?],
                None => ALPHA_SWEEP
                    .iter()
                    .map(|(p, q)| {
                        AlphaParam::new(BigRational::new((*p).into(), (*q).into()))
                            .expect("sweep points are regular")
                    })
                    .collect(),
            };
            let mut reports = Vec::new();
            for alpha in alphas {
                reports.extend(battery(&config(cli, alpha)));
            }
            Ok(report_exit(&reports, format))
        }
        Command::Gram { form } => {
            let form = match form.as_str() {
                "bf" => GramForm::BesselFischer,
                "s" => GramForm::S,
                other => return Err(format!("unknown form `{other}` (expected bf or s)")),
            };
            let alpha = single_alpha(cli)?;
            emit(&gram_csv(&alpha, cli.n, form));
            Ok(0)
        }
        Command::Act { word, file } => {
            let alpha = single_alpha(cli)?;
            let word = parse_word(word).map_err(|e| e.to_string())?;
            if alpha.is_natural() && word.iter().any(|e| e.family == OneParamFamily::A2) {
                return Err(
                    "the numeric-exponential factor is undefined at natural alpha \
                     (the positive weights vanish)"
                        .to_string(),
                );
            }
            let text = std::fs::read_to_string(file)
                .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
            let parsed: VectorFile = serde_json::from_str(&text)
                .map_err(|e| format!("cannot parse {}: {e}", file.display()))?;
            let vector = NumericFockVector::from(&parsed);
            let result = act_word(&word, &vector, &alpha, A2_PADDING).map_err(|e| e.to_string())?;
            if result.band_indicator > 0.0 {
                eprintln!(
                    "note: numeric-exponential padding band holds S-mass fraction {:.3e}^2",
                    result.band_indicator
                );
            }
            let out = VectorFile::from(&result.vector);
            emit(&serde_json::to_string_pretty(&out).expect("vector serializes"));
            emit("\n");
            Ok(0)
        }
        Command::Witness { eps } => {
            let parts: Vec<&str> = eps.split(',').map(str::trim).collect();
            if parts.len() != 4 {
                return Err(format!(
                    "--eps needs four comma-separated rationals, got {}",
                    parts.len()
                ));
            }
            let mut vals = Vec::with_capacity(4);
            for p in &parts {
                vals.push(parse_rational(p).map_err(|e| e.to_string())?);
            }
            let eps: [BigRational; 4] = [
                vals[0].clone(),
                vals[1].clone(),
                vals[2].clone(),
                vals[3].clone(),
            ];
            let alpha = single_alpha(cli)?;
            let report = witness_not_strong(&config(cli, alpha), &eps)?;
            Ok(report_exit(&[report], format))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
