//! Command-line front end. [`run`] maps every execution path to one exit
//! code: 0 verified or success, 1 violated, 2 inconclusive, 3 usage or input
//! error.

pub mod bench;
pub mod emit;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use crate::asymptotics::{
    bessel_enclosure, error_budget, laguerre_contour_oracle, BesselOrder, PROOF_THRESHOLD,
};
use crate::exact::{laguerre_at_one, laguerre_direct, q_at_one_stream, q_poly_stream, Rational};
use crate::interval::{sqrt_enclosure, AdaptivePrecision, Interval, Precision};
use crate::verify::{self, parse_rational, Theorem2Form, Verdict, VerificationReport, VerifyError};
pub use emit::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

pub const DEFAULT_N_MAX: u64 = 2000;

/// Largest absolute difference tolerated between the contour oracle and the
/// exact value.
pub const CONTOUR_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "laguerre-cert", version, about = "Certified checks for Q_n(1) and L_n(1)")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output here instead of stdout
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Starting working precision in bits
    #[arg(long, default_value_t = 128, global = true)]
    pub precision_start: u32,
    /// Precision cap in bits; undecided comparisons past it are Inconclusive
    #[arg(long, default_value_t = 32768, env = "LAGUERRE_CERT_PRECISION_CAP", global = true)]
    pub precision_cap: u32,
    /// Worker threads for sweeps
    #[arg(long, env = "LAGUERRE_CERT_THREADS", global = true)]
    pub threads: Option<usize>,
    /// Suppress progress messages
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Body,
    Abstract,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// |Q_n(1)| <= n! exactly for 0 <= n <= n_max
    Folklore {
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u64,
    },
    /// Extrema of Q_n(1) n^(1/4)/n! over 1 <= n <= n_max
    RatioExtrema {
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u64,
    },
    /// |L_n(1) - M(n)| n^(3/4) < c for 1 <= n <= n_max
    Theorem1Numeric {
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u64,
        /// Threshold, as a decimal or a fraction
        #[arg(long, default_value = "2.38")]
        c: String,
    },
    /// Analytic tail constants at a single n >= 10000
    Theorem1Tail {
        #[arg(long, default_value_t = PROOF_THRESHOLD)]
        n: u64,
    },
    /// The same bound stated for Q_n(1)
    Theorem2 {
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Form::Body)]
        form: Form,
    },
    /// Exact series coefficient checks
    Lemma4 {
        #[arg(long, default_value_t = 500)]
        k_max: u64,
    },
    /// Scalar inequality behind the power bound
    Polynomiksi,
    /// |Q_n(1)| <= n! e^(2 sqrt n) for 0 <= n <= n_max
    Qraja {
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u64,
    },
    /// Exact Q_n(t) for 0 <= n <= n_max
    Qvalues {
        #[arg(long, default_value_t = 20)]
        n_max: u64,
        #[arg(long, default_value = "1")]
        t: String,
    },
    /// Exact L_n(t) for 0 <= n <= n_max
    Laguerre {
        #[arg(long, default_value_t = 20)]
        n_max: u64,
        #[arg(long, default_value = "1")]
        t: String,
    },
    /// Enclosure of J_v(2r) for v in {0, 1, 3}
    Bessel {
        #[arg(long, default_value_t = 0)]
        order: u32,
        /// Radius r as a decimal or fraction
        #[arg(long, conflicts_with = "n")]
        r: Option<String>,
        /// Use r = sqrt(n + 1)
        #[arg(long)]
        n: Option<u64>,
    },
    /// Error majorants E2..E8
    ErrorBudget {
        /// Indices to evaluate
        #[arg(long, num_args = 1.., default_values_t = [PROOF_THRESHOLD], conflicts_with = "grid")]
        n: Vec<u64>,
        /// Evaluate on n = 10000 * 2^j for 0 <= j <= grid
        #[arg(long)]
        grid: Option<u32>,
    },
    /// Quadrature oracle for L_n(1) against exact values
    OracleContour {
        #[arg(long, default_value_t = 50)]
        n_max: u64,
        #[arg(long, default_value_t = 64)]
        nodes: usize,
    },
    /// Recurrence sweep vs direct sums
    Bench {
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u64,
        #[arg(long, default_value_t = 3)]
        repetitions: u32,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Verify(VerifyError),
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Verify(e)
    }
}

impl From<crate::asymptotics::AsymptoticsError> for CliError {
    fn from(e: crate::asymptotics::AsymptoticsError) -> Self {
        CliError::Verify(e.into())
    }
}

impl From<crate::interval::IntervalError> for CliError {
    fn from(e: crate::interval::IntervalError) -> Self {
        CliError::Verify(e.into())
    }
}

struct Output {
    text: String,
    code: i32,
}

pub fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Verified => EXIT_OK,
        Verdict::Violated => EXIT_VIOLATED,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn report_output(r: VerificationReport, format: Format) -> Output {
    Output {
        text: emit::report(&r, format),
        code: exit_code(r.verdict),
    }
}

fn policy(cfg: &RunConfig) -> Result<AdaptivePrecision, CliError> {
    let start = Precision::new(cfg.precision_start).map_err(|e| CliError::Usage(e.to_string()))?;
    let cap = Precision::new(cfg.precision_cap).map_err(|e| CliError::Usage(e.to_string()))?;
    AdaptivePrecision::new(start, cap).map_err(|e| CliError::Usage(e.to_string()))
}

fn rational_arg(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Usage(e.to_string()))
}

fn render_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn execute(cmd: &Command, cfg: &RunConfig) -> Result<Output, CliError> {
    let format = cfg.format;
    let policy = policy(cfg)?;
    Ok(match cmd {
        Command::Folklore { n_max } => report_output(verify::check_folklore(*n_max), format),
        Command::RatioExtrema { n_max } => {
            report_output(verify::check_ratio_extrema(*n_max, &policy)?, format)
        }
        Command::Theorem1Numeric { n_max, c } => {
            let c = rational_arg(c)?;
            report_output(verify::check_theorem1_numeric(*n_max, &policy, &c)?, format)
        }
        Command::Theorem1Tail { n } => {
            report_output(verify::check_theorem1_tail(*n, &policy)?, format)
        }
        Command::Theorem2 { n_max, form } => {
            let form = match form {
                Form::Body => Theorem2Form::Body,
                Form::Abstract => Theorem2Form::Abstract,
            };
            report_output(verify::check_theorem2(*n_max, &policy, form)?, format)
        }
        Command::Lemma4 { k_max } => report_output(verify::check_lemma4(*k_max)?, format),
        Command::Polynomiksi => {
            report_output(verify::check_polynomiksi_constant(&policy)?, format)
        }
        Command::Qraja { n_max } => report_output(verify::check_qraja(*n_max, &policy)?, format),
        Command::Qvalues { n_max, t } => {
            let t = rational_arg(t)?;
            let rows: Vec<(u64, String)> = if t == Rational::from_integer(1.into()) {
                q_at_one_stream(*n_max).map(|(n, q)| (n, q.to_string())).collect()
            } else {
                q_poly_stream(*n_max, &t)
                    .map(|(n, q)| (n, render_rational(&q)))
                    .collect()
            };
            Output {
                text: emit::value_table(&rows, format),
                code: EXIT_OK,
            }
        }
        Command::Laguerre { n_max, t } => {
            let t = rational_arg(t)?;
            let one = Rational::from_integer(1.into());
            let rows: Vec<(u64, String)> = (0..=*n_max)
                .map(|n| {
                    let v = if t == one {
                        laguerre_at_one(n)
                    } else {
                        laguerre_direct(n, &t)
                    };
                    (n, render_rational(&v))
                })
                .collect();
            Output {
                text: emit::value_table(&rows, format),
                code: EXIT_OK,
            }
        }
        Command::Bessel { order, r, n } => {
            let order = BesselOrder::try_from(*order)?;
            let prec = policy.start;
            let radius = match (r, n) {
                (Some(r), None) => {
                    let r = rational_arg(r)?;
                    if !r.is_positive() {
                        return Err(CliError::Usage("r must be positive".into()));
                    }
                    Interval::from_rational(&r, prec)
                }
                (None, Some(n)) => sqrt_enclosure(&Interval::from_int(n + 1), prec)?,
                _ => return Err(CliError::Usage("give exactly one of --r or --n".into())),
            };
            Output {
                text: emit::bessel(&bessel_enclosure(order, &radius, prec)?, format),
                code: EXIT_OK,
            }
        }
        Command::ErrorBudget { n, grid } => {
            let ns: Vec<u64> = match grid {
                Some(j) => (0..=*j).map(|j| PROOF_THRESHOLD << j).collect(),
                None => n.clone(),
            };
            let rows = ns
                .iter()
                .map(|&n| error_budget(n, policy.start))
                .collect::<Result<Vec<_>, _>>()?;
            Output {
                text: emit::budgets(&rows, format),
                code: EXIT_OK,
            }
        }
        Command::OracleContour { n_max, nodes } => {
            if *n_max < 1 {
                return Err(CliError::Usage("n_max must be at least 1".into()));
            }
            let mut rows = Vec::new();
            let mut worst: f64 = 0.0;
            for n in 1..=*n_max {
                let v = laguerre_contour_oracle(n, *nodes)?;
                let exact = Interval::from_rational(&laguerre_at_one(n), policy.start).mid().to_f64();
                let diff = (v.re - exact).abs();
                worst = worst.max(diff);
                rows.push(vec![
                    n.to_string(),
                    format!("{:.17e}", v.re),
                    format!("{exact:.17e}"),
                    format!("{diff:.3e}"),
                    v.nodes.to_string(),
                ]);
            }
            Output {
                text: emit::table(&["n", "oracle", "exact", "abs_diff", "nodes"], &rows, format),
                code: if worst < CONTOUR_TOLERANCE {
                    EXIT_OK
                } else {
                    EXIT_VIOLATED
                },
            }
        }
        Command::Bench { n_max, repetitions } => {
            if *n_max < 10 || *repetitions < 1 {
                return Err(CliError::Usage(
                    "bench needs n_max >= 10 and repetitions >= 1".into(),
                ));
            }
            let b = bench::bench(*n_max, *repetitions);
            let rows = vec![vec![
                b.n_max.to_string(),
                b.repetitions.to_string(),
                format!("{:.6}", b.recurrence.as_secs_f64()),
                format!("{:.6}", b.direct.as_secs_f64()),
                format!("{:.2}", b.speedup()),
                b.multiplications.to_string(),
                format!("{}", b.multiplications_per_step()),
                b.sample_size.to_string(),
                b.sample_equal.to_string(),
            ]];
            let header = [
                "n_max",
                "repetitions",
                "recurrence_s",
                "direct_s",
                "speedup",
                "multiplications",
                "multiplications_per_step",
                "sample_size",
                "sample_equal",
            ];
            Output {
                text: emit::table(&header, &rows, format),
                code: if b.sample_equal { EXIT_OK } else { EXIT_VIOLATED },
            }
        }
    })
}

fn init_logging(quiet: bool) {
    let level = if quiet { "warn" } else { "info" };
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .try_init();
}

fn write_output(text: &str, path: Option<&PathBuf>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    init_logging(cli.config.quiet);
    let pool = match cli.config.threads {
        Some(0) => {
            eprintln!("error: --threads must be positive");
            return EXIT_USAGE;
        }
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| execute(&cli.command, &cli.config));
    match result {
        Ok(out) => match write_output(&out.text, cli.config.output.as_ref()) {
            Ok(()) => out.code,
            Err(e) => {
                eprintln!("error: cannot write output: {e}");
                EXIT_USAGE
            }
        },
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Verify(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
