use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jackvo::commands::{self, LrRoute, Method, Named, Outcome, Status};
use jackvo::{Basis, Context, Norm, Suite, SuiteParams};
use jackvo_core::vandermonde::DeltaLimits;
use jackvo_core::Partition;

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

/// Exact Jack symmetric functions, LR coefficients and Vandermonde coefficients.
#[derive(Parser)]
#[command(name = "jackvo", version)]
struct Cli {
    /// Directory for cached Jack tables and verification records.
    #[arg(long, global = true, env = "JACKVO_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Keep everything in memory.
    #[arg(long, global = true)]
    no_cache: bool,
    /// JSON output (default).
    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,
    /// Human-readable output.
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Expand a Jack function.
    Expand {
        /// Partition as comma-separated parts, e.g. 3,1,1.
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// Normalization.
        #[arg(long, value_enum, ignore_case = true, default_value = "j")]
        norm: Norm,
        /// Output basis.
        #[arg(long, value_enum, ignore_case = true, default_value = "p")]
        basis: Basis,
        /// Construction; `filtration` also reports the scalar c′.
        #[arg(long, value_enum, default_value = "gram_schmidt")]
        method: Method,
    },
    /// Littlewood–Richardson coefficient ⟨J_μ J_ν, J_λ⟩.
    Lr {
        /// First factor.
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        /// Second factor.
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        /// Target shape; |λ| must equal |μ| + |ν|.
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// `rect` and `marked` use the closed forms and compare with the oracle.
        #[arg(long, value_enum, default_value = "oracle")]
        route: LrRoute,
    },
    /// A coefficient of the even power of the Vandermonde product.
    Dyson {
        /// Number of variables.
        #[arg(long)]
        s: usize,
        /// Exponent of each pair factor.
        #[arg(long)]
        t: usize,
        /// Exponent vector, e.g. 1,-1,0; entries sum to 0.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        beta: Option<Vec<i32>>,
        /// A coefficient with a closed form, instead of `--beta`.
        #[arg(long, value_enum)]
        named: Option<Named>,
        /// `i` for `--named general`.
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// Largest allowed s·t.
        #[arg(long, default_value_t = DeltaLimits::default().max_st)]
        max_st: usize,
    },
    /// Rectangular filtration of λ and the scalar c′.
    Filtration {
        /// Partition as comma-separated parts.
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Weight bound; defaults to 8 for the LR suites and 6 otherwise.
        #[arg(long)]
        max_weight: Option<usize>,
        /// Fixed factor for the positivity sweep.
        #[arg(long, value_parser = parse_partition, default_value = "2,1")]
        nu: Partition,
        /// Largest number of variables for the dyson suite.
        #[arg(long, default_value_t = 3)]
        s: usize,
        /// Largest exponent for the dyson suite.
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Parameters 1/t used by the frobenius suite.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        t_values: Vec<usize>,
    },
}

fn default_cache_dir() -> PathBuf {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(x).join("jackvo");
    }
    if let Some(h) = std::env::var_os("HOME") {
        return PathBuf::from(h).join(".cache").join("jackvo");
    }
    std::env::temp_dir().join("jackvo")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = if cli.no_cache { Context::in_memory() } else { Context::with_cache_dir(cli.cache_dir.clone().unwrap_or_else(default_cache_dir)) };
    let result = match cli.verb {
        Verb::Expand { lambda, norm, basis, method } => commands::expand(&ctx, &lambda, norm, basis, method),
        Verb::Lr { mu, nu, lambda, route } => commands::lr(&ctx, &mu, &nu, &lambda, route),
        Verb::Dyson { s, t, beta, named, i, max_st } => commands::dyson(s, t, beta, named, i, DeltaLimits { max_st }),
        Verb::Filtration { lambda } => commands::filtration(&ctx, &lambda),
        Verb::Verify { suite, max_weight, nu, s, t, t_values } => {
            commands::verify(&ctx, suite, &SuiteParams { max_weight, nu, s, t, t_values })
        }
    };
    match result {
        Ok(Outcome { json, plain, status }) => {
            if cli.plain {
                println!("{}", plain);
            } else {
                println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
            }
            match status {
                Status::Ok => ExitCode::SUCCESS,
                Status::AssertionFailed => ExitCode::from(1),
                Status::Usage(msg) => {
                    eprintln!("jackvo: {}", msg);
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("jackvo: {}", e);
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
