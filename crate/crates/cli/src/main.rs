use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stablerep_cli::{
    check_degree, max_dim_from_env, parse_basis, parse_partition, parse_prime, parse_prime_list, run_verify, Check,
    Format, Output, UsageError, VerifyConfig, MAX_ORACLE_PRIME, MAX_THETA_PRIME,
};

#[derive(Parser)]
#[command(name = "stablerep", version, about = "Plethysms in the stable module category of SL₂(𝔽_p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "table")]
    format: FormatArg,

    /// Seed for randomised checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose ∇^ν(Ω^m Sym^l E) modulo projectives.
    Decompose {
        #[arg(long)]
        p: String,
        /// Comma-separated parts, e.g. 4,3,1.
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long)]
        l: usize,
        /// Heller twist m.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        omega: i64,
        /// Also build the module as matrices and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Multiply two basis elements, each given as l,m for Ω^m(Sym^l E).
    Tensor {
        #[arg(long)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Every closed-form classification at one input, next to the computed answer.
    Classify {
        #[arg(long)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        omega: i64,
    },
    /// Decompose every p-small ν against every l.
    Scan {
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        omega: i64,
        /// Only ν with |ν| at most this.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Run the exhaustive checks and report pass counts.
    Verify {
        #[arg(long, default_value = "3,5,7")]
        p_list: String,
        /// Comma-separated checks: projective, irreducible, twisted-projective,
        /// twisted-irreducible, multiset, small-cases, oracle, ring.
        #[arg(long, default_value = "projective,irreducible,twisted-projective,twisted-irreducible,multiset,small-cases,oracle,ring")]
        theorems: String,
        /// Oracle points need (l+1)^|ν| at most this.
        #[arg(long, default_value_t = 20_000)]
        oracle_budget: u64,
        /// Random pairs per prime for the ring check.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Print the two height/position tables.
    Tables {
        #[arg(long)]
        p: String,
    },
}

fn run(cli: Cli) -> Result<Output, UsageError> {
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    };
    match cli.command {
        Command::Decompose { p, nu, l, omega, oracle } => {
            let bound = if oracle { MAX_ORACLE_PRIME } else { MAX_THETA_PRIME };
            let p = parse_prime(&p, bound)?;
            let nu = parse_partition(&nu)?;
            check_degree(p, l)?;
            let max_dim = if oracle { Some(max_dim_from_env()?) } else { None };
            stablerep_cli::decompose(p, &nu, l, omega, max_dim, format)
        }
        Command::Tensor { p, a, b } => {
            let p = parse_prime(&p, MAX_THETA_PRIME)?;
            Ok(stablerep_cli::tensor(p, parse_basis(p, &a)?, parse_basis(p, &b)?, format))
        }
        Command::Classify { p, nu, l, omega } => {
            let p = parse_prime(&p, MAX_THETA_PRIME)?;
            stablerep_cli::classify(p, &parse_partition(&nu)?, l, omega, format)
        }
        Command::Scan { p, omega, max_size } => {
            let p = parse_prime(&p, MAX_THETA_PRIME)?;
            stablerep_cli::scan(p, omega, max_size, format)
        }
        Command::Verify {
            p_list,
            theorems,
            oracle_budget,
            samples,
        } => {
            let checks = theorems
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(str::parse)
                .collect::<Result<Vec<Check>, _>>()?;
            let bound = if checks.contains(&Check::Oracle) {
                MAX_ORACLE_PRIME
            } else {
                MAX_THETA_PRIME
            };
            let config = VerifyConfig {
                primes: parse_prime_list(&p_list, bound)?,
                checks,
                oracle_budget,
                max_dim: max_dim_from_env()?,
                seed: cli.seed,
                ring_samples: samples,
            };
            let report = run_verify(&config);
            let ok = report.ok();
            Ok(Output::emit(format, &report, |r| r.render(), ok))
        }
        Command::Tables { p } => {
            let p = parse_prime(&p, MAX_THETA_PRIME)?;
            Ok(stablerep_cli::tables(p, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
