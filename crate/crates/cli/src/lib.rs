//! Command implementations behind the `stablerep` binary, kept in a library
//! so the acceptance suite and integration tests can drive them directly.

use std::fmt;

use stablerep::{Basis, OddPrime, Partition};

pub mod commands;
pub mod verify;

pub use commands::{
    classify, decompose, scan, tables, tensor, ClassifyReport, DecomposeReport, OracleReport, ScanReport,
    ScanRow, TablesReport, TensorReport,
};
pub use verify::{run_check, run_verify, Check, CheckReport, VerifyConfig, VerifyReport};

/// Largest prime accepted by commands that build matrices.
pub const MAX_ORACLE_PRIME: u32 = 13;
/// Largest prime accepted by commands that only use `Θ`.
pub const MAX_THETA_PRIME: u32 = 97;
/// Environment variable overriding the oracle's dimension guard.
pub const MAX_DIM_VAR: &str = "STABLEREP_MAX_DIM";

/// Bad input from the command line; the binary exits with status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<stablerep::Error> for UsageError {
    fn from(e: stablerep::Error) -> Self {
        UsageError(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    #[default]
    Table,
}

/// Rendered output and whether every internal comparison agreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub agree: bool,
}

impl Output {
    pub fn emit<T: serde::Serialize>(format: Format, report: &T, table: impl FnOnce(&T) -> String, agree: bool) -> Self {
        let text = match format {
            Format::Json => serde_json::to_string_pretty(report).expect("reports serialise") + "\n",
            Format::Table => table(report),
        };
        Output { text, agree }
    }
}

pub fn parse_prime(s: &str, bound: u32) -> Result<OddPrime, UsageError> {
    let p: OddPrime = s.trim().parse()?;
    if p.get() > bound {
        return Err(UsageError(format!("p = {p} exceeds the bound {bound} for this command")));
    }
    Ok(p)
}

pub fn parse_prime_list(s: &str, bound: u32) -> Result<Vec<OddPrime>, UsageError> {
    let mut out = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_prime(t, bound))
        .collect::<Result<Vec<_>, _>>()?;
    if out.is_empty() {
        return Err(UsageError("empty prime list".into()));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn parse_partition(s: &str) -> Result<Partition, UsageError> {
    Ok(s.parse()?)
}

/// Parses `"l,m"`; `m` may be negative and is read modulo `p-1`.
pub fn parse_basis(p: OddPrime, s: &str) -> Result<Basis, UsageError> {
    let bad = || UsageError(format!("'{s}' is not of the form l,m"));
    let (l, m) = s.split_once(',').ok_or_else(bad)?;
    let l: usize = l.trim().parse().map_err(|_| bad())?;
    let m: i64 = m.trim().parse().map_err(|_| bad())?;
    Ok(Basis::new(p, l, m)?)
}

pub fn check_degree(p: OddPrime, l: usize) -> Result<(), UsageError> {
    if l > p.as_usize() - 2 {
        return Err(UsageError(format!("l = {l} is outside [0, {}]", p.as_usize() - 2)));
    }
    Ok(())
}

/// The oracle guard: `STABLEREP_MAX_DIM` if set, else the oracle default.
pub fn max_dim_from_env() -> Result<u64, UsageError> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("{MAX_DIM_VAR}='{v}' is not a non-negative integer"))),
        Err(_) => Ok(stablerep_oracle::DEFAULT_MAX_DIM),
    }
}
