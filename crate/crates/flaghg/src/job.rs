//! Argument parsing and validation.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use flaghg_core::push::DEFAULT_COSET_BUDGET;
use flaghg_core::tableau::FlagSpec;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Tableaux,
    Euler,
    Integral,
    Hg,
    HoriVafa,
    OracleCompare,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Tableaux => "tableaux",
            Command::Euler => "euler",
            Command::Integral => "integral",
            Command::Hg => "hg",
            Command::HoriVafa => "hori-vafa",
            Command::OracleCompare => "oracle-compare",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub spec: FlagSpec,
    pub max_degree: u32,
    pub lambda_seed: u64,
    pub coset_budget: u128,
    pub format: Format,
    pub explain: bool,
    pub cache_dir: Option<PathBuf>,
}

impl JobSpec {
    /// Everything that determines the results; output format and cache
    /// location are left out.
    pub fn echo(&self) -> Value {
        json!({
            "command": self.command.name(),
            "n": self.spec.n(),
            "ranks": self.spec.ranks(),
            "degrees": self.spec.degrees(),
            "max_degree": self.max_degree,
            "lambda_seed": self.lambda_seed,
            "coset_budget": self.coset_budget.to_string(),
            "explain": self.explain,
        })
    }
}

/// A rejected command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UsageError {
    /// A flag value failed validation.
    Flag { flag: &'static str, message: String },
    /// Help or version output requested; not an error.
    Display(String),
    /// Rendered clap error (unknown flag, missing value, ...).
    Clap(String),
}

impl UsageError {
    fn flag(flag: &'static str, message: impl Into<String>) -> UsageError {
        UsageError::Flag { flag, message: message.into() }
    }
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UsageError::Flag { flag, message } => write!(f, "error: {}: {}", flag, message),
            UsageError::Display(s) | UsageError::Clap(s) => f.write_str(s.trim_end()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "flaghg", version, about = "Exact localization integrals on hyper-Quot schemes of flag manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// List the fixed-point components and their dimensions.
    Tableaux(Args),
    /// Normal Euler classes by the closed form and by the ledger.
    Euler(Args),
    /// The degree-d integral as a series in t and α.
    Integral(Args),
    /// Hypergeometric series terms up to --max-degree.
    Hg(Args),
    /// Check the Grassmannian series against the product of projective spaces.
    HoriVafa(Args),
    /// Compare the tower push-forward with the fixed-point oracle.
    OracleCompare(Args),
}

#[derive(clap::Args, Debug)]
struct Args {
    #[arg(long)]
    n: String,
    #[arg(long, allow_hyphen_values = true)]
    ranks: String,
    #[arg(long, allow_hyphen_values = true)]
    degrees: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    max_degree: Option<String>,
    #[arg(long, default_value_t = 0)]
    lambda_seed: u64,
    #[arg(long, default_value_t = DEFAULT_COSET_BUDGET)]
    coset_budget: u128,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    explain: bool,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

fn int_list(flag: &'static str, s: &str) -> Result<Vec<i64>, UsageError> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| UsageError::flag(flag, format!("expected comma-separated integers, got {:?}", s))))
        .collect()
}

/// Parses `argv` (program name first); `env` supplies FLAGHG_CACHE and HOME.
pub fn parse_job(argv: &[String], env: &BTreeMap<String, String>) -> Result<JobSpec, UsageError> {
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => UsageError::Display(e.to_string()),
        _ => UsageError::Clap(e.render().to_string()),
    })?;
    let (command, a) = match cli.command {
        Sub::Tableaux(a) => (Command::Tableaux, a),
        Sub::Euler(a) => (Command::Euler, a),
        Sub::Integral(a) => (Command::Integral, a),
        Sub::Hg(a) => (Command::Hg, a),
        Sub::HoriVafa(a) => (Command::HoriVafa, a),
        Sub::OracleCompare(a) => (Command::OracleCompare, a),
    };

    let n: usize = a.n.trim().parse().map_err(|_| UsageError::flag("--n", "n must be a positive integer"))?;
    let ranks = int_list("--ranks", &a.ranks)?;
    if ranks.iter().any(|&r| r <= 0) {
        return Err(UsageError::flag("--ranks", "ranks must be positive"));
    }
    if ranks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(UsageError::flag("--ranks", "ranks must be strictly increasing"));
    }
    if *ranks.last().unwrap() as usize >= n {
        return Err(UsageError::flag("--ranks", "largest rank must be less than n"));
    }
    let ranks: Vec<usize> = ranks.into_iter().map(|r| r as usize).collect();

    let degrees = match &a.degrees {
        None => vec![0; ranks.len()],
        Some(s) => {
            let d = int_list("--degrees", s)?;
            if d.iter().any(|&x| x < 0) {
                return Err(UsageError::flag("--degrees", "degrees must be nonnegative"));
            }
            if d.len() != ranks.len() {
                return Err(UsageError::flag("--degrees", "expected one degree per rank"));
            }
            d.into_iter().map(|x| x as u32).collect()
        }
    };
    let max_degree = match &a.max_degree {
        None => 1,
        Some(s) => match s.trim().parse::<i64>() {
            Ok(d) if d < 0 => return Err(UsageError::flag("--max-degree", "max degree must be nonnegative")),
            Ok(d) => d as u32,
            Err(_) => return Err(UsageError::flag("--max-degree", "max degree must be an integer")),
        },
    };
    if command == Command::HoriVafa && ranks.len() != 1 {
        return Err(UsageError::flag("--ranks", "hori-vafa takes a single rank"));
    }
    let spec = FlagSpec::new(n, ranks, degrees).map_err(|e| UsageError::flag("--ranks", e.to_string()))?;

    let cache_dir = a
        .cache_dir
        .or_else(|| env.get("FLAGHG_CACHE").filter(|s| !s.is_empty()).map(PathBuf::from))
        .or_else(|| env.get("HOME").map(|h| PathBuf::from(h).join(".cache").join("flaghg")));

    Ok(JobSpec {
        command,
        spec,
        max_degree,
        lambda_seed: a.lambda_seed,
        coset_budget: a.coset_budget,
        format: if a.json { Format::Json } else { Format::Text },
        explain: a.explain,
        cache_dir,
    })
}
