use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fishburn::congruence::max_rows;
use fishburn::is_prime;

use crate::CliError;

/// Truncation for `r = +-1`.
pub const DEFAULT_N_UNIT: usize = 500;
/// Truncation for other `r`.
pub const DEFAULT_N: usize = 200;
pub const DEFAULT_ROWS: usize = 40;
/// Largest `n` for the dissection checks.
pub const DEFAULT_DEPTH: usize = 5;
/// Row window over which the relation-space dimension must not move.
pub const STABLE_WINDOW: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "fishburn",
    version,
    about = "r-Fishburn numbers and their congruences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Subcommand, Debug)]
pub enum CommandArgs {
    /// Print xi_r(n) for n <= N.
    Xi {
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        r: i64,
        /// Truncation N (default 500 for r = +-1, else 200).
        #[arg(long)]
        n: Option<usize>,
        /// For r = 1, also compare against the T-number route.
        #[arg(long)]
        cross_check: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the residue sets S, T, S*, T*.
    Sets {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, default_value_t = 0)]
        s: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run congruence and dissection checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, default_value_t = 0)]
        s: u64,
        /// Single residue to check; default is every member of T*.
        #[arg(long)]
        m: Option<u64>,
        /// Largest xi index used (default 500 for r = +-1, else 200).
        #[arg(long)]
        nmax: Option<usize>,
        /// Depth n of the dissection checks.
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        n: usize,
        /// Check --m even when it lies outside T*.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute the mod-p relation space of xi_r.
    Relations {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        r: i64,
        /// Matrix rows (default 40, fewer if N is too small).
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Theorem,
    Corollary,
    Dissection,
    All,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::Theorem => "theorem",
            Scope::Corollary => "corollary",
            Scope::Dissection => "dissection",
            Scope::All => "all",
        }
    }

    pub fn includes(self, other: Scope) -> bool {
        self == Scope::All || self == other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Xi { cross_check: bool },
    Sets,
    Verify(Scope),
    Relations,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Xi { .. } => "xi",
            Command::Sets => "sets",
            Command::Verify(_) => "verify",
            Command::Relations => "relations",
        }
    }
}

/// A validated invocation with every default filled in.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub p: Option<u64>,
    pub r: i64,
    pub s: u64,
    pub m: Option<u64>,
    /// Truncation N of the xi table.
    pub n: usize,
    pub rows: usize,
    pub depth: usize,
    pub force: bool,
    pub format: Format,
    pub out: Option<PathBuf>,
}

fn default_n(r: i64) -> usize {
    if r.abs() == 1 {
        DEFAULT_N_UNIT
    } else {
        DEFAULT_N
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_r(r: i64) -> Result<(), CliError> {
    if r == 0 {
        return Err(usage("--r must be nonzero"));
    }
    Ok(())
}

fn check_p(p: u64, r: i64) -> Result<(), CliError> {
    if p < 5 || !is_prime(p) {
        return Err(usage(format!("--p {p} must be a prime >= 5")));
    }
    if r.rem_euclid(p as i64) == 0 {
        return Err(usage(format!("--p {p} divides --r {r}")));
    }
    Ok(())
}

fn check_residue(flag: &str, v: u64, p: u64) -> Result<(), CliError> {
    if v >= p {
        return Err(usage(format!("--{flag} {v} must be below --p {p}")));
    }
    Ok(())
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        match cli.command {
            CommandArgs::Xi {
                r,
                n,
                cross_check,
                output,
            } => {
                check_r(r)?;
                if cross_check && r != 1 {
                    return Err(usage("--cross-check needs --r 1"));
                }
                Ok(Self::base(Command::Xi { cross_check }, None, r, output)
                    .with_n(n.unwrap_or(default_n(r))))
            }
            CommandArgs::Sets { p, r, s, output } => {
                check_r(r)?;
                check_p(p, r)?;
                check_residue("s", s, p)?;
                let mut cfg = Self::base(Command::Sets, Some(p), r, output);
                cfg.s = s;
                cfg.no_csv()
            }
            CommandArgs::Verify {
                scope,
                p,
                r,
                s,
                m,
                nmax,
                n,
                force,
                output,
            } => {
                check_r(r)?;
                check_p(p, r)?;
                check_residue("s", s, p)?;
                if let Some(m) = m {
                    check_residue("m", m, p)?;
                }
                if force && m.is_none() {
                    return Err(usage("--force needs --m"));
                }
                if n == 0 {
                    return Err(usage("--n must be at least 1"));
                }
                let mut cfg = Self::base(Command::Verify(scope), Some(p), r, output)
                    .with_n(nmax.unwrap_or(default_n(r)));
                cfg.s = s;
                cfg.m = m;
                cfg.depth = n;
                cfg.force = force;
                cfg.no_csv()
            }
            CommandArgs::Relations {
                p,
                r,
                rows,
                nmax,
                output,
            } => {
                check_r(r)?;
                check_p(p, r)?;
                let pu = p as usize;
                let (rows, n) = match (rows, nmax) {
                    (Some(0), _) => return Err(usage("--rows must be at least 1")),
                    (Some(rows), Some(n)) => (rows, n),
                    (Some(rows), None) => (rows, default_n(r).max(rows * pu + pu - 1)),
                    (None, n) => {
                        let n = n.unwrap_or(default_n(r));
                        (DEFAULT_ROWS.min(max_rows(p, n)), n)
                    }
                };
                if rows == 0 || rows * pu + pu - 1 > n {
                    return Err(usage(format!(
                        "{rows} rows for p = {p} need --nmax >= {}",
                        rows.max(1) * pu + pu - 1
                    )));
                }
                let mut cfg = Self::base(Command::Relations, Some(p), r, output).with_n(n);
                cfg.rows = rows;
                cfg.no_csv()
            }
        }
    }

    fn base(command: Command, p: Option<u64>, r: i64, output: OutputArgs) -> Self {
        Self {
            command,
            p,
            r,
            s: 0,
            m: None,
            n: default_n(r),
            rows: DEFAULT_ROWS,
            depth: DEFAULT_DEPTH,
            force: false,
            format: output.format,
            out: output.out,
        }
    }

    fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    fn no_csv(self) -> Result<Self, CliError> {
        if self.format == Format::Csv {
            return Err(usage(format!(
                "--format csv is only available for xi, not {}",
                self.command.name()
            )));
        }
        Ok(self)
    }

    /// `p`, present for every command but `xi`.
    pub fn prime(&self) -> u64 {
        self.p.expect("validated: command takes --p")
    }
}
