use std::io::{BufRead, Read};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use syncode::ErrorClass;

use crate::codespec::{CodeSpec, FamilyName};
use crate::commands::{cmd_bench, cmd_corrupt, cmd_decode, cmd_enumerate, cmd_verify};
use crate::grid::{parse_grid, DEFAULT_GRID};
use crate::UsageError;

/// Decoders for monotone and azinv codes.
#[derive(Debug, Parser)]
#[command(name = "syncode", version)]
pub struct Cli {
    /// Code family: monotone or azinv.
    #[arg(long, global = true)]
    pub family: Option<FamilyName>,

    /// Code length.
    #[arg(long, global = true)]
    pub n: Option<usize>,

    /// Modulus.
    #[arg(long, global = true)]
    pub m: Option<u64>,

    /// Residue; reduced modulo m.
    #[arg(long, global = true, default_value_t = 0, allow_negative_numbers = true)]
    pub a: i64,

    /// Monotone weights as a comma-separated list (default 1..n).
    #[arg(long, global = true, value_delimiter = ',')]
    pub k: Option<Vec<u64>>,

    /// Seed for sampled error positions and benchmark codewords.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Print decoder internals and timing.
    #[arg(long, global = true)]
    pub trace: bool,

    /// Verification grid file (default: built-in grid).
    #[arg(long, global = true)]
    pub grid: Option<PathBuf>,

    /// Benchmark repetitions per length.
    #[arg(long, global = true, default_value_t = 31)]
    pub reps: usize,

    /// Error class: Del, Rev, BAD or BAR (default: the family's deletion class).
    #[arg(long, global = true)]
    pub class: Option<ErrorClass>,

    /// 1-based error position for `corrupt` (default: sampled from --seed).
    #[arg(long, global = true)]
    pub pos: Option<usize>,

    /// Comma-separated ascending lengths for `bench` (default 2^10..2^20).
    #[arg(long, global = true, value_delimiter = ',')]
    pub ns: Option<Vec<usize>>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every codeword.
    Enumerate,
    /// Decode a received word (read from stdin, one per line, if omitted).
    Decode { y: Option<String> },
    /// Apply one error to a codeword (read from stdin, one per line, if omitted).
    Corrupt { x: Option<String> },
    /// Exhaustively check decoders against the oracle over a grid.
    Verify,
    /// Measure decode time across lengths and report the log-log slope.
    Bench,
}

/// Words given as an argument, or every non-empty line of `input`.
fn inputs(arg: Option<String>, input: &mut dyn Read) -> Result<Vec<String>, UsageError> {
    if let Some(word) = arg {
        return Ok(vec![word]);
    }
    let mut words = Vec::new();
    for line in std::io::BufReader::new(input).lines() {
        let line = line.map_err(|e| UsageError(format!("reading stdin: {e}")))?;
        if !line.trim().is_empty() {
            words.push(line.trim().to_string());
        }
    }
    Ok(words)
}

/// Outcome of one invocation: standard output text and exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub stdout: String,
    pub code: i32,
}

impl Cli {
    fn spec(&self) -> Result<CodeSpec, UsageError> {
        CodeSpec::from_flags(self.family, self.n, self.m, self.a, self.k.clone())
    }

    /// Executes the parsed command; `input` supplies words the command line omits.
    pub fn run(self, input: &mut dyn Read) -> Result<Run, UsageError> {
        let ok = |stdout: String| Ok(Run { stdout, code: 0 });
        match self.command {
            Command::Enumerate => ok(cmd_enumerate(&self.spec()?)?),
            Command::Decode { ref y } => {
                let spec = self.spec()?;
                let mut out = String::new();
                for word in inputs(y.clone(), input)? {
                    out.push_str(&cmd_decode(&spec, &word, self.trace)?);
                }
                ok(out)
            }
            Command::Corrupt { ref x } => {
                let spec = self.spec()?;
                let mut out = String::new();
                for word in inputs(x.clone(), input)? {
                    out.push_str(&cmd_corrupt(&spec, &word, self.class, self.pos, self.seed)?);
                }
                ok(out)
            }
            Command::Verify => {
                let text = match &self.grid {
                    Some(path) => std::fs::read_to_string(path)
                        .map_err(|e| UsageError(format!("reading {}: {e}", path.display())))?,
                    None => DEFAULT_GRID.to_string(),
                };
                let report = cmd_verify(&parse_grid(&text)?);
                Ok(Run { stdout: report.text, code: if report.passed { 0 } else { 1 } })
            }
            Command::Bench => {
                let family = self.family.ok_or_else(|| UsageError("--family is required".into()))?;
                let ns = match (&self.ns, self.n) {
                    (Some(ns), _) => ns.clone(),
                    (None, Some(n)) => vec![n],
                    (None, None) => (10..=20).map(|e| 1usize << e).collect(),
                };
                ok(cmd_bench(family, &ns, self.class, self.reps, self.seed)?)
            }
        }
    }
}
