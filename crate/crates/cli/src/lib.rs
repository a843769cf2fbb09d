//! The `dirac` command line.

pub mod bench;
pub mod count;
mod emit;
mod error;
pub mod errata;
pub mod mul;
pub mod numfile;
pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dirac_core::fastmult::{AssetSource, Level, Pipeline, VerifiedPipeline};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "dirac", version, about = "Dirac-number multiplication: verification, counting, products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    All,
}

impl LevelArg {
    fn levels(self) -> Vec<Level> {
        match self {
            LevelArg::One => vec![Level::One],
            LevelArg::Two => vec![Level::Two],
            LevelArg::Three => vec![Level::Three],
            LevelArg::All => Level::ALL.to_vec(),
        }
    }

    fn single(self) -> Result<Level, CliError> {
        match self.levels()[..] {
            [l] => Ok(l),
            _ => Err(CliError::Usage("this command needs a single level".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fast,
    Schoolbook,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmitWhat {
    Slp,
    Matrices,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Symbolic identity, table associativity and a random oracle run.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        level: LevelArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        iters: usize,
    },
    /// Counted operations of every method.
    Count,
    /// Multiply two files of 16 numbers.
    Mul {
        a_file: PathBuf,
        b_file: PathBuf,
        #[arg(long, value_enum, default_value = "fast")]
        method: Method,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "3")]
        level: LevelArg,
    },
    /// Wall-clock timings on floats (informational).
    Bench {
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        iters: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value = "3")]
        level: LevelArg,
    },
    /// Differences between the printed data and the derived algebra.
    Errata,
    /// Write the straight-line program or the stage matrices.
    Emit {
        what: EmitWhat,
        #[arg(required_unless_present = "out")]
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "3")]
        level: LevelArg,
    },
}

fn verified(level: LevelArg, source: &AssetSource) -> Result<VerifiedPipeline, CliError> {
    Ok(VerifiedPipeline::new(Pipeline::assemble_from(level.single()?, source)?)?)
}

/// Runs a command. `Ok((report, false))` is a completed run whose checks
/// failed.
pub fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let source = AssetSource::from_env();
    match cli.command {
        Command::Verify { level, seed, iters } => verify::run(&level.levels(), seed, iters, &source),
        Command::Count => Ok((count::run(&source)?, true)),
        Command::Mul {
            a_file,
            b_file,
            method,
            mode,
            level,
        } => Ok((mul::run(&a_file, &b_file, method, mode, &verified(level, &source)?)?, true)),
        Command::Bench { iters, seed, level } => {
            Ok((bench::run(iters as usize, seed, &verified(level, &source)?), true))
        }
        Command::Errata => Ok((errata::run(), true)),
        Command::Emit {
            what,
            path,
            out,
            level,
        } => {
            let target = path.or(out).expect("clap requires one");
            let p = verified(level, &source)?;
            let msg = match what {
                EmitWhat::Slp => emit::slp(&p, &target)?,
                EmitWhat::Matrices => emit::matrices(&p, &target)?,
            };
            Ok((msg, true))
        }
    }
}
