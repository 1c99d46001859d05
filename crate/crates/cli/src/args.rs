use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::serialize::Format;

/// Exact enumeration of tree inversions and parking-function statistics.
#[derive(Debug, Clone, Parser)]
#[command(name = "treepark", version)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for brute-force tallies.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,

    /// Number of index shards; defaults to the thread count.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub shards: Option<u32>,

    /// Output encoding (default: csv for `table` and `triangle`, text otherwise).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Ignore the object-count budget (default 10^9, or TREEPARK_BUDGET).
    #[arg(long, global = true)]
    pub budget_override: bool,

    /// Include elapsed time in check reports.
    #[arg(long, global = true)]
    pub timings: bool,
}

impl RunConfig {
    pub fn shard_count(&self) -> usize {
        self.shards.unwrap_or(self.threads) as usize
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Generating polynomials by brute force or recurrence.
    Poly {
        #[command(subcommand)]
        which: PolyCommand,
    },
    /// Substitute a value for q or t in a polynomial read from --input or stdin.
    Specialize(SpecializeArgs),
    /// Check a theorem or conjecture at one n.
    Check {
        claim: Claim,
        #[arg(long)]
        n: usize,
    },
    /// Reproduce a reference table from brute-force tallies.
    Table {
        which: TableKind,
        #[arg(long)]
        max_n: usize,
    },
    /// Reference triangles and sequences.
    Triangle {
        which: TriangleKind,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum PolyCommand {
    /// I_n(q,t) over trees: q^inv t^(leaves-1).
    Tree {
        #[arg(long)]
        n: usize,
    },
    /// Parking functions by cosum and a t statistic (default: excedances).
    Pf {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PfStat::Exced)]
        t_stat: PfStat,
    },
    /// I_n(q) or I_n(q,t) from a recurrence.
    Recurrence {
        which: RecurrenceKind,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PfStat {
    Exced,
    DesOutcome,
    DesOutcomeInverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecurrenceKind {
    Kreweras,
    StanleyYin,
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("var").required(true).args(["q", "t"])))]
pub struct SpecializeArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<i64>,
    /// JSON or text polynomial; stdin when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    Theorem1,
    StanleyYin,
    ConjectureDes,
    ConjectureMinusOne,
    Counts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    MinusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TriangleKind {
    Simsun,
    Zigzag,
}
