use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use irrtools::bounds::MaxSigmaGating;
use irrtools::graph::Family;
use irrtools::rational::{parse_decimal, parse_fraction};
use irrtools::search::{Direction, Objective, DEFAULT_MAX_N};
use irrtools::stats::TableId;
use irrtools::{BoundId, Convention, Q};

#[derive(Debug, Parser)]
#[command(
    name = "irrtools",
    version,
    about = "Albertson and Sigma irregularity indices, bound evaluation and tree search"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; plot data defaults to csv, everything else to human.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Largest tree order any enumeration may reach.
    #[arg(long, global = true, env = "IRRTOOLS_MAX_N", default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute irr, sigma, sigma_t and M1 of one graph.
    Indices(GraphSource),
    /// Degree sequence tools.
    #[command(subcommand)]
    Sequence(SequenceCommand),
    /// Evaluate or attack the catalogued bounds.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// List every free tree of order n, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print only the number of trees.
        #[arg(long)]
        count_only: bool,
    },
    /// Exhaustive extremal search over a class of trees.
    Extremal(ExtremalArgs),
    /// The two embedded data tables.
    #[command(subcommand)]
    Tables(TablesCommand),
    /// Correlation and regression summaries of the tables.
    #[command(subcommand)]
    Stats(StatsCommand),
    /// Plot data as CSV series.
    #[command(subcommand)]
    Plots(PlotsCommand),
}

/// Exactly one way of naming a graph.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Degree sequence literal, realized as a tree when possible and by
    /// Havel-Hakimi otherwise.
    #[arg(long, value_name = "D1,D2,...")]
    pub sequence: Option<String>,
    /// Edge-list file: `u v` per line, `#` comments.
    #[arg(long, value_name = "PATH")]
    pub graph: Option<PathBuf>,
    /// Named family such as path:5, star:6, double-star:3,4.
    #[arg(long, value_name = "NAME:PARAMS")]
    pub family: Option<Family>,
}

#[derive(Debug, Subcommand)]
pub enum SequenceCommand {
    /// Derived sequences, averages and realizability of a sequence.
    Analyze {
        #[arg(long, value_name = "D1,D2,...")]
        sequence: String,
        #[arg(long, default_value = "standard")]
        convention: Convention,
    },
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// Evaluate one bound or all of them on one input.
    Check(CheckArgs),
    /// Search trees for counterexamples to a bound.
    Falsify(FalsifyArgs),
    /// Print the bound catalogue.
    List,
}

/// A bound code, a bound name, or `all`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSelection {
    All,
    One(BoundId),
}

impl FromStr for BoundSelection {
    type Err = irrtools::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            Ok(BoundSelection::All)
        } else {
            s.parse().map(BoundSelection::One)
        }
    }
}

/// `TABLE:ROW`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub table: TableId,
    pub row: usize,
}

impl FromStr for TableRow {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("`{s}` should look like TABLE:ROW, e.g. 1:3");
        let (t, r) = s.split_once(':').ok_or_else(bad)?;
        let table = t.parse::<TableId>().map_err(|e| e.to_string())?;
        let row = r.trim().parse::<usize>().map_err(|_| bad())?;
        Ok(TableRow { table, row })
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct BoundSource {
    #[arg(long, value_name = "D1,D2,...")]
    pub sequence: Option<String>,
    #[arg(long, value_name = "PATH")]
    pub graph: Option<PathBuf>,
    #[arg(long, value_name = "NAME:PARAMS")]
    pub family: Option<Family>,
    /// A row of an embedded table, e.g. 1:3.
    #[arg(long, value_name = "TABLE:ROW")]
    pub table_row: Option<TableRow>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_name = "ID|all")]
    pub bound: BoundSelection,
    #[command(flatten)]
    pub source: BoundSource,
    /// How a sequence literal is read.
    #[arg(long, default_value = "standard")]
    pub convention: Convention,
    /// Albertson index to use with a sequence literal.
    #[arg(long)]
    pub irr: Option<u64>,
    /// Evaluate the class extreme of trees with the input's order and
    /// maximum degree instead of the instance (B1a, B1b, B2a, B2b, B10).
    #[arg(long)]
    pub class_mode: bool,
    /// Exit with status 2 if any probative report is violated.
    #[arg(long)]
    pub expect_hold: bool,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct FalsifyArgs {
    #[arg(long, value_name = "ID")]
    pub bound: BoundId,
    /// Largest tree order; with --samples, the order of the random trees.
    #[arg(long)]
    pub nmax: usize,
    /// Draw this many random labelled trees instead of enumerating.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "samples")]
    pub seed: u64,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Gating {
    Statement,
    Strict,
}

impl From<Gating> for MaxSigmaGating {
    fn from(g: Gating) -> Self {
        match g {
            Gating::Statement => MaxSigmaGating::Statement,
            Gating::Strict => MaxSigmaGating::Strict,
        }
    }
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Exponent of B2a [default: ceil(log2(max degree + 1))].
    #[arg(long)]
    pub alpha: Option<u32>,
    /// Exponent of B2b [default: ceil(log2(max degree + 1))].
    #[arg(long)]
    pub beta: Option<u32>,
    /// Prime of B9.
    #[arg(long, default_value_t = 2)]
    pub p: u64,
    /// [default: ceil(2 n D / m)]
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<i64>,
    /// A decimal or fraction in (2, 4] [default: clamped 2^n/(n-eta)!].
    #[arg(long, value_parser = parse_rational)]
    pub eta1: Option<Q>,
    /// Multiplier t > 2.
    #[arg(long, default_value_t = 3)]
    pub t: u64,
    /// Gating of the maximum-sigma bound B10.
    #[arg(long, value_enum, default_value = "statement")]
    pub b10_gating: Gating,
}

fn parse_rational(s: &str) -> Result<Q, String> {
    parse_fraction(s)
        .or_else(|| parse_decimal(s))
        .ok_or_else(|| format!("`{s}` is not a decimal or fraction"))
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub objective: Objective,
    #[arg(long)]
    pub direction: Direction,
    #[arg(long, required_unless_present = "degrees")]
    pub n: Option<usize>,
    /// Restrict to trees with this maximum degree.
    #[arg(long, requires = "n", conflicts_with = "degrees")]
    pub max_degree: Option<usize>,
    /// Restrict to trees with this degree multiset.
    #[arg(long, value_name = "D1,D2,...", conflicts_with = "n")]
    pub degrees: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum TablesCommand {
    /// Recompute every derivable cell and compare with the printed value.
    Reproduce {
        #[arg(long)]
        table: TableId,
    },
    /// The table as printed.
    Export {
        #[arg(long)]
        table: TableId,
    },
}

#[derive(Debug, Subcommand)]
pub enum StatsCommand {
    /// Pearson matrix compared entry by entry with the printed one.
    Correlate {
        #[arg(long, default_value = "1")]
        table: TableId,
    },
    /// Least-squares fits compared with the printed regression.
    Regress {
        #[arg(long, default_value = "1")]
        table: TableId,
        /// Evaluate the printed and fitted models at X1,X2.
        #[arg(long, value_name = "X1,X2", value_delimiter = ',', num_args = 1)]
        predict: Option<Vec<f64>>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PlotsCommand {
    /// 1: indices against n per family; 2, 3: series from the tables.
    Emit {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        figure: u8,
    },
}
