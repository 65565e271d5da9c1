//! Command-line surface: subcommands, flags, and the small parsers for
//! `lo..hi` ranges and comma-separated generator lists.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "nsg", version, about = "Construct and verify symmetric numerical semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build one family instance and report its invariants and checks.
    Construct {
        /// Family to construct.
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Embedding dimension (e >= 4).
        #[arg(long)]
        e: i64,
        /// Family parameter q.
        #[arg(long)]
        q: i64,
        /// Common difference d.
        #[arg(long)]
        d: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sweep a parameter grid, verifying every closed form on every valid
    /// triple. Invalid combinations are skipped and counted.
    Verify {
        /// Family to sweep.
        #[arg(long, value_enum, default_value_t = FamilyChoice::Both)]
        family: FamilyChoice,
        /// Embedding dimension, single value or inclusive range `lo..hi`.
        #[arg(long)]
        e: RangeArg,
        /// Parameter q, single value or inclusive range `lo..hi`.
        #[arg(long)]
        q: RangeArg,
        /// Common difference d, single value or inclusive range `lo..hi`.
        #[arg(long)]
        d: RangeArg,
        /// Worker count for the sweep (defaults to all cores).
        #[arg(long, env = "NSG_JOBS")]
        jobs: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Betti elements, factorization-graph components, and a minimal
    /// presentation for an arbitrary generator list.
    Presentation {
        /// Comma-separated generators, e.g. `7,8,17,18`.
        #[arg(long)]
        gens: GensArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Apéry set of a semigroup with respect to a base element.
    Apery {
        #[command(flatten)]
        source: SourceArgs,
        /// Base element (defaults to the multiplicity).
        #[arg(long)]
        base: Option<i64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Frobenius number, genus, and the full gap list.
    Gaps {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Where a semigroup comes from: an explicit generator list or a family
/// parameter triple.
#[derive(Args, Debug)]
pub struct SourceArgs {
    /// Comma-separated generators, e.g. `7,8,17,18`.
    #[arg(
        long,
        required_unless_present = "family",
        conflicts_with_all = ["family", "e", "q", "d"]
    )]
    pub gens: Option<GensArg>,
    /// Family to construct (requires --e, --q, --d).
    #[arg(long, value_enum, required_unless_present = "gens", requires_all = ["e", "q", "d"])]
    pub family: Option<FamilyArg>,
    /// Embedding dimension for --family.
    #[arg(long, requires = "family")]
    pub e: Option<i64>,
    /// Parameter q for --family.
    #[arg(long, requires = "family")]
    pub q: Option<i64>,
    /// Common difference d for --family.
    #[arg(long, requires = "family")]
    pub d: Option<i64>,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    S,
    T,
}

impl From<FamilyArg> for nsg_core::Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::S => nsg_core::Family::S,
            FamilyArg::T => nsg_core::Family::T,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyChoice {
    S,
    T,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Inclusive integer range, written either `n` or `lo..hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RangeArg {
    pub lo: i64,
    pub hi: i64,
}

impl RangeArg {
    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.parse::<i64>()
                .map_err(|_| format!("`{t}` is not an integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range `{s}` (lo > hi)"));
        }
        Ok(RangeArg { lo, hi })
    }
}

/// Comma-separated list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GensArg(pub Vec<i64>);

impl FromStr for GensArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut gens = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let v: i64 = part
                .parse()
                .map_err(|_| format!("`{part}` is not an integer"))?;
            if v < 1 {
                return Err(format!("generators must be positive, got {v}"));
            }
            gens.push(v);
        }
        if gens.is_empty() {
            return Err("generator list is empty".to_string());
        }
        Ok(GensArg(gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parses_single_and_span() {
        assert_eq!("4".parse::<RangeArg>().unwrap(), RangeArg { lo: 4, hi: 4 });
        assert_eq!("4..8".parse::<RangeArg>().unwrap(), RangeArg { lo: 4, hi: 8 });
        assert!("8..4".parse::<RangeArg>().is_err());
        assert!("x..4".parse::<RangeArg>().is_err());
    }

    #[test]
    fn gens_parse_and_reject_nonpositive() {
        assert_eq!("7,8,17,18".parse::<GensArg>().unwrap().0, vec![7, 8, 17, 18]);
        assert_eq!("2, 3".parse::<GensArg>().unwrap().0, vec![2, 3]);
        assert!("7,0".parse::<GensArg>().is_err());
        assert!("7,x".parse::<GensArg>().is_err());
    }

    #[test]
    fn cli_parses_the_documented_examples() {
        use clap::Parser;
        Cli::try_parse_from([
            "nsg", "construct", "--family", "s", "--e", "4", "--q", "1", "--d", "1", "--format",
            "json",
        ])
        .unwrap();
        Cli::try_parse_from([
            "nsg", "verify", "--family", "both", "--e", "4..8", "--q", "1..5", "--d", "1..9",
        ])
        .unwrap();
        Cli::try_parse_from(["nsg", "presentation", "--gens", "2,3"]).unwrap();
        Cli::try_parse_from(["nsg", "apery", "--gens", "7,8,17,18", "--base", "7"]).unwrap();
        Cli::try_parse_from(["nsg", "gaps", "--family", "s", "--e", "4", "--q", "1", "--d", "1"])
            .unwrap();
        // a semigroup source is mandatory
        assert!(Cli::try_parse_from(["nsg", "gaps"]).is_err());
        // --family without the triple is rejected
        assert!(Cli::try_parse_from(["nsg", "apery", "--family", "s"]).is_err());
    }
}
