//! `monogen` command-line tool.

mod commands;
mod corpus;
mod dto;
mod render;
mod sketch;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::corpus::FamilyName;

#[derive(Parser, Debug)]
#[command(name = "monogen", version, about = "Monogenity of integer polynomials and power integral bases in quartic fields")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Search box for the quartic solver (the smaller boxes are capped at 100).
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: Option<u64>,
    /// Trial division limit for integer factorization.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(2..))]
    pub trial_limit: Option<u64>,
    /// Seed for Pollard rho and the probabilistic primality bases.
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a monic irreducible polynomial is monogenic.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Dedekind's criterion at one prime.
    Dedekind {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(short, long)]
        p: u64,
    },
    /// Newton polygons, residual polynomials and Ore's index at one prime.
    Polygon {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(short, long)]
        p: u64,
        /// A single monic phi, irreducible mod p; default is every factor of f mod p.
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
    },
    /// Generators of power integral bases in a quartic field.
    Quartic {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Target index.
        #[arg(short, long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        /// Common denominator d of the integral basis.
        #[arg(short, long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
        /// Index of xi; default is ind(f) when it is fully resolved.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_xi: Option<u64>,
    },
    /// Sweep a polynomial family against its closed-form oracle.
    Corpus {
        family: FamilyName,
        /// Range `a..b` (inclusive) for n.
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        /// Range `a..b` (inclusive) for m.
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        /// Exponent of 2 for the binomial family.
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Exponent of 3 for the binomial family.
        #[arg(long, default_value_t = 1)]
        l: u32,
        /// Middle exponent for jones-white.
        #[arg(long)]
        exp: Option<u32>,
        /// Range for A (jones-white).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Range for B (jones-white).
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
}

/// Process outcome: exit 0 definite, 1 inconclusive or mismatch, 2 input error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Definite,
    Inconclusive,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.global.json;
    match commands::run(&cli) {
        Ok((out, status)) => {
            print!("{out}");
            ExitCode::from(match status {
                Status::Definite => 0,
                Status::Inconclusive => 1,
            })
        }
        Err(e) => {
            if json {
                println!("{}", dto::error_json(&e));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
