//! Flag definitions. All numeric flags are exact rationals in "p/q" (or
//! plain integer) syntax; parse failures are usage errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sl2fd_core::exactpoly::{parse_rat, Rat};

pub fn rat_value(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "sl2fd", version, about = "Exact spectral toolkit for three-point difference operators with polynomial eigenfunctions")]
pub struct Cli {
    /// Output format (default from SL2FD_FORMAT, else json)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepKind {
    Differential,
    Difference,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Hahn,
    HahnTilde,
    Meixner,
    Charlier,
}

/// Coefficients of the cubic operator word and the grid step.
#[derive(Args, Debug)]
pub struct ParamFlags {
    #[arg(long = "A1", value_parser = rat_value, allow_hyphen_values = true, default_value = "0")]
    pub a1: Rat,
    #[arg(long = "A2", value_parser = rat_value, allow_hyphen_values = true, default_value = "0")]
    pub a2: Rat,
    #[arg(long = "A3", value_parser = rat_value, allow_hyphen_values = true, default_value = "0")]
    pub a3: Rat,
    #[arg(long = "A4", value_parser = rat_value, allow_hyphen_values = true, default_value = "0")]
    pub a4: Rat,
    #[arg(long = "A5", value_parser = rat_value, allow_hyphen_values = true, default_value = "0")]
    pub a5: Rat,
    #[arg(long, value_parser = rat_value, allow_hyphen_values = true, default_value = "1")]
    pub delta: Rat,
}

#[derive(Args, Debug)]
pub struct FamilyFlags {
    #[arg(long, value_enum)]
    pub name: FamilyName,
    #[arg(long, value_parser = rat_value, allow_hyphen_values = true)]
    pub alpha: Option<Rat>,
    #[arg(long, value_parser = rat_value, allow_hyphen_values = true)]
    pub beta: Option<Rat>,
    #[arg(long = "N", value_parser = rat_value, allow_hyphen_values = true)]
    pub n_param: Option<Rat>,
    #[arg(long, value_parser = rat_value, allow_hyphen_values = true)]
    pub mu: Option<Rat>,
    #[arg(long, value_parser = rat_value, allow_hyphen_values = true)]
    pub nu: Option<Rat>,
    #[arg(long, value_parser = rat_value, allow_hyphen_values = true)]
    pub gamma: Option<Rat>,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Check the commutation relations of a representation exactly
    Verify {
        #[arg(long, value_enum, default_value = "difference")]
        rep: RepKind,
        #[arg(long, value_parser = rat_value, allow_hyphen_values = true, default_value = "1")]
        delta: Rat,
        /// Representation label
        #[arg(long, default_value_t = 0)]
        n: u32,
        /// Check on all monomials of degree <= deg
        #[arg(long, default_value_t = 20)]
        deg: usize,
    },
    /// Closed-form eigenvalues lambda_0 .. lambda_kmax
    Spectrum {
        #[command(flatten)]
        params: ParamFlags,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
    },
    /// Monic eigenpolynomials with their eigenvalues
    Eigenpoly {
        #[command(flatten)]
        params: ParamFlags,
        #[arg(long, value_enum, default_value = "difference")]
        rep: RepKind,
        #[arg(long, default_value_t = 5)]
        kmax: usize,
    },
    /// Eigenpolynomial of a named classical preset
    Family {
        #[command(flatten)]
        family: FamilyFlags,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Emit x,f(x) pairs at x = 0..COUNT-1 instead of coefficients
        #[arg(long, value_name = "COUNT")]
        dump_points: Option<usize>,
    },
    /// Divide a Hahn-type eigenpolynomial by the degree-N falling factorial
    Factor {
        #[command(flatten)]
        family: FamilyFlags,
        #[arg(long)]
        k: usize,
    },
    /// Compare the difference and differential operator diagonals exactly
    Isospectral {
        #[command(flatten)]
        params: ParamFlags,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
    },
    /// Invariant-block characteristic polynomial and its approximate roots
    Qes {
        #[arg(long = "Aplus", value_parser = rat_value, allow_hyphen_values = true, default_value = "0")]
        aplus: Rat,
        #[command(flatten)]
        params: ParamFlags,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
}
