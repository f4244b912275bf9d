use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use radial_hermite::export::Format;

#[derive(Parser, Debug)]
#[command(
    name = "radial-hermite",
    version,
    about = "Hermite polynomials on radial lines"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coefficients of H_N
    Poly {
        #[command(flatten)]
        model: Model,
        #[arg(long = "N", value_name = "N")]
        degree: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Gram matrix of H_0..H_nmax
    Gram {
        #[command(flatten)]
        model: Model,
        #[arg(long, default_value_t = 24)]
        nmax: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Closed-form norms against the Gram diagonal
    Norms {
        #[command(flatten)]
        model: Model,
        #[arg(long, default_value_t = 24)]
        nmax: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Oscillator spectra for N <= nmax
    Spectrum {
        #[command(flatten)]
        model: Model,
        #[arg(long, default_value_t = 24)]
        nmax: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Sample h_N along every line
    Eval {
        #[command(flatten)]
        model: Model,
        #[arg(long = "N", value_name = "N")]
        degree: u32,
        /// tmin,tmax,count
        #[arg(long, default_value = "-2,2,201", allow_hyphen_values = true)]
        grid: String,
        #[command(flatten)]
        out: Output,
    },
    /// Run the invariant suite
    Verify {
        #[command(flatten)]
        model: Model,
        #[arg(long, default_value_t = 24)]
        nmax: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Corrections to printed formulas, with evidence
    Errata {
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct Model {
    /// Number of lines (odd)
    #[arg(long, allow_negative_numbers = true)]
    pub r: i64,
    /// Weight parameter, "p/q" or integer
    #[arg(long, allow_hyphen_values = true)]
    pub nu: String,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}
