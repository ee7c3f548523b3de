use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

/// Exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    /// A record or check did not reach its expected status.
    pub const MISMATCH: u8 = 1;
    pub const REFUTED: u8 = 2;
    pub const INCONCLUSIVE: u8 = 3;
    pub const USAGE: u8 = 64;
    /// An expression could not be evaluated on the domain.
    pub const DATA: u8 = 65;
    pub const IO: u8 = 74;
}

#[derive(Parser, Debug)]
#[command(name = "ineqcert", version, about = "Certify trigonometric and hyperbolic inequalities")]
pub struct Cli {
    /// Additional statement file merged into the built-in catalog.
    #[arg(long, global = true, value_name = "FILE")]
    pub catalog: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Section {
    Sec1,
    Sec2,
    Sec3,
}

impl Section {
    pub fn number(self) -> u8 {
        match self {
            Section::Sec1 => 1,
            Section::Sec2 => 2,
            Section::Sec3 => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List inequality and monotonicity records.
    List {
        #[arg(long)]
        filter: Option<Section>,
    },
    /// Show one record.
    Show { id: String },
    /// Certify one record.
    Verify {
        id: String,
        /// Maximum bisection depth (default 40, or INEQCERT_MAX_DEPTH).
        #[arg(long)]
        depth: Option<u32>,
        /// Initial zone radius at sharpness points.
        #[arg(long)]
        delta: Option<f64>,
        /// Write the certificate here.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Certify every record and compare with the expected outcome.
    VerifyAll {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write report.json and one certificate per record here.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Named constants against their printed decimals.
    Constants,
    /// Roots and values against their printed decimals.
    Roots,
    /// Gap claims as CSV.
    Gaps,
    /// Exact series coefficients.
    Series {
        name: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Parse and certify every statement of a file.
    Check { file: PathBuf },
    /// Parse a statement file without certifying it.
    Parse {
        #[arg(long, value_name = "FILE")]
        check: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
