use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand};
use mirror_series::report::{self, Format, OutputRecord, SeriesKind};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact series for the Picard-Fuchs periods and mirror map of local P2.
#[derive(Parser)]
#[command(name = "mirror-series", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Holomorphic parts of the Frobenius basis.
    Series {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "basis")]
        which: SeriesKind,
    },
    /// q-expansion coefficients c_d of I3.
    Mirror {
        #[command(flatten)]
        common: Common,
    },
    /// Table of c_d, m_d, n_d, K_d and R_d.
    Invariants {
        #[command(flatten)]
        common: Common,
    },
    /// Yukawa coupling K and the product (1 - 27z) K.
    Yukawa {
        #[command(flatten)]
        common: Common,
    },
    /// Run every consistency check; exit 1 if any fails.
    Check {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Truncation order N.
    #[arg(long, default_value_t = 8)]
    order: usize,
    #[arg(long, default_value = "table")]
    format: Format,
    /// Largest order accepted.
    #[arg(
        long,
        env = "MIRROR_SERIES_MAX_ORDER",
        default_value_t = 256,
        hide = true
    )]
    max_order: usize,
}

fn usage_error(msg: &str) -> ExitCode {
    let mut cmd = Cli::command();
    let err = cmd.error(clap::error::ErrorKind::ValueValidation, msg);
    let _ = err.print();
    ExitCode::from(EXIT_USAGE)
}

fn emit(rec: &OutputRecord, format: Format) {
    print!("{}", rec.render(format));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, min_order) = match &cli.command {
        Command::Check { common } => (common, 2),
        Command::Yukawa { common } => (common, 2),
        Command::Series { common, .. }
        | Command::Mirror { common }
        | Command::Invariants { common } => (common, 1),
    };
    if common.order < min_order {
        return usage_error(&format!("--order must be at least {min_order}"));
    }
    if common.order > common.max_order {
        return usage_error(&format!(
            "--order {} exceeds MIRROR_SERIES_MAX_ORDER = {}",
            common.order, common.max_order
        ));
    }
    let (order, format) = (common.order, common.format);

    let result = match &cli.command {
        Command::Series { which, .. } => report::series_record(order, *which).map(|r| (r, true)),
        Command::Mirror { .. } => report::mirror_record(order).map(|r| (r, true)),
        Command::Invariants { .. } => report::invariants_record(order).map(|r| (r, true)),
        Command::Yukawa { .. } => report::yukawa_record(order).map(|r| (r, true)),
        Command::Check { .. } => report::check_record(order),
    };
    match result {
        Ok((rec, ok)) => {
            for note in rec.notes.iter().filter(|n| n.starts_with("warning:")) {
                if format != Format::Table {
                    eprintln!("{note}");
                }
            }
            emit(&rec, format);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILURE)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
