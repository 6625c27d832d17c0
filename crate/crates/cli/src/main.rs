//! svlab: exact l1-seminorm computations on finite Delta-complexes.
//!
//! Every subcommand prints `key=value` fields with exact rationals `p/q`,
//! never floating point, so identical invocations are byte-identical.
//! Exit codes: 0 success, 2 domain error, 3 parse error, 4 internal
//! invariant violation.

mod commands;
mod dcx;
mod error;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::CliError;

#[derive(Parser)]
#[command(name = "svlab", version, about = "Exact l1-seminorms on Delta-complexes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a complex and report its Euler characteristic and Betti numbers
    Check {
        /// DCX file holding the complex
        path: Option<PathBuf>,
        /// Built-in complex: surface:<g> or circle:<n>
        #[arg(long)]
        builder: Option<String>,
    },
    /// Minimize the l1-norm over a homology class, optionally with the dual certificate
    Norm {
        /// DCX file holding the complex
        path: Option<PathBuf>,
        /// Built-in complex: surface:<g> or circle:<n>
        #[arg(long)]
        builder: Option<String>,
        /// Class to measure: `fundamental` or a DCX chain file
        #[arg(long, default_value = "fundamental")]
        class: String,
        /// Also compute the dual sup-norm certificate
        #[arg(long)]
        dual: bool,
        /// Write the optimal cycle, witness, and certificate as DCX
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a cyclic cover and report its characteristics
    Cover {
        /// DCX file holding the base complex
        path: Option<PathBuf>,
        /// Built-in complex: surface:<g> or circle:<n>
        #[arg(long)]
        builder: Option<String>,
        /// Edge cocycle: `auto:<d>` or a DCX cocycle file
        #[arg(long)]
        cocycle: String,
        /// Write base, cover, cocycle, and tower as DCX
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transfer a chain to a cyclic cover and compare l1 data
    Transfer {
        /// DCX file holding the base complex
        path: Option<PathBuf>,
        /// Built-in complex: surface:<g> or circle:<n>
        #[arg(long)]
        builder: Option<String>,
        /// Edge cocycle: `auto:<d>` or a DCX cocycle file
        #[arg(long)]
        cocycle: String,
        /// Chain to transfer: `fundamental` or a DCX chain file
        #[arg(long, default_value = "fundamental")]
        class: String,
    },
    /// Bound the norm of a winding class on a combinatorial circle
    Wrap {
        /// Number of edges in the circle
        #[arg(long)]
        circle: usize,
        /// Winding coefficient as a rational p/q
        #[arg(long, allow_hyphen_values = true)]
        winding: String,
        /// Longest wrapped representative to consider
        #[arg(long = "max-len")]
        max_len: usize,
    },
    /// Barycentrically subdivide a complex
    Subdivide {
        /// DCX file holding the complex
        path: Option<PathBuf>,
        /// Built-in complex: surface:<g> or circle:<n>
        #[arg(long)]
        builder: Option<String>,
        /// How many times to subdivide
        #[arg(long, default_value_t = 1)]
        times: usize,
        /// Write the subdivided complex as DCX
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Average a chain over deck translations between tower quotients
    Smear {
        /// DCX file holding the tower (base complex + cocycle + tower)
        #[arg(long)]
        tower: PathBuf,
        /// Divisor naming the quotient the chain lives on
        #[arg(long)]
        from: u64,
        /// Divisor naming the quotient to smear onto
        #[arg(long)]
        to: u64,
        /// Chain to smear: `fundamental` or a DCX chain file
        #[arg(long, default_value = "fundamental")]
        chain: String,
    },
}

/// SVLAB_THREADS caps the worker pool; unset keeps the library default.
/// The value is validated in every build; sizing the pool only applies
/// when the parallel feature is compiled in.
fn init_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("SVLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::domain(format!("SVLAB_THREADS=`{raw}` is not a positive integer")))?;
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::domain(format!("cannot size the thread pool: {e}")))?;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.cmd {
        Cmd::Check { path, builder } => {
            let input = commands::load_input(path.as_deref(), builder.as_deref())?;
            commands::cmd_check(&input)
        }
        Cmd::Norm { path, builder, class, dual, out } => {
            let input = commands::load_input(path.as_deref(), builder.as_deref())?;
            commands::cmd_norm(&input, &class, dual, out.as_deref())
        }
        Cmd::Cover { path, builder, cocycle, out } => {
            let input = commands::load_input(path.as_deref(), builder.as_deref())?;
            commands::cmd_cover(&input, &cocycle, out.as_deref())
        }
        Cmd::Transfer { path, builder, cocycle, class } => {
            let input = commands::load_input(path.as_deref(), builder.as_deref())?;
            commands::cmd_transfer(&input, &cocycle, &class)
        }
        Cmd::Wrap { circle, winding, max_len } => commands::cmd_wrap(circle, &winding, max_len),
        Cmd::Subdivide { path, builder, times, out } => {
            let input = commands::load_input(path.as_deref(), builder.as_deref())?;
            commands::cmd_subdivide(&input, times, out.as_deref())
        }
        Cmd::Smear { tower, from, to, chain } => {
            commands::cmd_smear(&tower, from, to, &chain)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = init_threads().and_then(|()| run(cli));
    match outcome {
        Ok(report) => print!("{report}"),
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}
