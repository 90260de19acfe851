use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use modstrat_cli::{Format, IdealKind, Output};

/// Invariants of isolated singularities and their modular strata.
#[derive(Parser)]
#[command(name = "modstrat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Milnor/Tjurina numbers, weights, T1 basis and modular tangent space.
    Invariants {
        #[arg(long)]
        poly: String,
        /// Comma-separated variables (default x,y,z).
        #[arg(long)]
        vars: Option<String>,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// Invariants along a parameter grid of a catalog family.
    Scan {
        /// tpqr:p,q,r, example6, example7-martin, example8-icis, example9-y642
        #[arg(long)]
        family: String,
        /// name=v1,v2,... (repeatable; forms a grid)
        #[arg(long = "param")]
        params: Vec<String>,
        /// Parameters fixed to zero, e.g. s1..s6 (repeatable).
        #[arg(long = "zero")]
        zeros: Vec<String>,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// Projective T1 dimension of a smooth hypersurface.
    Projective {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        vars: Option<String>,
        #[arg(long, default_value = "table")]
        format: Format,
    },
    /// Quotient dimension by brute-force linear algebra up to a degree bound.
    OracleDim {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        vars: Option<String>,
        #[arg(long)]
        degree_bound: u32,
        #[arg(long, default_value = "tjurina")]
        ideal: IdealKind,
        #[arg(long, default_value = "table")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Invariants { poly, vars, format } => {
            modstrat_cli::cmd_invariants(poly, vars.as_deref(), *format)
        }
        Command::Scan {
            family,
            params,
            zeros,
            format,
        } => modstrat_cli::cmd_scan(family, params, zeros, *format),
        Command::Projective { poly, vars, format } => {
            modstrat_cli::cmd_projective(poly, vars.as_deref(), *format)
        }
        Command::OracleDim {
            poly,
            vars,
            degree_bound,
            ideal,
            format,
        } => modstrat_cli::cmd_oracle(poly, vars.as_deref(), *degree_bound, *ideal, *format),
    };
    match result {
        Ok(Output { text, code }) => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(code as u8)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
