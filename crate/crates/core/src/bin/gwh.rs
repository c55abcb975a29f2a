use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gwh::harness::io::{parse_element, run_admissibility, run_cwt, run_repr};
use gwh::harness::{load_config, preset, run_verify, Fault, Samples, VerifyOptions};
use gwh::repr::Rep;

/// Generalized Weyl-Heisenberg groups over finite abelian groups.
#[derive(Parser)]
#[command(name = "gwh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite and print the JSON report.
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        tol: Option<f64>,
        /// Use mu_H(H) = |H| instead of 1.
        #[arg(long)]
        mass_scaled: bool,
        /// action-table or product-law
        #[arg(long)]
        inject_fault: Option<Fault>,
        /// Also write the report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the matrix of rep(h,k,a,z).
    Repr {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        element: String,
        #[arg(long)]
        rep: Rep,
        #[arg(long)]
        out: PathBuf,
    },
    /// Wavelet transform of a signal against a window.
    Cwt {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        rep: Rep,
        #[arg(long)]
        window: PathBuf,
        #[arg(long)]
        signal: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Calderon report of a window for the quasi-regular representation.
    Admissibility {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        window: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a built-in config.
    Preset {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> gwh::Result<bool> {
    match cli.command {
        Command::Verify { config, seed, tol, mass_scaled, inject_fault, out } => {
            let cfg = load_config(config)?;
            let opts = VerifyOptions { seed, tolerance: tol, mass_scaled, fault: inject_fault, samples: Samples::default() };
            let report = run_verify(&cfg, &opts)?;
            let json = report.to_json()?;
            if let Some(path) = out {
                std::fs::write(path, &json)?;
            }
            println!("{json}");
            for c in &report.checks {
                eprintln!("{:<32} {:?}", c.name, c.status);
            }
            Ok(report.passed())
        }
        Command::Repr { config, element, rep, out } => {
            for p in run_repr(&load_config(config)?, parse_element(&element)?, rep, &out)? {
                eprintln!("wrote {}", p.display());
            }
            Ok(true)
        }
        Command::Cwt { config, rep, window, signal, out } => {
            let summary = run_cwt(&load_config(config)?, rep, &window, &signal, &out)?;
            println!("{}", serde_json::to_string_pretty(&summary)?);
            Ok(true)
        }
        Command::Admissibility { config, window, out } => {
            let report = run_admissibility(&load_config(config)?, &window, &out)?;
            eprintln!("c_psi {:e}, spread {:e}", report.c_psi, report.spread);
            Ok(true)
        }
        Command::Preset { name, out } => {
            std::fs::write(out, preset(&name)?.to_json()?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("GWH_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global().ok();
    }
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
