use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use shadowloc::io::{csv, json, svg};
use shadowloc::{
    check_localizable, construct_incremental, generate_instance, propagate, run_sweep,
    sample_seed_triangle, Algorithm, Result, SweepConfig, SweepMode,
};

#[derive(Parser)]
#[command(
    name = "shadowloc",
    version,
    about = "Sensor-network localization from two anchors plus absence-of-communication"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Tnc,
    Shadow,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Tnc => Algorithm::Tnc,
            AlgoArg::Shadow => Algorithm::Shadow,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random geometric instance (kernel triple + unit-disk edges)
    Gen {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        radius: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a localization algorithm over a graph document
    Localize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check whether the network is localizable (exit 0) or not (exit 2)
    Check {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Grow a localized network incrementally from a random seed triangle
    Construct {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        radius: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Monte-Carlo comparison sweep over the (radius, size) grid
    Sweep {
        #[arg(long, default_value_t = 0.10)]
        rho_min: f64,
        #[arg(long, default_value_t = 0.50)]
        rho_max: f64,
        #[arg(long, default_value_t = 0.05)]
        rho_step: f64,
        #[arg(long, default_value_t = 10)]
        n_min: usize,
        #[arg(long, default_value_t = 100)]
        n_max: usize,
        #[arg(long, default_value_t = 10)]
        n_step: usize,
        #[arg(long, default_value_t = 50)]
        runs: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw a graph document as SVG
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Show every qualifying shadow anchor, not just the recorded edges
        #[arg(long)]
        all_shadow_edges: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                // Help and version go to stdout with exit 0.
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen {
            nodes,
            radius,
            seed,
            out,
        } => {
            let g = generate_instance(nodes, radius, seed)?;
            json::write_graph(&g, &out)?;
            println!(
                "wrote {} nodes, {} regular edges (rho={radius}, seed={seed}) to {}",
                g.node_count(),
                g.regular_edge_count(),
                out.display()
            );
        }
        Command::Localize { input, algo, out } => {
            let mut g = json::read_graph(&input)?;
            g.reset_derived();
            propagate(&mut g, algo.into());
            json::write_graph(&g, &out)?;
            println!(
                "localized {} of {} nodes ({} shadow edges) to {}",
                g.localized_count(),
                g.node_count(),
                g.shadow_edge_count(),
                out.display()
            );
        }
        Command::Check { input } => {
            let g = json::read_graph(&input)?;
            if check_localizable(&g) {
                println!("success: network is localizable");
            } else {
                println!("fail: network is not localizable");
                return Ok(ExitCode::from(2));
            }
        }
        Command::Construct {
            nodes,
            radius,
            seed,
            out,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let triangle = sample_seed_triangle(radius, &mut rng)?;
            let (g, stats) = construct_incremental(triangle, nodes, radius, &mut rng)?;
            json::write_graph(&g, &out)?;
            println!(
                "constructed {} nodes ({} candidates rejected, {} left ambiguous, {} shadow edges) to {}",
                g.node_count(),
                stats.rejected,
                stats.unresolved,
                g.shadow_edge_count(),
                out.display()
            );
        }
        Command::Sweep {
            rho_min,
            rho_max,
            rho_step,
            n_min,
            n_max,
            n_step,
            runs,
            seed,
            out,
        } => {
            if n_step == 0 {
                return Err(shadowloc::Error::InvalidConfig(
                    "n-step must be >= 1".into(),
                ));
            }
            let cfg = SweepConfig {
                rho_grid: shadowloc::float_grid(rho_min, rho_max, rho_step),
                n_grid: (n_min..=n_max).step_by(n_step).collect(),
                runs,
                base_seed: seed,
                mode: SweepMode::Both,
            };
            let output = run_sweep(&cfg)?;
            csv::write_sweep_csv(&output, &out)?;
            for skip in &output.skipped {
                eprintln!(
                    "warning: skipped rho={} n={} run={}: {}",
                    skip.rho, skip.n, skip.run_index, skip.reason
                );
            }
            println!("rho,n,mean_pct_tnc,mean_pct_shadow,mean_diff,ratio,mean_shadow_edges");
            for cell in &output.cells {
                let ratio = if cell.ratio.is_infinite() {
                    "inf".to_string()
                } else {
                    format!("{:.4}", cell.ratio)
                };
                println!(
                    "{},{},{:.4},{:.4},{:.4},{},{:.2}",
                    cell.rho,
                    cell.n,
                    cell.mean_pct_tnc,
                    cell.mean_pct_shadow,
                    cell.mean_improvement,
                    ratio,
                    cell.mean_shadow_edges
                );
            }
            println!(
                "wrote {} rows ({} skipped) to {}",
                output.rows.len(),
                output.skipped.len(),
                out.display()
            );
        }
        Command::Render {
            input,
            out,
            all_shadow_edges,
        } => {
            let g = json::read_graph(&input)?;
            svg::write_svg(&g, &out, &svg::RenderOptions { all_shadow_edges })?;
            println!("rendered {} nodes to {}", g.node_count(), out.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}
