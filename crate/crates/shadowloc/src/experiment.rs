//! Monte-Carlo harness: random instance generation on the unit square,
//! parameter sweeps over the communication radius and the network size,
//! and per-cell aggregation of the comparison metrics.
//!
//! Everything is deterministic given the base seed: per-run seeds are
//! derived by hashing grid indices, instances come from a counter-based
//! RNG, and rows are produced and aggregated in canonical
//! (radius, size, run) order regardless of parallelism.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::engine::{propagate, Algorithm};
use crate::error::{Error, Result};
use crate::geometry::{distance, is_collinear, Point2, EPS_GEOM};
use crate::graph::{build_unit_disk_graph, NetworkGraph, NodeRecord};

/// Attempt bound for placing the kernel triple.
pub const KERNEL_PLACEMENT_ATTEMPTS: usize = 10_000;

/// Which algorithms a sweep evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Both,
    Tnc,
    Shadow,
}

/// Sweep parameters. The default grid spans the threshold region at
/// desk-scale cost: rho 0.10..=0.50 step 0.05, n 10..=100 step 10,
/// 50 runs per cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub rho_grid: Vec<f64>,
    pub n_grid: Vec<usize>,
    pub runs: usize,
    pub base_seed: u64,
    pub mode: SweepMode,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            rho_grid: float_grid(0.10, 0.50, 0.05),
            n_grid: (10..=100).step_by(10).collect(),
            runs: 50,
            base_seed: 42,
            mode: SweepMode::Both,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.rho_grid.is_empty() || self.n_grid.is_empty() {
            return Err(Error::InvalidConfig("grids must be non-empty".into()));
        }
        let sqrt2 = std::f64::consts::SQRT_2;
        for &rho in &self.rho_grid {
            if !(rho > 0.0 && rho <= sqrt2) {
                return Err(Error::InvalidConfig(format!(
                    "rho {rho} outside (0, sqrt(2)]"
                )));
            }
        }
        if self.rho_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidConfig(
                "rho grid must be strictly increasing".into(),
            ));
        }
        for &n in &self.n_grid {
            if n <= 3 {
                return Err(Error::InvalidConfig(format!(
                    "network size {n} must exceed 3"
                )));
            }
        }
        if self.n_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidConfig(
                "size grid must be strictly increasing".into(),
            ));
        }
        if self.runs == 0 {
            return Err(Error::InvalidConfig("runs must be >= 1".into()));
        }
        Ok(())
    }
}

/// Inclusive arithmetic grid, cleaned to 9 decimals so grid values print
/// as the decimals the user asked for.
pub fn float_grid(min: f64, max: f64, step: f64) -> Vec<f64> {
    if !(step > 0.0) || max < min {
        return Vec::new();
    }
    let count = ((max - min) / step + 1e-9).floor() as usize;
    (0..=count)
        .map(|k| ((min + k as f64 * step) * 1e9).round() / 1e9)
        .collect()
}

/// Metrics for one (rho, n, run) instance. Skipped algorithms (modes
/// other than `Both`) leave their percentage as NaN.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunMetrics {
    pub rho: f64,
    pub n: usize,
    pub run_index: usize,
    pub pct_tnc: f64,
    pub pct_shadow: f64,
    pub shadow_edge_count: usize,
    pub regular_edge_count: usize,
}

/// Fraction of all created edges that are shadow edges.
pub fn shadow_edge_fraction(metrics: &RunMetrics) -> Result<f64> {
    let total = metrics.shadow_edge_count + metrics.regular_edge_count;
    if total == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(metrics.shadow_edge_count as f64 / total as f64)
}

/// Per-(rho, n) aggregation over completed runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellSummary {
    pub rho: f64,
    pub n: usize,
    pub completed_runs: usize,
    pub skipped_runs: usize,
    pub mean_pct_tnc: f64,
    pub mean_pct_shadow: f64,
    /// Mean of per-run (pct_shadow - pct_tnc).
    pub mean_improvement: f64,
    /// mean_pct_shadow / mean_pct_tnc, with 0/0 -> 1 and x/0 -> infinity.
    pub ratio: f64,
    pub mean_shadow_edges: f64,
    pub mean_regular_edges: f64,
    /// Mean of per-run shadow_edges / (shadow_edges + regular_edges).
    pub mean_shadow_fraction: f64,
}

/// A run that produced no instance (kernel placement failed).
#[derive(Debug, Clone, PartialEq)]
pub struct SkippedRun {
    pub rho: f64,
    pub n: usize,
    pub run_index: usize,
    pub reason: String,
}

/// Full sweep result: per-run rows in (rho, n, run) order, per-cell
/// means, and any skipped runs.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutput {
    pub rows: Vec<RunMetrics>,
    pub cells: Vec<CellSummary>,
    pub skipped: Vec<SkippedRun>,
}

/// splitmix64 finalizer; stable across platforms.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-run seed derived from the base seed and grid indices, so
/// extending the grid never perturbs existing cells.
pub fn cell_seed(base_seed: u64, rho_idx: usize, n_idx: usize, run: usize) -> u64 {
    let mut s = splitmix64(base_seed);
    s = splitmix64(s ^ (rho_idx as u64));
    s = splitmix64(s ^ (n_idx as u64));
    splitmix64(s ^ (run as u64))
}

/// Generate a random geometric instance: `n` i.i.d. uniform positions on
/// the unit square, the first three forming the kernel triple.
///
/// The kernel triple must be pairwise within `rho` and non-collinear;
/// only the triple is resampled until it qualifies (the remaining n-3
/// positions never move), bounded by [`KERNEL_PLACEMENT_ATTEMPTS`].
pub fn generate_instance(n: usize, rho: f64, seed: u64) -> Result<NetworkGraph> {
    if !(rho > 0.0) {
        return Err(Error::NonPositiveRadius(rho));
    }
    if n <= 3 {
        return Err(Error::InvalidConfig(format!(
            "instance size {n} must exceed 3"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positions: Vec<Point2> = (0..n)
        .map(|_| Point2::new(rng.gen::<f64>(), rng.gen::<f64>()))
        .collect();

    let triple_ok = |p: &[Point2]| {
        let pairs = [(0, 1), (0, 2), (1, 2)];
        pairs.iter().all(|&(a, b)| {
            let d = distance(p[a], p[b]);
            d > EPS_GEOM && d <= rho
        }) && !is_collinear(p[0], p[1], p[2])
    };

    let mut attempts = 1;
    while !triple_ok(&positions) {
        if attempts >= KERNEL_PLACEMENT_ATTEMPTS {
            return Err(Error::KernelPlacementFailed { rho, attempts });
        }
        attempts += 1;
        for slot in positions.iter_mut().take(3) {
            *slot = Point2::new(rng.gen::<f64>(), rng.gen::<f64>());
        }
    }

    let nodes = positions
        .into_iter()
        .enumerate()
        .map(|(id, p)| NodeRecord::new(id, p, id < 3))
        .collect();
    build_unit_disk_graph(nodes, rho)
}

/// Sample a kernel seed triangle for incremental construction: uniform
/// triples resampled until pairwise within `rho` and non-collinear.
pub fn sample_seed_triangle(rho: f64, rng: &mut impl Rng) -> Result<[NodeRecord; 3]> {
    if !(rho > 0.0) {
        return Err(Error::NonPositiveRadius(rho));
    }
    for _ in 0..KERNEL_PLACEMENT_ATTEMPTS {
        let p: Vec<Point2> = (0..3)
            .map(|_| Point2::new(rng.gen::<f64>(), rng.gen::<f64>()))
            .collect();
        let pairs = [(0, 1), (0, 2), (1, 2)];
        let ok = pairs.iter().all(|&(a, b)| {
            let d = distance(p[a], p[b]);
            d > EPS_GEOM && d <= rho
        }) && !is_collinear(p[0], p[1], p[2]);
        if ok {
            return Ok([
                NodeRecord::new(0, p[0], true),
                NodeRecord::new(1, p[1], true),
                NodeRecord::new(2, p[2], true),
            ]);
        }
    }
    Err(Error::KernelPlacementFailed {
        rho,
        attempts: KERNEL_PLACEMENT_ATTEMPTS,
    })
}

fn evaluate_instance(g: &NetworkGraph, mode: SweepMode) -> (f64, f64, usize) {
    let run_tnc = matches!(mode, SweepMode::Both | SweepMode::Tnc);
    let run_shadow = matches!(mode, SweepMode::Both | SweepMode::Shadow);

    let pct_tnc = if run_tnc {
        let mut t = g.clone();
        propagate(&mut t, Algorithm::Tnc);
        t.localized_fraction()
    } else {
        f64::NAN
    };
    let (pct_shadow, shadow_edges) = if run_shadow {
        let mut s = g.clone();
        propagate(&mut s, Algorithm::Shadow);
        (s.localized_fraction(), s.shadow_edge_count())
    } else {
        (f64::NAN, 0)
    };
    (pct_tnc, pct_shadow, shadow_edges)
}

/// Run the full sweep: one instance per (rho, n, run) triple, both
/// algorithms on identical copies, metrics per run and means per cell.
///
/// Runs are evaluated in parallel but collected and aggregated in
/// canonical order, so the output is identical however many threads
/// execute it.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutput> {
    cfg.validate()?;

    let jobs: Vec<(usize, usize, usize)> = (0..cfg.rho_grid.len())
        .flat_map(|ri| {
            (0..cfg.n_grid.len()).flat_map(move |ni| (0..cfg.runs).map(move |run| (ri, ni, run)))
        })
        .collect();

    let outcomes: Vec<std::result::Result<RunMetrics, SkippedRun>> = jobs
        .par_iter()
        .map(|&(ri, ni, run)| {
            let rho = cfg.rho_grid[ri];
            let n = cfg.n_grid[ni];
            let seed = cell_seed(cfg.base_seed, ri, ni, run);
            match generate_instance(n, rho, seed) {
                Ok(g) => {
                    let (pct_tnc, pct_shadow, shadow_edge_count) = evaluate_instance(&g, cfg.mode);
                    Ok(RunMetrics {
                        rho,
                        n,
                        run_index: run,
                        pct_tnc,
                        pct_shadow,
                        shadow_edge_count,
                        regular_edge_count: g.regular_edge_count(),
                    })
                }
                Err(e) => Err(SkippedRun {
                    rho,
                    n,
                    run_index: run,
                    reason: e.to_string(),
                }),
            }
        })
        .collect();

    let mut rows = Vec::with_capacity(outcomes.len());
    let mut skipped = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(row) => rows.push(row),
            Err(skip) => skipped.push(skip),
        }
    }

    let mut cells = Vec::with_capacity(cfg.rho_grid.len() * cfg.n_grid.len());
    for &rho in &cfg.rho_grid {
        for &n in &cfg.n_grid {
            let cell_rows: Vec<&RunMetrics> =
                rows.iter().filter(|r| r.rho == rho && r.n == n).collect();
            cells.push(summarize_cell(rho, n, cfg.runs, &cell_rows));
        }
    }

    Ok(SweepOutput {
        rows,
        cells,
        skipped,
    })
}

fn summarize_cell(rho: f64, n: usize, runs: usize, rows: &[&RunMetrics]) -> CellSummary {
    let count = rows.len();
    let mean = |f: &dyn Fn(&RunMetrics) -> f64| -> f64 {
        rows.iter().map(|r| f(r)).sum::<f64>() / count as f64
    };
    let mean_pct_tnc = mean(&|r| r.pct_tnc);
    let mean_pct_shadow = mean(&|r| r.pct_shadow);
    let ratio = if mean_pct_tnc == 0.0 {
        if mean_pct_shadow == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        mean_pct_shadow / mean_pct_tnc
    };
    CellSummary {
        rho,
        n,
        completed_runs: count,
        skipped_runs: runs - count,
        mean_pct_tnc,
        mean_pct_shadow,
        mean_improvement: mean(&|r| r.pct_shadow - r.pct_tnc),
        ratio,
        mean_shadow_edges: mean(&|r| r.shadow_edge_count as f64),
        mean_regular_edges: mean(&|r| r.regular_edge_count as f64),
        mean_shadow_fraction: mean(&|r| {
            let total = r.shadow_edge_count + r.regular_edge_count;
            if total == 0 {
                0.0
            } else {
                r.shadow_edge_count as f64 / total as f64
            }
        }),
    }
}
