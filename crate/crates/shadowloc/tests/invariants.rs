//! Cross-module invariants that need whole-pipeline runs: the
//! radius-threshold trend and the minimal shadow edge set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use shadowloc::{
    float_grid, generate_instance, propagate, run_sweep, Algorithm, NodeId, SweepConfig, SweepMode,
};

/// Spearman rank correlation with average ranks for ties.
fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
        let mut out = vec![0.0; v.len()];
        let mut i = 0;
        while i < idx.len() {
            let mut j = i;
            while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
                j += 1;
            }
            let avg = (i + j) as f64 / 2.0 + 1.0;
            for &k in &idx[i..=j] {
                out[k] = avg;
            }
            i = j + 1;
        }
        out
    }
    let rx = ranks(xs);
    let ry = ranks(ys);
    let mx = rx.iter().sum::<f64>() / rx.len() as f64;
    let my = ry.iter().sum::<f64>() / ry.len() as f64;
    let num: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let den = (rx.iter().map(|a| (a - mx).powi(2)).sum::<f64>()
        * ry.iter().map(|b| (b - my).powi(2)).sum::<f64>())
    .sqrt();
    num / den
}

/// Averaged localized fraction is (rank-)monotone in the radius for a
/// fixed network size: Spearman correlation at least 0.9 over a 50-run
/// sweep.
#[test]
fn localized_fraction_rises_with_radius() {
    let cfg = SweepConfig {
        rho_grid: float_grid(0.10, 0.50, 0.05),
        n_grid: vec![40],
        runs: 50,
        base_seed: 7,
        mode: SweepMode::Both,
    };
    let out = run_sweep(&cfg).expect("sweep runs");
    let xs: Vec<f64> = out.cells.iter().map(|c| c.rho).collect();
    let ys: Vec<f64> = out.cells.iter().map(|c| c.mean_pct_shadow).collect();
    let rho_s = spearman(&xs, &ys);
    assert!(
        rho_s >= 0.9,
        "Spearman(rho, mean pct_shadow) = {rho_s:.3}, expected >= 0.9"
    );
}

/// One shadow edge per shadow-localized node: the edge count, the
/// application count, and the number of distinct owners all agree.
#[test]
fn minimal_shadow_edge_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let mut with_shadow = 0usize;
    for _ in 0..100 {
        let n = rng.gen_range(10..=80);
        let rho = rng.gen_range(0.15..=0.40);
        let seed = rng.gen::<u64>();
        let mut g = match generate_instance(n, rho, seed) {
            Ok(g) => g,
            Err(_) => continue,
        };
        let report = propagate(&mut g, Algorithm::Shadow);
        let owners: std::collections::BTreeSet<NodeId> =
            g.shadow_edges().map(|(owner, _)| owner).collect();
        assert_eq!(report.shadow_applications.len(), g.shadow_edge_count());
        assert_eq!(owners.len(), g.shadow_edge_count());
        for (owner, anchor) in g.shadow_edges() {
            assert!(g.states()[owner].is_localized());
            assert!(g.states()[anchor].is_localized());
            assert!(!g.has_regular_edge(owner, anchor));
        }
        if g.shadow_edge_count() > 0 {
            with_shadow += 1;
        }
    }
    assert!(
        with_shadow > 30,
        "only {with_shadow} instances produced shadow edges"
    );
}
