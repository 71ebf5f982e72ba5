//! Sweep CSV: header `rho,n,run,pct_tnc,pct_shadow,shadow_edges,regular_edges`,
//! one row per completed run, sorted by (rho, n, run). Values use
//! shortest-round-trip decimal formatting, so identical sweeps produce
//! byte-identical files.

use std::fs;
use std::path::Path;

use crate::error::Result;
use crate::experiment::SweepOutput;

pub const CSV_HEADER: &str = "rho,n,run,pct_tnc,pct_shadow,shadow_edges,regular_edges";

pub fn sweep_to_csv_string(out: &SweepOutput) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in &out.rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.rho,
            r.n,
            r.run_index,
            r.pct_tnc,
            r.pct_shadow,
            r.shadow_edge_count,
            r.regular_edge_count
        ));
    }
    s
}

pub fn write_sweep_csv(out: &SweepOutput, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, sweep_to_csv_string(out))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::{run_sweep, SweepConfig, SweepMode};

    #[test]
    fn header_and_row_shape() {
        let cfg = SweepConfig {
            rho_grid: vec![std::f64::consts::SQRT_2],
            n_grid: vec![10],
            runs: 1,
            base_seed: 1,
            mode: SweepMode::Both,
        };
        let out = run_sweep(&cfg).unwrap();
        let csv = sweep_to_csv_string(&out);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        let row = lines.next().unwrap();
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 7);
        assert_eq!(fields[0], "1.4142135623730951");
        assert_eq!(fields[1], "10");
        assert_eq!(fields[2], "0");
        assert_eq!(fields[3], "1");
        assert_eq!(fields[4], "1");
        assert_eq!(fields[5], "0");
        assert_eq!(fields[6], "45");
        assert!(lines.next().is_none());
    }
}
