//! Sensor-network localization with shadow edges.
//!
//! Classical trilateration-based network construction needs every node
//! to reach three localized neighbors. This crate also exploits the
//! *absence* of communication: when a node senses only two localized
//! neighbors, its position is narrowed to two mirror hypotheses, and a
//! localized node that lies inside exactly one of the corresponding
//! sensing disks — yet is not sensed — rules that hypothesis out. The
//! inferred constraint is recorded as a *shadow edge* and the node is
//! localized with just two real links.
//!
//! The crate provides:
//!
//! - [`geometry`]: circle intersection, collinearity, disk membership;
//! - [`graph`]: the unit-disk network model with regular and shadow
//!   edges and per-node localization states;
//! - [`engine`]: bilateration/trilateration, shadow-edge discovery, the
//!   propagation closure (with a trilateration-only baseline), the
//!   localizability check, and incremental network construction;
//! - [`experiment`]: seeded random instances and the Monte-Carlo sweep
//!   comparing the two algorithms over a (radius, size) grid;
//! - [`io`]: the JSON graph document, the sweep CSV, and an SVG
//!   renderer.
//!
//! The `shadowloc` binary exposes all of it as subcommands; see the
//! README for the pipeline.

pub mod engine;
pub mod error;
pub mod experiment;
pub mod geometry;
pub mod graph;
pub mod io;

pub use engine::{
    apply_shadow_edge, bilaterate, check_localizable, classify_nodes, construct_incremental,
    find_shadow_anchor, propagate, propagate_in_order, trilaterate, Algorithm, ConstructStats,
    NodeClass, PropagationReport, ShadowApplication, MAX_CONSTRUCT_SAMPLES, TOL_TRILAT,
};
pub use error::{Error, Result};
pub use experiment::{
    cell_seed, float_grid, generate_instance, run_sweep, sample_seed_triangle,
    shadow_edge_fraction, CellSummary, RunMetrics, SkippedRun, SweepConfig, SweepMode, SweepOutput,
    KERNEL_PLACEMENT_ATTEMPTS,
};
pub use geometry::{
    circle_intersection, distance, in_disk, is_collinear, Circle, IntersectionResult, Point2,
    EPS_COLLINEAR, EPS_GEOM,
};
pub use graph::{
    build_unit_disk_graph, EdgeKind, LocalizationState, NetworkGraph, NodeId, NodeRecord,
};
