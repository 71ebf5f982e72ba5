use thiserror::Error;

use crate::graph::NodeId;

/// Errors reported by the geometry kernel, the graph model, the
/// localization engine and the file formats.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Circle intersection requested for circles with coinciding centers.
    #[error("circle centers coincide within tolerance")]
    DegenerateCenters,

    /// Node set contains a repeated id.
    #[error("duplicate node id {0}")]
    DuplicateId(NodeId),

    /// Node ids are not the dense range 0..n-1.
    #[error("node ids must be dense 0..n-1 (offending id {0})")]
    NonDenseIds(NodeId),

    /// Two nodes occupy the same position; zero-distance anchors break
    /// bilateration.
    #[error("nodes {0} and {1} coincide within tolerance")]
    CoincidentNodes(NodeId, NodeId),

    /// Communication radius must be strictly positive.
    #[error("communication radius must be > 0, got {0}")]
    NonPositiveRadius(f64),

    /// Query referenced a node id outside the graph.
    #[error("unknown node id {0}")]
    UnknownId(NodeId),

    /// Sensing region requested for a node with no position constraint yet.
    #[error("node {0} has no localization options yet")]
    NotYetConstrained(NodeId),

    /// Trilateration anchors are collinear.
    #[error("trilateration anchors are collinear")]
    CollinearAnchors,

    /// Measured distances admit no position within tolerance; the
    /// noise-free model makes this a sign of corrupted input.
    #[error("distances are inconsistent with any position (residual {residual:e})")]
    InconsistentDistances { residual: f64 },

    /// Bilateration circles are disjoint or nested; impossible for
    /// noise-free data.
    #[error("bilateration circles do not intersect")]
    NoSolution,

    /// Shadow-edge operation requires an ambiguous node.
    #[error("node {0} is not in the ambiguous state")]
    NotAmbiguous(NodeId),

    /// Shadow edge application re-checked its preconditions and failed.
    #[error("node {anchor} is not a valid shadow anchor for node {node}")]
    InvalidShadowAnchor { node: NodeId, anchor: NodeId },

    /// Incremental construction seed triangle is collinear, coincident,
    /// out of the unit square, or not pairwise within radius.
    #[error("seed triangle is degenerate: {0}")]
    SeedDegenerate(String),

    /// Incremental construction exceeded its candidate-sampling budget.
    #[error("construction exhausted {0} candidate samples before reaching the target size")]
    ConstructionExhausted(usize),

    /// Kernel triple placement failed within the attempt bound.
    #[error("no valid kernel triple found in {attempts} attempts (rho={rho})")]
    KernelPlacementFailed { rho: f64, attempts: usize },

    /// Edge fraction requested for a graph with no edges.
    #[error("graph has no edges")]
    EmptyGraph,

    /// Instance or sweep parameters are out of range.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Graph document violates the schema.
    #[error("schema violation: {0}")]
    SchemaViolation(String),

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
