//! Network data model: nodes with ground-truth positions, regular edges
//! from the unit-disk rule, shadow edges, and per-node localization
//! knowledge.
//!
//! Regular edges carry the measured inter-node distance; the model is
//! noise-free so the stored value is the exact Euclidean distance.
//! Shadow edges record which node was localized by the edge (the
//! "owner") — the pair itself stays unordered.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::{distance, Circle, Point2, EPS_GEOM};

pub type NodeId = usize;

/// A node with its ground-truth position. Kernel nodes know their own
/// position a priori.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeRecord {
    pub id: NodeId,
    pub true_pos: Point2,
    pub is_kernel: bool,
}

impl NodeRecord {
    pub fn new(id: NodeId, true_pos: Point2, is_kernel: bool) -> Self {
        NodeRecord {
            id,
            true_pos,
            is_kernel,
        }
    }
}

/// Edge class: regular (measured communication link) or shadow
/// (inferred from absence of communication).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Regular,
    Shadow,
}

/// What is known about a node's position.
///
/// `Unknown` covers the under-constrained case (infinitely many
/// options), `Ambiguous` the two-hypothesis case produced by
/// bilateration, `Localized` the pinned case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LocalizationState {
    Unknown,
    Ambiguous(Point2, Point2),
    Localized(Point2),
}

impl LocalizationState {
    pub fn is_localized(&self) -> bool {
        matches!(self, LocalizationState::Localized(_))
    }

    pub fn position(&self) -> Option<Point2> {
        match self {
            LocalizationState::Localized(p) => Some(*p),
            _ => None,
        }
    }
}

fn norm_pair(i: NodeId, j: NodeId) -> (NodeId, NodeId) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// The extended shadow graph: node set, communication radius, regular
/// edges with measured distances, shadow edges, and per-node states.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkGraph {
    nodes: Vec<NodeRecord>,
    rho: f64,
    regular_edges: BTreeMap<(NodeId, NodeId), f64>,
    /// Normalized pair -> the node the edge localized.
    shadow_edges: BTreeMap<(NodeId, NodeId), NodeId>,
    states: Vec<LocalizationState>,
}

/// Build the unit-disk communication graph: an edge (i, j) exists iff
/// `0 < distance(i, j) <= rho`. Shadow edges start empty; kernel nodes
/// start `Localized` at their true position, everything else `Unknown`.
pub fn build_unit_disk_graph(nodes: Vec<NodeRecord>, rho: f64) -> Result<NetworkGraph> {
    if !(rho > 0.0) {
        return Err(Error::NonPositiveRadius(rho));
    }
    let n = nodes.len();
    let mut slots: Vec<Option<NodeRecord>> = vec![None; n];
    for rec in nodes {
        if rec.id >= n {
            return Err(Error::NonDenseIds(rec.id));
        }
        if slots[rec.id].is_some() {
            return Err(Error::DuplicateId(rec.id));
        }
        slots[rec.id] = Some(rec);
    }
    let nodes: Vec<NodeRecord> = slots.into_iter().map(|s| s.expect("dense ids")).collect();

    let mut regular_edges = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let d = distance(nodes[i].true_pos, nodes[j].true_pos);
            if d <= EPS_GEOM {
                return Err(Error::CoincidentNodes(i, j));
            }
            if d <= rho {
                regular_edges.insert((i, j), d);
            }
        }
    }

    let states = nodes
        .iter()
        .map(|rec| {
            if rec.is_kernel {
                LocalizationState::Localized(rec.true_pos)
            } else {
                LocalizationState::Unknown
            }
        })
        .collect();

    Ok(NetworkGraph {
        nodes,
        rho,
        regular_edges,
        shadow_edges: BTreeMap::new(),
        states,
    })
}

impl NetworkGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn node(&self, i: NodeId) -> Result<&NodeRecord> {
        self.nodes.get(i).ok_or(Error::UnknownId(i))
    }

    pub fn nodes(&self) -> &[NodeRecord] {
        &self.nodes
    }

    pub fn state(&self, i: NodeId) -> Result<&LocalizationState> {
        self.states.get(i).ok_or(Error::UnknownId(i))
    }

    pub fn states(&self) -> &[LocalizationState] {
        &self.states
    }

    pub fn has_regular_edge(&self, i: NodeId, j: NodeId) -> bool {
        self.regular_edges.contains_key(&norm_pair(i, j))
    }

    pub fn has_shadow_edge(&self, i: NodeId, j: NodeId) -> bool {
        self.shadow_edges.contains_key(&norm_pair(i, j))
    }

    pub fn regular_edge_count(&self) -> usize {
        self.regular_edges.len()
    }

    pub fn shadow_edge_count(&self) -> usize {
        self.shadow_edges.len()
    }

    /// Regular edges in canonical (i < j) order with their measured distances.
    pub fn regular_edges(&self) -> impl Iterator<Item = (NodeId, NodeId, f64)> + '_ {
        self.regular_edges.iter().map(|(&(i, j), &d)| (i, j, d))
    }

    /// Shadow edges in canonical pair order as (localized node, anchor).
    pub fn shadow_edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.shadow_edges.iter().map(|(&(i, j), &owner)| {
            let anchor = if owner == i { j } else { i };
            (owner, anchor)
        })
    }

    pub fn localized_count(&self) -> usize {
        self.states.iter().filter(|s| s.is_localized()).count()
    }

    pub fn localized_fraction(&self) -> f64 {
        self.localized_count() as f64 / self.node_count() as f64
    }

    /// All neighbors of `i` across edges of the given kind, sorted by id.
    /// Measured distances are attached for regular edges only.
    pub fn neighbors(&self, i: NodeId, kind: EdgeKind) -> Result<Vec<(NodeId, Option<f64>)>> {
        if i >= self.nodes.len() {
            return Err(Error::UnknownId(i));
        }
        let mut out = Vec::new();
        match kind {
            EdgeKind::Regular => {
                for (&(a, b), &d) in &self.regular_edges {
                    if a == i {
                        out.push((b, Some(d)));
                    } else if b == i {
                        out.push((a, Some(d)));
                    }
                }
            }
            EdgeKind::Shadow => {
                for &(a, b) in self.shadow_edges.keys() {
                    if a == i {
                        out.push((b, None));
                    } else if b == i {
                        out.push((a, None));
                    }
                }
            }
        }
        out.sort_unstable_by_key(|&(id, _)| id);
        Ok(out)
    }

    /// The admissible sensing region: one disk of radius rho per
    /// localization option.
    pub fn admissible_sensing_region(&self, i: NodeId) -> Result<Vec<Circle>> {
        match self.state(i)? {
            LocalizationState::Localized(p) => Ok(vec![Circle::new(*p, self.rho)]),
            LocalizationState::Ambiguous(h1, h2) => {
                Ok(vec![Circle::new(*h1, self.rho), Circle::new(*h2, self.rho)])
            }
            LocalizationState::Unknown => Err(Error::NotYetConstrained(i)),
        }
    }

    /// Drop all derived knowledge: shadow edges are cleared and every
    /// non-kernel node reverts to `Unknown`.
    pub fn reset_derived(&mut self) {
        self.shadow_edges.clear();
        for (rec, state) in self.nodes.iter().zip(self.states.iter_mut()) {
            *state = if rec.is_kernel {
                LocalizationState::Localized(rec.true_pos)
            } else {
                LocalizationState::Unknown
            };
        }
    }

    /// Regular adjacency lists (sorted by neighbor id), built once for
    /// the propagation sweeps.
    pub(crate) fn regular_adjacency(&self) -> Vec<Vec<(NodeId, f64)>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for (&(i, j), &d) in &self.regular_edges {
            adj[i].push((j, d));
            adj[j].push((i, d));
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&(id, _)| id);
        }
        adj
    }

    pub(crate) fn set_state(&mut self, i: NodeId, state: LocalizationState) {
        debug_assert!(!self.nodes[i].is_kernel, "kernel states never change");
        self.states[i] = state;
    }

    /// Append a node; the caller is responsible for inserting its edges.
    pub(crate) fn push_node(&mut self, true_pos: Point2, is_kernel: bool) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(NodeRecord::new(id, true_pos, is_kernel));
        self.states.push(if is_kernel {
            LocalizationState::Localized(true_pos)
        } else {
            LocalizationState::Unknown
        });
        id
    }

    pub(crate) fn insert_regular_edge(&mut self, i: NodeId, j: NodeId, d: f64) {
        debug_assert!(i != j && i < self.nodes.len() && j < self.nodes.len());
        debug_assert!(
            !self.has_shadow_edge(i, j),
            "pair already carries a shadow edge"
        );
        self.regular_edges.insert(norm_pair(i, j), d);
    }

    pub(crate) fn insert_shadow_edge(&mut self, owner: NodeId, anchor: NodeId) {
        debug_assert!(owner != anchor && owner < self.nodes.len() && anchor < self.nodes.len());
        debug_assert!(
            !self.has_regular_edge(owner, anchor),
            "pair already carries a regular edge"
        );
        self.shadow_edges.insert(norm_pair(owner, anchor), owner);
    }

    /// Construct an empty graph shell; used by the incremental builder
    /// and the file reader, which insert nodes and edges explicitly.
    pub(crate) fn empty(rho: f64) -> Result<NetworkGraph> {
        if !(rho > 0.0) {
            return Err(Error::NonPositiveRadius(rho));
        }
        Ok(NetworkGraph {
            nodes: Vec::new(),
            rho,
            regular_edges: BTreeMap::new(),
            shadow_edges: BTreeMap::new(),
            states: Vec::new(),
        })
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Four-node scenario: a new node (id 3) senses the two left/right
    /// anchors only; the third localized node sits inside exactly one of
    /// its two hypothesis disks and out of communication range.
    ///
    /// rho = 0.5; hypotheses for node 3 are (0.5, 0.8) [true] and
    /// (0.5, 0.2) [mirror]; node 2 at (0.5, 0.25) eliminates the mirror.
    pub(crate) fn four_node_shadow_graph() -> NetworkGraph {
        let nodes = vec![
            NodeRecord::new(0, Point2::new(0.3, 0.5), true),
            NodeRecord::new(1, Point2::new(0.7, 0.5), true),
            NodeRecord::new(2, Point2::new(0.5, 0.25), true),
            NodeRecord::new(3, Point2::new(0.5, 0.8), false),
        ];
        build_unit_disk_graph(nodes, 0.5).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn uniform_nodes(n: usize, seed: u64) -> Vec<NodeRecord> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|id| {
                let x = rng.gen::<f64>();
                let y = rng.gen::<f64>();
                NodeRecord::new(id, Point2::new(x, y), id < 3)
            })
            .collect()
    }

    #[test]
    fn out_of_range_pair_has_no_edge() {
        let nodes = vec![
            NodeRecord::new(0, Point2::new(0.0, 0.0), true),
            NodeRecord::new(1, Point2::new(0.0, 2.0), false),
        ];
        let g = build_unit_disk_graph(nodes, 1.0).unwrap();
        assert_eq!(g.regular_edge_count(), 0);
    }

    #[test]
    fn close_triple_forms_complete_triangle() {
        let nodes = vec![
            NodeRecord::new(0, Point2::new(0.1, 0.1), true),
            NodeRecord::new(1, Point2::new(0.2, 0.1), true),
            NodeRecord::new(2, Point2::new(0.15, 0.2), true),
        ];
        let g = build_unit_disk_graph(nodes, 0.5).unwrap();
        assert_eq!(g.regular_edge_count(), 3);
        for i in 0..3 {
            assert_eq!(g.neighbors(i, EdgeKind::Regular).unwrap().len(), 2);
        }
    }

    #[test]
    fn edge_count_matches_brute_force_recount() {
        let nodes = uniform_nodes(40, 7);
        let rho = 0.25;
        let g = build_unit_disk_graph(nodes.clone(), rho).unwrap();
        let mut expected = 0;
        for i in 0..nodes.len() {
            for j in (i + 1)..nodes.len() {
                let dx = nodes[i].true_pos.x - nodes[j].true_pos.x;
                let dy = nodes[i].true_pos.y - nodes[j].true_pos.y;
                if (dx * dx + dy * dy).sqrt() <= rho {
                    expected += 1;
                }
            }
        }
        assert_eq!(g.regular_edge_count(), expected);
    }

    #[test]
    fn build_rejects_bad_input() {
        let dup = vec![
            NodeRecord::new(0, Point2::new(0.1, 0.1), false),
            NodeRecord::new(0, Point2::new(0.2, 0.2), false),
        ];
        assert_eq!(build_unit_disk_graph(dup, 1.0), Err(Error::DuplicateId(0)));

        let sparse = vec![
            NodeRecord::new(0, Point2::new(0.1, 0.1), false),
            NodeRecord::new(2, Point2::new(0.2, 0.2), false),
        ];
        assert_eq!(
            build_unit_disk_graph(sparse, 1.0),
            Err(Error::NonDenseIds(2))
        );

        let nodes = vec![NodeRecord::new(0, Point2::new(0.1, 0.1), false)];
        assert_eq!(
            build_unit_disk_graph(nodes, 0.0),
            Err(Error::NonPositiveRadius(0.0))
        );

        let coincident = vec![
            NodeRecord::new(0, Point2::new(0.5, 0.5), false),
            NodeRecord::new(1, Point2::new(0.5, 0.5), false),
        ];
        assert_eq!(
            build_unit_disk_graph(coincident, 1.0),
            Err(Error::CoincidentNodes(0, 1))
        );
    }

    #[test]
    fn kernel_nodes_start_localized() {
        let g = fixtures::four_node_shadow_graph();
        for i in 0..3 {
            assert_eq!(
                *g.state(i).unwrap(),
                LocalizationState::Localized(g.node(i).unwrap().true_pos)
            );
        }
        assert_eq!(*g.state(3).unwrap(), LocalizationState::Unknown);
    }

    #[test]
    fn new_node_senses_two_anchors() {
        let g = fixtures::four_node_shadow_graph();
        let nbrs = g.neighbors(3, EdgeKind::Regular).unwrap();
        let ids: Vec<NodeId> = nbrs.iter().map(|&(id, _)| id).collect();
        assert_eq!(ids, vec![0, 1]);
        for (_, d) in nbrs {
            let d = d.unwrap();
            assert!((d - 0.13f64.sqrt()).abs() < 1e-12);
        }
        assert!(g.neighbors(4, EdgeKind::Regular).is_err());
    }

    #[test]
    fn isolated_node_has_no_neighbors() {
        let nodes = vec![
            NodeRecord::new(0, Point2::new(0.0, 0.0), true),
            NodeRecord::new(1, Point2::new(0.9, 0.9), false),
        ];
        let g = build_unit_disk_graph(nodes, 0.1).unwrap();
        assert!(g.neighbors(1, EdgeKind::Regular).unwrap().is_empty());
        assert!(g.neighbors(1, EdgeKind::Shadow).unwrap().is_empty());
    }

    #[test]
    fn sensing_region_by_state() {
        let mut g = fixtures::four_node_shadow_graph();
        // Localized node: single disk at its position.
        let disks = g.admissible_sensing_region(0).unwrap();
        assert_eq!(disks.len(), 1);
        assert_eq!(disks[0].center, Point2::new(0.3, 0.5));
        assert_eq!(disks[0].radius, 0.5);

        // Unknown node: not constrained yet.
        assert_eq!(
            g.admissible_sensing_region(3),
            Err(Error::NotYetConstrained(3))
        );

        // Ambiguous node: two disks, and the eliminating anchor (node 2) sits
        // inside exactly one of them.
        let h1 = Point2::new(0.5, 0.8);
        let h2 = Point2::new(0.5, 0.2);
        g.set_state(3, LocalizationState::Ambiguous(h1, h2));
        let disks = g.admissible_sensing_region(3).unwrap();
        assert_eq!(disks.len(), 2);
        let anchor = g.node(2).unwrap().true_pos;
        let inside: Vec<bool> = disks
            .iter()
            .map(|d| crate::geometry::in_disk(anchor, *d))
            .collect();
        assert_eq!(inside, vec![false, true]);
    }

    #[test]
    fn edge_symmetry() {
        let g = build_unit_disk_graph(uniform_nodes(30, 11), 0.3).unwrap();
        for (i, j, _) in g.regular_edges() {
            let from_i: Vec<NodeId> = g
                .neighbors(i, EdgeKind::Regular)
                .unwrap()
                .iter()
                .map(|&(id, _)| id)
                .collect();
            let from_j: Vec<NodeId> = g
                .neighbors(j, EdgeKind::Regular)
                .unwrap()
                .iter()
                .map(|&(id, _)| id)
                .collect();
            assert!(from_i.contains(&j));
            assert!(from_j.contains(&i));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn unit_disk_consistency(seed in 0u64..10_000, n in 4usize..40, rho in 0.05..0.7f64) {
            let nodes = uniform_nodes(n, seed);
            let g = build_unit_disk_graph(nodes.clone(), rho).unwrap();
            // Regenerating edges from true positions reproduces the set.
            for i in 0..n {
                for j in (i + 1)..n {
                    let d = distance(nodes[i].true_pos, nodes[j].true_pos);
                    prop_assert_eq!(g.has_regular_edge(i, j), d <= rho);
                }
            }
            // Stored distances are exact.
            for (i, j, d) in g.regular_edges() {
                prop_assert_eq!(d, distance(nodes[i].true_pos, nodes[j].true_pos));
            }
        }
    }
}
