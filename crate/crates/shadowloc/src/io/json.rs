//! JSON graph document.
//!
//! ```json
//! {
//!   "rho": 0.5,
//!   "nodes":  [{"id": 0, "x": 0.3, "y": 0.5, "kernel": true}, ...],
//!   "edges":  [{"i": 0, "j": 1, "kind": "regular", "d": 0.4},
//!              {"i": 3, "j": 2, "kind": "shadow"}, ...],
//!   "states": [{"id": 0, "status": "localized", "points": [[0.3, 0.5]]}, ...]
//! }
//! ```
//!
//! For a shadow edge, `i` is the node the edge localized and `j` the
//! anchor. Serialization uses shortest-round-trip decimals, so
//! `read(write(g))` reproduces `g` bit for bit. Reading validates the
//! whole model: dense ids, finite coordinates, the unit-disk edge rule,
//! exact distances, disjoint edge kinds, and state shapes.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{distance, Point2, EPS_GEOM};
use crate::graph::{LocalizationState, NetworkGraph};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    rho: f64,
    nodes: Vec<NodeDoc>,
    edges: Vec<EdgeDoc>,
    states: Vec<StateDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeDoc {
    id: usize,
    x: f64,
    y: f64,
    kernel: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    i: usize,
    j: usize,
    kind: EdgeKindDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum EdgeKindDoc {
    Regular,
    Shadow,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateDoc {
    id: usize,
    status: StatusDoc,
    points: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum StatusDoc {
    Unknown,
    Ambiguous,
    Localized,
}

fn doc_from_graph(g: &NetworkGraph) -> GraphDoc {
    let nodes = g
        .nodes()
        .iter()
        .map(|rec| NodeDoc {
            id: rec.id,
            x: rec.true_pos.x,
            y: rec.true_pos.y,
            kernel: rec.is_kernel,
        })
        .collect();

    let mut edges: Vec<EdgeDoc> = g
        .regular_edges()
        .map(|(i, j, d)| EdgeDoc {
            i,
            j,
            kind: EdgeKindDoc::Regular,
            d: Some(d),
        })
        .collect();
    edges.extend(g.shadow_edges().map(|(owner, anchor)| EdgeDoc {
        i: owner,
        j: anchor,
        kind: EdgeKindDoc::Shadow,
        d: None,
    }));

    let states = g
        .states()
        .iter()
        .enumerate()
        .map(|(id, state)| match state {
            LocalizationState::Unknown => StateDoc {
                id,
                status: StatusDoc::Unknown,
                points: vec![],
            },
            LocalizationState::Ambiguous(h1, h2) => StateDoc {
                id,
                status: StatusDoc::Ambiguous,
                points: vec![[h1.x, h1.y], [h2.x, h2.y]],
            },
            LocalizationState::Localized(p) => StateDoc {
                id,
                status: StatusDoc::Localized,
                points: vec![[p.x, p.y]],
            },
        })
        .collect();

    GraphDoc {
        rho: g.rho(),
        nodes,
        edges,
        states,
    }
}

fn err(msg: impl Into<String>) -> Error {
    Error::SchemaViolation(msg.into())
}

fn graph_from_doc(doc: &GraphDoc) -> Result<NetworkGraph> {
    if !doc.rho.is_finite() || doc.rho <= 0.0 {
        return Err(err(format!(
            "rho must be finite and positive, got {}",
            doc.rho
        )));
    }
    let n = doc.nodes.len();

    let mut slots: Vec<Option<(Point2, bool)>> = vec![None; n];
    for node in &doc.nodes {
        if !node.x.is_finite() || !node.y.is_finite() {
            return Err(err(format!("node {} has non-finite coordinates", node.id)));
        }
        if node.id >= n {
            return Err(err(format!(
                "node ids must be dense 0..{n}, got {}",
                node.id
            )));
        }
        if slots[node.id].is_some() {
            return Err(err(format!("duplicate node id {}", node.id)));
        }
        slots[node.id] = Some((Point2::new(node.x, node.y), node.kernel));
    }

    let mut g = NetworkGraph::empty(doc.rho)?;
    for slot in slots {
        let (pos, kernel) = slot.expect("dense ids");
        g.push_node(pos, kernel);
    }

    for i in 0..n {
        for j in (i + 1)..n {
            let d = distance(g.node(i)?.true_pos, g.node(j)?.true_pos);
            if d <= EPS_GEOM {
                return Err(err(format!("nodes {i} and {j} coincide")));
            }
        }
    }

    let mut seen = std::collections::BTreeSet::new();
    for edge in &doc.edges {
        if edge.i >= n || edge.j >= n {
            return Err(err(format!(
                "edge ({}, {}) references an unknown node id",
                edge.i, edge.j
            )));
        }
        if edge.i == edge.j {
            return Err(err(format!("self-loop on node {}", edge.i)));
        }
        let key = (edge.i.min(edge.j), edge.i.max(edge.j));
        if !seen.insert(key) {
            return Err(err(format!("duplicate edge ({}, {})", edge.i, edge.j)));
        }
        let true_d = distance(g.node(edge.i)?.true_pos, g.node(edge.j)?.true_pos);
        match edge.kind {
            EdgeKindDoc::Regular => {
                let d = edge.d.ok_or_else(|| {
                    err(format!(
                        "regular edge ({}, {}) is missing d",
                        edge.i, edge.j
                    ))
                })?;
                if !d.is_finite() || (d - true_d).abs() > EPS_GEOM {
                    return Err(err(format!(
                        "edge ({}, {}) distance {d} disagrees with node positions",
                        edge.i, edge.j
                    )));
                }
                if true_d > doc.rho {
                    return Err(err(format!(
                        "regular edge ({}, {}) spans {true_d:.6}, beyond rho",
                        edge.i, edge.j
                    )));
                }
                g.insert_regular_edge(edge.i, edge.j, d);
            }
            EdgeKindDoc::Shadow => {
                if edge.d.is_some() {
                    return Err(err(format!(
                        "shadow edge ({}, {}) must not carry a distance",
                        edge.i, edge.j
                    )));
                }
                if true_d <= doc.rho {
                    return Err(err(format!(
                        "shadow edge ({}, {}) spans {true_d:.6}, within rho",
                        edge.i, edge.j
                    )));
                }
                g.insert_shadow_edge(edge.i, edge.j);
            }
        }
    }

    // Unit-disk completeness: every in-range pair must be a regular edge.
    for i in 0..n {
        for j in (i + 1)..n {
            let d = distance(g.node(i)?.true_pos, g.node(j)?.true_pos);
            if d <= doc.rho && !g.has_regular_edge(i, j) {
                return Err(err(format!(
                    "nodes {i} and {j} are within rho but have no regular edge"
                )));
            }
        }
    }

    if doc.states.len() != n {
        return Err(err(format!(
            "expected {n} states, got {}",
            doc.states.len()
        )));
    }
    let mut state_seen = vec![false; n];
    for state in &doc.states {
        if state.id >= n {
            return Err(err(format!(
                "state references unknown node id {}",
                state.id
            )));
        }
        if state_seen[state.id] {
            return Err(err(format!("duplicate state for node {}", state.id)));
        }
        state_seen[state.id] = true;
        for p in &state.points {
            if !p[0].is_finite() || !p[1].is_finite() {
                return Err(err(format!(
                    "state for node {} has non-finite point",
                    state.id
                )));
            }
        }
        let parsed = match (state.status, state.points.len()) {
            (StatusDoc::Unknown, 0) => LocalizationState::Unknown,
            (StatusDoc::Ambiguous, 2) => {
                let h1 = Point2::new(state.points[0][0], state.points[0][1]);
                let h2 = Point2::new(state.points[1][0], state.points[1][1]);
                if distance(h1, h2) <= EPS_GEOM {
                    return Err(err(format!(
                        "ambiguous points for node {} coincide",
                        state.id
                    )));
                }
                LocalizationState::Ambiguous(h1, h2)
            }
            (StatusDoc::Localized, 1) => {
                LocalizationState::Localized(Point2::new(state.points[0][0], state.points[0][1]))
            }
            (status, count) => {
                return Err(err(format!(
                    "state for node {} has {count} points for status {status:?}",
                    state.id
                )));
            }
        };
        let rec = *g.node(state.id)?;
        if rec.is_kernel {
            // push_node already pinned kernels at their coordinates; the
            // document must agree.
            match parsed {
                LocalizationState::Localized(p) if distance(p, rec.true_pos) <= EPS_GEOM => {}
                _ => {
                    return Err(err(format!(
                        "kernel node {} must be localized at its coordinates",
                        state.id
                    )));
                }
            }
        } else {
            g.set_state(state.id, parsed);
        }
    }

    Ok(g)
}

/// Serialize a graph to the document string (pretty-printed, trailing
/// newline).
pub fn graph_to_string(g: &NetworkGraph) -> String {
    let doc = doc_from_graph(g);
    let mut s = serde_json::to_string_pretty(&doc).expect("graph document serializes");
    s.push('\n');
    s
}

/// Parse and validate a graph document.
pub fn graph_from_str(s: &str) -> Result<NetworkGraph> {
    let doc: GraphDoc = serde_json::from_str(s).map_err(|e| err(e.to_string()))?;
    graph_from_doc(&doc)
}

pub fn write_graph(g: &NetworkGraph, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, graph_to_string(g))?;
    Ok(())
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<NetworkGraph> {
    let s = fs::read_to_string(path)?;
    graph_from_str(&s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{propagate, Algorithm};
    use crate::experiment::generate_instance;
    use crate::graph::fixtures::four_node_shadow_graph;
    use crate::graph::{build_unit_disk_graph, NodeRecord};

    #[test]
    fn kernel_triangle_roundtrips_bit_identically() {
        let nodes = vec![
            NodeRecord::new(0, Point2::new(0.40, 0.40), true),
            NodeRecord::new(1, Point2::new(0.60, 0.40), true),
            NodeRecord::new(2, Point2::new(0.50, 0.60), true),
        ];
        let g = build_unit_disk_graph(nodes, 0.5).unwrap();
        let s1 = graph_to_string(&g);
        let back = graph_from_str(&s1).unwrap();
        assert_eq!(back, g);
        assert_eq!(graph_to_string(&back), s1);
    }

    #[test]
    fn localized_instance_roundtrips_with_shadow_edges() {
        let mut found = false;
        for seed in 0..30 {
            let mut g = generate_instance(40, 0.25, seed).unwrap();
            propagate(&mut g, Algorithm::Shadow);
            if g.shadow_edge_count() == 0 {
                continue;
            }
            found = true;
            let back = graph_from_str(&graph_to_string(&g)).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.shadow_edge_count(), g.shadow_edge_count());
            break;
        }
        assert!(found, "no seed in 0..30 produced shadow edges");
    }

    #[test]
    fn localized_document_shape() {
        let mut g = four_node_shadow_graph();
        propagate(&mut g, Algorithm::Shadow);
        let s = graph_to_string(&g);
        assert!(s.contains("\"kind\": \"shadow\""));
        assert!(s.contains("\"status\": \"localized\""));
        let back = graph_from_str(&s).unwrap();
        assert_eq!(back, g);
    }

    fn base_doc() -> String {
        let g = four_node_shadow_graph();
        graph_to_string(&g)
    }

    #[test]
    fn rejects_dangling_edge_id() {
        let s = base_doc().replace("\"i\": 0,\n      \"j\": 1", "\"i\": 0,\n      \"j\": 9");
        match graph_from_str(&s) {
            Err(Error::SchemaViolation(msg)) => assert!(msg.contains("unknown node id")),
            other => panic!("expected schema violation, got {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_edge_kind() {
        let s = base_doc().replace("\"kind\": \"regular\"", "\"kind\": \"quantum\"");
        assert!(matches!(graph_from_str(&s), Err(Error::SchemaViolation(_))));
    }

    #[test]
    fn rejects_missing_distance_on_regular_edge() {
        let g = four_node_shadow_graph();
        let mut v: serde_json::Value = serde_json::from_str(&graph_to_string(&g)).unwrap();
        v["edges"][0].as_object_mut().unwrap().remove("d");
        match graph_from_str(&v.to_string()) {
            Err(Error::SchemaViolation(msg)) => assert!(msg.contains("missing d")),
            other => panic!("expected schema violation, got {other:?}"),
        }
    }

    #[test]
    fn rejects_distance_on_shadow_edge() {
        let mut g = four_node_shadow_graph();
        propagate(&mut g, Algorithm::Shadow);
        let mut v: serde_json::Value = serde_json::from_str(&graph_to_string(&g)).unwrap();
        let edges = v["edges"].as_array_mut().unwrap();
        let shadow = edges.iter_mut().find(|e| e["kind"] == "shadow").unwrap();
        shadow["d"] = serde_json::json!(0.9);
        assert!(matches!(
            graph_from_str(&v.to_string()),
            Err(Error::SchemaViolation(_))
        ));
    }

    #[test]
    fn rejects_tampered_distance() {
        let g = four_node_shadow_graph();
        let mut v: serde_json::Value = serde_json::from_str(&graph_to_string(&g)).unwrap();
        v["edges"][0]["d"] = serde_json::json!(0.123);
        match graph_from_str(&v.to_string()) {
            Err(Error::SchemaViolation(msg)) => assert!(msg.contains("disagrees")),
            other => panic!("expected schema violation, got {other:?}"),
        }
    }

    #[test]
    fn rejects_wrong_state_cardinality() {
        let g = four_node_shadow_graph();
        let mut v: serde_json::Value = serde_json::from_str(&graph_to_string(&g)).unwrap();
        let states = v["states"].as_array_mut().unwrap();
        states.pop();
        assert!(matches!(
            graph_from_str(&v.to_string()),
            Err(Error::SchemaViolation(_))
        ));
    }

    #[test]
    fn rejects_missing_unit_disk_edge() {
        let g = four_node_shadow_graph();
        let mut v: serde_json::Value = serde_json::from_str(&graph_to_string(&g)).unwrap();
        let edges = v["edges"].as_array_mut().unwrap();
        edges.remove(0);
        match graph_from_str(&v.to_string()) {
            Err(Error::SchemaViolation(msg)) => assert!(msg.contains("no regular edge")),
            other => panic!("expected schema violation, got {other:?}"),
        }
    }
}
