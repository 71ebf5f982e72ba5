//! SVG network drawing: regular edges solid, shadow edges dashed,
//! node fill by class (localized by trilateration alone, localized only
//! with shadow edges, not localized). Kernel nodes get a heavy outline.
//!
//! Classes are derived by re-running both algorithms on reset copies of
//! the input graph, so the drawing is the same whether the document was
//! saved before or after localization.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use crate::engine::{bilaterate, classify_nodes, propagate, Algorithm, NodeClass};
use crate::error::Result;
use crate::geometry::{in_disk, Circle, Point2};
use crate::graph::{LocalizationState, NetworkGraph, NodeId};

#[derive(Debug, Clone, Copy, Default)]
pub struct RenderOptions {
    /// Draw every qualifying shadow anchor per shadow-localized node
    /// instead of the single edge the engine recorded.
    pub all_shadow_edges: bool,
}

const CANVAS: f64 = 640.0;
const MARGIN: f64 = 40.0;

const FILL_TNC: &str = "#2b6cb0";
const FILL_SHADOW: &str = "#805ad5";
const FILL_NONE: &str = "#38a169";
const STROKE_REGULAR: &str = "#4878a8";
const STROKE_UNLOCALIZED: &str = "#67a06c";
const STROKE_SHADOW: &str = "#8c4fd0";

fn map(p: Point2) -> (f64, f64) {
    (MARGIN + p.x * CANVAS, MARGIN + (1.0 - p.y) * CANVAS)
}

/// Every pair (node, anchor) a shadow edge could connect, given the
/// shadow fixed point: for each node that received a shadow edge,
/// re-derive its hypothesis pair from its best-conditioned localized
/// neighbors and list all localized non-neighbors lying in exactly one
/// sensing disk.
fn enumerate_all_shadow_edges(shadow: &NetworkGraph) -> BTreeSet<(NodeId, NodeId)> {
    let adj = shadow.regular_adjacency();
    let states = shadow.states();
    let mut pairs = BTreeSet::new();
    for (owner, anchor) in shadow.shadow_edges() {
        pairs.insert((owner.min(anchor), owner.max(anchor)));
        let anchors: Vec<(NodeId, Point2, f64)> = adj[owner]
            .iter()
            .filter_map(|&(j, d)| states[j].position().map(|p| (j, p, d)))
            .collect();
        if anchors.len() < 2 {
            continue;
        }
        let (a, b) = crate::engine::best_anchor_pair(&anchors);
        let (h1, h2) = match bilaterate(anchors[a].1, anchors[b].1, anchors[a].2, anchors[b].2) {
            Ok(LocalizationState::Ambiguous(h1, h2)) => (h1, h2),
            _ => continue,
        };
        let disk1 = Circle::new(h1, shadow.rho());
        let disk2 = Circle::new(h2, shadow.rho());
        for (cand, state) in states.iter().enumerate() {
            if cand == owner || shadow.has_regular_edge(owner, cand) {
                continue;
            }
            if let LocalizationState::Localized(p) = state {
                if in_disk(*p, disk1) != in_disk(*p, disk2) {
                    pairs.insert((owner.min(cand), owner.max(cand)));
                }
            }
        }
    }
    pairs
}

/// Render the graph to an SVG string.
pub fn render_svg(g: &NetworkGraph, opts: &RenderOptions) -> String {
    let classes = classify_nodes(g);

    let mut shadow = g.clone();
    shadow.reset_derived();
    propagate(&mut shadow, Algorithm::Shadow);

    let shadow_pairs: BTreeSet<(NodeId, NodeId)> = if opts.all_shadow_edges {
        enumerate_all_shadow_edges(&shadow)
    } else {
        shadow
            .shadow_edges()
            .map(|(o, a)| (o.min(a), o.max(a)))
            .collect()
    };

    let size = CANVAS + 2.0 * MARGIN;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str(&format!(
        "  <rect width=\"{size}\" height=\"{size}\" fill=\"#ffffff\"/>\n"
    ));

    for (i, j, _) in g.regular_edges() {
        let (x1, y1) = map(g.node(i).expect("valid id").true_pos);
        let (x2, y2) = map(g.node(j).expect("valid id").true_pos);
        let localized =
            classes[i] != NodeClass::NotLocalized && classes[j] != NodeClass::NotLocalized;
        let stroke = if localized {
            STROKE_REGULAR
        } else {
            STROKE_UNLOCALIZED
        };
        out.push_str(&format!(
            "  <line class=\"edge regular\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" \
             y2=\"{y2:.2}\" stroke=\"{stroke}\" stroke-width=\"1.5\"/>\n"
        ));
    }

    for &(i, j) in &shadow_pairs {
        let (x1, y1) = map(g.node(i).expect("valid id").true_pos);
        let (x2, y2) = map(g.node(j).expect("valid id").true_pos);
        out.push_str(&format!(
            "  <line class=\"edge shadow\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" \
             y2=\"{y2:.2}\" stroke=\"{STROKE_SHADOW}\" stroke-width=\"1.5\" \
             stroke-dasharray=\"6 4\"/>\n"
        ));
    }

    for rec in g.nodes() {
        let (cx, cy) = map(rec.true_pos);
        let (class, fill) = match classes[rec.id] {
            NodeClass::TncLocalized => ("node tnc-localized", FILL_TNC),
            NodeClass::ShadowLocalized => ("node shadow-localized", FILL_SHADOW),
            NodeClass::NotLocalized => ("node non-localized", FILL_NONE),
        };
        let (stroke, width) = if rec.is_kernel {
            ("#111111", 2.5)
        } else {
            ("#333333", 1.0)
        };
        out.push_str(&format!(
            "  <circle class=\"{class}\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"7\" fill=\"{fill}\" \
             stroke=\"{stroke}\" stroke-width=\"{width}\"/>\n"
        ));
    }

    out.push_str("</svg>\n");
    out
}

pub fn write_svg(g: &NetworkGraph, path: impl AsRef<Path>, opts: &RenderOptions) -> Result<()> {
    fs::write(path, render_svg(g, opts))?;
    Ok(())
}
