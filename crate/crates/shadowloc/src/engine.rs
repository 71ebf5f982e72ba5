//! Localization algorithms: bilateration and trilateration, shadow-edge
//! discovery and application, the propagation closure with its
//! trilateration-only baseline, the graph localizability check, and
//! incremental network construction.
//!
//! Propagation sweeps read from a state snapshot and apply all updates
//! at the end of the sweep, so the fixed point is bitwise independent of
//! the node-visit order.

use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::{
    circle_intersection, distance, in_disk, is_collinear, Circle, IntersectionResult, Point2,
    EPS_GEOM,
};
use crate::graph::{LocalizationState, NetworkGraph, NodeId, NodeRecord};

/// Tolerance for accepting a trilateration solution. Looser than the
/// geometric coincidence tolerance to absorb arithmetic error
/// accumulated through chained localizations.
pub const TOL_TRILAT: f64 = 1e-6;

/// Total candidate-sample budget for incremental construction.
pub const MAX_CONSTRUCT_SAMPLES: usize = 1_000_000;

/// Which localization rules the propagation closure applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Trilateration only: a node localizes once it has three localized
    /// non-collinear regular neighbors.
    Tnc,
    /// Trilateration plus shadow edges: two localized regular neighbors
    /// suffice when a localized non-neighbor eliminates one hypothesis.
    Shadow,
}

/// Find the unique point consistent with three anchor distances.
///
/// Solves the two-circle intersection of the first two anchors, then
/// selects the hypothesis matching the third distance within
/// [`TOL_TRILAT`].
pub fn trilaterate(anchors: [Point2; 3], dists: [f64; 3]) -> Result<Point2> {
    let [a1, a2, a3] = anchors;
    let [d1, d2, d3] = dists;
    if is_collinear(a1, a2, a3) {
        return Err(Error::CollinearAnchors);
    }
    if dists.iter().any(|d| !(*d >= 0.0)) {
        return Err(Error::InconsistentDistances { residual: f64::NAN });
    }

    let candidates = match circle_intersection(Circle::new(a1, d1), Circle::new(a2, d2))? {
        IntersectionResult::Pair(p, q) => [Some(p), Some(q)],
        IntersectionResult::Tangent(p) => [Some(p), None],
        IntersectionResult::None => {
            let gap = distance(a1, a2);
            let residual = if gap > d1 + d2 {
                gap - (d1 + d2)
            } else {
                (d1 - d2).abs() - gap
            };
            return Err(Error::InconsistentDistances { residual });
        }
    };

    let mut best: Option<(Point2, f64)> = None;
    for p in candidates.into_iter().flatten() {
        let residual = (distance(p, a3) - d3).abs();
        if best.map_or(true, |(_, r)| residual < r) {
            best = Some((p, residual));
        }
    }
    let (point, residual) = best.expect("at least one candidate");
    if residual <= TOL_TRILAT {
        Ok(point)
    } else {
        Err(Error::InconsistentDistances { residual })
    }
}

/// Intersect the two anchor distance circles.
///
/// A transversal crossing yields `Ambiguous` with the two hypotheses
/// (mirror images across the anchor line); tangency pins the node
/// directly. Disjoint or nested circles are impossible for noise-free
/// data and reported as `NoSolution`.
pub fn bilaterate(a1: Point2, a2: Point2, d1: f64, d2: f64) -> Result<LocalizationState> {
    match circle_intersection(Circle::new(a1, d1), Circle::new(a2, d2))? {
        IntersectionResult::Pair(h1, h2) => Ok(LocalizationState::Ambiguous(h1, h2)),
        IntersectionResult::Tangent(p) => Ok(LocalizationState::Localized(p)),
        IntersectionResult::None => Err(Error::NoSolution),
    }
}

fn has_noncollinear_triple(anchors: &[(NodeId, Point2, f64)]) -> bool {
    anchors.len() >= 3
        && (0..anchors.len()).any(|a| {
            ((a + 1)..anchors.len()).any(|b| {
                ((b + 1)..anchors.len())
                    .any(|c| !is_collinear(anchors[a].1, anchors[b].1, anchors[c].1))
            })
        })
}

/// Scan for a shadow anchor for node `i` with hypotheses `h1`, `h2`,
/// reading localization from `states` (which may be a sweep snapshot).
///
/// A qualifying anchor is localized, shares no regular edge with `i`,
/// and sits in exactly one of the two sensing disks; an anchor in both
/// disks carries no information and is skipped. Ascending id order
/// realizes the smallest-id tie-break. Returns the anchor and the index
/// of the hypothesis to eliminate.
fn shadow_anchor_against(
    g: &NetworkGraph,
    states: &[LocalizationState],
    i: NodeId,
    h1: Point2,
    h2: Point2,
) -> Option<(NodeId, usize)> {
    let disk1 = Circle::new(h1, g.rho());
    let disk2 = Circle::new(h2, g.rho());
    for (a, state) in states.iter().enumerate() {
        if a == i {
            continue;
        }
        let pos = match state {
            LocalizationState::Localized(p) => *p,
            _ => continue,
        };
        if g.has_regular_edge(i, a) {
            continue;
        }
        match (in_disk(pos, disk1), in_disk(pos, disk2)) {
            (true, false) => return Some((a, 0)),
            (false, true) => return Some((a, 1)),
            // Both: the anchor lies in the lens and excludes nothing.
            // Neither: no statement about the hypotheses.
            _ => {}
        }
    }
    None
}

/// Find a shadow anchor for the ambiguous node `i`: a localized
/// non-neighbor lying in exactly one of the two sensing disks. Returns
/// the smallest qualifying anchor id and the index of the hypothesis to
/// eliminate, or `None`.
pub fn find_shadow_anchor(g: &NetworkGraph, i: NodeId) -> Result<Option<(NodeId, usize)>> {
    let (h1, h2) = match g.state(i)? {
        LocalizationState::Ambiguous(h1, h2) => (*h1, *h2),
        _ => return Err(Error::NotAmbiguous(i)),
    };
    Ok(shadow_anchor_against(g, g.states(), i, h1, h2))
}

/// Record the shadow edge `(i, anchor)` and localize `i` at the
/// surviving hypothesis. Re-validates the anchor against the current
/// state so a stale or fabricated request cannot corrupt the graph.
pub fn apply_shadow_edge(
    g: &mut NetworkGraph,
    i: NodeId,
    anchor: NodeId,
    eliminated: usize,
) -> Result<()> {
    let (h1, h2) = match g.state(i)? {
        LocalizationState::Ambiguous(h1, h2) => (*h1, *h2),
        _ => return Err(Error::NotAmbiguous(i)),
    };
    let invalid = Error::InvalidShadowAnchor { node: i, anchor };
    let anchor_pos = match g.state(anchor)? {
        LocalizationState::Localized(p) => *p,
        _ => return Err(invalid),
    };
    if eliminated > 1 || anchor == i || g.has_regular_edge(i, anchor) {
        return Err(invalid);
    }
    let (elim, surv) = if eliminated == 0 { (h1, h2) } else { (h2, h1) };
    let rho = g.rho();
    if !in_disk(anchor_pos, Circle::new(elim, rho)) || in_disk(anchor_pos, Circle::new(surv, rho)) {
        return Err(invalid);
    }
    g.insert_shadow_edge(i, anchor);
    g.set_state(i, LocalizationState::Localized(surv));
    Ok(())
}

/// Numerically stable Heron formula (Kahan): exact parenthesization on
/// descending side lengths. Returns 0 for degenerate inputs.
fn robust_triangle_area(a: f64, b: f64, c: f64) -> f64 {
    let mut s = [a, b, c];
    s.sort_by(|x, y| y.total_cmp(x));
    let (a, b, c) = (s[0], s[1], s[2]);
    let t = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    if t <= 0.0 {
        0.0
    } else {
        0.25 * t.sqrt()
    }
}

/// Sine of the angle at which two anchor distance circles cross, from
/// the exact measured distances and the anchor separation. This is the
/// conditioning of the intersection: flat crossings amplify anchor
/// position error. Degenerate pairs score 0.
fn pair_crossing_sine(d1: f64, d2: f64, base: f64) -> f64 {
    if d1 <= 0.0 || d2 <= 0.0 {
        return 0.0;
    }
    2.0 * robust_triangle_area(d1, d2, base) / (d1 * d2)
}

/// Height of the node over the anchor baseline, from the exact measured
/// distances and the anchor separation. A tangent intersection collapses
/// this height onto the baseline, so it bounds the collapse error.
fn tangent_height_bound(d1: f64, d2: f64, base: f64) -> f64 {
    if base <= 0.0 {
        return f64::INFINITY;
    }
    2.0 * robust_triangle_area(d1, d2, base) / base
}

/// Index pair of the best-conditioned anchors (maximum crossing angle),
/// first-wins on ties so the choice is deterministic.
pub(crate) fn best_anchor_pair(anchors: &[(NodeId, Point2, f64)]) -> (usize, usize) {
    debug_assert!(anchors.len() >= 2);
    let mut best = (0, 1);
    let mut best_score = -1.0;
    for a in 0..anchors.len() {
        for b in (a + 1)..anchors.len() {
            let base = distance(anchors[a].1, anchors[b].1);
            let score = pair_crossing_sine(anchors[a].2, anchors[b].2, base);
            if score > best_score {
                best_score = score;
                best = (a, b);
            }
        }
    }
    best
}

/// Robust trilateration over three or more localized anchors: intersect
/// the best-conditioned pair, then resolve the hypothesis with the
/// remaining anchor that separates the two candidates most. Returns
/// `None` when the anchors cannot pin the node (degenerate geometry or
/// inconsistent arithmetic); the caller retries on a later sweep.
fn solve_trilateration(anchors: &[(NodeId, Point2, f64)]) -> Option<Point2> {
    let (a, b) = best_anchor_pair(anchors);
    let (pa, da) = (anchors[a].1, anchors[a].2);
    let (pb, db) = (anchors[b].1, anchors[b].2);
    let others = || (0..anchors.len()).filter(|&k| k != a && k != b);

    match bilaterate(pa, pb, da, db) {
        Ok(LocalizationState::Localized(p)) => {
            // Tangent circles: single hypothesis; verify it against the
            // remaining anchors before accepting.
            let worst = others()
                .map(|k| (distance(p, anchors[k].1) - anchors[k].2).abs())
                .fold(0.0f64, f64::max);
            (worst <= TOL_TRILAT).then_some(p)
        }
        Ok(LocalizationState::Ambiguous(h1, h2)) => {
            // The mirror hypothesis is indistinguishable to anchors on
            // the pair line; pick the third off the line.
            let third = others()
                .filter(|&k| !is_collinear(pa, pb, anchors[k].1))
                .max_by(|&x, &y| {
                    let gap =
                        |k: usize| (distance(h1, anchors[k].1) - distance(h2, anchors[k].1)).abs();
                    gap(x).total_cmp(&gap(y))
                })?;
            trilaterate([pa, pb, anchors[third].1], [da, db, anchors[third].2]).ok()
        }
        _ => None,
    }
}

/// One shadow-edge application, kept for post-hoc verification: the
/// eliminated hypothesis must never be the node's true position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShadowApplication {
    pub node: NodeId,
    pub anchor: NodeId,
    pub eliminated: Point2,
    pub survived: Point2,
}

/// Outcome of a propagation run.
#[derive(Debug, Clone, PartialEq)]
pub struct PropagationReport {
    pub sweeps: usize,
    pub shadow_applications: Vec<ShadowApplication>,
}

/// What a sweep decided for one node.
enum NodeUpdate {
    State(LocalizationState),
    ShadowLocalized {
        anchor: NodeId,
        eliminated: Point2,
        survived: Point2,
    },
}

/// Compute the update for node `i` from the sweep snapshot.
///
/// `anchors` are the snapshot-localized regular neighbors of `i` in
/// ascending id order, as (id, assessed position, measured distance).
fn node_update(
    g: &NetworkGraph,
    snapshot: &[LocalizationState],
    i: NodeId,
    anchors: &[(NodeId, Point2, f64)],
    algorithm: Algorithm,
) -> Option<NodeUpdate> {
    // First choice: standard trilateration, available once some anchor
    // triple is non-collinear.
    if has_noncollinear_triple(anchors) {
        return solve_trilateration(anchors)
            .map(|p| NodeUpdate::State(LocalizationState::Localized(p)));
    }
    if algorithm == Algorithm::Tnc {
        // The baseline localizes through trilateration only.
        return None;
    }

    // Two usable anchors (or more, all collinear): bilaterate the
    // best-conditioned pair. Collinear anchors all constrain the node
    // to the same two mirror hypotheses, so the choice only fixes the
    // arithmetic, not the outcome.
    let (a, b) = best_anchor_pair(anchors);
    let (_, p1, d1) = anchors[a];
    let (_, p2, d2) = anchors[b];
    match bilaterate(p1, p2, d1, d2) {
        Ok(LocalizationState::Localized(p)) => {
            // Tangent circles: a single hypothesis, directly localized —
            // unless the exact side lengths show the collapse onto the
            // baseline loses more than the tolerance; then wait for more
            // anchors.
            (tangent_height_bound(d1, d2, distance(p1, p2)) <= TOL_TRILAT)
                .then_some(NodeUpdate::State(LocalizationState::Localized(p)))
        }
        Ok(LocalizationState::Ambiguous(h1, h2)) => {
            match shadow_anchor_against(g, snapshot, i, h1, h2) {
                Some((anchor, eliminated)) => {
                    let (elim, surv) = if eliminated == 0 { (h1, h2) } else { (h2, h1) };
                    Some(NodeUpdate::ShadowLocalized {
                        anchor,
                        eliminated: elim,
                        survived: surv,
                    })
                }
                // Keep the hypotheses; later sweeps retry as more
                // candidates localize.
                None => Some(NodeUpdate::State(LocalizationState::Ambiguous(h1, h2))),
            }
        }
        Ok(LocalizationState::Unknown) | Err(_) => None,
    }
}

/// Run the localization closure to its fixed point, visiting nodes in
/// id order. See [`propagate_in_order`].
pub fn propagate(g: &mut NetworkGraph, algorithm: Algorithm) -> PropagationReport {
    let order: Vec<NodeId> = (0..g.node_count()).collect();
    propagate_in_order(g, algorithm, &order)
}

/// Run the localization closure to its fixed point with an explicit
/// node-visit order.
///
/// Each sweep evaluates every non-localized node against a snapshot of
/// the states at the start of the sweep and applies all updates
/// afterwards, so the result is identical for every visit order.
/// Localized nodes (kernels included) never change state.
pub fn propagate_in_order(
    g: &mut NetworkGraph,
    algorithm: Algorithm,
    order: &[NodeId],
) -> PropagationReport {
    let adj = g.regular_adjacency();
    let mut report = PropagationReport {
        sweeps: 0,
        shadow_applications: Vec::new(),
    };

    loop {
        report.sweeps += 1;
        let snapshot: Vec<LocalizationState> = g.states().to_vec();
        let mut updates: Vec<(NodeId, NodeUpdate)> = Vec::new();

        for &i in order {
            if snapshot[i].is_localized() {
                continue;
            }
            let anchors: Vec<(NodeId, Point2, f64)> = adj[i]
                .iter()
                .filter_map(|&(j, d)| match snapshot[j] {
                    LocalizationState::Localized(p) => Some((j, p, d)),
                    _ => None,
                })
                .collect();
            if anchors.len() < 2 {
                continue;
            }
            if let Some(update) = node_update(g, &snapshot, i, &anchors, algorithm) {
                updates.push((i, update));
            }
        }

        let mut changed = false;
        for (i, update) in updates {
            match update {
                NodeUpdate::State(state) => {
                    if snapshot[i] != state {
                        g.set_state(i, state);
                        changed = true;
                    }
                }
                NodeUpdate::ShadowLocalized {
                    anchor,
                    eliminated,
                    survived,
                } => {
                    g.insert_shadow_edge(i, anchor);
                    g.set_state(i, LocalizationState::Localized(survived));
                    report.shadow_applications.push(ShadowApplication {
                        node: i,
                        anchor,
                        eliminated,
                        survived,
                    });
                    changed = true;
                }
            }
        }
        if !changed {
            return report;
        }
    }
}

/// Decide whether the network is localizable from its regular edges,
/// kernel, and shadow-edge opportunities.
///
/// The conditions are evaluated per node against the shadow fixed point
/// of a reset copy (so "localized" is well-defined): a node passes if it
/// is a kernel node, has a non-collinear localized triple among its
/// regular neighbors, is pinned by tangent bilateration, or has two
/// localized regular neighbors plus a shadow anchor for the resulting
/// hypothesis pair. Any node failing all of these makes the graph
/// non-localizable.
pub fn check_localizable(g: &NetworkGraph) -> bool {
    let mut closed = g.clone();
    closed.reset_derived();
    propagate(&mut closed, Algorithm::Shadow);

    let adj = closed.regular_adjacency();
    let states = closed.states().to_vec();

    for i in 0..closed.node_count() {
        if closed.node(i).expect("valid id").is_kernel {
            continue;
        }
        let anchors: Vec<(NodeId, Point2, f64)> = adj[i]
            .iter()
            .filter_map(|&(j, d)| match states[j] {
                LocalizationState::Localized(p) => Some((j, p, d)),
                _ => None,
            })
            .collect();
        if anchors.len() < 2 {
            // Fewer than two pinned neighbors: unboundedly many options.
            return false;
        }
        if has_noncollinear_triple(&anchors) {
            continue;
        }
        let (a, b) = best_anchor_pair(&anchors);
        let (_, p1, d1) = anchors[a];
        let (_, p2, d2) = anchors[b];
        match bilaterate(p1, p2, d1, d2) {
            Ok(LocalizationState::Localized(_)) => {
                // Same tangent guard as the propagation sweeps.
                if tangent_height_bound(d1, d2, distance(p1, p2)) > TOL_TRILAT {
                    return false;
                }
            }
            Ok(LocalizationState::Ambiguous(h1, h2)) => {
                if shadow_anchor_against(&closed, &states, i, h1, h2).is_none() {
                    return false;
                }
            }
            Ok(LocalizationState::Unknown) | Err(_) => return false,
        }
    }
    true
}

/// Counters from an incremental construction run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConstructStats {
    /// Nodes admitted beyond the seed triangle.
    pub accepted: usize,
    /// Candidates discarded for lacking two localized neighbors.
    pub rejected: usize,
    /// Admitted nodes left ambiguous (two links, no shadow anchor).
    pub unresolved: usize,
}

fn validate_seed(seed: &[NodeRecord; 3], rho: f64) -> Result<()> {
    for (k, rec) in seed.iter().enumerate() {
        if rec.id != k {
            return Err(Error::SeedDegenerate(format!(
                "seed ids must be 0,1,2, got {}",
                rec.id
            )));
        }
        let p = rec.true_pos;
        if !(0.0..=1.0).contains(&p.x) || !(0.0..=1.0).contains(&p.y) {
            return Err(Error::SeedDegenerate(format!(
                "node {k} outside the unit square"
            )));
        }
    }
    for a in 0..3 {
        for b in (a + 1)..3 {
            let d = distance(seed[a].true_pos, seed[b].true_pos);
            if d <= EPS_GEOM {
                return Err(Error::SeedDegenerate(format!("nodes {a} and {b} coincide")));
            }
            if d > rho {
                return Err(Error::SeedDegenerate(format!(
                    "nodes {a} and {b} are {d:.4} apart, beyond radius {rho}"
                )));
            }
        }
    }
    if is_collinear(seed[0].true_pos, seed[1].true_pos, seed[2].true_pos) {
        return Err(Error::SeedDegenerate("seed triangle is collinear".into()));
    }
    Ok(())
}

/// Grow a localized network from a seed triangle to `target_n` nodes.
///
/// Candidates are sampled uniformly in the unit square. A candidate is
/// admitted only when it senses at least two localized nodes; it is then
/// localized by standard trilateration when three or more localized
/// links allow it, otherwise by shadow-edge bilateration. An admitted
/// node with two links and no shadow anchor stays ambiguous. Rejected
/// candidates are counted, not added, so the returned graph has exactly
/// `target_n` nodes.
///
/// Position assessment uses anchor state positions and measured
/// distances only — never the sampled ground truth.
pub fn construct_incremental(
    seed_triangle: [NodeRecord; 3],
    target_n: usize,
    rho: f64,
    rng: &mut impl Rng,
) -> Result<(NetworkGraph, ConstructStats)> {
    if !(rho > 0.0) {
        return Err(Error::NonPositiveRadius(rho));
    }
    if target_n < 3 {
        return Err(Error::SeedDegenerate(format!(
            "target size {target_n} is below the seed size"
        )));
    }
    validate_seed(&seed_triangle, rho)?;

    let mut g = NetworkGraph::empty(rho)?;
    for rec in &seed_triangle {
        g.push_node(rec.true_pos, true);
    }
    for a in 0..3 {
        for b in (a + 1)..3 {
            g.insert_regular_edge(
                a,
                b,
                distance(seed_triangle[a].true_pos, seed_triangle[b].true_pos),
            );
        }
    }

    let mut stats = ConstructStats::default();
    let mut samples = 0usize;

    while g.node_count() < target_n {
        if samples >= MAX_CONSTRUCT_SAMPLES {
            return Err(Error::ConstructionExhausted(samples));
        }
        samples += 1;
        let candidate = Point2::new(rng.gen::<f64>(), rng.gen::<f64>());

        // Physical sensing pass: every current node within radius.
        let mut links: Vec<(NodeId, f64)> = Vec::new();
        let mut coincident = false;
        for j in 0..g.node_count() {
            let d = distance(candidate, g.node(j).expect("valid id").true_pos);
            if d <= EPS_GEOM {
                coincident = true;
                break;
            }
            if d <= rho {
                links.push((j, d));
            }
        }
        if coincident {
            stats.rejected += 1;
            continue;
        }

        let anchors: Vec<(NodeId, Point2, f64)> = links
            .iter()
            .filter_map(|&(j, d)| g.state(j).expect("valid id").position().map(|p| (j, p, d)))
            .collect();
        if anchors.len() < 2 {
            stats.rejected += 1;
            continue;
        }

        let id = g.push_node(candidate, false);
        for &(j, d) in &links {
            g.insert_regular_edge(id, j, d);
        }
        stats.accepted += 1;

        // Assess the position from the localized links.
        let assessed = if has_noncollinear_triple(&anchors) {
            solve_trilateration(&anchors)
        } else {
            None
        };
        if let Some(p) = assessed {
            g.set_state(id, LocalizationState::Localized(p));
        } else {
            // Shadow-edge bilateration from the best-conditioned pair.
            let (a, b) = best_anchor_pair(&anchors);
            let (_, p1, d1) = anchors[a];
            let (_, p2, d2) = anchors[b];
            match bilaterate(p1, p2, d1, d2) {
                Ok(state @ LocalizationState::Localized(_)) => {
                    if tangent_height_bound(d1, d2, distance(p1, p2)) <= TOL_TRILAT {
                        g.set_state(id, state);
                    } else {
                        stats.unresolved += 1;
                    }
                }
                Ok(state @ LocalizationState::Ambiguous(..)) => {
                    g.set_state(id, state);
                    match find_shadow_anchor(&g, id)? {
                        Some((anchor, eliminated)) => {
                            apply_shadow_edge(&mut g, id, anchor, eliminated)?;
                        }
                        None => stats.unresolved += 1,
                    }
                }
                _ => stats.unresolved += 1,
            }
        }
        debug_assert!(
            g.state(id)
                .expect("valid id")
                .position()
                .map_or(true, |p| { distance(p, candidate) <= TOL_TRILAT }),
            "assessed position drifted from ground truth"
        );
    }

    Ok((g, stats))
}

/// How a node fares under the two algorithms; used by the renderer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeClass {
    /// Localized by trilateration alone (kernel nodes included).
    TncLocalized,
    /// Localized only once shadow edges are used.
    ShadowLocalized,
    /// Not localized by either algorithm.
    NotLocalized,
}

/// Classify every node by re-running both algorithms on reset copies.
pub fn classify_nodes(g: &NetworkGraph) -> Vec<NodeClass> {
    let mut tnc = g.clone();
    tnc.reset_derived();
    propagate(&mut tnc, Algorithm::Tnc);

    let mut shadow = g.clone();
    shadow.reset_derived();
    propagate(&mut shadow, Algorithm::Shadow);

    (0..g.node_count())
        .map(|i| {
            if tnc.states()[i].is_localized() {
                NodeClass::TncLocalized
            } else if shadow.states()[i].is_localized() {
                NodeClass::ShadowLocalized
            } else {
                NodeClass::NotLocalized
            }
        })
        .collect()
}
