//! 2D geometric primitives for bilateration, trilateration and
//! sensing-disk membership.
//!
//! Coordinates live in the unit square, so absolute tolerances are
//! meaningful: [`EPS_GEOM`] governs coincidence tests and closed-disk
//! membership, [`EPS_COLLINEAR`] governs the collinearity predicate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coincidence tolerance for geometric tests. Coordinates are in [0,1],
/// double precision leaves plenty of headroom below this.
pub const EPS_GEOM: f64 = 1e-9;

/// Collinearity tolerance on twice the triangle area. Near-collinear
/// anchors make trilateration ill-conditioned well before exact
/// collinearity, so this is deliberately looser than `EPS_GEOM`.
pub const EPS_COLLINEAR: f64 = 1e-7;

/// A 2D position in unit-square units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite(), "non-finite coordinate");
        Point2 { x, y }
    }
}

/// A circle; doubles as a sensing disk (center = localization option,
/// radius = communication radius) and as a distance constraint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point2,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point2, radius: f64) -> Self {
        debug_assert!(radius >= 0.0, "negative radius");
        Circle { center, radius }
    }
}

/// Outcome of intersecting two circles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntersectionResult {
    /// Circles are disjoint or nested beyond tolerance.
    None,
    /// Circles touch in a single point (within `EPS_GEOM`).
    Tangent(Point2),
    /// Circles cross in two distinct points.
    Pair(Point2, Point2),
}

/// Euclidean distance.
pub fn distance(a: Point2, b: Point2) -> f64 {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    (dx * dx + dy * dy).sqrt()
}

/// Intersect two circles.
///
/// Returns `Tangent` when the center distance matches `r1 + r2` or
/// `|r1 - r2|` within `EPS_GEOM`, `Pair` when the circles cross
/// transversally, `None` when they are disjoint or nested. Errors with
/// `DegenerateCenters` when the centers coincide within `EPS_GEOM`.
pub fn circle_intersection(c1: Circle, c2: Circle) -> Result<IntersectionResult> {
    let dx = c2.center.x - c1.center.x;
    let dy = c2.center.y - c1.center.y;
    let d = (dx * dx + dy * dy).sqrt();

    if d <= EPS_GEOM {
        return Err(Error::DegenerateCenters);
    }

    let (r1, r2) = (c1.radius, c2.radius);
    let sum = r1 + r2;
    let diff = (r1 - r2).abs();

    let tangent_point = |radial: f64| -> Point2 {
        Point2::new(c1.center.x + radial / d * dx, c1.center.y + radial / d * dy)
    };

    // External tangency: the touch point sits r1 along the center line.
    if (d - sum).abs() <= EPS_GEOM {
        return Ok(IntersectionResult::Tangent(tangent_point(r1)));
    }
    // Internal tangency: same expression, opposite configuration.
    if (d - diff).abs() <= EPS_GEOM {
        let radial = if r1 >= r2 { r1 } else { -r1 };
        return Ok(IntersectionResult::Tangent(tangent_point(radial)));
    }
    if d > sum || d < diff {
        return Ok(IntersectionResult::None);
    }

    // Transversal case: foot of the radical axis at distance a from c1,
    // intersection points at height h above/below the center line.
    let a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
    let h_sq = r1 * r1 - a * a;
    if h_sq <= 0.0 {
        // Rounding collapsed the pair; treat as tangent on the center line.
        return Ok(IntersectionResult::Tangent(tangent_point(a)));
    }
    let h = h_sq.sqrt();

    let mx = c1.center.x + a / d * dx;
    let my = c1.center.y + a / d * dy;
    let nx = -dy / d;
    let ny = dx / d;

    let p1 = Point2::new(mx + h * nx, my + h * ny);
    let p2 = Point2::new(mx - h * nx, my - h * ny);

    if distance(p1, p2) <= EPS_GEOM {
        return Ok(IntersectionResult::Tangent(Point2::new(mx, my)));
    }
    Ok(IntersectionResult::Pair(p1, p2))
}

/// True iff the three points are collinear within `EPS_COLLINEAR`
/// (measured on twice the triangle area).
pub fn is_collinear(a: Point2, b: Point2, c: Point2) -> bool {
    let cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    cross.abs() <= EPS_COLLINEAR
}

/// Closed-disk membership: distance to the center at most radius plus
/// `EPS_GEOM`.
pub fn in_disk(p: Point2, disk: Circle) -> bool {
    distance(p, disk.center) <= disk.radius + EPS_GEOM
}
