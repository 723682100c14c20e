//! The Hausdorff metric between chords.
//!
//! The distance between two chords, viewed as compact subsets of the plane,
//! is
//!
//! ```text
//! ρ(χ, χ') = max { max_{P∈χ} min_{Q∈χ'} |PQ|,  max_{P∈χ'} min_{Q∈χ} |PQ| }
//! ```
//!
//! For segments this reduces to finitely many point–segment distances: the
//! distance from a point to a segment is convex along any line, so its
//! maximum over a segment is attained at one of the segment's endpoints.
//! `hausdorff_distance` therefore takes the maximum of the four
//! endpoint-to-opposite-chord distances and is exact.

use crate::chord::{Chord, Circle, Point2};

/// Euclidean distance from `p` to the closed segment `(s0, s1)`.
///
/// Equals the perpendicular-foot distance when the foot falls inside the
/// segment and the distance to the nearest endpoint otherwise.
pub fn point_segment_distance(p: Point2, s0: Point2, s1: Point2) -> f64 {
    let dx = s1.x - s0.x;
    let dy = s1.y - s0.y;
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return p.distance(s0);
    }
    let t = (((p.x - s0.x) * dx + (p.y - s0.y) * dy) / len2).clamp(0.0, 1.0);
    // two-sided interpolation lands exactly on the endpoints at t = 0, 1
    let foot = Point2::new(
        (1.0 - t) * s0.x + t * s1.x,
        (1.0 - t) * s0.y + t * s1.y,
    );
    p.distance(foot)
}

/// Exact Hausdorff distance between two chords of `circle`.
///
/// Always in `[0, 2R]`; zero exactly when the chords coincide.
pub fn hausdorff_distance(c1: &Chord, c2: &Chord, circle: &Circle) -> f64 {
    let (p1, q1) = c1.endpoints(circle);
    let (p2, q2) = c2.endpoints(circle);
    let d1 = point_segment_distance(p1, p2, q2).max(point_segment_distance(q1, p2, q2));
    let d2 = point_segment_distance(p2, p1, q1).max(point_segment_distance(q2, p1, q1));
    d1.max(d2)
}
