//! The circle, points of the plane, and chords in canonical form.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::error::{Error, Result};

/// The fixed circle all chords live on. Radius is strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Circle {
    radius: f64,
}

impl Circle {
    pub fn new(radius: f64) -> Result<Circle> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "radius must be a positive finite length, got {radius}"
            )));
        }
        Ok(Circle { radius })
    }

    /// The unit circle, the default for examples and the CLI.
    pub fn unit() -> Circle {
        Circle { radius: 1.0 }
    }

    #[inline]
    pub fn radius(&self) -> f64 {
        self.radius
    }

    #[inline]
    pub fn circumference(&self) -> f64 {
        TAU * self.radius
    }

    /// Point on the circle at the given angle.
    #[inline]
    pub fn point_at(&self, theta: Angle) -> Point2 {
        let (s, c) = theta.radians().sin_cos();
        Point2 {
            x: self.radius * c,
            y: self.radius * s,
        }
    }
}

/// A plain point of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Point2 {
        Point2 { x, y }
    }

    #[inline]
    pub fn distance(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// A chord, stored as the unordered pair of its endpoint angles in canonical
/// form `a < b`. Degenerate "chords" with coinciding endpoints are rejected:
/// single circle points are not chords.
///
/// Canonical form makes equality exact: two chords are the same element of
/// the space iff the structs compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ChordRaw")]
pub struct Chord {
    a: Angle,
    b: Angle,
}

#[derive(Deserialize)]
struct ChordRaw {
    a: f64,
    b: f64,
}

impl TryFrom<ChordRaw> for Chord {
    type Error = Error;
    fn try_from(raw: ChordRaw) -> Result<Chord> {
        Chord::new(raw.a, raw.b)
    }
}

impl Chord {
    /// Canonicalize a pair of endpoint angles into a chord.
    ///
    /// Both angles are wrapped into `[0, 2π)` first, then ordered, so the
    /// constructor is idempotent and orientation-free.
    pub fn new(a: f64, b: f64) -> Result<Chord> {
        Chord::from_angles(Angle::new(a), Angle::new(b))
    }

    pub fn from_angles(a: Angle, b: Angle) -> Result<Chord> {
        if a == b {
            return Err(Error::DegenerateChord);
        }
        if a < b {
            Ok(Chord { a, b })
        } else {
            Ok(Chord { a: b, b: a })
        }
    }

    /// Smaller endpoint angle.
    #[inline]
    pub fn a(&self) -> Angle {
        self.a
    }

    /// Larger endpoint angle.
    #[inline]
    pub fn b(&self) -> Angle {
        self.b
    }

    /// Cartesian endpoints on the given circle.
    #[inline]
    pub fn endpoints(&self, circle: &Circle) -> (Point2, Point2) {
        (circle.point_at(self.a), circle.point_at(self.b))
    }

    /// The central angle subtended by the chord, in `(0, π]`.
    ///
    /// Of the two arcs the endpoints cut the circle into, this is the angle
    /// of the shorter one.
    #[inline]
    pub fn central_angle(&self) -> f64 {
        let d = self.b.radians() - self.a.radians(); // in (0, 2π)
        d.min(TAU - d)
    }

    /// Euclidean length of the chord: `2R sin(Δ/2)` for central angle Δ.
    #[inline]
    pub fn length(&self, circle: &Circle) -> f64 {
        2.0 * circle.radius() * (0.5 * self.central_angle()).sin()
    }

    /// True when the chord is strictly longer than the side `√3·R` of the
    /// inscribed equilateral triangle, i.e. the central angle strictly
    /// exceeds 2π/3.
    #[inline]
    pub fn is_bertrand(&self) -> bool {
        self.central_angle() > TAU / 3.0
    }
}
