//! Angles on the circle and directed arcs between them.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An angle in radians, canonicalized into `[0, 2π)`.
///
/// `Angle::new(v + 2πk) == Angle::new(v)` for any integer `k`, so values can
/// be compared and ordered directly.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Self {
        let mut r = radians.rem_euclid(TAU);
        // rem_euclid can round up to 2π for tiny negative inputs.
        if r >= TAU {
            r = 0.0;
        }
        Angle(r)
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }

    /// Counterclockwise angular distance from `self` to `other`, in `[0, 2π)`.
    #[inline]
    pub fn ccw_to(self, other: Angle) -> f64 {
        let mut d = (other.0 - self.0).rem_euclid(TAU);
        if d >= TAU {
            d = 0.0;
        }
        d
    }
}

impl From<f64> for Angle {
    fn from(radians: f64) -> Self {
        Angle::new(radians)
    }
}

/// A directed circular arc, traversed counterclockwise from `start` to `end`.
///
/// The angular width lies strictly between 0 and 2π: empty arcs and the full
/// circle are rejected at construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ArcRaw")]
pub struct Arc {
    start: Angle,
    end: Angle,
}

#[derive(Deserialize)]
struct ArcRaw {
    start: f64,
    end: f64,
}

impl TryFrom<ArcRaw> for Arc {
    type Error = Error;
    fn try_from(raw: ArcRaw) -> Result<Arc> {
        Arc::new(raw.start, raw.end)
    }
}

impl Arc {
    pub fn new(start: f64, end: f64) -> Result<Arc> {
        let start = Angle::new(start);
        let end = Angle::new(end);
        if start == end {
            return Err(Error::InvalidParameter(
                "arc must have nonzero angular width".into(),
            ));
        }
        Ok(Arc { start, end })
    }

    /// Arc from `start` spanning `width` radians counterclockwise.
    pub fn from_width(start: f64, width: f64) -> Result<Arc> {
        if !(width > 0.0 && width < TAU) {
            return Err(Error::InvalidParameter(format!(
                "arc width must lie in (0, 2pi), got {width}"
            )));
        }
        Arc::new(start, start + width)
    }

    #[inline]
    pub fn start(&self) -> Angle {
        self.start
    }

    #[inline]
    pub fn end(&self) -> Angle {
        self.end
    }

    /// Angular width in `(0, 2π)`.
    #[inline]
    pub fn width(&self) -> f64 {
        let w = self.start.ccw_to(self.end);
        if w == 0.0 {
            TAU
        } else {
            w
        }
    }

    /// Midpoint of the arc.
    pub fn midpoint(&self) -> Angle {
        Angle::new(self.start.radians() + 0.5 * self.width())
    }

    /// Membership including both endpoints.
    #[inline]
    pub fn contains_closed(&self, theta: Angle) -> bool {
        self.start.ccw_to(theta) <= self.width()
    }

    /// Membership excluding both endpoints.
    #[inline]
    pub fn contains_open(&self, theta: Angle) -> bool {
        let t = self.start.ccw_to(theta);
        t > 0.0 && t < self.width()
    }

    /// True when the closed arcs share no point of the circle.
    pub fn disjoint_from(&self, other: &Arc) -> bool {
        !(self.contains_closed(other.start)
            || self.contains_closed(other.end)
            || other.contains_closed(self.start)
            || other.contains_closed(self.end))
    }
}
