//! Tubes: the metric balls of chord space.
//!
//! A tube is the set of chords with one endpoint on each of two disjoint
//! arcs. Small closed balls around a chord are closed tubes whose arcs are
//! the chordal ε-neighbourhoods of the centre's endpoints, and conversely
//! an equal-arc tube sits in the ball centred at the chord of the arc
//! midpoints. The correspondence is exact away from diameters; near a
//! diameter the ball is strictly larger than its tube (see
//! [`Tube::center_ball`]).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::angle::{Angle, Arc};
use crate::chord::{Chord, Circle};
use crate::error::{Error, Result};

/// Tolerance (in radians) for the equal-arc precondition checks.
const ARC_EQ_TOL: f64 = 1e-12;

/// The set of chords with one endpoint on `arc1` and the other on `arc2`.
///
/// `closed` selects whether chords touching the arc endpoints belong to the
/// set (closed tube = closed ball) or not (open tube = open ball).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TubeRaw")]
pub struct Tube {
    arc1: Arc,
    arc2: Arc,
    closed: bool,
}

#[derive(Deserialize)]
struct TubeRaw {
    arc1: Arc,
    arc2: Arc,
    closed: bool,
}

impl TryFrom<TubeRaw> for Tube {
    type Error = Error;
    fn try_from(raw: TubeRaw) -> Result<Tube> {
        Tube::new(raw.arc1, raw.arc2, raw.closed)
    }
}

/// A metric ball in chord space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub center: Chord,
    pub radius: f64,
    pub closed: bool,
}

impl Ball {
    pub fn new(center: Chord, radius: f64, closed: bool) -> Result<Ball> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "ball radius must be positive, got {radius}"
            )));
        }
        Ok(Ball {
            center,
            radius,
            closed,
        })
    }

    /// Realize the ball as a tube, when the radius is small enough.
    ///
    /// Circle points within Euclidean distance ε of an endpoint form an arc
    /// of angular half-width `2·asin(ε/2R)` around it; the ball is the tube
    /// between the two such arcs. Fails with [`Error::BallTooLarge`] when
    /// the arcs would overlap, i.e. outside the small-radius regime where
    /// the ball/tube identity is established.
    pub fn to_tube(&self, circle: &Circle) -> Result<Tube> {
        let r = circle.radius();
        if self.radius >= 2.0 * r {
            return Err(Error::BallTooLarge {
                radius: self.radius,
                limit: 2.0 * r,
            });
        }
        let half_width = 2.0 * (self.radius / (2.0 * r)).asin();
        let a = self.center.a().radians();
        let b = self.center.b().radians();
        // Both angular gaps between the endpoints must fit the two arcs.
        let gap_ab = self.center.a().ccw_to(self.center.b());
        let gap_ba = std::f64::consts::TAU - gap_ab;
        let min_gap = gap_ab.min(gap_ba);
        if min_gap <= 2.0 * half_width {
            let limit = 2.0 * r * (min_gap / 4.0).sin();
            return Err(Error::BallTooLarge {
                radius: self.radius,
                limit,
            });
        }
        Tube::new(
            Arc::new(a - half_width, a + half_width)?,
            Arc::new(b - half_width, b + half_width)?,
            self.closed,
        )
    }
}

impl Tube {
    pub fn new(arc1: Arc, arc2: Arc, closed: bool) -> Result<Tube> {
        if !arc1.disjoint_from(&arc2) {
            return Err(Error::InvalidParameter(
                "tube arcs must be disjoint subsets of the circle".into(),
            ));
        }
        Ok(Tube { arc1, arc2, closed })
    }

    #[inline]
    pub fn arc1(&self) -> &Arc {
        &self.arc1
    }

    #[inline]
    pub fn arc2(&self) -> &Arc {
        &self.arc2
    }

    #[inline]
    pub fn closed(&self) -> bool {
        self.closed
    }

    /// Membership test: one endpoint on each arc, boundary per `closed`.
    pub fn contains(&self, chord: &Chord) -> bool {
        let (a, b) = (chord.a(), chord.b());
        if self.closed {
            (self.arc1.contains_closed(a) && self.arc2.contains_closed(b))
                || (self.arc1.contains_closed(b) && self.arc2.contains_closed(a))
        } else {
            (self.arc1.contains_open(a) && self.arc2.contains_open(b))
                || (self.arc1.contains_open(b) && self.arc2.contains_open(a))
        }
    }

    /// Common arc length of an equal-arc tube, or an error when the arcs
    /// differ beyond tolerance.
    fn equal_arc_length(&self, circle: &Circle) -> Result<f64> {
        let w1 = self.arc1.width();
        let w2 = self.arc2.width();
        if (w1 - w2).abs() > ARC_EQ_TOL {
            return Err(Error::UnequalArcs {
                len1: w1 * circle.radius(),
                len2: w2 * circle.radius(),
            });
        }
        Ok(w1 * circle.radius())
    }

    /// True when both arcs fit inside one closed half-circle bounded by the
    /// diameter parallel to the tube's central chord.
    fn within_half_circle(&self) -> bool {
        let m1 = self.arc1.midpoint().radians();
        let m2 = self.arc2.midpoint().radians();
        // Normal direction of the central chord; the parallel diameter joins
        // pole ± π/2. There are two midpoint bisectors (ν and ν + π); with
        // the matching semicircles they give the same two half-circles.
        let pole = Angle::new(0.5 * (m1 + m2) + PI / 2.0);
        for offset in [0.0, PI] {
            let semi_start = Angle::new(pole.radians() + offset);
            let inside = |arc: &Arc| {
                let t = semi_start.ccw_to(arc.start());
                t <= PI + ARC_EQ_TOL && t + arc.width() <= PI + ARC_EQ_TOL
            };
            if inside(&self.arc1) && inside(&self.arc2) {
                return true;
            }
        }
        false
    }

    /// Diameter `2R sin(γ/2R)` of an equal-arc tube with arc length γ.
    ///
    /// Requires the two arcs to lie in one closed half-circle cut by the
    /// diameter parallel to the central chord; outside that regime the
    /// closed form does not apply and `UnsupportedGeometry` is returned.
    pub fn diameter(&self, circle: &Circle) -> Result<f64> {
        let gamma = self.equal_arc_length(circle)?;
        if !self.within_half_circle() {
            return Err(Error::UnsupportedGeometry(
                "tube arcs do not fit in a half-circle parallel to the central chord",
            ));
        }
        let r = circle.radius();
        Ok(2.0 * r * (gamma / (2.0 * r)).sin())
    }

    /// The ball circumscribing this equal-arc tube: centre at the chord of
    /// the arc midpoints, radius the endpoint displacement from an arc
    /// midpoint to its arc end, `2R sin(γ/4R)`.
    ///
    /// Exact inverse of [`Ball::to_tube`]. Tube and ball coincide as sets
    /// except when the central chord runs near a diameter, where the tube
    /// sits strictly inside the ball.
    pub fn center_ball(&self, circle: &Circle) -> Result<Ball> {
        let gamma = self.equal_arc_length(circle)?;
        let center = Chord::from_angles(self.arc1.midpoint(), self.arc2.midpoint())?;
        let r = circle.radius();
        let radius = 2.0 * r * (gamma / (4.0 * r)).sin();
        Ball::new(center, radius, self.closed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::hausdorff_distance;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{PI, TAU};

    fn tube(a1: (f64, f64), a2: (f64, f64), closed: bool) -> Tube {
        Tube::new(
            Arc::new(a1.0, a1.1).unwrap(),
            Arc::new(a2.0, a2.1).unwrap(),
            closed,
        )
        .unwrap()
    }

    #[test]
    fn membership_per_arc_assignment() {
        let t = tube((0.0, 0.2), (PI, PI + 0.2), true);
        assert!(t.contains(&Chord::new(0.1, PI + 0.1).unwrap()));
        // both endpoints on arc1
        assert!(!t.contains(&Chord::new(0.1, 0.15).unwrap()));
        // order of endpoints must not matter
        assert!(t.contains(&Chord::new(PI + 0.1, 0.1).unwrap()));
    }

    #[test]
    fn corner_chord_boundary_handling() {
        let corner = Chord::new(0.0, PI).unwrap();
        assert!(tube((0.0, 0.2), (PI, PI + 0.2), true).contains(&corner));
        assert!(!tube((0.0, 0.2), (PI, PI + 0.2), false).contains(&corner));
    }

    #[test]
    fn overlapping_arcs_rejected() {
        let a = Arc::new(0.0, 1.0).unwrap();
        let b = Arc::new(0.5, 1.5).unwrap();
        assert!(Tube::new(a, b, true).is_err());
    }

    #[test]
    fn diameter_closed_form() {
        let unit = Circle::unit();
        // γ = π/3 on the unit circle: 2·sin(π/6) = 1
        let t = tube((0.0, PI / 3.0), (2.0 * PI / 3.0, PI), true);
        assert_relative_eq!(t.diameter(&unit).unwrap(), 1.0, max_relative = 1e-14);

        // continuity toward the empty tube
        let tiny = tube((0.0, 1e-9), (1.0, 1.0 + 1e-9), true);
        assert!(tiny.diameter(&unit).unwrap() < 1.1e-9);
    }

    #[test]
    fn diameter_matches_brute_force_grid() {
        // Reference: maximum pairwise Hausdorff distance over a grid of tube
        // chords. γ = 0.4, arcs [0.1, 0.5] and [2.0, 2.4].
        let unit = Circle::unit();
        let t = tube((0.1, 0.5), (2.0, 2.4), true);
        let d = t.diameter(&unit).unwrap();
        assert_relative_eq!(d, 0.39733866159012243, max_relative = 1e-12);

        let k = 60;
        let grid: Vec<Chord> = (0..=k)
            .flat_map(|i| {
                (0..=k).map(move |j| {
                    let a = 0.1 + 0.4 * i as f64 / k as f64;
                    let b = 2.0 + 0.4 * j as f64 / k as f64;
                    Chord::new(a, b).unwrap()
                })
            })
            .collect();
        let mut sup = 0.0f64;
        for (i, c1) in grid.iter().enumerate() {
            for c2 in &grid[i + 1..] {
                sup = sup.max(hausdorff_distance(c1, c2, &unit));
            }
        }
        assert_relative_eq!(d, sup, max_relative = 1e-4);
    }

    #[test]
    fn diameter_preconditions() {
        let unit = Circle::unit();
        // unequal arcs
        let t = tube((0.0, 0.3), (1.0, 1.5), true);
        assert!(matches!(
            t.diameter(&unit),
            Err(Error::UnequalArcs { .. })
        ));
        // arcs straddle the parallel diameter: central chord near a diameter
        let t = tube((0.0, 0.4), (PI, PI + 0.4), true);
        assert!(matches!(
            t.diameter(&unit),
            Err(Error::UnsupportedGeometry(_))
        ));
    }

    #[test]
    fn ball_to_tube_arc_half_widths() {
        let unit = Circle::unit();
        let ball = Ball::new(Chord::new(0.0, PI).unwrap(), 0.2, true).unwrap();
        let t = ball.to_tube(&unit).unwrap();
        // half-width 2·asin(0.1)
        let w = 0.2003348423231196;
        assert_relative_eq!(t.arc1().width(), 2.0 * w, max_relative = 1e-12);
        assert_abs_diff_eq!(
            t.arc1().start().radians(),
            TAU - w,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(t.arc2().midpoint().radians(), PI, epsilon = 1e-12);

        let ball = Ball::new(Chord::new(0.0, PI / 2.0).unwrap(), 0.1, true).unwrap();
        let t = ball.to_tube(&unit).unwrap();
        assert_relative_eq!(t.arc1().width(), 0.10004171361154003 * 2.0, max_relative = 1e-12);
    }

    #[test]
    fn ball_too_large_when_arcs_would_overlap() {
        let unit = Circle::unit();
        // endpoints 0 and 0.2 apart; generous radius makes the arcs collide
        let ball = Ball::new(Chord::new(0.0, 0.2).unwrap(), 0.15, true).unwrap();
        assert!(matches!(
            ball.to_tube(&unit),
            Err(Error::BallTooLarge { .. })
        ));
        let huge = Ball::new(Chord::new(0.0, PI).unwrap(), 2.5, true).unwrap();
        assert!(matches!(huge.to_tube(&unit), Err(Error::BallTooLarge { .. })));
    }

    #[test]
    fn tube_center_and_radius_examples() {
        let unit = Circle::unit();
        let t = tube((0.0, 0.2), (PI, PI + 0.2), true);
        let ball = t.center_ball(&unit).unwrap();
        assert_abs_diff_eq!(ball.center.a().radians(), 0.1, epsilon = 1e-12);
        assert_abs_diff_eq!(ball.center.b().radians(), PI + 0.1, epsilon = 1e-12);
        // circumradius 2·sin(0.05)
        assert_relative_eq!(ball.radius, 0.09995833854135666, max_relative = 1e-12);

        let t = tube((0.0, PI / 3.0), (PI, PI + PI / 3.0), true);
        let ball = t.center_ball(&unit).unwrap();
        assert_relative_eq!(ball.radius, 0.5176380902050415, max_relative = 1e-12);
    }

    #[test]
    fn center_radius_matches_corner_distance_away_from_diameters() {
        // For a tube whose central chord is not a diameter, the distance
        // from the centre to a corner chord is exactly the circumradius.
        // (At diameter-centred tubes the corner distance can be smaller:
        // two diameters crossing at δ are sin δ apart, not 2 sin(δ/2).)
        let unit = Circle::unit();
        let t = tube((0.0, 0.2), (1.0, 1.2), true);
        let ball = t.center_ball(&unit).unwrap();
        let corner = Chord::new(0.0, 1.0).unwrap();
        assert_relative_eq!(
            ball.radius,
            hausdorff_distance(&ball.center, &corner, &unit),
            max_relative = 1e-9
        );

        let diam_centered = tube((0.0, 0.2), (PI, PI + 0.2), true);
        let ball = diam_centered.center_ball(&unit).unwrap();
        let corner = Chord::new(0.0, PI).unwrap();
        let d = hausdorff_distance(&ball.center, &corner, &unit);
        assert_relative_eq!(d, 0.1f64.sin(), max_relative = 1e-12);
        assert!(d < ball.radius);
    }

    #[test]
    fn ball_tube_round_trip_is_identity() {
        let unit = Circle::unit();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let Ok(center) = Chord::new(rng.gen::<f64>() * TAU, rng.gen::<f64>() * TAU) else {
                continue;
            };
            let eps = rng.gen::<f64>() * 0.05;
            if eps <= 0.0 {
                continue;
            }
            let ball = Ball::new(center, eps, rng.gen()).unwrap();
            let Ok(t) = ball.to_tube(&unit) else { continue };
            let back = t.center_ball(&unit).unwrap();
            assert_abs_diff_eq!(
                back.center.a().radians(),
                center.a().radians(),
                epsilon = 1e-12
            );
            assert_abs_diff_eq!(
                back.center.b().radians(),
                center.b().radians(),
                epsilon = 1e-12
            );
            assert_abs_diff_eq!(back.radius, eps, epsilon = 1e-12);
            assert_eq!(back.closed, ball.closed);
        }
    }

    #[test]
    fn small_ball_membership_agrees_with_tube_membership() {
        // Chords within Hausdorff distance ε of the centre are exactly the
        // tube members, away from the boundary band, provided the centre
        // keeps clear of diameters (see the counterexample test below).
        let unit = Circle::unit();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut checked = 0u32;
        for _ in 0..60 {
            let Ok(center) = Chord::new(rng.gen::<f64>() * TAU, rng.gen::<f64>() * TAU) else {
                continue;
            };
            if center.central_angle() > PI - 0.2 {
                continue;
            }
            let eps = 0.05;
            let ball = Ball::new(center, eps, true).unwrap();
            let Ok(t) = ball.to_tube(&unit) else { continue };
            let w = 2.0 * (eps / 2.0f64).asin();
            for _ in 0..2_000 {
                let da = (rng.gen::<f64>() - 0.5) * 6.0 * w;
                let db = (rng.gen::<f64>() - 0.5) * 6.0 * w;
                let Ok(probe) = Chord::new(
                    center.a().radians() + da,
                    center.b().radians() + db,
                ) else {
                    continue;
                };
                let d = hausdorff_distance(&center, &probe, &unit);
                if (d - eps).abs() <= 1e-9 {
                    continue; // boundary band
                }
                assert_eq!(d <= eps, t.contains(&probe), "center {center:?} probe {probe:?}");
                checked += 1;
            }
        }
        assert!(checked > 50_000);
    }

    #[test]
    fn tube_serializes_with_arc_objects() {
        let t = tube((0.0, 0.25), (2.0, 2.25), true);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"arc1":{"start":0.0,"end":0.25},"arc2":{"start":2.0,"end":2.25},"closed":true}"#
        );
        let back: Tube = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        // overlapping arcs must not deserialize
        let bad = r#"{"arc1":{"start":0.0,"end":1.0},"arc2":{"start":0.5,"end":1.5},"closed":true}"#;
        assert!(serde_json::from_str::<Tube>(bad).is_err());
    }

    #[test]
    #[allow(clippy::excessive_precision)] // exact f64 bit patterns of the witness
    fn near_diameter_ball_strictly_exceeds_its_tube() {
        // For centres near a diameter the closed ball is strictly larger
        // than the tube: the nearest point of a long chord to a displaced
        // endpoint is an interior foot, not the matching endpoint, so the
        // Hausdorff distance undercuts the endpoint displacement. Concrete
        // witness (found by randomized search, checked against a dense
        // oracle): endpoint displacement 0.0500055 > ε, distance 0.0499996 < ε.
        let unit = Circle::unit();
        let eps = 0.05;
        let center = Chord::new(2.44197836640607235, 5.60292032667822859).unwrap();
        let probe = Chord::new(2.40424574752556586, 5.55290966213022319).unwrap();
        let tube = Ball::new(center, eps, true).unwrap().to_tube(&unit).unwrap();

        let d = hausdorff_distance(&center, &probe, &unit);
        assert!(d < eps - 4e-7, "distance {d}");
        assert!(!tube.contains(&probe));
        let (_, ce) = center.endpoints(&unit);
        let (_, pe) = probe.endpoints(&unit);
        assert!(ce.distance(pe) > eps, "displacement {}", ce.distance(pe));
    }

    proptest! {
        /// Enlarging both arcs never loses members.
        #[test]
        fn membership_monotone_under_arc_enlargement(
            s1 in 0.0f64..TAU,
            w1 in 0.01f64..0.5,
            off in 1.0f64..2.0,
            w2 in 0.01f64..0.5,
            grow in 0.0f64..0.3,
            pa in 0.0f64..1.0,
            pb in 0.0f64..1.0,
        ) {
            let a1 = Arc::from_width(s1, w1).unwrap();
            let a2 = Arc::from_width(s1 + w1 + off, w2).unwrap();
            let Ok(small) = Tube::new(a1, a2, true) else { return Ok(()); };
            let b1 = Arc::from_width(s1 - grow, w1 + 2.0 * grow).unwrap();
            let b2 = Arc::from_width(s1 + w1 + off - grow, w2 + 2.0 * grow).unwrap();
            let Ok(big) = Tube::new(b1, b2, true) else { return Ok(()); };
            let chord = Chord::new(s1 + pa * w1, s1 + w1 + off + pb * w2).unwrap();
            prop_assert!(small.contains(&chord));
            prop_assert!(big.contains(&chord));
        }
    }
}
