//! Shared oracles for the integration suites. These deliberately avoid the
//! endpoint-maximum shortcut of the library metric: distances are taken as
//! maxima over densely sampled points, so they check the implementation
//! rather than restate it.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

use chordspace::{point_segment_distance, Chord, Circle, Point2};

/// Dense-sampling Hausdorff distance: `samples + 1` evenly spaced points per
/// chord (endpoints included), exact point-to-segment minima, symmetrized.
pub fn dense_hausdorff(c1: &Chord, c2: &Chord, circle: &Circle, samples: usize) -> f64 {
    let directed = |ca: &Chord, cb: &Chord| {
        let (a0, a1) = ca.endpoints(circle);
        let (b0, b1) = cb.endpoints(circle);
        let mut worst = 0.0f64;
        for k in 0..=samples {
            let t = k as f64 / samples as f64;
            let p = Point2::new(a0.x + t * (a1.x - a0.x), a0.y + t * (a1.y - a0.y));
            worst = worst.max(point_segment_distance(p, b0, b1));
        }
        worst
    };
    directed(c1, c2).max(directed(c2, c1))
}

/// Uniform random chord (uniform independent endpoint angles).
pub fn random_chord(rng: &mut ChaCha8Rng) -> Chord {
    loop {
        let a = rng.gen::<f64>() * TAU;
        let b = rng.gen::<f64>() * TAU;
        if let Ok(c) = Chord::new(a, b) {
            return c;
        }
    }
}
