//! The probability space of chords and its Monte Carlo harness.
//!
//! The law is the normalized 2-dimensional Hausdorff measure,
//! `Pr(A) = H²(A) / 2π²R²`. In arc-length coordinates `(x, y)` with
//! `0 ≤ x < y < 2πR` this is the uniform distribution on the triangle, so
//! drawing two independent uniform endpoint angles samples it exactly. The
//! three classical chord samplers are included as baselines; they induce
//! different laws and different long-chord probabilities (1/3, 1/2, 1/4).
//!
//! Sampling is deterministic: a batch is split into fixed-size blocks, block
//! `b` of seed `s` always draws from stream `b` of a counter-based generator
//! seeded with `s`. Results are identical however many workers run.

use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::chord::{Chord, Circle};
use crate::error::{Error, Result};
use crate::measure::{exact_measure, ChordSet};
use crate::tube::Tube;

/// How a random chord is drawn.
///
/// `H2Uniform` and `RandomEndpoints` are distinct names for the same law:
/// the measure-uniform distribution coincides with independent uniform
/// endpoints. They are kept apart so experiments can label which reading
/// they exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplerKind {
    H2Uniform,
    RandomEndpoints,
    RandomRadius,
    RandomMidpoint,
}

impl FromStr for SamplerKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<SamplerKind> {
        match s {
            "h2" | "h2uniform" => Ok(SamplerKind::H2Uniform),
            "endpoints" => Ok(SamplerKind::RandomEndpoints),
            "radius" => Ok(SamplerKind::RandomRadius),
            "midpoint" => Ok(SamplerKind::RandomMidpoint),
            _ => Err(Error::InvalidParameter(format!(
                "unknown sampler kind '{s}' (expected h2|endpoints|radius|midpoint)"
            ))),
        }
    }
}

impl std::fmt::Display for SamplerKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            SamplerKind::H2Uniform => "h2",
            SamplerKind::RandomEndpoints => "endpoints",
            SamplerKind::RandomRadius => "radius",
            SamplerKind::RandomMidpoint => "midpoint",
        };
        f.write_str(name)
    }
}

/// Outcome of a seeded Monte Carlo run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleBatch {
    pub kind: SamplerKind,
    pub seed: u64,
    pub n: u64,
    pub hits: u64,
    pub p_hat: f64,
    /// Wilson 95% interval for the hit probability.
    pub ci95: (f64, f64),
}

/// A chord in arc-length coordinates: `0 ≤ x < y < 2πR`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamPoint {
    pub x: f64,
    pub y: f64,
}

/// Exact probability of a closed-form chord set.
pub fn probability(set: &ChordSet, circle: &Circle) -> Result<f64> {
    let total = exact_measure(&ChordSet::FullSpace, circle)?;
    Ok(exact_measure(set, circle)? / total)
}

/// Draw one chord. Null events (coincident endpoints, midpoint at the
/// centre) have probability zero and are resampled.
pub fn sample_chord<R: Rng>(kind: SamplerKind, rng: &mut R) -> Chord {
    use std::f64::consts::TAU;
    match kind {
        SamplerKind::H2Uniform | SamplerKind::RandomEndpoints => loop {
            let a = rng.gen::<f64>() * TAU;
            let b = rng.gen::<f64>() * TAU;
            if let Ok(c) = Chord::new(a, b) {
                return c;
            }
        },
        SamplerKind::RandomRadius => loop {
            // uniform direction, uniform signed offset along it
            let dir = rng.gen::<f64>() * TAU;
            let offset = 2.0 * rng.gen::<f64>() - 1.0;
            if offset.abs() >= 1.0 {
                continue;
            }
            let half = offset.acos();
            if let Ok(c) = Chord::new(dir - half, dir + half) {
                return c;
            }
        },
        SamplerKind::RandomMidpoint => loop {
            // uniform point of the open disk by rejection from the square
            let x = 2.0 * rng.gen::<f64>() - 1.0;
            let y = 2.0 * rng.gen::<f64>() - 1.0;
            let r2 = x * x + y * y;
            if r2 <= 0.0 || r2 >= 1.0 {
                continue;
            }
            let dir = y.atan2(x);
            let half = r2.sqrt().acos();
            if let Ok(c) = Chord::new(dir - half, dir + half) {
                return c;
            }
        },
    }
}

/// Arc-length coordinates of a chord; a bijection onto the open triangle
/// `0 ≤ x < y < 2πR` under which the chord law is uniform.
pub fn chord_to_param(chord: &Chord, circle: &Circle) -> ParamPoint {
    let r = circle.radius();
    ParamPoint {
        x: r * chord.a().radians(),
        y: r * chord.b().radians(),
    }
}

/// Inverse of [`chord_to_param`].
pub fn param_to_chord(p: &ParamPoint, circle: &Circle) -> Result<Chord> {
    let circ = circle.circumference();
    if !(0.0 <= p.x && p.x < p.y && p.y < circ) {
        return Err(Error::InvalidParameter(format!(
            "arc-length pair must satisfy 0 <= x < y < 2πR, got ({}, {})",
            p.x, p.y
        )));
    }
    let r = circle.radius();
    Chord::new(p.x / r, p.y / r)
}

/// Fixed Monte Carlo block size; blocks map one-to-one onto RNG streams.
const BLOCK: u64 = 1 << 16;

fn block_hits<F>(kind: SamplerKind, event: &F, seed: u64, block: u64, len: u64) -> u64
where
    F: Fn(&Chord) -> bool,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    let mut hits = 0;
    for _ in 0..len {
        if event(&sample_chord(kind, &mut rng)) {
            hits += 1;
        }
    }
    hits
}

/// Wilson 95% score interval.
fn wilson_ci(hits: u64, n: u64) -> (f64, f64) {
    const Z: f64 = 1.959963984540054;
    let n_f = n as f64;
    let p = hits as f64 / n_f;
    let z2 = Z * Z;
    let denom = 1.0 + z2 / n_f;
    let center = p + z2 / (2.0 * n_f);
    let half = Z * (p * (1.0 - p) / n_f + z2 / (4.0 * n_f * n_f)).sqrt();
    // rounding at p ∈ {0, 1} must not push an endpoint past p itself
    (
        ((center - half) / denom).clamp(0.0, p),
        ((center + half) / denom).clamp(p, 1.0),
    )
}

/// Estimate the probability of `event` under `kind` with `n` draws.
///
/// Deterministic for fixed `(kind, n, seed)`, regardless of how many threads
/// evaluate the blocks.
pub fn mc_probability<F>(kind: SamplerKind, event: F, n: u64, seed: u64) -> Result<SampleBatch>
where
    F: Fn(&Chord) -> bool + Sync,
{
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    let blocks = n.div_ceil(BLOCK);
    let len_of = |b: u64| {
        if b + 1 == blocks && !n.is_multiple_of(BLOCK) {
            n % BLOCK
        } else {
            BLOCK
        }
    };

    #[cfg(feature = "parallel")]
    let hits: u64 = (0..blocks)
        .into_par_iter()
        .map(|b| block_hits(kind, &event, seed, b, len_of(b)))
        .sum();
    #[cfg(not(feature = "parallel"))]
    let hits: u64 = (0..blocks)
        .map(|b| block_hits(kind, &event, seed, b, len_of(b)))
        .sum();

    Ok(SampleBatch {
        kind,
        seed,
        n,
        hits,
        p_hat: hits as f64 / n as f64,
        ci95: wilson_ci(hits, n),
    })
}

/// Measure-uniform Monte Carlo estimate of a tube's probability; compares
/// against `γ₁γ₂ / 2π²R²`.
pub fn empirical_tube_probability(tube: &Tube, n: u64, seed: u64) -> Result<SampleBatch> {
    mc_probability(SamplerKind::H2Uniform, |c| tube.contains(c), n, seed)
}

/// CSV export of raw samples: `a,b,length,is_bertrand` per row.
pub fn sample_csv(kind: SamplerKind, n: u64, seed: u64, circle: &Circle) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(0);
    let mut out = String::from("a,b,length,is_bertrand\n");
    for _ in 0..n {
        let c = sample_chord(kind, &mut rng);
        out.push_str(&format!(
            "{},{},{},{}\n",
            c.a().radians(),
            c.b().radians(),
            c.length(circle),
            c.is_bertrand()
        ));
    }
    out
}
