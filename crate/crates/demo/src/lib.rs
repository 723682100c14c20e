//! Browser bindings for the chordspace demo page.
//!
//! Three explorers, each returning a JSON string the page renders directly:
//! figures arrive as inline SVG, numbers as plain fields. Errors come back
//! as `{"error": "..."}` rather than exceptions.

use wasm_bindgen::prelude::wasm_bindgen;

use chordspace::plot;
use chordspace::{
    covering_report, hausdorff_distance, mc_probability, Chord, ChordSet, Circle, SamplerKind,
};

fn err_json(msg: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": msg.to_string() }).to_string()
}

/// Hausdorff distance between two chords, with the realizing segment drawn.
#[wasm_bindgen]
pub fn distance_explorer(a1: f64, b1: f64, a2: f64, b2: f64, radius: f64) -> String {
    let inner = || -> chordspace::Result<String> {
        let circle = Circle::new(radius)?;
        let c1 = Chord::new(a1, b1)?;
        let c2 = Chord::new(a2, b2)?;
        let d = hausdorff_distance(&c1, &c2, &circle);
        Ok(serde_json::json!({
            "distance": d,
            "c1": { "a": c1.a().radians(), "b": c1.b().radians() },
            "c2": { "a": c2.a().radians(), "b": c2.b().radians() },
            "svg": plot::pair_figure(&c1, &c2, &circle),
        })
        .to_string())
    };
    inner().unwrap_or_else(err_json)
}

/// Seeded Monte Carlo run of the long-chord event under the chosen sampler,
/// with the chord scatter figure.
#[wasm_bindgen]
pub fn bertrand_explorer(kind: &str, samples: u32, seed: u32, radius: f64) -> String {
    let inner = || -> chordspace::Result<String> {
        let circle = Circle::new(radius)?;
        let kind: SamplerKind = kind.parse()?;
        let batch = mc_probability(kind, |c| c.is_bertrand(), samples as u64, seed as u64)?;
        let svg = plot::samples_figure(kind, samples.min(1200) as u64, seed as u64, &circle);
        Ok(serde_json::json!({
            "kind": kind.to_string(),
            "n": batch.n,
            "hits": batch.hits,
            "p_hat": batch.p_hat,
            "ci95": [batch.ci95.0, batch.ci95.1],
            "svg": svg,
        })
        .to_string())
    };
    inner().unwrap_or_else(err_json)
}

/// Covering-bound ladder for a tube of arc length `gamma`, with the
/// convergence figure.
#[wasm_bindgen]
pub fn covering_explorer(gamma: f64, n_max: u32, radius: f64) -> String {
    let inner = || -> chordspace::Result<String> {
        let circle = Circle::new(radius)?;
        let set = ChordSet::Tube { gamma };
        let report = covering_report(&set, &circle, n_max as u64, 1e-2)?;
        let rows: Vec<serde_json::Value> = report
            .estimates
            .iter()
            .map(|e| {
                serde_json::json!({
                    "epsilon": e.epsilon,
                    "n": e.n_subdivisions,
                    "lower": e.lower_bound,
                    "upper": e.upper_bound,
                })
            })
            .collect();
        Ok(serde_json::json!({
            "exact": report.exact_value,
            "converged": report.converged,
            "rows": rows,
            "svg": plot::convergence_figure(&report),
        })
        .to_string())
    };
    inner().unwrap_or_else(err_json)
}
