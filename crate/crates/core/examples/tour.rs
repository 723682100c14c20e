//! A short tour: the metric, the measures, and the 1/3 answer.
//!
//! Run with `cargo run -p chordspace --example tour`.

use std::f64::consts::PI;

use chordspace::{
    bertrand_inner_cover, covering_report, hausdorff_distance, mc_probability, probability,
    Chord, ChordSet, Circle, SamplerKind,
};

fn main() -> chordspace::Result<()> {
    let circle = Circle::unit();

    // Two chords of the inscribed equilateral triangle configuration are
    // exactly √3 apart.
    let top = Chord::new(PI / 3.0, 2.0 * PI / 3.0)?;
    let bottom = Chord::new(4.0 * PI / 3.0, 5.0 * PI / 3.0)?;
    println!(
        "distance(top, bottom) = {:.9}  (√3 = {:.9})",
        hausdorff_distance(&top, &bottom, &circle),
        3f64.sqrt()
    );

    // Covering bounds close in on a tube's measure γ².
    let report = covering_report(&ChordSet::Tube { gamma: 0.5 }, &circle, 256, 1e-3)?;
    let last = report.estimates.last().expect("nonempty ladder");
    println!(
        "tube γ=0.5: exact {:.6}, bounds at n=256: [{:.6}, {:.6}], converged: {}",
        report.exact_value, last.lower_bound, last.upper_bound, report.converged
    );

    // The long-chord set: inner tube covers grow toward 2π²/3 ≈ 6.5797.
    for n in [12u64, 120, 1200, 12000] {
        let cover = bertrand_inner_cover(n, &circle)?;
        println!(
            "inner cover n={n:>5}: {:>9} tubes, measure {:.4}",
            cover.tube_count, cover.measure
        );
    }

    // And the probability, exactly and by simulation.
    println!(
        "P(long chord) = {:.6} exactly",
        probability(&ChordSet::BertrandSet, &circle)?
    );
    for kind in [
        SamplerKind::H2Uniform,
        SamplerKind::RandomRadius,
        SamplerKind::RandomMidpoint,
    ] {
        let batch = mc_probability(kind, |c| c.is_bertrand(), 1_000_000, 7)?;
        println!(
            "  {kind:<9} sampler: p̂ = {:.5}, 95% CI [{:.5}, {:.5}]",
            batch.p_hat, batch.ci95.0, batch.ci95.1
        );
    }
    Ok(())
}
