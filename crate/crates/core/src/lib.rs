//! Chords of a circle as a metric space.
//!
//! The space of all chords of a fixed circle carries the Hausdorff metric
//! between chords as compact plane sets. This crate implements:
//!
//! - the exact metric and its elementary geometry ([`metric`], [`chord`]);
//! - metric balls, which are "tubes" between two arcs ([`tube`]);
//! - Hausdorff outer-measure bounds, exact measures of the classical chord
//!   sets, and a box-counting dimension estimator ([`measure`]);
//! - the normalized probability space `Pr = H² / 2π²R²`, under which the
//!   probability that a random chord beats the inscribed equilateral
//!   triangle's side is exactly 1/3, together with seeded Monte Carlo
//!   samplers for it and for the classical Bertrand parametrizations
//!   ([`prob`]);
//! - SVG figure generation for all of the above ([`plot`]).
//!
//! Everything is pure and deterministic: values are immutable, samplers are
//! keyed by explicit seeds, and parallel evaluation never changes results.
//!
//! ```
//! use chordspace::{hausdorff_distance, probability, Chord, ChordSet, Circle};
//!
//! let circle = Circle::unit();
//! let c1 = Chord::new(0.0, std::f64::consts::PI).unwrap();
//! let c2 = Chord::new(0.1, std::f64::consts::PI + 0.1).unwrap();
//! assert!(hausdorff_distance(&c1, &c2, &circle) < 0.1);
//!
//! let p = probability(&ChordSet::BertrandSet, &circle).unwrap();
//! assert!((p - 1.0 / 3.0).abs() < 1e-12);
//! ```

pub mod angle;
pub mod chord;
pub mod error;
pub mod measure;
pub mod metric;
pub mod plot;
pub mod prob;
pub mod tube;

pub use angle::{Angle, Arc};
pub use chord::{Chord, Circle, Point2};
pub use error::{Error, Result};
pub use measure::{
    bertrand_inner_cover, bertrand_outer_cover, box_cover_count, covering_csv,
    covering_lower_bound, covering_report, covering_upper_bound, dimension_estimate,
    exact_measure, grid_cover_count, reference_tube, same_arc_partial_sum, set_predicate,
    BertrandCover, ChordPredicate, ChordSet, CoveringEstimate, DimensionEstimate, MeasureReport,
};
pub use metric::{hausdorff_distance, point_segment_distance};
pub use prob::{
    chord_to_param, empirical_tube_probability, mc_probability, param_to_chord, probability,
    sample_chord, sample_csv, ParamPoint, SampleBatch, SamplerKind,
};
pub use tube::{Ball, Tube};
