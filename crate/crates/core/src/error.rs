//! Error type shared by the whole crate.

use std::fmt;

/// Everything that can go wrong when constructing or evaluating chord-space
/// objects. Construction errors are preferred over panics so callers (the CLI
/// in particular) can map them to exit codes.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Both chord endpoints coincide; single circle points are not chords.
    DegenerateChord,
    /// A parameter is outside its documented domain (non-positive radius,
    /// empty arc, non-positive arc length, too few samples, ...).
    InvalidParameter(String),
    /// A ball radius so large that the endpoint neighbourhoods on the circle
    /// would overlap; no tube represents such a ball.
    BallTooLarge { radius: f64, limit: f64 },
    /// An operation that requires equal-length arcs was called on a tube
    /// whose arcs differ.
    UnequalArcs { len1: f64, len2: f64 },
    /// The tube geometry is outside the regime where the requested closed
    /// form is valid (e.g. the arcs do not fit in one half-circle).
    UnsupportedGeometry(&'static str),
    /// A log-log fit over constant (or non-positive) covering counts.
    DegenerateFit,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateChord => write!(f, "degenerate chord: endpoints coincide"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::BallTooLarge { radius, limit } => write!(
                f,
                "ball radius {radius} too large: endpoint arcs overlap (limit {limit})"
            ),
            Error::UnequalArcs { len1, len2 } => write!(
                f,
                "precondition violated: arcs have unequal lengths {len1} and {len2}"
            ),
            Error::UnsupportedGeometry(msg) => write!(f, "unsupported geometry: {msg}"),
            Error::DegenerateFit => write!(f, "degenerate fit: covering counts carry no slope"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
