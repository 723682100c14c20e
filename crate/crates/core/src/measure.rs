//! Hausdorff outer measure on chord space: covering bounds, exact values,
//! and a box-counting dimension estimator.
//!
//! All coverings here are grid coverings by tubes, the families used to pin
//! the measures down from both sides. In the dimension-2 case the value of
//! a set is squeezed between
//!
//! * the finite-cover sum `n² (2R sin(γ/2Rn))^s` over an n×n tube grid, and
//! * the square-packing bound `(1 − ε²/12R²) γ²`,
//!
//! which share the limit `γ²` for a tube on arcs of length γ. The other
//! closed forms (arc rectangles γ₁γ₂, same-arc sets γ²/2, the full space
//! 2π²R², the long-chord set 2π²R²/3) follow from additivity of the measure
//! over grid decompositions.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::angle::Arc;
use crate::chord::{Chord, Circle};
use crate::error::{Error, Result};
use crate::tube::Tube;

/// Comparisons against the Bertrand threshold 2π/3 on grid corners sit on
/// exact ties for n divisible by 3; the guard keeps float noise from
/// flipping them. Grid steps are never smaller than ~1e-4 rad here, so the
/// guard is orders of magnitude below any genuine margin.
const ANGLE_GUARD: f64 = 1e-9;

/// Identifies one of the chord sets with a closed-form measure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChordSet {
    /// Chords with one endpoint on each of two disjoint arcs of equal
    /// length `gamma` (and not containing a diameter). Measure γ².
    Tube { gamma: f64 },
    /// One endpoint on an arc of length `gamma1`, the other on a disjoint
    /// arc of length `gamma2`. Measure γ₁γ₂.
    ArcRectangle { gamma1: f64, gamma2: f64 },
    /// Both endpoints on one arc of length `gamma`. Measure γ²/2.
    SameArc { gamma: f64 },
    /// Every chord of the circle. Measure 2π²R².
    FullSpace,
    /// Chords strictly longer than √3·R. Measure 2π²R²/3.
    BertrandSet,
}

impl ChordSet {
    /// Parse the CLI spelling: `tube:γ`, `rect:γ1,γ2`, `samearc:γ`,
    /// `full`, `bertrand`.
    pub fn parse(spec: &str) -> Result<ChordSet> {
        let bad = |s: &str| Error::InvalidParameter(format!("unrecognized set spec '{s}'"));
        match spec {
            "full" => return Ok(ChordSet::FullSpace),
            "bertrand" => return Ok(ChordSet::BertrandSet),
            _ => {}
        }
        let (name, args) = spec.split_once(':').ok_or_else(|| bad(spec))?;
        let nums: Vec<f64> = args
            .split(',')
            .map(|x| x.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad(spec))?;
        match (name, nums.as_slice()) {
            ("tube", [g]) => Ok(ChordSet::Tube { gamma: *g }),
            ("rect", [g1, g2]) => Ok(ChordSet::ArcRectangle {
                gamma1: *g1,
                gamma2: *g2,
            }),
            ("samearc", [g]) => Ok(ChordSet::SameArc { gamma: *g }),
            _ => Err(bad(spec)),
        }
    }
}

impl std::fmt::Display for ChordSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChordSet::Tube { gamma } => write!(f, "tube:{gamma}"),
            ChordSet::ArcRectangle { gamma1, gamma2 } => write!(f, "rect:{gamma1},{gamma2}"),
            ChordSet::SameArc { gamma } => write!(f, "samearc:{gamma}"),
            ChordSet::FullSpace => write!(f, "full"),
            ChordSet::BertrandSet => write!(f, "bertrand"),
        }
    }
}

/// One rung of a covering ladder: bounds on the s-dimensional premeasure at
/// mesh `epsilon`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CoveringEstimate {
    /// Mesh: covering pieces have diameter at most this.
    pub epsilon: f64,
    /// Measure exponent (2 except in the vanishing/divergence checks).
    pub s: f64,
    /// Per-arc subdivision count of the grid behind the bounds.
    pub n_subdivisions: u64,
    pub upper_bound: f64,
    pub lower_bound: f64,
}

/// Exact value plus the covering ladder that converges to it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasureReport {
    pub set: ChordSet,
    pub exact_value: f64,
    /// Ordered by decreasing epsilon.
    pub estimates: Vec<CoveringEstimate>,
    /// Relative tolerance used for the convergence verdict.
    pub tolerance: f64,
    /// Whether the last upper bound is within `tolerance` of the exact
    /// value, relatively.
    pub converged: bool,
}

/// Box-counting fit: slope of log(count) against log(1/ε).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DimensionEstimate {
    pub s_estimate: f64,
    pub epsilons: Vec<f64>,
    pub counts: Vec<u64>,
    /// RMS residual of the log-log least-squares fit.
    pub fit_residual: f64,
}

/// Inner approximation of the Bertrand set by grid tubes.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BertrandCover {
    pub tube_count: u64,
    pub measure: f64,
}

fn require_positive(value: f64, what: &str) -> Result<()> {
    if !(value.is_finite() && value > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "{what} must be positive and finite, got {value}"
        )));
    }
    Ok(())
}

/// Finite-cover sum for a tube on arcs of length `gamma`, cut into an n×n
/// grid of subtubes: `n² (2R sin(γ/2Rn))^s`.
///
/// For s = 2 this decreases the premeasure bound toward γ² as n grows; for
/// s > 2 it vanishes and for s < 2 it diverges.
pub fn covering_upper_bound(gamma: f64, n: u64, s: f64, circle: &Circle) -> Result<f64> {
    require_positive(gamma, "arc length")?;
    require_positive(s, "exponent")?;
    if n == 0 {
        return Err(Error::InvalidParameter("subdivision count must be >= 1".into()));
    }
    let r = circle.radius();
    let n_f = n as f64;
    let piece = 2.0 * r * (gamma / (2.0 * r * n_f)).sin();
    Ok(n_f * n_f * piece.powf(s))
}

/// `1 − ε²/12R²`, the loss factor between a square packing in arc-length
/// coordinates and the corresponding tube-diameter sum at mesh ε.
#[inline]
fn packing_factor(epsilon: f64, r: f64) -> f64 {
    1.0 - epsilon * epsilon / (12.0 * r * r)
}

/// Square-packing lower bound `(1 − ε²/12R²) γ²` on the 2-dimensional
/// premeasure of a tube at mesh ε.
pub fn covering_lower_bound(gamma: f64, epsilon: f64, circle: &Circle) -> Result<f64> {
    require_positive(gamma, "arc length")?;
    require_positive(epsilon, "epsilon")?;
    let r = circle.radius();
    if epsilon >= 2.0 * r * 3f64.sqrt() {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be below 2R*sqrt(3) for the bound to be positive, got {epsilon}"
        )));
    }
    Ok(packing_factor(epsilon, r) * gamma * gamma)
}

/// Exact 2-dimensional Hausdorff measure of the set.
pub fn exact_measure(set: &ChordSet, circle: &Circle) -> Result<f64> {
    let r = circle.radius();
    let circ = circle.circumference();
    match *set {
        ChordSet::Tube { gamma } => {
            require_positive(gamma, "arc length")?;
            // Beyond γ = πR/2 every placement of the two arcs traps a
            // diameter, and the γ² form is not established there.
            if gamma >= PI * r / 2.0 {
                return Err(Error::UnsupportedGeometry(
                    "tube with arcs this long necessarily contains a diameter",
                ));
            }
            Ok(gamma * gamma)
        }
        ChordSet::ArcRectangle { gamma1, gamma2 } => {
            require_positive(gamma1, "arc length")?;
            require_positive(gamma2, "arc length")?;
            if gamma1 + gamma2 >= circ {
                return Err(Error::InvalidParameter(
                    "arcs of these lengths cannot be disjoint".into(),
                ));
            }
            Ok(gamma1 * gamma2)
        }
        ChordSet::SameArc { gamma } => {
            require_positive(gamma, "arc length")?;
            if gamma > circ {
                return Err(Error::InvalidParameter(
                    "arc longer than the circle".into(),
                ));
            }
            Ok(gamma * gamma / 2.0)
        }
        ChordSet::FullSpace => Ok(2.0 * PI * PI * r * r),
        ChordSet::BertrandSet => Ok(2.0 * PI * PI * r * r / 3.0),
    }
}

/// Partial sum of the dyadic series for the same-arc set: m levels of
/// degenerate tubes, `Σ_{k=1..m} 2^{k−1} γ²/4^k`, increasing to γ²/2.
pub fn same_arc_partial_sum(gamma: f64, m: u32) -> Result<f64> {
    require_positive(gamma, "arc length")?;
    if m == 0 {
        return Err(Error::InvalidParameter("need at least one level".into()));
    }
    let g2 = gamma * gamma;
    let mut sum = 0.0;
    let mut term = g2 / 4.0; // 2^{k-1}/4^k = (1/2)·2^{-k}
    for _ in 0..m {
        sum += term;
        term /= 2.0;
    }
    Ok(sum)
}

/// Direct arc-pair enumeration of the inner tube approximation of the
/// Bertrand set.
///
/// The circle is split into `n` equal arcs and an unordered pair of arcs is
/// counted when *every* chord with one endpoint on each arc is strictly
/// longer than √3·R, i.e. when both extreme corner chords of the
/// pair subtend strictly more than 2π/3. The enumerated count satisfies
/// `n·(n − 3 − 2⌊n/3⌋)/2` (clamped at zero), and the measure
/// `count·(2πR/n)²` increases to 2π²R²/3.
pub fn bertrand_inner_cover(n: u64, circle: &Circle) -> Result<BertrandCover> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!(
            "need at least 6 arcs, got {n}"
        )));
    }
    let step = TAU / n as f64;
    let threshold = TAU / 3.0 + ANGLE_GUARD;
    let mut count = 0u64;
    for delta in 1..n {
        // Central angles of the two extreme corner chords of a pair of arcs
        // at index distance delta.
        let near = (delta - 1) as f64 * step;
        let far = (delta + 1) as f64 * step;
        let c_near = near.min(TAU - near);
        let c_far = far.min(TAU - far);
        if c_near.min(c_far) > threshold {
            // n ordered pairs at this distance; each unordered pair appears
            // at distance delta and n - delta.
            count += n;
        }
    }
    count /= 2;
    let piece = step * circle.radius();
    Ok(BertrandCover {
        tube_count: count,
        measure: count as f64 * piece * piece,
    })
}

/// Outer grid cover of the Bertrand set: unordered arc pairs whose tube
/// contains at least one chord strictly longer than √3·R. The companion
/// upper bound to [`bertrand_inner_cover`].
pub fn bertrand_outer_cover(n: u64, circle: &Circle) -> Result<BertrandCover> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!(
            "need at least 6 arcs, got {n}"
        )));
    }
    let step = TAU / n as f64;
    let threshold = TAU / 3.0 - ANGLE_GUARD;
    let mut count = 0u64;
    for delta in 1..n {
        let near = (delta - 1) as f64 * step;
        let far = (delta + 1) as f64 * step;
        // Widest central angle reachable inside the pair of arcs.
        let reach = if near <= PI && PI <= far {
            PI
        } else {
            near.min(TAU - near).max(far.min(TAU - far))
        };
        if reach > threshold {
            count += n;
        }
    }
    count /= 2;
    let piece = step * circle.radius();
    Ok(BertrandCover {
        tube_count: count,
        measure: count as f64 * piece * piece,
    })
}

/// A tube with arcs of length `gamma` in a standard position: arcs at
/// `[0, γ]` and `[2γ, 3γ]` in arc length, i.e. separated by a gap of one
/// arc length. The round-number placement keeps grid covers tight. Valid
/// while all three spans fit in a half-circle, which also keeps the tube
/// clear of diameters.
pub fn reference_tube(gamma: f64, circle: &Circle, closed: bool) -> Result<Tube> {
    require_positive(gamma, "arc length")?;
    let w = gamma / circle.radius();
    if 3.0 * w > PI {
        return Err(Error::UnsupportedGeometry(
            "reference placement needs 3γ ≤ πR",
        ));
    }
    Tube::new(
        Arc::from_width(0.0, w)?,
        Arc::from_width(2.0 * w, w)?,
        closed,
    )
}

/// Chord membership test, boxed for storage alongside other predicates.
pub type ChordPredicate = Box<dyn Fn(&Chord) -> bool + Sync>;

/// Membership predicate for a [`ChordSet`], using reference placements for
/// the positional sets.
pub fn set_predicate(set: &ChordSet, circle: &Circle) -> Result<ChordPredicate> {
    match *set {
        ChordSet::Tube { gamma } => {
            let tube = reference_tube(gamma, circle, true)?;
            Ok(Box::new(move |c| tube.contains(c)))
        }
        ChordSet::ArcRectangle { gamma1, gamma2 } => {
            require_positive(gamma1, "arc length")?;
            require_positive(gamma2, "arc length")?;
            let r = circle.radius();
            let (w1, w2) = (gamma1 / r, gamma2 / r);
            let gap = 0.5 * (w1 + w2);
            if w1 + gap + w2 + gap >= TAU {
                return Err(Error::InvalidParameter(
                    "arcs of these lengths cannot be placed disjointly".into(),
                ));
            }
            let tube = Tube::new(
                Arc::from_width(0.0, w1)?,
                Arc::from_width(w1 + gap, w2)?,
                true,
            )?;
            Ok(Box::new(move |c| tube.contains(c)))
        }
        ChordSet::SameArc { gamma } => {
            require_positive(gamma, "arc length")?;
            let w = gamma / circle.radius();
            if w >= TAU {
                return Err(Error::InvalidParameter("arc longer than the circle".into()));
            }
            let arc = Arc::from_width(0.0, w)?;
            Ok(Box::new(move |c| {
                arc.contains_closed(c.a()) && arc.contains_closed(c.b())
            }))
        }
        ChordSet::FullSpace => Ok(Box::new(|_| true)),
        ChordSet::BertrandSet => Ok(Box::new(|c| c.is_bertrand())),
    }
}

/// Probe stencil: strictly interior cell fractions, so a cell is counted
/// only when the set meets its interior (boundary-touching neighbours stay
/// out). True intersection is overstated never, missed only below probe
/// resolution (cells the set enters by less than a tenth of the mesh).
const PROBE_FRACTIONS: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

/// Number of cells of the n-arc grid whose interior meets the set.
///
/// Cells are unordered pairs of grid arcs, the diagonal (same-arc) cells
/// included, so the full space at n = 10 occupies 45 + 10 = 55 cells. Each
/// cell is probed on an interior 5×5 stencil (diagonal cells on the 10
/// ordered sub-pairs of the stencil).
pub fn grid_cover_count<F>(predicate: F, n: u64, circle: &Circle) -> u64
where
    F: Fn(&Chord) -> bool,
{
    let _ = circle; // the grid lives in angles; radius cancels
    let step = TAU / n as f64;
    let mut count = 0u64;
    for i in 0..n {
        for j in i..n {
            let hit = if i == j {
                PROBE_FRACTIONS.iter().enumerate().any(|(ai, fa)| {
                    PROBE_FRACTIONS[ai + 1..].iter().any(|fb| {
                        let a = (i as f64 + fa) * step;
                        let b = (i as f64 + fb) * step;
                        Chord::new(a, b).map(|c| predicate(&c)).unwrap_or(false)
                    })
                })
            } else {
                PROBE_FRACTIONS.iter().any(|fa| {
                    PROBE_FRACTIONS.iter().any(|fb| {
                        let a = (i as f64 + fa) * step;
                        let b = (j as f64 + fb) * step;
                        Chord::new(a, b).map(|c| predicate(&c)).unwrap_or(false)
                    })
                })
            };
            if hit {
                count += 1;
            }
        }
    }
    count
}

/// Box-counting count in arc-length coordinates: square boxes of side
/// `epsilon` over the parameter triangle `0 ≤ x < y < 2πR`, counted when
/// their interior stencil meets the set.
pub fn box_cover_count<F>(predicate: F, epsilon: f64, circle: &Circle) -> Result<u64>
where
    F: Fn(&Chord) -> bool,
{
    require_positive(epsilon, "epsilon")?;
    let circ = circle.circumference();
    if epsilon > circ {
        return Err(Error::InvalidParameter("box side exceeds the circumference".into()));
    }
    let boxes = (circ / epsilon).ceil() as u64;
    let r = circle.radius();
    let mut count = 0u64;
    for i in 0..boxes {
        for j in i..boxes {
            let hit = PROBE_FRACTIONS.iter().enumerate().any(|(ai, fa)| {
                let tail: &[f64] = if i == j {
                    &PROBE_FRACTIONS[ai + 1..]
                } else {
                    &PROBE_FRACTIONS
                };
                tail.iter().any(|fb| {
                    let x = (i as f64 + fa) * epsilon;
                    let y = (j as f64 + fb) * epsilon;
                    if x >= circ || y >= circ {
                        return false; // ragged edge of the last box row
                    }
                    Chord::new(x / r, y / r).map(|c| predicate(&c)).unwrap_or(false)
                })
            });
            if hit {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Least-squares box-counting dimension over a ladder of at least four
/// epsilons.
pub fn dimension_estimate<F>(
    predicate: F,
    epsilons: &[f64],
    circle: &Circle,
) -> Result<DimensionEstimate>
where
    F: Fn(&Chord) -> bool,
{
    if epsilons.len() < 4 {
        return Err(Error::InvalidParameter(format!(
            "need at least 4 epsilon values, got {}",
            epsilons.len()
        )));
    }
    let mut eps = epsilons.to_vec();
    for &e in &eps {
        require_positive(e, "epsilon")?;
    }
    eps.sort_by(|a, b| b.partial_cmp(a).unwrap());
    eps.dedup();
    if eps.len() < 4 {
        return Err(Error::InvalidParameter(
            "need at least 4 distinct epsilon values".into(),
        ));
    }

    let counts: Vec<u64> = eps
        .iter()
        .map(|&e| box_cover_count(&predicate, e, circle))
        .collect::<Result<_>>()?;
    if counts.contains(&0) || counts.iter().all(|&c| c == counts[0]) {
        return Err(Error::DegenerateFit);
    }

    let xs: Vec<f64> = eps.iter().map(|&e| (1.0 / e).ln()).collect();
    let ys: Vec<f64> = counts.iter().map(|&c| (c as f64).ln()).collect();
    let m = xs.len() as f64;
    let x_mean = xs.iter().sum::<f64>() / m;
    let y_mean = ys.iter().sum::<f64>() / m;
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - x_mean) * (y - y_mean))
        .sum();
    let sxx: f64 = xs.iter().map(|x| (x - x_mean) * (x - x_mean)).sum();
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let residual = (xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let pred = slope * x + intercept;
            (y - pred) * (y - pred)
        })
        .sum::<f64>()
        / m)
        .sqrt();

    Ok(DimensionEstimate {
        s_estimate: slope,
        epsilons: eps,
        counts,
        fit_residual: residual,
    })
}

/// Default relative tolerance for the convergence verdict in reports.
pub const DEFAULT_REPORT_TOLERANCE: f64 = 1e-2;

/// Build the covering ladder for a set up to `n_max` per-arc subdivisions
/// (geometric ladder, coarse to fine) and compare against the exact value.
pub fn covering_report(
    set: &ChordSet,
    circle: &Circle,
    n_max: u64,
    tolerance: f64,
) -> Result<MeasureReport> {
    require_positive(tolerance, "tolerance")?;
    let exact = exact_measure(set, circle)?;
    let r = circle.radius();

    // Geometric ladder of subdivision counts ending exactly at n_max.
    let ladder = |start: u64| -> Vec<u64> {
        let mut ns = vec![];
        let mut n = n_max.max(start);
        while n > start {
            ns.push(n);
            n /= 2;
        }
        ns.push(start);
        ns.reverse();
        ns
    };

    let mut estimates = Vec::new();
    match *set {
        ChordSet::Tube { gamma } => {
            for n in ladder(1) {
                let eps = gamma / n as f64;
                estimates.push(CoveringEstimate {
                    epsilon: eps,
                    s: 2.0,
                    n_subdivisions: n,
                    upper_bound: covering_upper_bound(gamma, n, 2.0, circle)?,
                    lower_bound: covering_lower_bound(gamma, eps, circle)?,
                });
            }
        }
        ChordSet::ArcRectangle { gamma1, gamma2 } => {
            let gmax = gamma1.max(gamma2);
            for n in ladder(1) {
                let eps = gmax / n as f64;
                let k1 = (gamma1 / eps).ceil() as u64;
                let k2 = (gamma2 / eps).ceil() as u64;
                let piece = 2.0 * r * (eps / (2.0 * r)).sin();
                estimates.push(CoveringEstimate {
                    epsilon: eps,
                    s: 2.0,
                    n_subdivisions: n,
                    upper_bound: (k1 * k2) as f64 * piece * piece,
                    lower_bound: packing_factor(eps, r).max(0.0) * gamma1 * gamma2,
                });
            }
        }
        ChordSet::SameArc { gamma } => {
            let levels = (n_max.max(2) as f64).log2().ceil() as u32;
            for m in 1..=levels {
                let eps = gamma / (1u64 << m) as f64;
                let partial = same_arc_partial_sum(gamma, m)?;
                estimates.push(CoveringEstimate {
                    epsilon: eps,
                    s: 2.0,
                    n_subdivisions: 1 << m,
                    // the 2^m leftover same-arc sets fit in 2^m squares of
                    // side γ/2^m
                    upper_bound: partial + gamma * gamma / (1u64 << m) as f64,
                    lower_bound: partial,
                });
            }
        }
        ChordSet::FullSpace => {
            for n in ladder(1) {
                let eps = circle.circumference() / n as f64;
                let d = 2.0 * r * (PI / n as f64).sin();
                let n_f = n as f64;
                estimates.push(CoveringEstimate {
                    epsilon: eps,
                    s: 2.0,
                    n_subdivisions: n,
                    upper_bound: n_f * (n_f - 1.0) / 2.0 * d * d + n_f * eps * eps / 2.0,
                    // pieces never exceed the diameter 2R of the whole space
                    lower_bound: packing_factor(eps.min(2.0 * r), r) * exact,
                });
            }
        }
        ChordSet::BertrandSet => {
            for n in ladder(6) {
                let eps = circle.circumference() / n as f64;
                estimates.push(CoveringEstimate {
                    epsilon: eps,
                    s: 2.0,
                    n_subdivisions: n,
                    upper_bound: bertrand_outer_cover(n, circle)?.measure,
                    lower_bound: bertrand_inner_cover(n, circle)?.measure,
                });
            }
        }
    }

    let converged = estimates
        .last()
        .map(|e| ((e.upper_bound - exact) / exact).abs() < tolerance)
        .unwrap_or(false);
    Ok(MeasureReport {
        set: *set,
        exact_value: exact,
        estimates,
        tolerance,
        converged,
    })
}

/// CSV export of a covering ladder: one `(ε, n, lower, upper)` row per rung.
pub fn covering_csv(report: &MeasureReport) -> String {
    let mut out = String::from("epsilon,n_subdivisions,lower_bound,upper_bound\n");
    for e in &report.estimates {
        out.push_str(&format!(
            "{},{},{},{}\n",
            e.epsilon, e.n_subdivisions, e.lower_bound, e.upper_bound
        ));
    }
    out
}
