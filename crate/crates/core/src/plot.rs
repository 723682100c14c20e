//! Standalone SVG figures: balls/tubes on the circle, sampled chords, and
//! covering-bound convergence. Dependency-free string assembly; the same
//! figures back the CLI `plot` command and the browser demo.

use std::f64::consts::PI;
use std::fmt::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::angle::Arc;
use crate::chord::{Chord, Circle, Point2};
use crate::error::Result;
use crate::measure::MeasureReport;
use crate::prob::{sample_chord, SamplerKind};
use crate::tube::{Ball, Tube};

/// Figures are drawn in a fixed coordinate box; the circle is scaled to fit.
const VIEW: f64 = 240.0;

struct Canvas {
    body: String,
    scale: f64,
}

impl Canvas {
    fn new(circle: &Circle) -> Canvas {
        Canvas {
            body: String::new(),
            scale: 0.42 * VIEW / circle.radius(),
        }
    }

    // SVG y grows downward; geometry y grows upward.
    fn map(&self, p: Point2) -> (f64, f64) {
        (VIEW / 2.0 + self.scale * p.x, VIEW / 2.0 - self.scale * p.y)
    }

    fn circle_outline(&mut self, circle: &Circle) {
        let r = self.scale * circle.radius();
        let _ = write!(
            self.body,
            r##"<circle cx="{:.2}" cy="{:.2}" r="{r:.2}" fill="none" stroke="#444" stroke-width="1.2"/>"##,
            VIEW / 2.0,
            VIEW / 2.0
        );
    }

    fn line(&mut self, a: Point2, b: Point2, stroke: &str, width: f64, extra: &str) {
        let (x1, y1) = self.map(a);
        let (x2, y2) = self.map(b);
        let _ = write!(
            self.body,
            r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="{width}"{extra}/>"##
        );
    }

    fn chord(&mut self, c: &Chord, circle: &Circle, stroke: &str, width: f64) {
        let (a, b) = c.endpoints(circle);
        self.line(a, b, stroke, width, "");
    }

    fn faint_chord(&mut self, c: &Chord, circle: &Circle, stroke: &str, width: f64, opacity: f64) {
        let (a, b) = c.endpoints(circle);
        let extra = format!(r##" stroke-opacity="{opacity}""##);
        self.line(a, b, stroke, width, &extra);
    }

    fn arc(&mut self, arc: &Arc, circle: &Circle, stroke: &str, width: f64) {
        let (x1, y1) = self.map(circle.point_at(arc.start()));
        let (x2, y2) = self.map(circle.point_at(arc.end()));
        let r = self.scale * circle.radius();
        let large = if arc.width() > PI { 1 } else { 0 };
        // counterclockwise in geometry = sweep 0 in the flipped frame
        let _ = write!(
            self.body,
            r##"<path d="M {x1:.2} {y1:.2} A {r:.2} {r:.2} 0 {large} 0 {x2:.2} {y2:.2}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"##
        );
    }

    fn dot(&mut self, p: Point2, fill: &str) {
        let (x, y) = self.map(p);
        let _ = write!(
            self.body,
            r##"<circle cx="{x:.2}" cy="{y:.2}" r="2.4" fill="{fill}"/>"##
        );
    }

    fn finish(self) -> String {
        format!(
            concat!(
                r##"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {v} {v}" "##,
                r##"width="{v}" height="{v}">{body}</svg>"##
            ),
            v = VIEW,
            body = self.body
        )
    }
}

/// A ball drawn as its tube: centre chord, the two endpoint arcs, the four
/// arc-end markers and the two extreme boundary chords.
pub fn ball_figure(ball: &Ball, circle: &Circle) -> Result<String> {
    let tube = ball.to_tube(circle)?;
    let mut canvas = Canvas::new(circle);
    canvas.circle_outline(circle);

    // boundary chords join opposite arc ends
    let outer = Chord::from_angles(tube.arc1().start(), tube.arc2().end())?;
    let inner = Chord::from_angles(tube.arc1().end(), tube.arc2().start())?;
    canvas.chord(&outer, circle, "#999", 1.0);
    canvas.chord(&inner, circle, "#999", 1.0);
    canvas.chord(&ball.center, circle, "#d62728", 1.6);
    canvas.arc(tube.arc1(), circle, "#1f77b4", 3.0);
    canvas.arc(tube.arc2(), circle, "#1f77b4", 3.0);
    for angle in [
        tube.arc1().start(),
        tube.arc1().end(),
        tube.arc2().start(),
        tube.arc2().end(),
    ] {
        canvas.dot(circle.point_at(angle), "#1f77b4");
    }
    Ok(canvas.finish())
}

/// A tube: its arcs, bounding chords, and a sheaf of member chords.
pub fn tube_figure(tube: &Tube, circle: &Circle) -> Result<String> {
    let mut canvas = Canvas::new(circle);
    canvas.circle_outline(circle);
    let steps = 6;
    for i in 0..=steps {
        let t = i as f64 / steps as f64;
        let a = tube.arc1().start().radians() + t * tube.arc1().width();
        let b = tube.arc2().start().radians() + t * tube.arc2().width();
        if let Ok(member) = Chord::new(a, b) {
            canvas.faint_chord(&member, circle, "#1f77b4", 0.8, 0.3);
        }
    }
    let outer = Chord::from_angles(tube.arc1().start(), tube.arc2().end())?;
    let inner = Chord::from_angles(tube.arc1().end(), tube.arc2().start())?;
    canvas.chord(&outer, circle, "#555", 1.4);
    canvas.chord(&inner, circle, "#555", 1.4);
    canvas.arc(tube.arc1(), circle, "#1f77b4", 3.0);
    canvas.arc(tube.arc2(), circle, "#1f77b4", 3.0);
    Ok(canvas.finish())
}

/// Two chords and the segment realizing their Hausdorff distance.
pub fn pair_figure(c1: &Chord, c2: &Chord, circle: &Circle) -> String {
    use crate::metric::point_segment_distance;
    let mut canvas = Canvas::new(circle);
    canvas.circle_outline(circle);
    canvas.chord(c1, circle, "#1f77b4", 1.6);
    canvas.chord(c2, circle, "#d62728", 1.6);

    // farthest endpoint and its nearest point on the other chord
    let (p1, q1) = c1.endpoints(circle);
    let (p2, q2) = c2.endpoints(circle);
    let candidates = [
        (p1, (p2, q2)),
        (q1, (p2, q2)),
        (p2, (p1, q1)),
        (q2, (p1, q1)),
    ];
    let (from, (s0, s1)) = candidates
        .into_iter()
        .max_by(|a, b| {
            let da = point_segment_distance(a.0, a.1 .0, a.1 .1);
            let db = point_segment_distance(b.0, b.1 .0, b.1 .1);
            da.partial_cmp(&db).expect("finite distances")
        })
        .expect("nonempty");
    let dx = s1.x - s0.x;
    let dy = s1.y - s0.y;
    let len2 = dx * dx + dy * dy;
    let t = (((from.x - s0.x) * dx + (from.y - s0.y) * dy) / len2).clamp(0.0, 1.0);
    let foot = Point2::new(s0.x + t * dx, s0.y + t * dy);
    canvas.line(from, foot, "#555", 1.0, r##" stroke-dasharray="4,3""##);
    canvas.dot(from, "#555");
    canvas.dot(foot, "#555");
    canvas.finish()
}

/// Sampled chords, long (Bertrand) chords highlighted, with the inscribed
/// equilateral triangle for reference.
pub fn samples_figure(kind: SamplerKind, n: u64, seed: u64, circle: &Circle) -> String {
    let mut canvas = Canvas::new(circle);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(0);
    let mut bertrand = 0u64;
    for _ in 0..n {
        let c = sample_chord(kind, &mut rng);
        if c.is_bertrand() {
            bertrand += 1;
            canvas.faint_chord(&c, circle, "#d62728", 0.7, 0.35);
        } else {
            canvas.faint_chord(&c, circle, "#999999", 0.5, 0.2);
        }
    }
    for k in 0..3 {
        let a = Chord::new(
            2.0 * PI * k as f64 / 3.0,
            2.0 * PI * (k + 1) as f64 / 3.0,
        )
        .expect("triangle side");
        canvas.chord(&a, circle, "#2ca02c", 1.2);
    }
    canvas.circle_outline(circle);
    let _ = write!(
        canvas.body,
        r##"<text x="6" y="14" font-size="10" fill="#333">{kind}: {bertrand}/{n} long</text>"##
    );
    canvas.finish()
}

/// Covering bounds against log10(1/ε), with the exact value as a dashed
/// reference line.
pub fn convergence_figure(report: &MeasureReport) -> String {
    let w = 360.0;
    let h = 240.0;
    let (ml, mr, mt, mb) = (46.0, 12.0, 12.0, 30.0);
    let xs: Vec<f64> = report
        .estimates
        .iter()
        .map(|e| (1.0 / e.epsilon).log10())
        .collect();
    let mut lo = report.exact_value;
    let mut hi = report.exact_value;
    for e in &report.estimates {
        lo = lo.min(e.lower_bound);
        hi = hi.max(e.upper_bound);
    }
    let pad = 0.08 * (hi - lo).max(1e-12);
    let (lo, hi) = (lo - pad, hi + pad);
    let (x0, x1) = (
        xs.first().copied().unwrap_or(0.0),
        xs.last().copied().unwrap_or(1.0),
    );
    let sx = |x: f64| ml + (x - x0) / (x1 - x0).max(1e-12) * (w - ml - mr);
    let sy = |y: f64| h - mb - (y - lo) / (hi - lo) * (h - mt - mb);

    let polyline = |values: Vec<(f64, f64)>, stroke: &str, dash: &str| {
        let pts: Vec<String> = values
            .iter()
            .map(|(x, y)| format!("{:.2},{:.2}", sx(*x), sy(*y)))
            .collect();
        format!(
            r##"<polyline points="{}" fill="none" stroke="{stroke}" stroke-width="1.5"{dash}/>"##,
            pts.join(" ")
        )
    };

    let upper: Vec<(f64, f64)> = xs
        .iter()
        .zip(&report.estimates)
        .map(|(&x, e)| (x, e.upper_bound))
        .collect();
    let lower: Vec<(f64, f64)> = xs
        .iter()
        .zip(&report.estimates)
        .map(|(&x, e)| (x, e.lower_bound))
        .collect();

    let mut body = String::new();
    let _ = write!(
        body,
        r##"<line x1="{ml}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#333" stroke-width="1"/>"##,
        h - mb,
        w - mr,
        h - mb
    );
    let _ = write!(
        body,
        r##"<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{:.2}" stroke="#333" stroke-width="1"/>"##,
        h - mb
    );
    let ye = sy(report.exact_value);
    let _ = write!(
        body,
        r##"<line x1="{ml}" y1="{ye:.2}" x2="{:.2}" y2="{ye:.2}" stroke="#2ca02c" stroke-width="1" stroke-dasharray="5,4"/>"##,
        w - mr
    );
    body.push_str(&polyline(upper, "#d62728", ""));
    body.push_str(&polyline(lower, "#1f77b4", ""));
    let _ = write!(
        body,
        concat!(
            r##"<text x="{}" y="{}" font-size="10" fill="#333" text-anchor="middle">log10(1/eps)</text>"##,
            r##"<text x="10" y="{}" font-size="10" fill="#333">bound</text>"##,
            r##"<text x="{}" y="{}" font-size="10" fill="#2ca02c">exact {:.6}</text>"##
        ),
        (ml + w - mr) / 2.0,
        h - 8.0,
        mt + 10.0,
        ml + 6.0,
        ye - 4.0,
        report.exact_value
    );
    format!(
        r##"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">{body}</svg>"##
    )
}
