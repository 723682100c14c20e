//! `chordspace`: distances, measures, probabilities, dimension fits,
//! sampling and SVG figures for the chord space of a circle.
//!
//! Every command prints one JSON envelope to stdout:
//! `{"command", "params", "result", "elapsed_ms"}`. Diagnostics go to
//! stderr. Exit codes: 0 success, 2 domain/precondition error, 1 I/O or
//! internal error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use chordspace::plot;
use chordspace::{
    covering_csv, covering_report, dimension_estimate, hausdorff_distance, mc_probability,
    sample_csv, set_predicate, Ball, Chord, ChordSet, Circle, Error, SamplerKind,
};

#[derive(Parser)]
#[command(name = "chordspace", version, about = "Chord-space geometry, measure and probability")]
struct Cli {
    /// Circle radius R.
    #[arg(long, global = true, default_value_t = 1.0)]
    radius: f64,
    /// Worker threads for Monte Carlo blocks (results do not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the primary output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hausdorff distance between two chords given as angle pairs.
    Dist {
        /// First chord, e.g. 1.0472,2.0944
        #[arg(long, value_parser = parse_pair)]
        c1: (f64, f64),
        /// Second chord.
        #[arg(long, value_parser = parse_pair)]
        c2: (f64, f64),
    },
    /// Exact measure of a chord set, or its covering-bound ladder.
    Measure {
        /// tube:γ | rect:γ1,γ2 | samearc:γ | full | bertrand
        #[arg(long)]
        set: String,
        #[arg(long, value_parser = ["exact", "cover"], default_value = "exact")]
        method: String,
        /// Finest per-arc subdivision of the cover ladder.
        #[arg(long, default_value_t = 256)]
        n: u64,
        /// Relative tolerance for the convergence verdict.
        #[arg(long, default_value_t = 1e-2)]
        tol: f64,
        /// json | csv (csv prints the (ε, n, lower, upper) ladder)
        #[arg(long, value_parser = ["json", "csv"], default_value = "json")]
        format: String,
    },
    /// Monte Carlo estimate of the long-chord probability.
    Bertrand {
        /// h2 | endpoints | radius | midpoint
        #[arg(long)]
        kind: String,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Box-counting dimension of a chord set.
    Dimension {
        /// tube:γ | rect:γ1,γ2 | samearc:γ | full | bertrand
        #[arg(long)]
        set: String,
        /// Comma-separated ladder, e.g. 0.2,0.1,0.05,0.025 (at least 4).
        #[arg(long, value_delimiter = ',', required = true)]
        eps: Vec<f64>,
    },
    /// Draw chords and print them (json or the a,b,length,is_bertrand csv).
    Sample {
        /// h2 | endpoints | radius | midpoint
        #[arg(long)]
        kind: String,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = ["json", "csv"], default_value = "json")]
        format: String,
    },
    /// Render an SVG figure.
    Plot {
        /// ball | tube | samples | convergence
        #[arg(long, value_parser = ["ball", "tube", "samples", "convergence"])]
        what: String,
        /// Ball centre as an angle pair (what=ball).
        #[arg(long, value_parser = parse_pair)]
        center: Option<(f64, f64)>,
        /// Ball radius (what=ball).
        #[arg(long)]
        eps: Option<f64>,
        /// First tube arc as start,end angles (what=tube).
        #[arg(long, value_parser = parse_pair)]
        arc1: Option<(f64, f64)>,
        /// Second tube arc (what=tube).
        #[arg(long, value_parser = parse_pair)]
        arc2: Option<(f64, f64)>,
        /// Sampler kind (what=samples).
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, default_value_t = 500)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Set spec for the convergence ladder (what=convergence).
        #[arg(long)]
        set: Option<String>,
        /// Finest subdivision for the convergence ladder.
        #[arg(long, default_value_t = 256)]
        n: u64,
    },
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected two comma-separated numbers, got '{s}'"));
    }
    let a = parts[0].trim().parse().map_err(|e| format!("{e}"))?;
    let b = parts[1].trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}

/// Errors that decide the exit code.
enum CmdError {
    /// Bad input or violated precondition → exit 2.
    Domain(String),
    /// I/O or similar → exit 1.
    Internal(String),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Internal(e.to_string())
    }
}

type CmdResult<T> = Result<T, CmdError>;

struct Output {
    /// JSON payload for the envelope.
    result: Value,
    /// Raw body (csv or svg) that replaces JSON output when set.
    raw: Option<String>,
}

impl Output {
    fn json(result: Value) -> Output {
        Output { result, raw: None }
    }
}

fn run(cli: &Cli) -> CmdResult<(String, Map<String, Value>, Output)> {
    let circle = Circle::new(cli.radius)?;
    let mut params = Map::new();
    params.insert("radius".into(), json!(cli.radius));

    match &cli.command {
        Command::Dist { c1, c2 } => {
            params.insert("c1".into(), json!([c1.0, c1.1]));
            params.insert("c2".into(), json!([c2.0, c2.1]));
            let chord1 = Chord::new(c1.0, c1.1)?;
            let chord2 = Chord::new(c2.0, c2.1)?;
            let d = hausdorff_distance(&chord1, &chord2, &circle);
            Ok(("dist".into(), params, Output::json(json!({ "distance": d }))))
        }
        Command::Measure {
            set,
            method,
            n,
            tol,
            format,
        } => {
            params.insert("set".into(), json!(set));
            params.insert("method".into(), json!(method));
            let set = ChordSet::parse(set)?;
            if method == "exact" {
                let value = chordspace::exact_measure(&set, &circle)?;
                Ok((
                    "measure".into(),
                    params,
                    Output::json(json!({ "set": set, "exact_value": value })),
                ))
            } else {
                params.insert("n".into(), json!(n));
                params.insert("tol".into(), json!(tol));
                let report = covering_report(&set, &circle, *n, *tol)?;
                let out = if format == "csv" {
                    Output {
                        result: json!({ "rows": report.estimates.len() }),
                        raw: Some(covering_csv(&report)),
                    }
                } else {
                    Output::json(serde_json::to_value(&report).expect("report serializes"))
                };
                Ok(("measure".into(), params, out))
            }
        }
        Command::Bertrand {
            kind,
            samples,
            seed,
        } => {
            params.insert("kind".into(), json!(kind));
            params.insert("samples".into(), json!(samples));
            params.insert("seed".into(), json!(seed));
            let kind: SamplerKind = kind.parse()?;
            let batch = mc_probability(kind, |c| c.is_bertrand(), *samples, *seed)?;
            Ok((
                "bertrand".into(),
                params,
                Output::json(serde_json::to_value(&batch).expect("batch serializes")),
            ))
        }
        Command::Dimension { set, eps } => {
            params.insert("set".into(), json!(set));
            params.insert("eps".into(), json!(eps));
            let set = ChordSet::parse(set)?;
            let pred = set_predicate(&set, &circle)?;
            let est = dimension_estimate(|c| pred(c), eps, &circle)?;
            Ok((
                "dimension".into(),
                params,
                Output::json(serde_json::to_value(&est).expect("estimate serializes")),
            ))
        }
        Command::Sample {
            kind,
            samples,
            seed,
            format,
        } => {
            params.insert("kind".into(), json!(kind));
            params.insert("samples".into(), json!(samples));
            params.insert("seed".into(), json!(seed));
            let kind: SamplerKind = kind.parse()?;
            let csv = sample_csv(kind, *samples, *seed, &circle);
            if format == "csv" {
                Ok((
                    "sample".into(),
                    params,
                    Output {
                        result: json!({ "rows": samples }),
                        raw: Some(csv),
                    },
                ))
            } else {
                let rows: Vec<Value> = csv
                    .lines()
                    .skip(1)
                    .map(|line| {
                        let f: Vec<&str> = line.split(',').collect();
                        json!({
                            "a": f[0].parse::<f64>().unwrap(),
                            "b": f[1].parse::<f64>().unwrap(),
                            "length": f[2].parse::<f64>().unwrap(),
                            "is_bertrand": f[3] == "true",
                        })
                    })
                    .collect();
                Ok(("sample".into(), params, Output::json(json!({ "chords": rows }))))
            }
        }
        Command::Plot {
            what,
            center,
            eps,
            arc1,
            arc2,
            kind,
            samples,
            seed,
            set,
            n,
        } => {
            params.insert("what".into(), json!(what));
            let missing =
                |flag: &str| CmdError::Domain(format!("plot --what {what} requires --{flag}"));
            let svg = match what.as_str() {
                "ball" => {
                    let (a, b) = center.ok_or_else(|| missing("center"))?;
                    let eps = eps.ok_or_else(|| missing("eps"))?;
                    params.insert("center".into(), json!([a, b]));
                    params.insert("eps".into(), json!(eps));
                    let ball = Ball::new(Chord::new(a, b)?, eps, true)?;
                    plot::ball_figure(&ball, &circle)?
                }
                "tube" => {
                    let (s1, e1) = arc1.ok_or_else(|| missing("arc1"))?;
                    let (s2, e2) = arc2.ok_or_else(|| missing("arc2"))?;
                    params.insert("arc1".into(), json!([s1, e1]));
                    params.insert("arc2".into(), json!([s2, e2]));
                    let tube = chordspace::Tube::new(
                        chordspace::Arc::new(s1, e1)?,
                        chordspace::Arc::new(s2, e2)?,
                        true,
                    )?;
                    plot::tube_figure(&tube, &circle)?
                }
                "samples" => {
                    let kind: SamplerKind =
                        kind.as_deref().ok_or_else(|| missing("kind"))?.parse()?;
                    params.insert("kind".into(), json!(kind));
                    params.insert("samples".into(), json!(samples));
                    params.insert("seed".into(), json!(seed));
                    plot::samples_figure(kind, *samples, *seed, &circle)
                }
                "convergence" => {
                    let spec = set.as_deref().ok_or_else(|| missing("set"))?;
                    params.insert("set".into(), json!(spec));
                    params.insert("n".into(), json!(n));
                    let set = ChordSet::parse(spec)?;
                    let report = covering_report(&set, &circle, *n, 1e-2)?;
                    plot::convergence_figure(&report)
                }
                _ => unreachable!("clap validates --what"),
            };
            Ok((
                "plot".into(),
                params,
                Output {
                    result: json!({ "bytes": svg.len() }),
                    raw: Some(svg),
                },
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Some(jobs) = cli.jobs {
        // Block-to-stream assignment is fixed, so thread count cannot
        // change any result; this only sizes the pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }

    let started = Instant::now();
    match run(&cli) {
        Ok((command, params, output)) => {
            let envelope = json!({
                "command": command,
                "params": params,
                "result": output.result,
                "elapsed_ms": started.elapsed().as_millis() as u64,
            });
            if let Some(raw) = output.raw {
                match &cli.out {
                    Some(path) => {
                        if let Err(e) = std::fs::write(path, &raw) {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return ExitCode::from(1);
                        }
                        println!("{envelope}");
                    }
                    None => print!("{raw}"),
                }
            } else {
                match &cli.out {
                    Some(path) => {
                        if let Err(e) = std::fs::write(path, format!("{envelope}\n")) {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return ExitCode::from(1);
                        }
                    }
                    None => println!("{envelope}"),
                }
            }
            ExitCode::SUCCESS
        }
        Err(CmdError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CmdError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
