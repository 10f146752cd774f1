use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use respace::geometry::{respace as respace_once, respace_with_spacing, PolygonalCurve};
use respace::io::{
    format_stats_table, parse_csv, render_svg, trace_rows, write_csv, write_rows_csv, write_trace_csv,
    CurveDocument, IoError, RenderOptions, Style,
};
use respace::iteration::{fixed_schedule, iterate as iterate_curve, IterationConfig, StopReason};
use respace::oracle::{generate as generate_curve, GeneratorKind, GeneratorSpec};

use super::{GenerateArgs, IterateArgs, Kind, RenderArgs, RespaceArgs, StatsArgs};

/// Rows reported by `stats` unless `--all` is given.
const STATS_SCHEDULE: [usize; 7] = [0, 1, 2, 3, 5, 10, 15];

#[derive(Debug)]
pub enum CliError {
    Io { path: PathBuf, source: std::io::Error },
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Invalid(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Invalid(msg) => f.write_str(msg),
        }
    }
}

fn invalid(e: impl fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn read_curve(path: &Path) -> Result<PolygonalCurve, CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let text = String::from_utf8(bytes).map_err(|_| invalid(format!("{}: not UTF-8 text", path.display())))?;
    parse_csv(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn respace(args: RespaceArgs) -> Result<(), CliError> {
    let curve = read_curve(&args.input)?;
    let mut out = curve.clone();
    for _ in 0..args.iterations {
        out = match args.delta {
            Some(delta) => respace_with_spacing(&out, delta).map_err(invalid)?,
            None => respace_once(&out),
        };
    }
    write_file(&args.output, &write_csv(&out))?;
    println!("length before: {}", curve.length());
    println!("length after: {}", out.length());
    Ok(())
}

pub fn iterate(args: IterateArgs) -> Result<(), CliError> {
    let cfg = IterationConfig {
        max_iters: args.max_iters as usize,
        tol_displacement: args.tol_displacement,
        tol_sigma: args.tol_sigma,
        record_curves: false,
    };
    cfg.validate().map_err(|_| invalid("tolerances must be non-negative numbers"))?;
    let curve = read_curve(&args.input)?;
    let (out, trace) = iterate_curve(&curve, &cfg).map_err(invalid)?;
    write_file(&args.output, &write_csv(&out))?;
    if let Some(path) = &args.trace {
        write_file(path, &write_trace_csv(&trace))?;
    }
    println!("stop reason: {}", trace.stop_reason);
    println!("iterations: {}", trace.iterations());
    println!("length: {}", out.length());
    if trace.stop_reason == StopReason::MaxIters {
        eprintln!(
            "warning: stopped after {} iterations without meeting the tolerance",
            trace.iterations()
        );
    }
    Ok(())
}

fn report_row(n: usize, last: usize, all: bool) -> bool {
    all || n == last || STATS_SCHEDULE.contains(&n) || (n > 15 && n.is_multiple_of(5))
}

pub fn stats(args: StatsArgs) -> Result<(), CliError> {
    let curve = read_curve(&args.input)?;
    let rows: Vec<_> = trace_rows(&fixed_schedule(&curve, args.iterations))
        .into_iter()
        .filter(|r| report_row(r.n, args.iterations, args.all))
        .collect();
    if let Some(path) = &args.csv {
        write_file(path, &write_rows_csv(&rows))?;
    }
    print!("{}", format_stats_table(&rows));
    Ok(())
}

pub fn render(args: RenderArgs) -> Result<(), CliError> {
    if !(args.width > 0.0 && args.width.is_finite()) {
        return Err(invalid("--width must be positive"));
    }
    if let Some(r) = args.vertex_radius {
        if !(r >= 0.0 && r.is_finite()) {
            return Err(invalid("--vertex-radius must be non-negative"));
        }
    }
    let mut layers = Vec::new();
    for (i, path) in args.inputs.iter().enumerate() {
        let curve = read_curve(path)?;
        let mut style = Style::palette(i);
        if let Some(color) = args.strokes.get(i) {
            style = Style::colored(color);
        }
        if args.with_respaced {
            let mut after = Style::palette(i + args.inputs.len());
            after.dashed = true;
            let respaced = respace_once(&curve);
            layers.push((curve, style));
            layers.push((respaced, after));
        } else {
            layers.push((curve, style));
        }
    }
    let options = RenderOptions {
        width_px: args.width,
        vertex_radius: args.vertex_radius,
        projection: args.project,
        ..Default::default()
    };
    let svg = render_svg(&layers, &options).map_err(|e| match e {
        IoError::Io(source) => CliError::Io {
            path: args.output.clone(),
            source,
        },
        other => invalid(other),
    })?;
    write_file(&args.output, &svg)
}

fn required<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, CliError> {
    value.ok_or_else(|| invalid(format!("--{flag} is required for --kind {kind}")))
}

fn generator_kind(args: &GenerateArgs) -> Result<(GeneratorKind, &'static str), CliError> {
    Ok(match args.kind {
        Kind::Collinear => (
            GeneratorKind::Collinear {
                steps: required(args.n, "n", "collinear")?,
            },
            "collinear",
        ),
        Kind::RegularPolygon => (
            GeneratorKind::RegularPolygon {
                sides: required(args.k, "k", "regular-polygon")?,
                side: args.side.unwrap_or(1.0),
            },
            "regular-polygon",
        ),
        Kind::Isosceles => (
            GeneratorKind::IsoscelesTriangle {
                apex_angle: required(args.apex, "apex", "isosceles")?,
                leg: args.side.unwrap_or(1.0),
            },
            "isosceles",
        ),
        Kind::Parallelogram => (
            GeneratorKind::Parallelogram {
                side_a: required(args.side_a, "side-a", "parallelogram")?,
                side_b: required(args.side_b, "side-b", "parallelogram")?,
                angle: required(args.angle, "angle", "parallelogram")?,
            },
            "parallelogram",
        ),
        Kind::NoisyBlob => (
            GeneratorKind::NoisyClosedBlob {
                points: args.points.unwrap_or(65),
                noise: args.noise.unwrap_or(0.1),
            },
            "noisy-blob",
        ),
        Kind::RandomWalk => (
            GeneratorKind::RandomWalk {
                segments: required(args.segments, "segments", "random-walk")?,
                step: args.step.unwrap_or(1.0),
            },
            "random-walk",
        ),
    })
}

pub fn generate(args: GenerateArgs) -> Result<(), CliError> {
    let (kind, name) = generator_kind(&args)?;
    let spec = GeneratorSpec {
        kind,
        seed: args.seed,
        dim: args.dim,
    };
    let curve = generate_curve(&spec).map_err(invalid)?;
    let doc = CurveDocument::new(name, curve)
        .with_meta("source", "respace generate")
        .with_meta("seed", args.seed.to_string());
    let text = doc.to_text().map_err(invalid)?;
    write_file(&args.output, &text)?;
    println!("points: {}", doc.curve.len());
    println!("length: {}", doc.curve.length());
    Ok(())
}
