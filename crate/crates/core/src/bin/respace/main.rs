//! `respace` command-line tool.
//!
//! Exit codes: 0 on success, 1 on I/O failure, 2 on invalid input or flags.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "respace", version, about = "Arclength respacing of polygonal curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Respace a curve once (or several times).
    Respace(RespaceArgs),
    /// Respace repeatedly until the curve stops moving.
    Iterate(IterateArgs),
    /// Print spacing statistics over the iteration.
    Stats(StatsArgs),
    /// Draw curves as SVG.
    Render(RenderArgs),
    /// Write a synthetic test curve.
    Generate(GenerateArgs),
}

#[derive(Debug, Args)]
struct RespaceArgs {
    #[arg(long)]
    input: std::path::PathBuf,
    #[arg(long)]
    output: std::path::PathBuf,
    /// Number of respacing passes.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    iterations: u64,
    /// Target arclength spacing; the vertex count becomes floor(L / delta) + 1.
    #[arg(long)]
    delta: Option<f64>,
}

#[derive(Debug, Args)]
struct IterateArgs {
    #[arg(long)]
    input: std::path::PathBuf,
    #[arg(long)]
    output: std::path::PathBuf,
    /// Where to write the per-iteration statistics CSV.
    #[arg(long)]
    trace: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    max_iters: u64,
    #[arg(long, default_value_t = 1e-12)]
    tol_displacement: f64,
    /// Also stop once the spacing standard deviation falls below this (0 disables).
    #[arg(long, default_value_t = 0.0)]
    tol_sigma: f64,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[arg(long)]
    input: std::path::PathBuf,
    /// Last iteration to report.
    #[arg(long, default_value_t = 15)]
    iterations: usize,
    /// Report every iteration instead of 0, 1, 2, 3, 5, 10, 15, ...
    #[arg(long)]
    all: bool,
    /// Also write the reported rows as trace CSV.
    #[arg(long)]
    csv: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
struct RenderArgs {
    /// Curve CSV files to overlay, drawn in order.
    #[arg(long = "input", required = true, num_args = 1..)]
    inputs: Vec<std::path::PathBuf>,
    #[arg(long)]
    output: std::path::PathBuf,
    /// Two zero-based axes to draw, e.g. `0,2`; required above two dimensions.
    #[arg(long, value_parser = parse_axes)]
    project: Option<(usize, usize)>,
    /// Stroke colors, one per input; defaults to a built-in palette.
    #[arg(long = "stroke", num_args = 1..)]
    strokes: Vec<String>,
    /// Also draw the respaced version of each input, dashed.
    #[arg(long)]
    with_respaced: bool,
    #[arg(long)]
    vertex_radius: Option<f64>,
    #[arg(long, default_value_t = 800.0)]
    width: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    RandomWalk,
    RegularPolygon,
    Isosceles,
    Parallelogram,
    Collinear,
    NoisyBlob,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    output: std::path::PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    /// collinear: iteration at which the curve becomes equilateral.
    #[arg(long)]
    n: Option<usize>,
    /// regular-polygon: number of sides.
    #[arg(long)]
    k: Option<usize>,
    /// regular-polygon side length, isosceles leg length.
    #[arg(long)]
    side: Option<f64>,
    /// isosceles: apex angle at p0 in radians.
    #[arg(long)]
    apex: Option<f64>,
    #[arg(long)]
    side_a: Option<f64>,
    #[arg(long)]
    side_b: Option<f64>,
    /// parallelogram: interior angle at p0 in radians.
    #[arg(long)]
    angle: Option<f64>,
    /// noisy-blob: number of distinct points.
    #[arg(long)]
    points: Option<usize>,
    /// noisy-blob: radial noise amplitude.
    #[arg(long)]
    noise: Option<f64>,
    /// random-walk: number of segments.
    #[arg(long)]
    segments: Option<usize>,
    /// random-walk: maximum per-coordinate step.
    #[arg(long)]
    step: Option<f64>,
}

fn parse_axes(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected two axes like `0,1`")?;
    let a = a.trim().parse::<usize>().map_err(|e| e.to_string())?;
    let b = b.trim().parse::<usize>().map_err(|e| e.to_string())?;
    if a == b {
        return Err("the two axes must differ".into());
    }
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Respace(a) => commands::respace(a),
        Command::Iterate(a) => commands::iterate(a),
        Command::Stats(a) => commands::stats(a),
        Command::Render(a) => commands::render(a),
        Command::Generate(a) => commands::generate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
