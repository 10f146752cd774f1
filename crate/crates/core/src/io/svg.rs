use std::fmt::Write as _;

use crate::geometry::PolygonalCurve;
use crate::io::IoError;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

#[derive(Debug, Clone, PartialEq)]
pub struct Style {
    pub stroke: String,
    /// Line width in drawing units; defaults to a fraction of the extent.
    pub stroke_width: Option<f64>,
    pub vertex_fill: String,
    pub show_vertices: bool,
    pub dashed: bool,
}

impl Style {
    pub fn colored(color: &str) -> Self {
        Self {
            stroke: color.to_string(),
            stroke_width: None,
            vertex_fill: color.to_string(),
            show_vertices: true,
            dashed: false,
        }
    }

    /// The `i`-th entry of a fixed six-color palette.
    pub fn palette(i: usize) -> Self {
        Self::colored(PALETTE[i % PALETTE.len()])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Output width in pixels; the height follows the aspect ratio.
    pub width_px: f64,
    /// Vertex circle radius in drawing units; defaults to a fraction of the extent.
    pub vertex_radius: Option<f64>,
    /// Coordinate axes to draw for curves of dimension above 2.
    pub projection: Option<(usize, usize)>,
    /// Margin as a fraction of the larger extent, on every side.
    pub margin: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            width_px: 800.0,
            vertex_radius: None,
            projection: None,
            margin: 0.05,
        }
    }
}

/// Renders the curves as a standalone SVG 1.1 document: one `<polyline>`
/// per curve plus a `<circle>` per vertex. Mathematical y points up.
pub fn render_svg(curves: &[(PolygonalCurve, Style)], options: &RenderOptions) -> Result<String, IoError> {
    if curves.is_empty() {
        return Err(IoError::Render("no curves to render".into()));
    }
    let mut projected: Vec<Vec<(f64, f64)>> = Vec::with_capacity(curves.len());
    for (curve, _) in curves {
        let (ax, ay) = match (curve.dim(), options.projection) {
            (_, Some((a, b))) => {
                if a >= curve.dim() || b >= curve.dim() || a == b {
                    return Err(IoError::Render(format!(
                        "projection axes ({a}, {b}) invalid for dimension {}",
                        curve.dim()
                    )));
                }
                (a, b)
            }
            (2, None) => (0, 1),
            (1, None) => (0, usize::MAX),
            (d, None) => return Err(IoError::UnsupportedDimension(d)),
        };
        projected.push(
            curve
                .vertices()
                .map(|v| (v[ax], if ay == usize::MAX { 0.0 } else { -v[ay] }))
                .collect(),
        );
    }

    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in projected.iter().flatten() {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let extent = (x1 - x0).max(y1 - y0);
    let extent = if extent > 0.0 { extent } else { 1.0 };
    let pad = options.margin * extent;
    let (vx, vy) = (x0 - pad, y0 - pad);
    let (vw, vh) = ((x1 - x0) + 2.0 * pad, (y1 - y0) + 2.0 * pad);
    let (vw, vh) = (vw.max(2.0 * pad).max(f64::MIN_POSITIVE), vh.max(2.0 * pad).max(f64::MIN_POSITIVE));
    let height_px = options.width_px * vh / vw;
    let radius = options.vertex_radius.unwrap_or(0.008 * extent);

    let mut out = String::new();
    let w = |out: &mut String, s: std::fmt::Arguments| out.write_fmt(s).expect("writing to a String");
    w(&mut out, format_args!("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n"));
    w(
        &mut out,
        format_args!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
            num(options.width_px),
            num(height_px),
            num(vx),
            num(vy),
            num(vw),
            num(vh)
        ),
    );
    for (i, ((_, style), pts)) in curves.iter().zip(&projected).enumerate() {
        let width = style.stroke_width.unwrap_or(0.004 * extent);
        w(&mut out, format_args!("  <g id=\"curve-{i}\">\n"));
        let points: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", num(x), num(y))).collect();
        let dash = if style.dashed {
            format!(" stroke-dasharray=\"{} {}\"", num(4.0 * width), num(2.0 * width))
        } else {
            String::new()
        };
        w(
            &mut out,
            format_args!(
                "    <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" stroke-linejoin=\"round\"{dash}/>\n",
                points.join(" "),
                escape(&style.stroke),
                num(width)
            ),
        );
        if style.show_vertices {
            for &(x, y) in pts {
                w(
                    &mut out,
                    format_args!(
                        "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n",
                        num(x),
                        num(y),
                        num(radius),
                        escape(&style.vertex_fill)
                    ),
                );
            }
        }
        w(&mut out, format_args!("  </g>\n"));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn num(x: f64) -> String {
    // Shortest representation that round-trips; `-0` is printed as `0`.
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x}")
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}
