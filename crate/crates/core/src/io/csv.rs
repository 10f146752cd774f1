use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;

use crate::geometry::PolygonalCurve;
use crate::io::number::format_g17;
use crate::io::IoError;

/// Parses a curve from CSV text: one vertex per line, coordinates separated
/// by commas and/or whitespace. Blank lines and lines starting with `#` are
/// skipped. LF and CRLF line endings are both accepted.
pub fn parse_csv(text: &str) -> Result<PolygonalCurve, IoError> {
    let mut dim = None;
    let mut coords = Vec::new();
    let mut rows = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut count = 0usize;
        for field in line.split(|c: char| c == ',' || c.is_whitespace()).filter(|f| !f.is_empty()) {
            let value: f64 = field.parse().map_err(|_| IoError::Parse {
                line: line_no,
                reason: format!("`{field}` is not a number"),
            })?;
            if !value.is_finite() {
                return Err(IoError::Parse {
                    line: line_no,
                    reason: format!("`{field}` is not finite"),
                });
            }
            coords.push(value);
            count += 1;
        }
        if count == 0 {
            return Err(IoError::Parse {
                line: line_no,
                reason: "no coordinates".into(),
            });
        }
        match dim {
            None => dim = Some(count),
            Some(d) if d != count => {
                return Err(IoError::Parse {
                    line: line_no,
                    reason: format!("expected {d} coordinates, found {count}"),
                })
            }
            _ => {}
        }
        rows += 1;
    }
    if rows < 2 {
        return Err(IoError::TooFewVertices(rows));
    }
    Ok(PolygonalCurve::from_flat(dim.unwrap_or(0), coords)?)
}

/// Reads a curve CSV from a byte stream; the bytes must be UTF-8.
pub fn read_csv<R: Read>(mut reader: R) -> Result<PolygonalCurve, IoError> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_csv(&text)
}

/// One vertex per line, comma separated, 17 significant digits, LF endings.
pub fn write_csv(curve: &PolygonalCurve) -> String {
    let mut out = String::new();
    for v in curve.vertices() {
        push_row(&mut out, v);
    }
    out
}

fn push_row(out: &mut String, v: &[f64]) {
    for (i, c) in v.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format_g17(*c));
    }
    out.push('\n');
}

/// A curve with a name and free-form string metadata.
///
/// Serialized as curve CSV preceded by `# key: value` comment lines, so any
/// plain CSV reader still sees the coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveDocument {
    pub curve: PolygonalCurve,
    pub name: String,
    pub metadata: BTreeMap<String, String>,
}

impl CurveDocument {
    pub fn new(name: impl Into<String>, curve: PolygonalCurve) -> Self {
        Self {
            curve,
            name: name.into(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub fn to_text(&self) -> Result<String, IoError> {
        let mut out = String::new();
        check_header_text("name", &self.name)?;
        writeln!(out, "# name: {}", self.name).expect("writing to a String");
        for (k, v) in &self.metadata {
            if k == "name" || k.is_empty() || k.contains(':') {
                return Err(IoError::Metadata(format!("unusable metadata key `{k}`")));
            }
            check_header_text(k, k)?;
            check_header_text(k, v)?;
            writeln!(out, "# {k}: {v}").expect("writing to a String");
        }
        out.push_str(&write_csv(&self.curve));
        Ok(out)
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        let curve = parse_csv(text)?;
        let mut name = String::new();
        let mut metadata = BTreeMap::new();
        for line in text.lines() {
            let Some(body) = line.strip_prefix("# ") else {
                if line.trim_start().starts_with('#') || line.trim().is_empty() {
                    continue;
                }
                break;
            };
            if let Some((k, v)) = body.split_once(": ") {
                if k == "name" {
                    name = v.to_string();
                } else {
                    metadata.insert(k.to_string(), v.to_string());
                }
            }
        }
        Ok(Self {
            curve,
            name,
            metadata,
        })
    }
}

fn check_header_text(key: &str, s: &str) -> Result<(), IoError> {
    if s.contains(['\n', '\r']) || s != s.trim() {
        return Err(IoError::Metadata(format!(
            "value for `{key}` must be a single line without surrounding whitespace"
        )));
    }
    Ok(())
}
