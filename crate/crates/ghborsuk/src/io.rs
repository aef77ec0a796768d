//! Distance-matrix files: a JSON document `{"labels"?: [...], "dist": [[...]]}`
//! or plain CSV with an optional header row of labels.

use std::fs;
use std::path::Path;

use ghborsuk_core::{validate_metric, FiniteMetricSpace, MetricError, ToleranceConfig};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON matrix: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed CSV matrix: {0}")]
    Csv(String),
    #[error("{0}")]
    Metric(#[from] MetricError),
}

impl IoError {
    /// Short error kind, echoed by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Self::Io { .. } => "IoError",
            Self::Json(_) => "JsonError",
            Self::Csv(_) => "CsvError",
            Self::Metric(e) => e.name(),
        }
    }
}

impl From<csv::Error> for IoError {
    fn from(e: csv::Error) -> Self {
        Self::Csv(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Json,
    Csv,
}

impl MatrixFormat {
    /// From a file extension, if it names one of the two formats.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "json" => Some(Self::Json),
            "csv" => Some(Self::Csv),
            _ => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    dist: Vec<Vec<f64>>,
}

pub fn parse_json(text: &str, tol: &ToleranceConfig) -> Result<FiniteMetricSpace, IoError> {
    let doc: MatrixDoc = serde_json::from_str(text)?;
    Ok(validate_metric(&doc.dist, doc.labels, tol)?)
}

/// Parses CSV rows of numbers. The first row is a label header when any of its
/// fields is not a number, or when there is one more row than columns.
pub fn parse_csv(text: &str, tol: &ToleranceConfig) -> Result<FiniteMetricSpace, IoError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    for rec in reader.records() {
        let rec = rec?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        records.push(rec.iter().map(str::to_owned).collect::<Vec<_>>());
    }
    let Some(first) = records.first() else {
        return Err(MetricError::Empty.into());
    };
    let header = first.iter().any(|f| f.parse::<f64>().is_err()) || records.len() == first.len() + 1;
    let labels = header.then(|| records.remove(0));
    let mut rows = Vec::with_capacity(records.len());
    for (r, rec) in records.iter().enumerate() {
        let row = rec
            .iter()
            .enumerate()
            .map(|(c, f)| {
                f.parse::<f64>()
                    .map_err(|_| IoError::Csv(format!("row {r}, column {c}: {f:?} is not a number")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(validate_metric(&rows, labels, tol)?)
}

/// Parses by content: a document starting with `{` is JSON, anything else CSV.
pub fn parse_matrix(text: &str, tol: &ToleranceConfig) -> Result<FiniteMetricSpace, IoError> {
    if text.trim_start().starts_with('{') {
        parse_json(text, tol)
    } else {
        parse_csv(text, tol)
    }
}

/// Reads a matrix file; the extension picks the parser, falling back to content sniffing.
pub fn read_space(path: &Path, tol: &ToleranceConfig) -> Result<FiniteMetricSpace, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.display().to_string(),
        source,
    })?;
    match MatrixFormat::from_path(path) {
        Some(MatrixFormat::Json) => parse_json(&text, tol),
        Some(MatrixFormat::Csv) => parse_csv(&text, tol),
        None => parse_matrix(&text, tol),
    }
}

fn has_default_labels(space: &FiniteMetricSpace) -> bool {
    space.labels().iter().enumerate().all(|(i, l)| *l == i.to_string())
}

pub fn to_json(space: &FiniteMetricSpace) -> String {
    let doc = MatrixDoc {
        labels: (!has_default_labels(space)).then(|| space.labels().to_vec()),
        dist: space.to_rows(),
    };
    serde_json::to_string_pretty(&doc).expect("finite numbers serialize")
}

/// CSV text; a header row is written only for non-default labels.
pub fn to_csv(space: &FiniteMetricSpace) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if !has_default_labels(space) {
        w.write_record(space.labels()).expect("in-memory write");
    }
    for row in space.to_rows() {
        w.write_record(row.iter().map(f64::to_string)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

pub fn render(space: &FiniteMetricSpace, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Json => to_json(space),
        MatrixFormat::Csv => to_csv(space),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    #[test]
    fn json_with_and_without_labels() {
        let s = parse_json(r#"{"dist": [[0, 1], [1, 0]]}"#, &tol()).unwrap();
        assert_eq!(s.len(), 2);
        let s = parse_json(r#"{"labels": ["a", "b"], "dist": [[0, 2], [2, 0]]}"#, &tol()).unwrap();
        assert_eq!(s.labels(), ["a", "b"]);
        assert_eq!(s.diameter(), 2.0);
    }

    #[test]
    fn json_errors_carry_metric_names() {
        let e = parse_json(r#"{"dist": [[0, 1, 5], [1, 0, 1], [5, 1, 0]]}"#, &tol()).unwrap_err();
        assert_eq!(e.name(), "TriangleViolation");
        assert_eq!(parse_json(r#"{"dist": [[0, 1], [1]]}"#, &tol()).unwrap_err().name(), "NotSquare");
        assert_eq!(parse_json("{", &tol()).unwrap_err().name(), "JsonError");
    }

    #[test]
    fn csv_headers() {
        let s = parse_csv("a,b\n0,1\n1,0\n", &tol()).unwrap();
        assert_eq!(s.labels(), ["a", "b"]);
        let s = parse_csv("0,1\n1,0\n", &tol()).unwrap();
        assert_eq!(s.labels(), ["0", "1"]);
        // Numeric labels are recognised by the extra row.
        let s = parse_csv("7,9\n0,1\n1,0\n", &tol()).unwrap();
        assert_eq!(s.labels(), ["7", "9"]);
        assert_eq!(parse_csv("0,1\n1,x\n", &tol()).unwrap_err().name(), "CsvError");
        assert_eq!(parse_csv("\n", &tol()).unwrap_err().name(), "Empty");
    }

    #[test]
    fn round_trips() {
        let s = parse_json(r#"{"labels": ["p", "q", "r"], "dist": [[0, 1, 1.5], [1, 0, 2], [1.5, 2, 0]]}"#, &tol())
            .unwrap();
        assert_eq!(parse_matrix(&to_json(&s), &tol()).unwrap(), s);
        assert_eq!(parse_matrix(&to_csv(&s), &tol()).unwrap(), s);
        let plain = ghborsuk_core::delta_simplex(3, 0.1).unwrap();
        assert!(!to_json(&plain).contains("labels"));
        assert_eq!(parse_matrix(&to_csv(&plain), &tol()).unwrap(), plain);
    }
}
