//! Report model shared by all commands, and its JSON / CSV renderings.
//!
//! Every result is a [`Row`]. CSV output writes the rows with the fixed
//! column order of [`CSV_COLUMNS`]; JSON output writes one document holding
//! the graph summary, the configuration echo, timings, and the same rows.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use triadic::Estimate;

pub const CSV_COLUMNS: [&str; 16] = [
    "section",
    "name",
    "lo",
    "hi",
    "wedge_type",
    "value",
    "exact",
    "halfwidth",
    "error_bound",
    "delta",
    "samples",
    "closed",
    "vertices",
    "wedges",
    "speedup",
    "status",
];

pub const STATUS_OK: &str = "ok";
pub const STATUS_UNDEFINED: &str = "undefined";
pub const STATUS_NO_WEDGES: &str = "no-wedges";
pub const STATUS_EMPTY_BIN: &str = "empty-bin";

#[derive(Debug, Clone, Default, Serialize)]
pub struct Row {
    pub section: String,
    pub name: String,
    pub lo: Option<usize>,
    pub hi: Option<usize>,
    pub wedge_type: Option<String>,
    pub value: Option<f64>,
    pub exact: bool,
    pub halfwidth: Option<f64>,
    pub error_bound: Option<f64>,
    pub delta: Option<f64>,
    pub samples: Option<u64>,
    pub closed: Option<u64>,
    pub vertices: Option<u64>,
    pub wedges: Option<u64>,
    pub speedup: Option<f64>,
    pub status: String,
}

impl Row {
    pub fn exact(section: &str, name: impl Into<String>, value: Option<f64>) -> Self {
        Row {
            section: section.to_string(),
            name: name.into(),
            value,
            exact: true,
            status: if value.is_some() { STATUS_OK } else { STATUS_UNDEFINED }.to_string(),
            ..Row::default()
        }
    }

    pub fn count(section: &str, name: impl Into<String>, value: u64) -> Self {
        Row::exact(section, name, Some(value as f64))
    }

    pub fn sampled(section: &str, name: impl Into<String>, estimate: &Estimate) -> Self {
        Row {
            section: section.to_string(),
            name: name.into(),
            value: Some(estimate.value),
            exact: false,
            halfwidth: Some(estimate.halfwidth),
            error_bound: Some(estimate.error_bound()),
            delta: Some(estimate.delta),
            samples: Some(estimate.samples),
            closed: Some(estimate.closed),
            status: STATUS_OK.to_string(),
            ..Row::default()
        }
    }

    /// Sampled metric that could not be computed.
    pub fn missing(section: &str, name: impl Into<String>, status: &str) -> Self {
        Row {
            section: section.to_string(),
            name: name.into(),
            status: status.to_string(),
            ..Row::default()
        }
    }

    pub fn bin(mut self, lo: usize, hi: usize) -> Self {
        self.lo = Some(lo);
        self.hi = Some(hi);
        self
    }

    fn csv_record(&self) -> Vec<String> {
        fn opt<T: ToString>(x: &Option<T>) -> String {
            x.as_ref().map(ToString::to_string).unwrap_or_default()
        }
        vec![
            self.section.clone(),
            self.name.clone(),
            opt(&self.lo),
            opt(&self.hi),
            opt(&self.wedge_type),
            opt(&self.value),
            self.exact.to_string(),
            opt(&self.halfwidth),
            opt(&self.error_bound),
            opt(&self.delta),
            opt(&self.samples),
            opt(&self.closed),
            opt(&self.vertices),
            opt(&self.wedges),
            opt(&self.speedup),
            self.status.clone(),
        ]
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct GraphSummary {
    pub path: String,
    pub directed: bool,
    pub vertices: usize,
    pub edges: usize,
    pub wedges: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub directed_edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reciprocal_pairs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reciprocity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wedges_by_type: Option<BTreeMap<String, u64>>,
}

impl GraphSummary {
    fn rows(&self) -> Vec<Row> {
        let mut rows = vec![
            Row::count("graph", "vertices", self.vertices as u64),
            Row::count("graph", "edges", self.edges as u64),
            Row::count("graph", "wedges", self.wedges),
        ];
        if let Some(d) = self.directed_edges {
            rows.push(Row::count("graph", "directed_edges", d as u64));
        }
        if let Some(r) = self.reciprocal_pairs {
            rows.push(Row::count("graph", "reciprocal_pairs", r as u64));
        }
        if let Some(r) = self.reciprocity {
            rows.push(Row::exact("graph", "reciprocity", Some(r)));
        }
        if let Some(by_type) = &self.wedges_by_type {
            for (psi, w) in by_type {
                let mut row = Row::count("graph", "wedges_of_type", *w);
                row.wedge_type = Some(psi.clone());
                rows.push(row);
            }
        }
        rows
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ConfigEcho {
    pub metric: Option<String>,
    pub samples: Option<u64>,
    pub epsilon: Option<f64>,
    pub delta: Option<f64>,
    pub seed: Option<u64>,
    pub workers: usize,
    pub bins: Option<String>,
    pub wedge_assignment: Option<String>,
    pub ladder: Option<Vec<u64>>,
    pub trials: Option<u32>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timing {
    pub load_seconds: f64,
    pub analysis_seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub graph: GraphSummary,
    pub config: ConfigEcho,
    pub timing: Timing,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl Report {
    pub fn write<W: Write>(&self, mut out: W, format: OutputFormat) -> std::io::Result<()> {
        match format {
            OutputFormat::Json => {
                serde_json::to_writer_pretty(&mut out, self)?;
                writeln!(out)
            }
            OutputFormat::Csv => {
                let mut writer = csv::Writer::from_writer(out);
                writer.write_record(CSV_COLUMNS)?;
                for row in self.graph.rows().iter().chain(&self.rows) {
                    writer.write_record(row.csv_record())?;
                }
                writer.flush()
            }
        }
    }
}
