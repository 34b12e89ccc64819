//! Machine-readable law-checking reports.

use serde::Serialize;
use std::collections::BTreeMap;

use super::gen::{GenConfig, Mode};

/// Outcome of checking one law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-all")]
    SkippedAll,
}

/// One failing instantiation, shrunk as far as greedy trace deletion allows.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    /// Metavariable name to rendered value (expression text or trace list).
    pub bindings: BTreeMap<String, String>,
    /// A trace demonstrating the violation, in trace-text format.
    pub witness_trace: String,
    /// Which side of the claim lacked the witness.
    pub side: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub name: String,
    pub provenance: String,
    pub status: Status,
    pub cases_checked: u64,
    pub cases_proviso_skipped: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Caveats, e.g. that a quantified proviso was sampled rather than proven.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportConfig {
    pub states: u8,
    pub length_bound: u8,
    pub term_depth: u32,
    pub relation_alphabet: Vec<String>,
    pub sample_count: u64,
    pub seed: u64,
    pub mode: Mode,
}

impl ReportConfig {
    pub fn from_gen(gc: &GenConfig) -> Self {
        ReportConfig {
            states: gc.cfg.state_count,
            length_bound: gc.cfg.length_bound,
            term_depth: gc.term_depth,
            relation_alphabet: gc
                .relation_alphabet
                .iter()
                .map(super::check::render_relation)
                .collect(),
            sample_count: gc.sample_count,
            seed: gc.seed,
            mode: gc.mode,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: ReportConfig,
    pub laws: Vec<LawReport>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|l| l.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// One line per law, for human consumption.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for l in &self.laws {
            let status = match l.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::SkippedAll => "SKIPPED-ALL",
            };
            out.push_str(&format!(
                "{:<45} {:<12} checked={} skipped={}\n",
                l.name, status, l.cases_checked, l.cases_proviso_skipped
            ));
            for cx in &l.counterexamples {
                out.push_str(&format!(
                    "    counterexample: witness {} ({})\n",
                    cx.witness_trace, cx.side
                ));
                for (k, v) in &cx.bindings {
                    out.push_str(&format!("        {k} = {v}\n"));
                }
            }
        }
        out
    }
}
