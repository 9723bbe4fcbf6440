//! The structured result every CLI command produces.

use std::fmt::{self, Write};

use serde::Serialize;

use crate::solver::GameOutcome;
use crate::trace::MoveTrace;
use crate::verify::SuiteReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceStep {
    pub position: serde_json::Value,
    pub configuration: String,
}

/// Every field is always serialized (absent values as `null`) so the JSON
/// shape is the same for every command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub variant: Option<String>,
    pub method: Option<String>,
    pub removable: Option<bool>,
    pub winner: Option<GameOutcome>,
    pub winning_moves: Option<Vec<usize>>,
    pub count: Option<String>,
    pub parity_sum: Option<i64>,
    pub residue: Option<u8>,
    pub parity_expression: Option<String>,
    pub accepted: Option<bool>,
    pub path: Option<Vec<String>>,
    pub trace: Option<Vec<TraceStep>>,
    pub dot: Option<String>,
    pub detail: Option<String>,
    pub suites: Option<Vec<SuiteReport>>,
    pub elapsed_us: u64,
}

impl OutputRecord {
    pub fn new(command: &str, input: impl Into<String>) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input: input.into(),
            variant: None,
            method: None,
            removable: None,
            winner: None,
            winning_moves: None,
            count: None,
            parity_sum: None,
            residue: None,
            parity_expression: None,
            accepted: None,
            path: None,
            trace: None,
            dot: None,
            detail: None,
            suites: None,
            elapsed_us: 0,
        }
    }

    pub fn with_trace<P>(mut self, trace: &MoveTrace<P>) -> Self
    where
        P: Serialize,
    {
        self.trace = Some(
            trace
                .steps
                .iter()
                .map(|s| TraceStep {
                    position: serde_json::to_value(&s.position).expect("positions serialize"),
                    configuration: s.configuration.clone(),
                })
                .collect(),
        );
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    /// `key: value` lines for the fields that are set.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: &dyn fmt::Display| {
            writeln!(out, "{key}: {value}").unwrap();
        };
        line("command", &self.command);
        line("input", &format!("{:?}", self.input));
        if let Some(v) = &self.variant {
            line("variant", v);
        }
        if let Some(v) = &self.method {
            line("method", v);
        }
        if let Some(v) = self.removable {
            line("removable", &v);
        }
        if let Some(v) = self.winner {
            line("winner", &v);
        }
        if let Some(v) = &self.winning_moves {
            line("winning_moves", &format!("{v:?}"));
        }
        if let Some(v) = &self.count {
            line("count", v);
        }
        if let Some(v) = self.parity_sum {
            line("parity_sum", &v);
        }
        if let Some(v) = self.residue {
            line("residue", &v);
        }
        if let Some(v) = &self.parity_expression {
            line("parity_expression", v);
        }
        if let Some(v) = self.accepted {
            line("accepted", &v);
        }
        if let Some(v) = &self.path {
            line("path", &v.join(" -> "));
        }
        if let Some(v) = &self.detail {
            line("detail", v);
        }
        if let Some(steps) = &self.trace {
            line("steps", &steps.len());
            for (k, s) in steps.iter().enumerate() {
                let pos = match &s.position {
                    serde_json::Value::Object(m) => format!(
                        "({},{})",
                        m.get("row").cloned().unwrap_or_default(),
                        m.get("col").cloned().unwrap_or_default()
                    ),
                    other => other.to_string(),
                };
                let cfg = if s.configuration.is_empty() {
                    "(empty)"
                } else {
                    &s.configuration
                };
                writeln!(out, "  {:>2}. remove {pos} -> {cfg}", k + 1).unwrap();
            }
        }
        if let Some(suites) = &self.suites {
            for s in suites {
                writeln!(out, "{s}").unwrap();
            }
        }
        if let Some(dot) = &self.dot {
            out.push_str(dot);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_has_every_field() {
        let rec = OutputRecord::new("check", "101");
        let value: serde_json::Value = serde_json::from_str(&rec.to_json()).unwrap();
        let obj = value.as_object().unwrap();
        assert_eq!(obj["schema_version"], 1);
        assert!(obj.contains_key("winner"));
        assert!(obj["removable"].is_null());
        assert_eq!(rec.to_json(), rec.clone().to_json());
    }

    #[test]
    fn human_lists_trace_steps() {
        let mut trace = MoveTrace::new("1".into());
        trace.push(1usize, String::new());
        let mut rec = OutputRecord::new("solve", "1").with_trace(&trace);
        rec.removable = Some(true);
        let text = rec.to_human();
        assert!(text.contains("removable: true"));
        assert!(text.contains("1. remove 1 -> (empty)"));
    }
}
