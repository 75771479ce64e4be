//! Run reports in text and JSON form.
//!
//! JSON objects are emitted with sorted keys (serde_json's default map is
//! ordered) and scalars as canonical strings, so equal runs give equal bytes.

use std::fmt::Write as _;

use myb_core::CheckReport;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const TOOL_NAME: &str = "myb";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub source: String,
    pub input_sha256: Option<String>,
    pub suite: Option<String>,
    pub checks: Vec<CheckReport>,
    pub findings: Vec<Value>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Informational sub-results of a report tree, flattened in depth-first order.
pub fn informational_findings(report: &CheckReport) -> Vec<Value> {
    let mut out = Vec::new();
    collect(report, &mut out);
    out
}

fn collect(report: &CheckReport, out: &mut Vec<Value>) {
    for c in &report.subchecks {
        collect(c, out);
    }
    for c in &report.informational {
        out.push(json!({
            "informational": c.identity_name,
            "passed": c.passed,
            "witness": c.witness,
        }));
        collect(c, out);
    }
}

impl RunReport {
    pub fn new(command: &str, source: &str, input: Option<&[u8]>) -> Self {
        RunReport {
            command: command.into(),
            source: source.into(),
            input_sha256: input.map(sha256_hex),
            suite: None,
            checks: Vec::new(),
            findings: Vec::new(),
        }
    }

    pub fn push_check(&mut self, report: CheckReport) {
        self.findings.extend(informational_findings(&report));
        self.checks.push(report);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "tool": { "name": TOOL_NAME, "version": TOOL_VERSION },
            "command": self.command,
            "input": { "source": self.source, "sha256": self.input_sha256 },
            "suite": self.suite,
            "checks": self.checks,
            "findings": self.findings,
            "passed": self.passed(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{TOOL_NAME} {TOOL_VERSION} {}", self.command);
        let _ = write!(s, "input: {}", self.source);
        if let Some(h) = &self.input_sha256 {
            let _ = write!(s, " (sha256 {h})");
        }
        s.push('\n');
        if let Some(suite) = &self.suite {
            let _ = writeln!(s, "suite: {suite}");
        }
        for c in &self.checks {
            text_check(&mut s, c, 0, false);
        }
        for f in &self.findings {
            if f.get("informational").is_none() {
                let _ = writeln!(s, "finding: {f}");
            }
        }
        let _ = writeln!(s, "result: {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}

fn text_check(s: &mut String, c: &CheckReport, depth: usize, info: bool) {
    let pad = "  ".repeat(depth);
    let verdict = match (info, c.passed) {
        (false, true) => "PASS",
        (false, false) => "FAIL",
        (true, true) => "info: holds",
        (true, false) => "info: fails",
    };
    let _ = write!(s, "{pad}{verdict} {} ({} tuples)", c.identity_name, c.tuples_evaluated);
    if !c.markers.is_empty() {
        let _ = write!(s, " [{}]", c.markers.join(", "));
    }
    s.push('\n');
    if let Some(w) = &c.witness {
        let vars: Vec<String> = if c.variables.len() == w.tuple.len() {
            c.variables.iter().zip(&w.tuple).map(|(v, i)| format!("{v}=e{i}")).collect()
        } else {
            w.tuple.iter().map(|i| format!("e{i}")).collect()
        };
        let _ = writeln!(s, "{pad}  witness {} residual [{}]", vars.join(" "), w.residual.render().join(", "));
    }
    for sub in &c.subchecks {
        text_check(s, sub, depth + 1, info);
    }
    for sub in &c.informational {
        text_check(s, sub, depth + 1, true);
    }
}
