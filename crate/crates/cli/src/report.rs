use std::fmt::Write as _;

use serde::Serialize;

/// Outcome of one assertion. `NoCounterexampleFound` is a sampled pass and
/// does not fail the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NoCounterexampleFound,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NoCounterexampleFound => "no-counterexample-found",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    /// The core operation that produced `computed`.
    pub operation: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    GuardExceeded,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::GuardExceeded => "guard-exceeded",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub scenario: String,
    pub description: String,
    pub version: String,
    pub status: Status,
    /// Set when the run stopped on an error instead of finishing.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub assertions: Vec<Assertion>,
    #[serde(rename = "elapsed-ms", skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    /// The report without timing; byte-stable across runs.
    pub fn canonical(&self) -> Report {
        Report {
            elapsed_ms: None,
            ..self.clone()
        }
    }

    pub fn canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.canonical()).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Exit status over a set of reports: 3 if any guard tripped, else 1 if any
/// assertion failed, else 0.
pub fn exit_code(reports: &[Report]) -> u8 {
    if reports.iter().any(|r| r.status == Status::GuardExceeded) {
        3
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

/// JSON lines: one object per scenario.
pub fn render_json(reports: &[Report]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("report serializes") + "\n")
        .collect()
}

pub fn render_csv(reports: &[Report]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "scenario",
        "name",
        "operation",
        "expected",
        "computed",
        "verdict",
        "witness",
        "elapsed-ms",
    ])
    .expect("in-memory write");
    for r in reports {
        let elapsed = r.elapsed_ms.map(|e| e.to_string()).unwrap_or_default();
        for a in &r.assertions {
            w.write_record([
                r.scenario.as_str(),
                &a.name,
                &a.operation,
                &a.expected,
                &a.computed,
                a.verdict.name(),
                a.witness.as_deref().unwrap_or(""),
                &elapsed,
            ])
            .expect("in-memory write");
        }
        if let Some(e) = &r.error {
            w.write_record([
                r.scenario.as_str(),
                "error",
                "",
                "",
                e,
                r.status.name(),
                "",
                &elapsed,
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        let elapsed = r
            .elapsed_ms
            .map(|e| format!(" ({e} ms)"))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{} [{}]{elapsed}: {}",
            r.scenario,
            r.status.name(),
            r.description
        );
        for a in &r.assertions {
            let mark = match a.verdict {
                Verdict::Pass => "ok  ",
                Verdict::NoCounterexampleFound => "ok~ ",
                Verdict::Fail => "FAIL",
            };
            let _ = writeln!(
                out,
                "  {mark} {}: {} (expected {}) via {}",
                a.name, a.computed, a.expected, a.operation
            );
            if let Some(w) = &a.witness {
                let _ = writeln!(out, "       witness: {w}");
            }
        }
        if let Some(e) = &r.error {
            let _ = writeln!(out, "  error: {e}");
        }
    }
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    let _ = writeln!(out, "{passed} of {} scenarios pass", reports.len());
    out
}

pub fn render(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => render_json(reports),
        Format::Csv => render_csv(reports),
        Format::Text => render_text(reports),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(status: Status, verdict: Verdict) -> Report {
        Report {
            scenario: String::from("s"),
            description: String::from("d"),
            version: String::from("0"),
            status,
            error: None,
            assertions: vec![Assertion {
                name: String::from("dim W"),
                operation: String::from("q_phi"),
                expected: String::from("0"),
                computed: String::from("0"),
                verdict,
                witness: None,
            }],
            elapsed_ms: Some(5),
        }
    }

    #[test]
    fn guard_dominates_failure() {
        let pass = report(Status::Pass, Verdict::Pass);
        let fail = report(Status::Fail, Verdict::Fail);
        let guard = report(Status::GuardExceeded, Verdict::Pass);
        assert_eq!(exit_code(std::slice::from_ref(&pass)), 0);
        assert_eq!(exit_code(&[pass.clone(), fail.clone()]), 1);
        assert_eq!(exit_code(&[fail, guard, pass]), 3);
    }

    #[test]
    fn canonical_json_drops_timing() {
        let r = report(Status::Pass, Verdict::NoCounterexampleFound);
        let json = r.canonical_json();
        assert!(!json.contains("elapsed-ms"));
        assert!(json.contains("\"verdict\": \"no-counterexample-found\""));
        assert!(render_json(&[r]).contains("\"elapsed-ms\":5"));
    }

    #[test]
    fn csv_has_one_row_per_assertion() {
        let csv = render_csv(&[report(Status::Pass, Verdict::Pass)]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1], "s,dim W,q_phi,0,0,pass,,5");
    }
}
