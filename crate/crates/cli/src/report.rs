use serde::Serialize;
use std::fmt::Display;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    /// Passes when `ok`; a failure without a witness of its own reports the mismatch.
    pub fn flag(name: impl Into<String>, ok: bool, expected: impl Display, actual: impl Display, witness: Option<String>) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let witness = if ok { None } else { Some(witness.unwrap_or_else(|| format!("expected {expected}, got {actual}"))) };
        Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, expected, actual, witness }
    }

    pub fn compare<T: PartialEq + Display>(name: impl Into<String>, expected: T, actual: T) -> Self {
        Check::flag(name, expected == actual, expected, actual, None)
    }

    pub fn error(name: impl Into<String>, expected: impl Display, err: impl Display) -> Self {
        Check {
            name: name.into(),
            status: Status::Error,
            expected: expected.to_string(),
            actual: "error".into(),
            witness: Some(err.to_string()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    pub elapsed_ms: u128,
    pub version: &'static str,
    #[serde(skip)]
    started: Option<Instant>,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            command,
            checks: Vec::new(),
            details: Vec::new(),
            elapsed_ms: 0,
            version: env!("CARGO_PKG_VERSION"),
            started: Some(Instant::now()),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn detail(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn finish(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        if let Some(t) = self.started.take() {
            self.elapsed_ms = t.elapsed().as_millis();
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("supergrade {} :: {}\n", self.version, self.command);
        for d in &self.details {
            out.push_str(&format!("  {d}\n"));
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            out.push_str(&format!("[{tag}] {}: {}", c.name, c.actual));
            if c.status != Status::Pass {
                out.push_str(&format!(" (expected {})", c.expected));
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                out.push_str(&format!("       witness: {w}\n"));
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        out.push_str(&format!("{passed}/{} checks passed in {} ms\n", self.checks.len(), self.elapsed_ms));
        out
    }
}
