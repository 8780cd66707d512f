use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// The mathematical statement this check stands for.
    pub paper_anchor: String,
    pub status: Status,
    pub details: String,
    /// Wall time, recorded only when timings are requested so that reports
    /// stay byte-identical between runs.
    pub elapsed_ms: Option<u64>,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, status: Status, details: impl Into<String>) -> Self {
        Check { name: name.into(), paper_anchor: anchor.into(), status, details: details.into(), elapsed_ms: None }
    }
}

/// Everything one invocation verified.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), parameters: Map::new(), checks: Vec::new() }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.parameters.insert(key.into(), value.into());
    }

    /// Runs `suite`, attaching the elapsed time to its checks if `timed`.
    pub fn run(&mut self, timed: bool, suite: impl FnOnce() -> Vec<Check>) {
        let start = Instant::now();
        let mut checks = suite();
        if timed {
            let ms = start.elapsed().as_millis() as u64;
            for c in &mut checks {
                c.elapsed_ms = Some(ms);
            }
        }
        self.checks.extend(checks);
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                v => format!("{k}={v}"),
            })
            .collect();
        writeln!(f, "voa {} ({})", self.command, params.join(", "))?;
        for c in &self.checks {
            write!(f, "{}  {}", c.status, c.name)?;
            if !c.details.is_empty() {
                write!(f, ": {}", c.details)?;
            }
            if let Some(ms) = c.elapsed_ms {
                write!(f, " [{ms} ms]")?;
            }
            writeln!(f)?;
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        writeln!(f, "{} passed, {} failed, {} skipped", count(Status::Pass), count(Status::Fail), count(Status::Skip))
    }
}
