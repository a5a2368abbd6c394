//! Report assembly: named values plus pass/fail checks, rendered as text or
//! JSON. Output is a pure function of inputs and flags; timing lives in its
//! own field so comparable fields stay deterministic.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Structure absent from a finite instance; not a law violation.
    Gap,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub values: Vec<(String, String)>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<serde_json::Value>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            values: Vec::new(),
            checks: Vec::new(),
            payload: None,
            timing_ms: 0,
        }
    }

    pub fn value(&mut self, key: &str, value: String) {
        self.values.push((key.to_string(), value));
    }

    pub fn check(&mut self, name: impl Into<String>, status: Status, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            status,
            witness,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn render(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string_pretty(self).expect("serializable report"));
            return;
        }
        println!("{}", self.command);
        for (k, v) in &self.values {
            println!("  {k}: {v}");
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Gap => "gap",
                Status::NotApplicable => "n/a",
            };
            match &c.witness {
                Some(w) => println!("  [{tag}] {}: {w}", c.name),
                None => println!("  [{tag}] {}", c.name),
            }
        }
        println!("  ({} ms)", self.timing_ms);
    }
}
