//! Pass/fail summaries produced by the verification routines.

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub params: Vec<(String, Value)>,
    /// Number of individual identities or pairs examined.
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl Report {
    pub fn new(check: &str) -> Self {
        Report { check: check.to_string(), params: Vec::new(), checked: 0, failures: 0, first_failure: None }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.push((key.to_string(), value.into()));
        self
    }

    /// Records one check; `describe` is only evaluated for the first failure.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    /// Folds another report's counts into this one.
    pub fn absorb(&mut self, other: &Report) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure.as_ref().map(|f| format!("{}: {f}", other.check));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("check".into(), json!(self.check));
        for (k, v) in &self.params {
            map.insert(k.clone(), v.clone());
        }
        map.insert("status".into(), json!(if self.passed() { "ok" } else { "fail" }));
        map.insert("checked".into(), json!(self.checked));
        if let Some(f) = &self.first_failure {
            map.insert("failures".into(), json!(self.failures));
            map.insert("first_failure".into(), json!(f));
        }
        Value::Object(map)
    }

    pub fn summary_line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = if self.passed() { "ok" } else { "FAIL" };
        let mut line = format!("{status:4} {} [{}] {} checked", self.check, params.join(" "), self.checked);
        if let Some(f) = &self.first_failure {
            line.push_str(&format!(", {} failed; first: {f}", self.failures));
        }
        line
    }
}
