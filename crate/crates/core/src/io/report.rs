//! Machine-readable run reports.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{dec, write_atomic};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub value: String,
    pub tolerance: String,
}

/// Config echo, per-check outcomes and residual values; reals are decimal
/// strings so that reruns compare byte for byte.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub checks: Vec<Check>,
    pub values: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: &str, config: &impl Serialize) -> Self {
        Self {
            command: command.to_owned(),
            config: serde_json::to_value(config).unwrap_or(Value::Null),
            checks: Vec::new(),
            values: BTreeMap::new(),
        }
    }

    /// Records `value <= tolerance` as a check.
    pub fn bound(&mut self, name: &str, value: f64, tolerance: f64) -> bool {
        let pass = value <= tolerance;
        self.check(name, pass, value, tolerance);
        pass
    }

    pub fn check(&mut self, name: &str, pass: bool, value: f64, tolerance: f64) {
        self.checks.push(Check { name: name.to_owned(), pass, value: dec(value), tolerance: dec(tolerance) });
    }

    pub fn real(&mut self, key: &str, x: f64) {
        self.values.insert(key.to_owned(), Value::String(dec(x)));
    }

    pub fn value(&mut self, key: &str, v: Value) {
        self.values.insert(key.to_owned(), v);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_atomic(path, self.to_json().as_bytes())
    }
}
