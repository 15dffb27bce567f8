use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use weda_core::{Rational, ScaledCost};

/// An exact cost as a reduced fraction and in units of `1/a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostReport {
    pub rational: String,
    pub units: u64,
}

impl CostReport {
    pub fn new(c: ScaledCost) -> Self {
        CostReport { rational: fraction(c.value()), units: c.units }
    }
}

pub fn fraction(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// What every command prints. Fields that do not apply are omitted.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    /// `WITHIN`, `EXCEEDS`, `YES`, `NO`, `PASS`, `FAIL` or `WRITTEN`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<CostReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probe_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lce_queries: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
    pub params: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport { command: command.into(), ..Default::default() }
    }

    pub fn param(mut self, key: &str, v: impl Serialize) -> Self {
        self.params.insert(key.into(), serde_json::to_value(v).unwrap_or(Value::Null));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap_or_default()
    }

    pub fn to_human(&self) -> String {
        let mut lines = Vec::new();
        match (&self.verdict, &self.value) {
            (Some(v), Some(c)) => lines.push(format!("{v} {} ({} units)", c.rational, c.units)),
            (Some(v), None) => lines.push(v.clone()),
            (None, Some(c)) => lines.push(format!("{} ({} units)", c.rational, c.units)),
            (None, None) => {}
        }
        if let Some(r) = &self.regime {
            lines.push(format!("regime: {r}"));
        }
        if let Some(p) = &self.path {
            lines.push(format!("path: {p}"));
        }
        if let Some(p) = self.probe_count {
            lines.push(format!("probes: {p}"));
        }
        if let Some(q) = self.lce_queries {
            lines.push(format!("lce queries: {q}"));
        }
        if let Some(s) = self.seed {
            lines.push(format!("seed: {s}"));
        }
        if let Some(t) = self.wall_time_ms {
            lines.push(format!("time: {t:.3} ms"));
        }
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if !params.is_empty() {
            lines.push(format!("params: {}", params.join(" ")));
        }
        for n in &self.notes {
            lines.push(format!("note: {n}"));
        }
        if let Some(d) = &self.data {
            lines.push(serde_json::to_string_pretty(d).unwrap_or_default());
        }
        lines.join("\n")
    }
}
