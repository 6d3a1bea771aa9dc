//! Machine-readable report documents.
//!
//! Reports are evidence: every rational is exact ("p/q"), subsets are sorted
//! index arrays, and re-running a command on the same inputs produces a
//! byte-identical document. The only floating point anywhere is the
//! display-only `approx` field next to each exact value.

use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use subapprox::verify::{ApproxReport, PropertyReport, Theta, Witness};
use subapprox::{format_rational, Mask, Rat};

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub args: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub verdicts: BTreeMap<String, bool>,
    pub values: BTreeMap<String, Value>,
    pub witnesses: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            args: BTreeMap::new(),
            seed: None,
            verdicts: BTreeMap::new(),
            values: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            output: None,
        }
    }

    pub fn arg(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.args.insert(key.to_string(), value.into());
        self
    }

    pub fn verdict(&mut self, key: &str, holds: bool) -> &mut Self {
        self.verdicts.insert(key.to_string(), holds);
        self
    }

    pub fn value_rat(&mut self, key: &str, value: &Rat) -> &mut Self {
        self.values.insert(key.to_string(), rat_value(value));
        self
    }

    pub fn value_raw(&mut self, key: &str, value: Value) -> &mut Self {
        self.values.insert(key.to_string(), value);
        self
    }

    pub fn witness(&mut self, key: &str, value: Value) -> &mut Self {
        self.witnesses.insert(key.to_string(), value);
        self
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// {"exact": "p/q", "approx": 0.8333...} — approx is display-only.
pub fn rat_value(r: &Rat) -> Value {
    json!({
        "exact": format_rational(r),
        "approx": subapprox::rational::to_f64(r),
    })
}

pub fn subset_value(mask: Mask) -> Value {
    Value::from(mask.to_sorted_vec())
}

pub fn witness_value(w: &Witness) -> Value {
    match w {
        Witness::Subset(s) => json!({ "subset": subset_value(*s) }),
        Witness::SubsetPair { s, t } => json!({
            "subset": subset_value(*s),
            "other": subset_value(*t),
        }),
        Witness::SubsetElems { s, i, j } => json!({
            "subset": subset_value(*s),
            "i": i,
            "j": j,
        }),
        Witness::Edge { u, v, component } => json!({
            "edge": [u, v],
            "component": subset_value(*component),
        }),
    }
}

/// Records a property verdict plus its witness when it fails.
pub fn property_into(report: &mut Report, key: &str, property: &PropertyReport) {
    report.verdict(key, property.holds);
    if let Some(w) = &property.witness {
        report.witness(key, witness_value(w));
    }
}

/// Records a full sandwich report under the given prefix.
pub fn approx_into(report: &mut Report, ratio: &ApproxReport) {
    report.verdict("lower_ok", ratio.lower_ok);
    match &ratio.theta {
        Theta::Finite(t) => {
            report.verdict("theta_finite", true);
            report.value_rat("theta", t);
        }
        Theta::Infinite => {
            report.verdict("theta_finite", false);
            report.value_raw("theta", Value::String("infinite".to_string()));
        }
    }
    if let Some(w) = ratio.witness_theta {
        report.witness("theta", subset_value(w));
    }
    if let Some(w) = ratio.witness_lower {
        report.witness("lower_violation", subset_value(w));
    }
    if !ratio.zero_set_conflicts.is_empty() {
        report.witness(
            "zero_set_conflicts",
            Value::from(
                ratio
                    .zero_set_conflicts
                    .iter()
                    .map(|m| subset_value(*m))
                    .collect::<Vec<_>>(),
            ),
        );
    }
}
