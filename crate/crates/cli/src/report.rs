use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use polyradii::exact::Rational;

#[derive(Serialize)]
pub struct InputDigest {
    pub role: String,
    pub source: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub sha256: String,
}

/// What one invocation did. Every number is an exact rational string; the
/// optional approximations live in their own, clearly labeled field.
#[derive(Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    pub exit_status: i32,
    #[serde(rename = "approx_non_normative", skip_serializing_if = "Option::is_none")]
    pub approx: Option<Value>,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            inputs: Vec::new(),
            results: Value::Null,
            counterexample: None,
            exit_status: 0,
            approx: None,
        }
    }

    /// Records a violation; the first counterexample is kept.
    pub fn fail(&mut self, counterexample: Value) {
        self.exit_status = 1;
        self.counterexample.get_or_insert(counterexample);
    }

    pub fn add_approx(&mut self) {
        self.approx = Some(approximate(&self.results));
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Same tree with every rational string replaced by its nearest double.
fn approximate(v: &Value) -> Value {
    match v {
        Value::String(s) if s.bytes().any(|b| b.is_ascii_digit()) => match s.parse::<Rational>() {
            Ok(q) => serde_json::Number::from_f64(q.to_f64()).map_or(Value::Null, Value::Number),
            Err(_) => v.clone(),
        },
        Value::Array(xs) => Value::Array(xs.iter().map(approximate).collect()),
        Value::Object(m) => Value::Object(m.iter().map(|(k, x)| (k.clone(), approximate(x))).collect()),
        _ => v.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn approximations_leave_labels_alone() {
        let v = json!({ "value": "-3/4", "chain": "Chain-1.6", "rel": ["<", "="], "n": 3 });
        assert_eq!(approximate(&v), json!({ "value": -0.75, "chain": "Chain-1.6", "rel": ["<", "="], "n": 3 }));
    }

    #[test]
    fn first_counterexample_wins() {
        let mut r = RunReport::new(vec![]);
        r.fail(json!(1));
        r.fail(json!(2));
        assert_eq!((r.exit_status, r.counterexample), (1, Some(json!(1))));
        assert_eq!(digest(b"").len(), 64);
    }
}
