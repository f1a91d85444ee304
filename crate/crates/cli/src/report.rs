use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Value of a named verdict.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Verdict {
    Bool(bool),
    Number(u128),
    Text(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedVerdict {
    pub name: String,
    pub value: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    pub passed: bool,
    pub verdicts: Vec<NamedVerdict>,
    pub witness: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

/// SHA-256 over the input files, each prefixed by its byte length.
pub fn digest_inputs(inputs: &[Vec<u8>]) -> String {
    let mut hasher = Sha256::new();
    for bytes in inputs {
        hasher.update((bytes.len() as u64).to_le_bytes());
        hasher.update(bytes);
    }
    format!("sha256:{:x}", hasher.finalize())
}

impl Report {
    pub fn new(command: &str, inputs: &[Vec<u8>]) -> Report {
        Report {
            command: command.to_string(),
            inputs_digest: digest_inputs(inputs),
            passed: true,
            verdicts: Vec::new(),
            witness: BTreeMap::new(),
            timing_ms: None,
        }
    }

    pub fn verdict(&mut self, name: &str, value: Verdict) -> &mut Self {
        self.verdicts.push(NamedVerdict { name: name.to_string(), value });
        self
    }

    /// A verdict that also decides the outcome.
    pub fn check(&mut self, name: &str, ok: bool) -> bool {
        self.passed &= ok;
        self.verdict(name, Verdict::Bool(ok));
        ok
    }

    pub fn witness(&mut self, name: &str, value: impl Serialize) -> &mut Self {
        let value = serde_json::to_value(value).expect("witness data serializes");
        self.witness.insert(name.to_string(), value);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        writeln!(out, "inputs: {}", self.inputs_digest).unwrap();
        for v in &self.verdicts {
            let value = match &v.value {
                Verdict::Bool(b) => b.to_string(),
                Verdict::Number(n) => n.to_string(),
                Verdict::Text(t) => t.clone(),
            };
            writeln!(out, "{}: {}", v.name, value).unwrap();
        }
        for (name, value) in &self.witness {
            let value = match value {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            writeln!(out, "{name}: {value}").unwrap();
        }
        if let Some(ms) = self.timing_ms {
            writeln!(out, "time: {ms:.3} ms").unwrap();
        }
        writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_depends_on_boundaries() {
        let a = digest_inputs(&[b"ab".to_vec(), b"c".to_vec()]);
        let b = digest_inputs(&[b"a".to_vec(), b"bc".to_vec()]);
        assert_ne!(a, b);
        assert!(a.starts_with("sha256:"));
        assert_eq!(a.len(), "sha256:".len() + 64);
    }

    #[test]
    fn failing_check_fails_report() {
        let mut r = Report::new("ring validate", &[]);
        r.check("associative", true);
        assert!(r.passed);
        r.check("unit", false);
        assert!(!r.passed);
        assert!(r.to_text().ends_with("result: FAIL\n"));
    }
}
