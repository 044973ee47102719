//! Deterministic run reports.
//!
//! Every CLI invocation produces one report: the echoed command, a digest
//! of the inputs, a results payload, and machine-coded warnings. Identical
//! inputs produce byte-identical output; all maps are ordered and nothing
//! iterates in hash order.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Machine-readable warning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Warning {
    pub code: String,
    pub message: String,
}

impl Warning {
    pub fn new(code: &str, message: impl Into<String>) -> Warning {
        Warning { code: code.into(), message: message.into() }
    }
}

/// Warning codes emitted by the CLI.
pub mod codes {
    /// The ladder window is a heuristic: no effective bound exists for the
    /// q-powers contributing walls.
    pub const WINDOW_HEURISTIC: &str = "W_WINDOW_HEURISTIC";
    /// Distinct decompositions define coinciding wall loci.
    pub const WALL_COINCIDENCE: &str = "W_WALL_COINCIDENCE";
    /// A local model has negative expected dimension.
    pub const DEGENERATE_MODEL: &str = "W_DEGENERATE_MODEL";
    /// The report repeats a conjectural annotation from its source data.
    pub const CONJECTURAL_ANNOTATION: &str = "W_CONJECTURAL_ANNOTATION";
}

/// A single self-describing run document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub results: serde_json::Value,
    pub warnings: Vec<Warning>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, inputs: &[&[u8]], results: serde_json::Value) -> RunReport {
        RunReport {
            command: command.into(),
            input_digest: digest(inputs),
            results,
            warnings: Vec::new(),
        }
    }

    pub fn warn(&mut self, warning: Warning) {
        self.warnings.push(warning);
    }

    /// Structured rendering: one pretty-printed JSON document.
    pub fn to_structured(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Text rendering: a stable line-oriented dump of the same data.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input-digest: {}\n", self.input_digest));
        render_value(&mut out, "result", &self.results);
        for w in &self.warnings {
            out.push_str(&format!("warning[{}]: {}\n", w.code, w.message));
        }
        out
    }
}

fn render_value(out: &mut String, path: &str, value: &serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            for (key, inner) in map {
                render_value(out, &format!("{path}.{key}"), inner);
            }
        }
        serde_json::Value::Array(items) => {
            if items.is_empty() {
                out.push_str(&format!("{path}: []\n"));
            }
            for (i, inner) in items.iter().enumerate() {
                render_value(out, &format!("{path}[{i}]"), inner);
            }
        }
        other => {
            out.push_str(&format!("{path}: {other}\n"));
        }
    }
}

/// Hex digest of the concatenated input byte streams.
pub fn digest(inputs: &[&[u8]]) -> String {
    let mut hasher = Sha256::new();
    for chunk in inputs {
        hasher.update((chunk.len() as u64).to_le_bytes());
        hasher.update(chunk);
    }
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}
