//! The JSON run report every subcommand prints to stdout.

use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

/// Outcome summary of one command invocation.  Everything except `timing_ms`
/// is deterministic for exact-arithmetic commands; floating-point metrics are
/// printed with fixed precision by the producers.
#[derive(Debug, Serialize)]
pub struct RunReport {
    /// Subcommand name.
    pub command: String,
    /// Input description (expression text, file paths, parameters).
    pub inputs: BTreeMap<String, String>,
    /// Paths of files written, in the order they were produced.
    pub outputs: Vec<String>,
    /// Command-specific metrics (f-vectors, shape measures, residuals...).
    pub metrics: serde_json::Value,
    /// Wall-clock duration of the command body, milliseconds.
    pub timing_ms: u128,
}

impl RunReport {
    /// Runs `body`, timing it, and assembles the report around its metrics.
    pub fn run(
        command: &str,
        inputs: BTreeMap<String, String>,
        body: impl FnOnce(&mut Vec<String>) -> anyhow::Result<serde_json::Value>,
    ) -> anyhow::Result<RunReport> {
        let start = Instant::now();
        let mut outputs = Vec::new();
        let metrics = body(&mut outputs)?;
        Ok(RunReport {
            command: command.to_string(),
            inputs,
            outputs,
            metrics,
            timing_ms: start.elapsed().as_millis(),
        })
    }

    /// Serializes to pretty JSON (stable key order).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Convenience constructor for the `inputs` map.
pub fn inputs<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}
