//! Experiment reports: schema-versioned JSON (or CSV tables), deterministic
//! for a fixed (config, seed) pair — the runtime field is informational and
//! excluded from the determinism contract.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use anyhow::Context;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report {
    pub id: String,
    pub schema: u32,
    pub tool_version: String,
    /// Echo of the parameters, flat key → value.
    pub params: BTreeMap<String, String>,
    pub results: serde_json::Value,
    /// Search statistics (nodes, counts, sizes) per experiment.
    pub stats: BTreeMap<String, serde_json::Value>,
    pub runtime_ms: u128,
}

impl Report {
    pub fn new(id: &str) -> Self {
        Report {
            id: id.to_string(),
            schema: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            params: BTreeMap::new(),
            results: serde_json::Value::Null,
            stats: BTreeMap::new(),
            runtime_ms: 0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn stat(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.stats.insert(
            key.to_string(),
            serde_json::to_value(value).expect("stats serialize"),
        );
        self
    }

    pub fn results(&mut self, value: impl Serialize) -> &mut Self {
        self.results = serde_json::to_value(value).expect("results serialize");
        self
    }

    /// Render the results as simple CSV: tables of (key, value) rows, with
    /// arrays flattened by index.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("key,value\n");
        fn walk(prefix: &str, v: &serde_json::Value, out: &mut String) {
            match v {
                serde_json::Value::Object(map) => {
                    for (k, v) in map {
                        let key = if prefix.is_empty() {
                            k.clone()
                        } else {
                            format!("{prefix}.{k}")
                        };
                        walk(&key, v, out);
                    }
                }
                serde_json::Value::Array(items) => {
                    for (i, v) in items.iter().enumerate() {
                        walk(&format!("{prefix}[{i}]"), v, out);
                    }
                }
                other => {
                    let rendered = match other {
                        serde_json::Value::String(s) => s.clone(),
                        v => v.to_string(),
                    };
                    out.push_str(&format!("{prefix},{rendered}\n"));
                }
            }
        }
        walk("", &self.results, &mut out);
        out
    }

    pub fn write(&self, out: Option<&Path>, format: &str) -> anyhow::Result<()> {
        let body = match format {
            "csv" => self.to_csv(),
            _ => serde_json::to_string_pretty(self).context("serialize report")? + "\n",
        };
        match out {
            Some(path) => {
                std::fs::write(path, body)
                    .with_context(|| format!("write report to {}", path.display()))?;
            }
            None => {
                std::io::stdout().write_all(body.as_bytes()).context("write stdout")?;
            }
        }
        Ok(())
    }
}
