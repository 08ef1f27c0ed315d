//! The result record every query command prints.

use std::time::Duration;

use serde::Serialize;

/// Stable output schema for downstream tooling.
#[derive(Serialize)]
pub struct QueryResult {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub method: String,
    pub elapsed_ms: u128,
}

impl QueryResult {
    pub fn decision(yes: bool, method: &str, elapsed: Duration) -> Self {
        QueryResult {
            verdict: if yes { "yes" } else { "no" }.into(),
            coefficient: None,
            witness: None,
            method: method.into(),
            elapsed_ms: elapsed.as_millis(),
        }
    }

    pub fn count(coefficient: i64, method: &str, elapsed: Duration) -> Self {
        QueryResult {
            verdict: "count".into(),
            coefficient: Some(coefficient),
            witness: None,
            method: method.into(),
            elapsed_ms: elapsed.as_millis(),
        }
    }

    pub fn print(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string(self).expect("serializable"));
            return;
        }
        match self.verdict.as_str() {
            "count" => println!("coefficient = {}", self.coefficient.unwrap_or(0)),
            v => {
                if let Some(c) = self.coefficient {
                    println!("{v} (coefficient = {c})");
                } else {
                    println!("{v}");
                }
            }
        }
        if let Some(w) = &self.witness {
            println!("witness:");
            print!("{w}");
        }
    }
}
