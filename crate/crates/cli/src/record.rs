//! JSON output envelope. Keys come out sorted because `serde_json::Value`
//! objects are B-tree maps.

use serde_json::{json, Value as Json};

pub const SCHEMA_VERSION: &str = "1";

pub fn output_record(command: &str, inputs: Json, results: Json) -> Json {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    })
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
pub fn num(v: i128) -> Json {
    match i64::try_from(v) {
        Ok(x) => Json::from(x),
        Err(_) => Json::String(v.to_string()),
    }
}

pub fn render(record: &Json) -> String {
    let mut s = serde_json::to_string_pretty(record).expect("JSON values always serialize");
    s.push('\n');
    s
}
