//! Output rendering: JSON envelope, CSV rows, or a readable report.

use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Json,
    Csv,
    Pretty,
}

pub fn render(mode: OutputMode, command: &str, inputs: &Value, outputs: &Value, wall_time_ms: u64) {
    match mode {
        OutputMode::Json => {
            let envelope = json!({
                "command": command,
                "inputs": inputs,
                "outputs": outputs,
                "wall_time_ms": wall_time_ms,
            });
            println!("{}", serde_json::to_string_pretty(&envelope).expect("serializable"));
        }
        OutputMode::Csv => {
            println!("key,value");
            let mut rows = Vec::new();
            flatten("", outputs, &mut rows);
            for (k, v) in rows {
                println!("{},{}", k, csv_escape(&v));
            }
        }
        OutputMode::Pretty => {
            println!("# {command}  ({wall_time_ms} ms)");
            if let Some(rows) = outputs.get("rows").and_then(Value::as_array) {
                for row in rows {
                    let pass = row.get("pass").and_then(Value::as_bool).unwrap_or(false);
                    let label = row
                        .get("row")
                        .or_else(|| row.get("lambda"))
                        .or_else(|| row.get("k"))
                        .map(render_scalar)
                        .unwrap_or_default();
                    let detail = row.get("detail").map(render_scalar).unwrap_or_default();
                    println!("{}  {}  {}", if pass { "PASS" } else { "FAIL" }, label, detail);
                }
                if let Some(all) = outputs.get("all_pass").and_then(Value::as_bool) {
                    println!("overall: {}", if all { "PASS" } else { "FAIL" });
                }
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(outputs).expect("serializable")
                );
            }
        }
    }
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, val, out);
            }
        }
        Value::Array(items) => {
            for (i, val) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), val, out);
            }
        }
        other => out.push((prefix.to_string(), render_scalar(other))),
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
