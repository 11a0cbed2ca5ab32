//! JSON is the canonical output; the table view is rendered from it.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Table,
}

pub fn render<T: Serialize>(value: &T, format: Format) -> String {
    let json = serde_json::to_value(value).expect("output types serialize");
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut out = String::new();
            table(&json, &mut out);
            out
        }
    }
}

fn table(v: &Value, out: &mut String) {
    match v {
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => rows(items, out),
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in map {
                match v {
                    Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
                        out.push_str(&format!("{k}:\n"));
                        rows(items, out);
                    }
                    _ => out.push_str(&format!("{k:<width$}  {}\n", cell(v))),
                }
            }
        }
        other => {
            out.push_str(&cell(other));
            out.push('\n');
        }
    }
}

fn rows(items: &[Value], out: &mut String) {
    let mut columns: Vec<String> = Vec::new();
    for item in items {
        for k in item.as_object().into_iter().flat_map(|m| m.keys()) {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let body: Vec<Vec<String>> =
        items.iter().map(|item| columns.iter().map(|c| item.get(c).map(cell).unwrap_or_default()).collect()).collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| body.iter().map(|r| r[i].chars().count()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| {
        let mut l: String = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}  ")).collect();
        l.truncate(l.trim_end().len());
        l.push('\n');
        l
    };
    out.push_str(&line(&columns));
    for r in &body {
        out.push_str(&line(r));
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(|i| match (i.get("theorem"), i.get("verdict"), i.get("name"), i.get("label")) {
                (Some(Value::String(t)), Some(Value::String(v)), _, _) => format!("{t}={v}"),
                (_, _, Some(Value::String(n)), _) => format!("{n}={}", i.get("ok").map(cell).unwrap_or_default()),
                (_, _, _, Some(Value::String(l))) => {
                    let get = |k: &str| i.get(k).map(cell).unwrap_or_default();
                    format!("{l}: {} in {{{}}} mod {}", get("lhs"), get("rhs"), get("modulus"))
                }
                _ => cell(i),
            })
            .collect::<Vec<_>>()
            .join("; "),
        Value::Object(map) => map.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
