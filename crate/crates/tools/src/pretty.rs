//! Plain-text rendering of report values for `--pretty`.

use serde_json::Value;

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    if !out.ends_with('\n') {
        out.push('\n');
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flat_list(v: &[Value]) -> Option<String> {
    let items: Option<Vec<String>> = v.iter().map(scalar).collect();
    items.map(|xs| format!("[{}]", xs.join(", ")))
}

fn matrix(v: &[Value]) -> Option<Vec<Vec<String>>> {
    if v.is_empty() {
        return None;
    }
    v.iter().map(|row| row.as_array().and_then(|r| r.iter().map(scalar).collect())).collect()
}

fn pad(n: usize) -> String {
    " ".repeat(n)
}

fn write_table(out: &mut String, rows: &[Vec<String>], indent: usize) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|j| rows.iter().filter_map(|r| r.get(j)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    for r in rows {
        let cells: Vec<String> = r.iter().enumerate().map(|(j, s)| format!("{s:>w$}", w = widths[j])).collect();
        out.push_str(&format!("{}{}\n", pad(indent), cells.join("  ")));
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Array(items) => {
                        if let Some(line) = flat_list(items) {
                            out.push_str(&format!("{}{k}: {line}\n", pad(indent)));
                        } else if let Some(rows) = matrix(items) {
                            out.push_str(&format!("{}{k}:\n", pad(indent)));
                            write_table(out, &rows, indent + 2);
                        } else {
                            out.push_str(&format!("{}{k}:\n", pad(indent)));
                            write_value(out, x, indent + 2);
                        }
                    }
                    Value::Object(_) => {
                        out.push_str(&format!("{}{k}:\n", pad(indent)));
                        write_value(out, x, indent + 2);
                    }
                    _ => out.push_str(&format!("{}{k}: {}\n", pad(indent), scalar(x).unwrap_or_default())),
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match x {
                    Value::Object(_) => {
                        let mut inner = String::new();
                        write_value(&mut inner, x, indent + 2);
                        let body = inner.trim_start();
                        out.push_str(&format!("{}- {body}", pad(indent)));
                    }
                    Value::Array(a) => out.push_str(&format!(
                        "{}- {}\n",
                        pad(indent),
                        flat_list(a).unwrap_or_else(|| x.to_string())
                    )),
                    _ => out.push_str(&format!("{}- {}\n", pad(indent), scalar(x).unwrap_or_default())),
                }
            }
        }
        _ => out.push_str(&format!("{}{}\n", pad(indent), scalar(v).unwrap_or_default())),
    }
}
