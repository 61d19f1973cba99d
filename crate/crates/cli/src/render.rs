//! Plain-text rendering of JSON reports for `--pretty`.

use std::fmt::Write as _;

use serde_json::Value;

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(is_scalar) => {
            items.iter().map(cell).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn is_record_list(v: &Value) -> bool {
    matches!(v, Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object))
}

fn grid(out: &mut String, indent: &str, rows: &[Value]) {
    let mut columns: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().into_iter().flat_map(|m| m.keys()) {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            columns
                .iter()
                .map(|c| cell(r.get(c).unwrap_or(&Value::Null)))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = (0..columns.len())
        .map(|i| {
            cells
                .iter()
                .map(|r| r[i].chars().count())
                .chain([columns[i].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |out: &mut String, row: &[String]| {
        let padded: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{indent}{}", padded.join("  ").trim_end());
    };
    line(out, &columns);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    line(out, &rule);
    for r in &cells {
        line(out, r);
    }
}

fn block(out: &mut String, indent: &str, v: &Value) {
    match v {
        Value::Object(map) => {
            let width = map
                .iter()
                .filter(|(_, x)| !is_record_list(x) && !x.is_object())
                .map(|(k, _)| k.chars().count())
                .max()
                .unwrap_or(0);
            for (k, x) in map
                .iter()
                .filter(|(_, x)| !is_record_list(x) && !x.is_object())
            {
                let _ = writeln!(out, "{indent}{k:<width$}  {}", cell(x));
            }
            for (k, x) in map
                .iter()
                .filter(|(_, x)| is_record_list(x) || x.is_object())
            {
                let _ = writeln!(out, "\n{indent}{k}");
                block(out, &format!("{indent}  "), x);
            }
        }
        Value::Array(items) if is_record_list(v) => {
            let flat = items.iter().all(|r| {
                r.as_object()
                    .is_some_and(|m| m.values().all(|x| !is_record_list(x)))
            });
            if flat {
                grid(out, indent, items);
            } else {
                for (i, r) in items.iter().enumerate() {
                    if i > 0 {
                        out.push('\n');
                    }
                    let _ = writeln!(out, "{indent}[{}]", i + 1);
                    block(out, &format!("{indent}  "), r);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                let _ = writeln!(out, "{indent}{}", cell(x));
            }
        }
        other => {
            let _ = writeln!(out, "{indent}{}", cell(other));
        }
    }
}

pub fn table(v: &Value) -> String {
    let mut out = String::new();
    block(&mut out, "", v);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn records_become_aligned_columns() {
        let t = table(&json!([{"name": "a1", "degree": 1}, {"name": "soc(V1)", "degree": 3}]));
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "degree  name");
        assert_eq!(lines[2], "1       a1");
        assert_eq!(lines[3], "3       soc(V1)");
    }

    #[test]
    fn scalars_before_sections() {
        let t = table(&json!({"dim": 41, "rows": [{"x": 1}], "series": [41, 29, 0]}));
        assert!(t.starts_with("dim     41\nseries  41, 29, 0\n\nrows\n"));
    }
}
