//! Human-readable text mirroring a JSON report: same keys, same nesting.

use serde_json::{Map, Value};

/// Elements print as their rendering and verdicts as `yes (reason)`.
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(xs) if xs.is_empty() => Some("[]".into()),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let s = format!("[{}]", xs.iter().filter_map(inline).collect::<Vec<_>>().join(", "));
            (s.chars().count() <= 72).then_some(s)
        }
        Value::Array(xs) if xs.iter().all(|x| x.as_array().is_some_and(|p| p.iter().all(Value::is_number))) => {
            Some(xs.iter().filter_map(inline).collect::<Vec<_>>().join(" "))
        }
        Value::Object(m) => {
            if let (Some(Value::String(text)), true) = (m.get("text"), m.contains_key("terms")) {
                return Some(text.clone());
            }
            if let (Some(Value::String(label)), Some(Value::String(reason)), 2) =
                (m.get("verdict"), m.get("reason"), m.len())
            {
                return Some(format!("{label} ({reason})"));
            }
            None
        }
        _ => None,
    }
}

fn object(m: &Map<String, Value>, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    for (k, v) in m {
        match inline(v) {
            Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
            None => {
                out.push_str(&format!("{pad}{k}:\n"));
                block(v, depth + 1, out);
            }
        }
    }
}

fn block(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => object(m, depth, out),
        Value::Array(xs) => {
            for x in xs {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        block(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other).unwrap_or_default())),
    }
}

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    block(v, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn verdicts_and_elements_inline() {
        let v = json!({
            "a": { "verdict": "yes", "reason": "r" },
            "b": { "terms": { "0": [1] }, "text": "E11" },
            "c": [1, 2],
        });
        assert_eq!(text(&v), "a: yes (r)\nb: E11\nc: [1, 2]\n");
    }

    #[test]
    fn nested_lists_indent() {
        let v = json!({ "xs": [{ "g": 0 }, { "g": 1 }] });
        assert_eq!(text(&v), "xs:\n  -\n    g: 0\n  -\n    g: 1\n");
    }
}
