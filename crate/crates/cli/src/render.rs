//! Human-readable rendering of a JSON report tree.

use serde_json::{Map, Value};

pub fn render(value: &Value) -> String {
    let mut out = String::new();
    match value {
        Value::Object(map) => object(map, 0, &mut out),
        other => {
            out.push_str(&scalar(other));
            out.push('\n');
        }
    }
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn is_vector(v: &Value) -> bool {
    matches!(v, Value::Array(xs) if xs.iter().all(is_scalar))
}

fn line(out: &mut String, indent: usize, text: &str) {
    out.extend(std::iter::repeat_n(' ', indent));
    out.push_str(text);
    out.push('\n');
}

fn object(map: &Map<String, Value>, indent: usize, out: &mut String) {
    for (key, v) in map {
        let key = key.replace('_', " ");
        match v {
            Value::String(s) if s.contains('\n') => {
                line(out, indent, &format!("{key}:"));
                for l in s.lines() {
                    line(out, indent + 2, l);
                }
            }
            v if is_scalar(v) => line(out, indent, &format!("{key}: {}", scalar(v))),
            Value::Array(xs) if xs.is_empty() => line(out, indent, &format!("{key}: (none)")),
            Value::Array(xs) if xs.iter().all(is_scalar) => {
                let items: Vec<String> = xs.iter().map(scalar).collect();
                line(out, indent, &format!("{key}: {}", items.join(", ")));
            }
            Value::Array(xs) if xs.iter().all(is_vector) => {
                let items: Vec<String> = xs.iter().map(vector).collect();
                line(out, indent, &format!("{key}: {}", items.join(", ")));
            }
            Value::Array(xs) => {
                line(out, indent, &format!("{key}:"));
                for x in xs {
                    item(x, indent + 2, out);
                }
            }
            Value::Object(m) => {
                line(out, indent, &format!("{key}:"));
                object(m, indent + 2, out);
            }
            _ => unreachable!(),
        }
    }
}

fn vector(v: &Value) -> String {
    let Value::Array(xs) = v else { unreachable!() };
    let items: Vec<String> = xs.iter().map(scalar).collect();
    format!("({})", items.join(","))
}

fn item(v: &Value, indent: usize, out: &mut String) {
    match v {
        Value::Object(m) => {
            let mut block = String::new();
            object(m, indent + 2, &mut block);
            for (k, l) in block.lines().enumerate() {
                if k == 0 {
                    line(out, indent, &format!("- {}", &l[indent + 2..]));
                } else {
                    line(out, 0, l);
                }
            }
            if m.is_empty() {
                line(out, indent, "-");
            }
        }
        v if is_vector(v) => line(out, indent, &format!("- {}", vector(v))),
        v if is_scalar(v) => line(out, indent, &format!("- {}", scalar(v))),
        Value::Array(xs) => {
            line(out, indent, "-");
            for x in xs {
                item(x, indent + 2, out);
            }
        }
        _ => unreachable!(),
    }
}
