//! Output records and their JSON/CSV encodings.

use num_rational::Rational64;
use pin2_core::sums::ManolescuSet;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Integers as JSON numbers, anything else as an exact "k/2" string.
pub fn rational(x: Rational64) -> Value {
    if x.is_integer() {
        json!(x.to_integer())
    } else {
        json!(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn manolescu_set(m: &ManolescuSet) -> Value {
    json!({
        "alpha": rational(m.alpha),
        "beta": rational(m.beta),
        "gamma": rational(m.gamma),
        "delta": rational(m.delta),
    })
}

pub struct Record {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub provenance: Vec<Value>,
}

impl Record {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("inputs".into(), self.inputs.clone());
        m.insert("result".into(), self.result.clone());
        m.insert(
            "dtable_provenance".into(),
            Value::Array(self.provenance.clone()),
        );
        m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        Value::Object(m)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut rows = Vec::new();
                flatten("", &self.to_json(), &mut rows);
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["key", "value"]).expect("in-memory write");
                for (k, v) in rows {
                    w.write_record([k, v]).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
            }
        }
    }
}

/// Leaves of a JSON value keyed by dotted paths.
pub fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(a) => {
            if a.is_empty() {
                out.push((prefix.to_string(), String::new()));
            }
            for (i, x) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halves_are_strings() {
        assert_eq!(rational(Rational64::new(1, 2)), json!("1/2"));
        assert_eq!(rational(Rational64::new(-3, 2)), json!("-3/2"));
        assert_eq!(rational(Rational64::from(2)), json!(2));
    }

    #[test]
    fn flatten_paths() {
        let mut rows = Vec::new();
        flatten("", &json!({"a": {"b": [1, "x"]}, "c": null}), &mut rows);
        assert_eq!(
            rows,
            [
                ("a.b.0".into(), "1".into()),
                ("a.b.1".into(), "x".into()),
                ("c".into(), String::new())
            ]
        );
    }
}
