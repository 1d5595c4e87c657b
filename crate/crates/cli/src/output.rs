use std::fmt::Display;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

/// A command's payload, renderable as JSON or as lines of text.
pub struct Rendered {
    pub result: Value,
    pub lines: Vec<String>,
}

impl Rendered {
    /// A list of terms: one per text line.
    pub fn terms(key: &str, items: Vec<Value>) -> Self {
        let lines = items.iter().map(text_of).collect();
        let mut map = Map::new();
        map.insert(key.to_string(), Value::Array(items));
        Rendered { result: Value::Object(map), lines }
    }

    /// Named fields: `key value` per text line.
    pub fn record(fields: Vec<(&str, Value)>) -> Self {
        let lines = fields.iter().map(|(k, v)| format!("{k} {}", text_of(v))).collect();
        Rendered { result: Value::Object(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect()), lines }
    }
}

/// Exact JSON number for an integer of any size.
pub fn int(v: impl Display) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

pub fn float(v: f64) -> Value {
    Number::from_f64(v).map_or(Value::Null, Value::Number)
}

pub fn ints<T: Display>(items: impl IntoIterator<Item = T>) -> Vec<Value> {
    items.into_iter().map(int).collect()
}

fn text_of(v: &Value) -> String {
    match v {
        Value::Null => "none".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(text_of).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
