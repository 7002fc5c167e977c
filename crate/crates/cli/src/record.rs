//! Command results, rendered as one line of `key=value` text or as JSON.
//!
//! Every integer is emitted as a decimal string so arbitrary precision
//! survives JSON. Object keys are sorted, so identical inputs give identical
//! bytes.

use std::fmt::Display;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub command: &'static str,
    pub inputs: Vec<(&'static str, Value)>,
    pub outputs: Vec<(&'static str, Value)>,
}

impl OutputRecord {
    pub fn new(command: &'static str) -> Self {
        OutputRecord {
            command,
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    pub fn input(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.inputs.push((key, value.into()));
        self
    }

    pub fn output(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.outputs.push((key, value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.outputs.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> String {
        let section = |pairs: &[(&str, Value)]| {
            Value::Object(
                pairs
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect::<Map<_, _>>(),
            )
        };
        let mut root = Map::new();
        root.insert("command".into(), Value::String(self.command.into()));
        root.insert("inputs".into(), section(&self.inputs));
        root.insert("outputs".into(), section(&self.outputs));
        Value::Object(root).to_string()
    }

    pub fn to_text(&self) -> String {
        self.outputs
            .iter()
            .map(|(k, v)| format!("{k}={}", text(v)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(text).collect::<Vec<_>>().join(",")),
        Value::Object(map) => format!(
            "{{{}}}",
            map.iter()
                .map(|(k, v)| format!("{k}:{}", text(v)))
                .collect::<Vec<_>>()
                .join(",")
        ),
    }
}

pub fn num(v: impl Display) -> Value {
    Value::String(v.to_string())
}

pub fn nums<T: Display>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(num).collect())
}
