//! Collects named results and renders them in one of the output formats.

use serde_json::{json, Value};
use spincc_core::ring::Coefficient;
use spincc_core::{Format, GPoly};

enum Item {
    Poly { plain: String, latex: String, json: Value },
    Text(String),
    Data(Value),
}

pub struct Output {
    format: Format,
    command: String,
    items: Vec<(String, Item)>,
}

impl Output {
    pub fn new(format: Format, command: &str) -> Self {
        Output { format, command: command.to_string(), items: Vec::new() }
    }

    pub fn poly<C: Coefficient>(&mut self, name: impl Into<String>, p: &GPoly<C>) {
        let json = serde_json::to_value(p.to_json()).expect("polynomial json");
        self.items.push((name.into(), Item::Poly { plain: p.render(Format::Plain), latex: p.render(Format::Latex), json }));
    }

    pub fn text(&mut self, name: impl Into<String>, value: impl ToString) {
        self.items.push((name.into(), Item::Text(value.to_string())));
    }

    /// Structured value; plain and LaTeX output show it as compact JSON.
    pub fn data(&mut self, name: impl Into<String>, value: Value) {
        self.items.push((name.into(), Item::Data(value)));
    }

    pub fn render(&self) -> String {
        match self.format {
            Format::Json => {
                let results: Vec<Value> = self
                    .items
                    .iter()
                    .map(|(name, item)| {
                        let value = match item {
                            Item::Poly { json, .. } => json.clone(),
                            Item::Text(t) => Value::String(t.clone()),
                            Item::Data(v) => v.clone(),
                        };
                        json!({ "name": name, "value": value })
                    })
                    .collect();
                let doc = json!({ "command": self.command, "results": results });
                let mut s = serde_json::to_string(&doc).expect("json output");
                s.push('\n');
                s
            }
            Format::Plain | Format::Latex => {
                let mut s = String::new();
                for (name, item) in &self.items {
                    let value = match item {
                        Item::Poly { plain, latex, .. } => {
                            if self.format == Format::Latex {
                                latex.clone()
                            } else {
                                plain.clone()
                            }
                        }
                        Item::Text(t) => t.clone(),
                        Item::Data(v) => v.to_string(),
                    };
                    s.push_str(&format!("{name} = {value}\n"));
                }
                s
            }
        }
    }
}
