use std::collections::BTreeMap;
use std::sync::Arc;

use equihodge::hodge::{HodgeDiamond, QuotientDiamond};
use equihodge::io::{class_headers, describe_classes, render_diamond};
use equihodge::{ClassFunction, FiniteGroup};
use serde_json::{json, Value};

pub struct Report {
    pub command: String,
    pub group: Arc<FiniteGroup>,
    pub payload: Value,
    pub text: String,
}

impl Report {
    pub fn json(&self) -> String {
        let doc = json!({
            "command": self.command,
            "classes": class_headers(&self.group),
            "payload": self.payload,
        });
        serde_json::to_string_pretty(&doc).expect("reports serialize")
    }

    pub fn table(&self) -> String {
        format!(
            "command: {}\ngroup order {}, {} classes\n{}\n{}",
            self.command,
            self.group.order(),
            self.group.num_classes(),
            describe_classes(&self.group),
            self.text.trim_end()
        )
    }
}

/// Labelled rows of class-function values under `c0 c1 ...` columns.
pub fn character_table(rows: &[(String, ClassFunction)]) -> String {
    let Some((_, first)) = rows.first() else {
        return String::new();
    };
    let classes = first.values().len();
    let label_width = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
    let mut widths: Vec<usize> = (0..classes).map(|c| format!("c{c}").len()).collect();
    for (_, f) in rows {
        for (c, v) in f.values().iter().enumerate() {
            widths[c] = widths[c].max(v.to_string().len());
        }
    }
    let mut out = format!("{:label_width$}", "");
    for (c, w) in widths.iter().enumerate() {
        out.push_str(&format!("  {:>w$}", format!("c{c}")));
    }
    out.push('\n');
    for (label, f) in rows {
        out.push_str(&format!("{label:label_width$}"));
        for (v, w) in f.values().iter().zip(&widths) {
            out.push_str(&format!("  {v:>w$}"));
        }
        out.push('\n');
    }
    out
}

pub fn values(f: &ClassFunction) -> Value {
    json!(f.values())
}

pub fn keyed_values(entries: &BTreeMap<(usize, usize), ClassFunction>) -> Value {
    let map: serde_json::Map<String, Value> = entries
        .iter()
        .map(|(&(p, q), v)| (format!("{p},{q}"), values(v)))
        .collect();
    Value::Object(map)
}

pub fn diamond_text(d: &HodgeDiamond) -> String {
    let dims = d.dimensions();
    let grid = render_diamond(d.dim, |p, q| dims[&(p, q)].to_string());
    let rows: Vec<(String, ClassFunction)> = d
        .entries
        .iter()
        .map(|(&(p, q), v)| (format!("H^{{{p},{q}}}"), v.clone()))
        .collect();
    format!("dimensions\n{grid}\n\ncharacters\n{}", character_table(&rows))
}

pub fn diamond_json(d: &HodgeDiamond) -> Value {
    let dims: serde_json::Map<String, Value> = d
        .dimensions()
        .iter()
        .map(|(&(p, q), v)| (format!("{p},{q}"), json!(v)))
        .collect();
    json!({ "dim": d.dim, "characters": keyed_values(&d.entries), "dimensions": dims })
}

pub fn quotient_text(d: &QuotientDiamond) -> String {
    render_diamond(d.dim, |p, q| d.get(p, q).to_string())
}

pub fn quotient_json(d: &QuotientDiamond) -> Value {
    let map: serde_json::Map<String, Value> = d
        .entries
        .iter()
        .map(|(&(p, q), v)| (format!("{p},{q}"), json!(v)))
        .collect();
    json!({ "dim": d.dim, "dimensions": map })
}
