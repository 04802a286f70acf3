//! JSON and plain-text rendering of check reports.

use prelie::cochain::{Cochain, CochainKind};
use prelie::format::cochain_to_file;
use prelie::scalar::format_scalar;
use prelie::verdict::{Counterexample, Report, Verdict};
use prelie::Scalar;
use serde_json::{json, Value};

pub fn counterexample_json(cx: &Counterexample) -> Value {
    json!({
        "law": cx.law,
        "indices": cx.indices,
        "difference": cx.difference.iter().map(format_scalar).collect::<Vec<_>>(),
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Pass => json!({ "pass": true }),
        Verdict::Fail(cx) => json!({ "pass": false, "counterexample": counterexample_json(cx) }),
    }
}

pub fn named_verdict_json(name: &str, v: &Verdict) -> Value {
    let mut out = verdict_json(v);
    out["name"] = json!(name);
    out
}

pub fn report_json(r: &Report) -> Value {
    json!({
        "pass": r.passed(),
        "equations": r
            .items
            .iter()
            .map(|(label, v)| {
                let mut item = verdict_json(v);
                item["label"] = json!(label);
                item
            })
            .collect::<Vec<_>>(),
    })
}

pub fn coords_json(coords: &[Scalar]) -> Value {
    json!(coords.iter().map(format_scalar).collect::<Vec<_>>())
}

pub fn cochain_json(kind: CochainKind, degree: usize, coords: &[Scalar]) -> Value {
    let c = Cochain {
        kind,
        degree,
        coords: coords.to_vec(),
    };
    serde_json::to_value(cochain_to_file(&c)).expect("cochain serializes")
}

/// Plain-text rendering: one line per pass/fail item, then nested values.
pub fn render_text(value: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            let mut out = String::new();
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        out.push_str(&render_text(v, indent + 1));
                    }
                    _ => out.push_str(&format!("{pad}{k}: {v}\n")),
                }
            }
            out
        }
        Value::Array(items) => {
            let mut out = String::new();
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        out.push_str(&render_text(item, indent + 1));
                    }
                    _ => out.push_str(&format!("{pad}- {item}\n")),
                }
            }
            out
        }
        other => format!("{pad}{other}\n"),
    }
}
