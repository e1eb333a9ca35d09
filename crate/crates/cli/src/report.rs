//! JSON values for core types, and the text rendering derived from them.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use qalg_core::auslander::{ClaimReport, FactValue};
use qalg_core::homology::{DomDim, HomDim};
use qalg_core::tilting::PropertyReport;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let hex: String = hash.iter().map(|b| format!("{:02x}", b)).collect();
    format!("sha256:{}", hex)
}

pub fn hom_dim(d: HomDim) -> Value {
    match d {
        HomDim::Finite(n) => json!(n),
        HomDim::ExceedsCap(_) => json!("exceeds_cap"),
    }
}

pub fn dom_dim(d: DomDim) -> Value {
    match d {
        DomDim::Finite(n) => json!(n),
        DomDim::AtLeastCap(_) => json!("at_least_cap"),
    }
}

/// 0-based vertices to the 1-based file convention.
pub fn vertices(vs: &[usize]) -> Value {
    json!(vs.iter().map(|v| v + 1).collect::<Vec<_>>())
}

pub fn property(r: &PropertyReport) -> Value {
    let failures: Vec<Value> =
        r.failures().map(|c| json!({ "module": c.module, "end_term": c.end_term })).collect();
    json!({ "holds": r.holds, "checked": r.checks.len(), "failures": failures })
}

pub fn claim(r: &ClaimReport) -> Value {
    let mut facts = Map::new();
    for (k, v) in &r.facts {
        let v = match v {
            FactValue::Bool(b) => json!(b),
            FactValue::Count(n) => json!(n),
            FactValue::Ids(ids) => json!(ids),
            FactValue::Text(s) => json!(s),
        };
        facts.insert(k.clone(), v);
    }
    json!({ "claim": r.claim.id(), "verdict": r.verdict.to_string(), "facts": facts })
}

pub fn envelope(input_digest: Option<&str>, results: Value, flags: Value) -> Value {
    json!({
        "tool_version": TOOL_VERSION,
        "input_digest": input_digest,
        "results": results,
        "flags": flags,
    })
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object()) => {
            let parts: Vec<String> = a.iter().map(|x| scalar_text(x).unwrap_or_else(|| x.to_string())).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

/// Indented `key: value` lines.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

fn render_into(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar_text(x) {
                    Some(s) => out.push_str(&format!("{}{}: {}\n", pad, k, s)),
                    None => {
                        out.push_str(&format!("{}{}:\n", pad, k));
                        render_into(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar_text(x) {
                    Some(s) => out.push_str(&format!("{}- {}\n", pad, s)),
                    None => {
                        out.push_str(&format!("{}-\n", pad));
                        render_into(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{}{}\n", pad, scalar_text(other).unwrap())),
    }
}
