//! JSON rendering of solver results. Objects use sorted keys, so identical
//! inputs give byte-identical output.

use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::BoundsReport;
use crate::coloring::Coloring;
use crate::solver::{SolveResult, Witness};

/// `[[vertex, color], ...]`.
pub fn coloring_pairs(c: &Coloring) -> Value {
    Value::Array(
        c.colors()
            .iter()
            .enumerate()
            .map(|(v, &color)| json!([v, color]))
            .collect(),
    )
}

/// `{parameter, value, status, witness, stats, bounds}`. Wall time appears
/// under `stats.wall_ms` only when `timing` is set.
pub fn solve_json(r: &SolveResult, bounds: Option<&BoundsReport>, timing: bool) -> Value {
    let witness = match &r.witness {
        Some(Witness::Coloring(c)) => coloring_pairs(c),
        Some(Witness::Code(code)) => json!(code),
        None => Value::Null,
    };
    let mut stats = json!({ "nodes": r.stats.nodes });
    if timing {
        stats["wall_ms"] = json!(r.stats.elapsed.as_secs_f64() * 1e3);
    }
    let mut out = json!({
        "parameter": r.parameter,
        "value": r.value,
        "status": r.status,
        "witness": witness,
        "stats": stats,
    });
    if let Some(b) = bounds {
        out["bounds"] = to_value(b);
    }
    out
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{bounds_report, BoundsOptions};
    use crate::graph::Graph;
    use crate::solver::{chi_exact, Parameter, SolveOptions};

    #[test]
    fn path_solve_json() {
        let g = Graph::path(4);
        let r = chi_exact(&g, Parameter::Rlid, &SolveOptions::default()).unwrap();
        let b = bounds_report(&g, &BoundsOptions::default());
        let v = solve_json(&r, Some(&b), false);
        assert_eq!(v["value"], 3);
        assert_eq!(v["parameter"], "rlid");
        assert_eq!(v["status"], "exact");
        assert_eq!(v["witness"].as_array().unwrap().len(), 4);
        assert!(v["stats"].get("wall_ms").is_none());
        assert!(v["bounds"]["lower"].is_array());
        assert!(v["bounds"]["upper"].is_array());
        assert_eq!(render(&v), render(&solve_json(&r, Some(&b), false)));
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
