//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes plain strings and numbers and returns a JSON string:
//! either `{"ok": true, ...}` or `{"ok": false, "error": "..."}`. Keeping
//! `JsValue` out of the signatures lets the same functions run in native
//! tests.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use domkit::generators::{Family, FamilySpec};
use domkit::io::{build_row, encode_graph6, parse_graph6};
use domkit::solver::{domination_number, Param, PAIRS};
use domkit::transforms::{line_graph, total_graph};
use domkit::{DominationInstance, Element, ElementDomain, Graph};

/// Orders above this are refused; the page draws every vertex.
pub const MAX_ORDER: usize = 64;

fn respond(r: Result<Value, String>) -> String {
    match r {
        Ok(Value::Object(mut map)) => {
            map.insert("ok".into(), Value::Bool(true));
            Value::Object(map).to_string()
        }
        Ok(other) => json!({ "ok": true, "value": other }).to_string(),
        Err(e) => json!({ "ok": false, "error": e }).to_string(),
    }
}

fn graph_json(g: &Graph) -> Result<Value, String> {
    Ok(json!({
        "graph6": encode_graph6(g).map_err(|e| e.to_string())?,
        "n": g.order(),
        "edges": g.edges(),
    }))
}

fn load(g6: &str) -> Result<Graph, String> {
    let g = parse_graph6(g6.trim()).map_err(|e| e.to_string())?;
    if g.order() > MAX_ORDER {
        return Err(format!("order {} exceeds the demo limit {MAX_ORDER}", g.order()));
    }
    Ok(g)
}

fn budget_or_default(budget: f64) -> u64 {
    if budget.is_finite() && budget >= 1.0 {
        budget as u64
    } else {
        domkit::DEFAULT_BUDGET
    }
}

pub fn family_value(family: &str, n: usize, p: f64, seed: u64) -> Result<Value, String> {
    let family: Family = family.parse()?;
    if n > MAX_ORDER {
        return Err(format!("n = {n} exceeds the demo limit {MAX_ORDER}"));
    }
    let spec = FamilySpec {
        family,
        n,
        p: Some(p),
        seed: Some(seed),
    };
    let g = spec.build().map_err(|e| e.to_string())?;
    if g.order() > MAX_ORDER {
        return Err(format!("order {} exceeds the demo limit {MAX_ORDER}", g.order()));
    }
    graph_json(&g)
}

pub fn solve_value(g6: &str, u: &str, w: &str, budget: u64) -> Result<Value, String> {
    let g = load(g6)?;
    let u: ElementDomain = u.parse()?;
    let w: ElementDomain = w.parse()?;
    let r = domination_number(&DominationInstance::new(&g, u, w), budget)
        .map_err(|e| e.to_string())?;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for a in &r.witness {
        match *a {
            Element::Vertex(v) => vertices.push(v),
            Element::Edge(e) => edges.push(e),
        }
    }
    Ok(json!({
        "pair": format!("{},{}", u.name(), w.name()),
        "value": r.value,
        "witness": r.witness.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        "witness_vertices": vertices,
        "witness_edges": edges,
        "nodes": r.stats.nodes,
    }))
}

pub fn profile_value(g6: &str, budget: u64) -> Result<Value, String> {
    let g = load(g6)?;
    let row = build_row(&g, budget).map_err(|e| e.to_string())?;
    let nine: Vec<Value> = PAIRS
        .iter()
        .zip(row.nine)
        .map(|((u, w), v)| json!({ "u": u.name(), "w": w.name(), "value": v }))
        .collect();
    // Keys follow the scan CSV columns.
    let five = json!({
        "gamma": row.param(Param::Gamma),
        "gamma_prime": row.param(Param::GammaPrime),
        "gamma_dprime": row.param(Param::GammaDoublePrime),
        "gamma_ve": row.param(Param::GammaVE),
        "gamma_ev": row.param(Param::GammaEV),
    });
    Ok(json!({
        "graph6": row.graph6,
        "delta": row.delta,
        "nine": nine,
        "params": five,
        "laws": {
            "thm1": row.thm1_ok,
            "thm2": row.thm2_ok,
            "payan": row.payan_ok,
        },
        "nodes": row.nodes,
    }))
}

pub fn transform_value(g6: &str, kind: &str) -> Result<Value, String> {
    let g = load(g6)?;
    let (h, origin): (Graph, Vec<String>) = match kind {
        "line" => {
            let map = line_graph(&g).map_err(|e| e.to_string())?;
            let mut origin = vec![String::new(); map.result.order()];
            for (e, &x) in map.edge_to_vertex.iter().enumerate() {
                origin[x] = Element::Edge(e).to_string();
            }
            (map.result, origin)
        }
        "total" => {
            let map = total_graph(&g);
            let mut origin = vec![String::new(); map.result.order()];
            for a in ElementDomain::VE.elements(&g) {
                origin[map.image(a)] = a.to_string();
            }
            (map.result, origin)
        }
        other => return Err(format!("unknown transform `{other}` (expected line or total)")),
    };
    if h.order() > MAX_ORDER {
        return Err(format!("result has {} vertices, over the demo limit {MAX_ORDER}", h.order()));
    }
    let mut v = graph_json(&h)?;
    v["origin"] = json!(origin);
    Ok(v)
}

/// Decode graph6 into `{graph6, n, edges}`, re-encoded canonically.
#[wasm_bindgen]
pub fn parse(g6: &str) -> String {
    respond(load(g6).and_then(|g| graph_json(&g)))
}

/// Build a named family member. `p` and `seed` only matter for `random`.
#[wasm_bindgen]
pub fn family(name: &str, n: usize, p: f64, seed: u32) -> String {
    respond(family_value(name, n, p, u64::from(seed)))
}

/// `γ_{U,W}` with a minimum witness.
#[wasm_bindgen]
pub fn solve(g6: &str, u: &str, w: &str, budget: f64) -> String {
    respond(solve_value(g6, u, w, budget_or_default(budget)))
}

/// All nine numbers plus the law checks.
#[wasm_bindgen]
pub fn profile(g6: &str, budget: f64) -> String {
    respond(profile_value(g6, budget_or_default(budget)))
}

/// Line or total graph, with the element of `G` behind each new vertex.
#[wasm_bindgen]
pub fn transform(g6: &str, kind: &str) -> String {
    respond(transform_value(g6, kind))
}
