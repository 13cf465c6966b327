//! Browser bindings. Each export has a plain-Rust twin returning JSON so the
//! logic is testable off the browser.

use bicirc::bicirculant::{canonical_symbol, BicirculantSymbol};
use bicirc::circulant::{self, CirculantSymbol};
use bicirc::symmetry::{automorphism_search, edge_orbits, is_arc_transitive, is_vertex_transitive};
use bicirc::s5;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Search budget for interactive use; large symbols fail fast instead of hanging the tab.
const NODE_BUDGET: u64 = 2_000_000;
const MAX_HALF_ORDER: usize = 60;

#[derive(Serialize)]
struct Edge {
    a: usize,
    b: usize,
    orbit: usize,
}

#[derive(Serialize)]
struct Exploration {
    symbol: String,
    canonical: String,
    n: usize,
    valence: usize,
    aut_order: String,
    vertex_transitive: bool,
    edge_transitive: bool,
    arc_transitive: bool,
    edge_orbits: usize,
    edges: Vec<Edge>,
}

/// Builds `BC(n; b; s1,...)` and reports its symmetry, with every edge tagged
/// by its orbit under the automorphism group.
pub fn explore_json(text: &str) -> Result<String, String> {
    let sym: BicirculantSymbol = text.parse().map_err(|e: bicirc::Error| e.to_string())?;
    if sym.n() > MAX_HALF_ORDER {
        return Err(format!("half-order {} exceeds the demo limit of {MAX_HALF_ORDER}", sym.n()));
    }
    let g = sym.build();
    let search = automorphism_search(&g, NODE_BUDGET).map_err(|e| e.to_string())?;
    let gens = &search.generators;
    let orbits = edge_orbits(&g, gens).map_err(|e| e.to_string())?;
    let mut edges: Vec<Edge> = orbits
        .iter()
        .enumerate()
        .flat_map(|(i, o)| o.iter().map(move |&(a, b)| Edge { a, b, orbit: i }))
        .collect();
    edges.sort_by_key(|e| (e.a, e.b));
    let report = Exploration {
        symbol: sym.to_string(),
        canonical: canonical_symbol(&sym).to_string(),
        n: sym.n(),
        valence: sym.valence(),
        aut_order: search.order.to_string(),
        vertex_transitive: is_vertex_transitive(&g, gens).map_err(|e| e.to_string())?,
        edge_transitive: orbits.len() == 1,
        arc_transitive: is_arc_transitive(&g, gens).map_err(|e| e.to_string())?,
        edge_orbits: orbits.len(),
        edges,
    };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Classification {
    symbol: String,
    arc_transitive: bool,
    cases: Vec<String>,
}

/// Structural cases of `Cay(Z_n, S)`; non-arc-transitive inputs report no cases.
pub fn classify_json(n: usize, s: &str) -> Result<String, String> {
    if n > 2 * MAX_HALF_ORDER {
        return Err(format!("n = {n} exceeds the demo limit"));
    }
    let sym = CirculantSymbol::parse(n, s).map_err(|e| e.to_string())?;
    let arc = circulant::is_connected_arc_transitive(&sym).map_err(|e| e.to_string())?;
    let cases = if arc {
        circulant::classify_arc_transitive_circulant(&sym)
            .map_err(|e| e.to_string())?
            .cases
            .iter()
            .map(|c| c.describe())
            .collect()
    } else {
        Vec::new()
    };
    serde_json::to_string(&Classification {
        symbol: sym.to_string(),
        arc_transitive: arc,
        cases,
    })
    .map_err(|e| e.to_string())
}

/// The A5/S5 claim summary.
pub fn verify_s5_json() -> String {
    serde_json::to_string(&s5::run_section5().claims).expect("claims serialise")
}

#[wasm_bindgen]
pub fn explore(symbol: &str) -> Result<String, JsValue> {
    explore_json(symbol).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn classify(n: usize, s: &str) -> Result<String, JsValue> {
    classify_json(n, s).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn verify_s5() -> String {
    verify_s5_json()
}
