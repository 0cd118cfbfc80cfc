//! wasm-bindgen entry points for the browser demo in `www/`.
//!
//! Every export takes plain strings or numbers and returns a JSON string.
//! Failures come back as `{"error": "..."}` rather than as exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use w2_core::{
    classify, independence_complex, is_cm_complex, is_gorenstein_complex, match_gallery, parse_graph6,
    reduced_betti_numbers, to_graph6, ClassifyOptions, Family, Graph, PrimeField,
};

/// Largest order for which the page runs homology. Link computations grow
/// with the number of faces, and the browser has no timeout.
pub const HOMOLOGY_MAX_N: usize = 12;

/// Largest order the editor accepts.
pub const MAX_N: usize = 24;

fn error(message: impl std::fmt::Display) -> String {
    json!({ "error": message.to_string() }).to_string()
}

fn drawing(g: &Graph) -> Value {
    json!({
        "graph6": to_graph6(g),
        "n": g.n(),
        "edges": g.edges(),
        "gallery": match_gallery(g).map(|id| id.label()),
    })
}

fn field(characteristic: u32) -> Result<PrimeField, String> {
    PrimeField::new(characteristic as u64).map_err(|e| e.to_string())
}

fn parse(code: &str) -> Result<Graph, String> {
    let g = parse_graph6(code.trim()).map_err(|e| e.to_string())?;
    if g.n() > MAX_N {
        return Err(format!("the demo handles at most {MAX_N} vertices, got {}", g.n()));
    }
    Ok(g)
}

/// Vertices and edges of a graph6 string, for drawing.
#[wasm_bindgen]
pub fn parse_graph(code: &str) -> String {
    match parse(code) {
        Ok(g) => drawing(&g).to_string(),
        Err(e) => error(e),
    }
}

/// Builds a graph from a flat edge list `[u0, v0, u1, v1, ...]`.
#[wasm_bindgen]
pub fn graph_from_edges(n: u32, flat: Vec<u32>) -> String {
    let n = n as usize;
    if n == 0 || n > MAX_N {
        return error(format!("order must be between 1 and {MAX_N}"));
    }
    if !flat.len().is_multiple_of(2) {
        return error("edge list has odd length");
    }
    let edges = flat.chunks(2).map(|p| (p[0] as usize, p[1] as usize));
    match Graph::from_edge_list(n, edges) {
        Ok(g) => drawing(&g).to_string(),
        Err(e) => error(e),
    }
}

/// A gallery graph by name; `n = 0` for the fixed sporadic graphs.
#[wasm_bindgen]
pub fn gallery_graph(name: &str, n: u32) -> String {
    let family: Family = match name.parse() {
        Ok(f) => f,
        Err(e) => return error(e),
    };
    let param = (n > 0).then_some(n as usize);
    match family.build(param) {
        Ok(g) if g.n() > MAX_N => error(format!("the demo handles at most {MAX_N} vertices")),
        Ok(g) => drawing(&g).to_string(),
        Err(e) => error(e),
    }
}

/// Combinatorial classification of `I(G)²`, with the homological oracle over
/// `GF(characteristic)` when `oracle` is set and `n <= HOMOLOGY_MAX_N`.
#[wasm_bindgen]
pub fn classify_graph6(code: &str, oracle: bool, characteristic: u32) -> String {
    let g = match parse(code) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    let oracle_field = if oracle && g.n() <= HOMOLOGY_MAX_N {
        match field(characteristic) {
            Ok(f) => Some(f),
            Err(e) => return error(e),
        }
    } else {
        None
    };
    let opts = ClassifyOptions {
        oracle: oracle_field,
        ..ClassifyOptions::default()
    };
    match classify(&g, &opts) {
        Ok(report) => {
            let mut value = serde_json::to_value(report).expect("report serialises");
            value["oracle_skipped"] = json!(oracle && oracle_field.is_none());
            value.to_string()
        }
        Err(e) => error(e),
    }
}

/// Facets, f-vector and reduced homology of the independence complex.
#[wasm_bindgen]
pub fn complex_summary(code: &str, characteristic: u32) -> String {
    let g = match parse(code) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    let k = independence_complex(&g);
    let mut value = json!({
        "graph6": to_graph6(&g),
        "dimension": k.dimension(),
        "pure": k.is_pure(),
        "f_vector": k.f_vector(),
        "facets": k.facets(),
        "reduced_euler_characteristic": k.reduced_euler_characteristic(),
    });
    if g.n() <= HOMOLOGY_MAX_N {
        let f = match field(characteristic) {
            Ok(f) => f,
            Err(e) => return error(e),
        };
        let profile = reduced_betti_numbers(&k, f);
        value["characteristic"] = json!(f.characteristic());
        value["reduced_betti_from_zero"] = json!(profile.from_dimension_zero());
        value["cohen_macaulay"] = json!(is_cm_complex(&k, f));
        value["gorenstein"] = json!(is_gorenstein_complex(&k, f));
    }
    value.to_string()
}
