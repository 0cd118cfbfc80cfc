use serde_json::Value;
use w2_web::{classify_graph6, complex_summary, gallery_graph, graph_from_edges, parse_graph, MAX_N};

fn json(s: String) -> Value {
    serde_json::from_str(&s).expect("exports return JSON")
}

#[test]
fn gallery_then_classify() {
    let q9 = json(gallery_graph("q9", 0));
    assert_eq!(q9["n"], 9);
    assert_eq!(q9["edges"].as_array().unwrap().len(), 15);
    assert_eq!(q9["gallery"], "q9");
    let report = json(classify_graph6(q9["graph6"].as_str().unwrap(), true, 2));
    assert_eq!(report["buchsbaum_square"]["value"], true);
    assert_eq!(report["cm_square"]["value"], false);
    assert_eq!(report["oracle"]["buchsbaum_agrees"], true);
    assert_eq!(report["oracle_skipped"], false);
}

#[test]
fn oracle_skipped_above_cap() {
    let g = json(gallery_graph("cc", 14));
    let report = json(classify_graph6(g["graph6"].as_str().unwrap(), true, 2));
    assert_eq!(report["oracle_skipped"], true);
    assert!(report["oracle"].is_null());
}

#[test]
fn complex_of_cycle_complement_is_circle() {
    let g = json(gallery_graph("cycle-complement", 7));
    let k = json(complex_summary(g["graph6"].as_str().unwrap(), 32003));
    assert_eq!(k["f_vector"], serde_json::json!([7, 7]));
    assert_eq!(k["reduced_betti_from_zero"], serde_json::json!([0, 1]));
    assert_eq!(k["gorenstein"], true);
}

#[test]
fn edges_round_trip_through_graph6() {
    let built = json(graph_from_edges(4, vec![0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3]));
    assert_eq!(built["gallery"], "complete(4)");
    let parsed = json(parse_graph(built["graph6"].as_str().unwrap()));
    assert_eq!(parsed["edges"], built["edges"]);
}

#[test]
fn errors_are_reported_as_json() {
    assert!(json(parse_graph("not graph6 ~~~")).get("error").is_some());
    assert!(json(gallery_graph("nope", 0)).get("error").is_some());
    assert!(json(gallery_graph("cycle", 2)).get("error").is_some());
    assert!(json(graph_from_edges(3, vec![0])).get("error").is_some());
    assert!(json(graph_from_edges(3, vec![0, 7])).get("error").is_some());
    assert!(json(graph_from_edges(MAX_N as u32 + 1, vec![])).get("error").is_some());
    assert!(json(classify_graph6("B?", false, 2)).get("error").is_some(), "isolated vertices are refused");
    assert!(json(complex_summary("Bw", 4)).get("error").is_some(), "4 is not prime");
}
