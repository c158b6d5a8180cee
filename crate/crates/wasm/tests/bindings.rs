// The exported functions are plain Rust on native targets, so the demo
// surface is exercised here without a browser.

use liaison_forge_wasm::api::{chain, classify, corpus_matrix, corpus_names, verify};

#[test]
fn corpus_names_is_json_array() {
    let names: Vec<String> = serde_json::from_str(&corpus_names()).unwrap();
    assert!(names.contains(&"veronese".to_string()));
    assert!(names.contains(&"bruns_char2".to_string()));
}

#[test]
fn classify_round_trip_through_strings() {
    let dump: serde_json::Value =
        serde_json::from_str(&corpus_matrix("veronese").unwrap()).unwrap();
    assert_eq!(dump["t"], 2);
    let matrix_text = serde_json::to_string(&dump["matrix"]).unwrap();
    let report: serde_json::Value =
        serde_json::from_str(&classify(&matrix_text, 2).unwrap()).unwrap();
    assert_eq!(report["report"]["actual_codim"], 3);
    assert_eq!(report["report"]["verdict"], "symmetric_determinantal");
    assert_eq!(report["ideal"]["height"], 3);
}

#[test]
fn chain_certificate_through_strings() {
    let dump: serde_json::Value =
        serde_json::from_str(&corpus_matrix("veronese").unwrap()).unwrap();
    let matrix_text = serde_json::to_string(&dump["matrix"]).unwrap();
    let cert: serde_json::Value =
        serde_json::from_str(&chain(&matrix_text, 2, 0, false).unwrap()).unwrap();
    assert_eq!(cert["steps"].as_array().unwrap().len(), 1);
    assert_eq!(cert["steps"][0]["a"], 1);
    assert_eq!(cert["terminal"]["is_ci"], true);
}

#[test]
fn char2_chain_is_refused_with_message() {
    let dump: serde_json::Value =
        serde_json::from_str(&corpus_matrix("bruns_char2").unwrap()).unwrap();
    let matrix_text = serde_json::to_string(&dump["matrix"]).unwrap();
    assert!(chain(&matrix_text, 2, 0, false).is_err());
    assert!(chain(&matrix_text, 2, 0, true).is_err());
}

#[test]
fn verify_kinds_run() {
    let dump: serde_json::Value =
        serde_json::from_str(&corpus_matrix("veronese").unwrap()).unwrap();
    let matrix_text = serde_json::to_string(&dump["matrix"]).unwrap();
    for kind in ["cross", "ht1", "subm", "subsd"] {
        let out: serde_json::Value =
            serde_json::from_str(&verify(kind, &matrix_text, 2, 0).unwrap()).unwrap();
        assert_eq!(out["pass"], true, "kind {kind}");
    }
    assert!(verify("nope", &matrix_text, 2, 0).is_err());
}
