//! Browser bindings: classify a matrix, run the descent chain, and verify
//! the identity suites, all returning JSON strings for the demo page.
//!
//! The logic lives in [`api`] as plain Rust (testable on any target); the
//! exported wrappers only adapt errors for JavaScript.

pub mod api;

use wasm_bindgen::prelude::*;

/// Names of the built-in corpus entries, as a JSON array.
#[wasm_bindgen]
pub fn corpus_names() -> String {
    api::corpus_names()
}

/// Matrix JSON of a built-in corpus entry, plus its default minor size.
#[wasm_bindgen]
pub fn corpus_matrix(name: &str) -> Result<String, JsError> {
    api::corpus_matrix(name).map_err(|e| JsError::new(&e))
}

/// Classification report for a matrix JSON at minor size t.
#[wasm_bindgen]
pub fn classify(matrix_json: &str, t: usize) -> Result<String, JsError> {
    api::classify(matrix_json, t).map_err(|e| JsError::new(&e))
}

/// Full descent-chain certificate; errors carry the obstruction
/// diagnostics as text.
#[wasm_bindgen]
pub fn chain(matrix_json: &str, t: usize, seed: u64, force_char2: bool) -> Result<String, JsError> {
    api::chain(matrix_json, t, seed, force_char2).map_err(|e| JsError::new(&e))
}

/// One of the verification suites: "cross", "sylvester", "ht1", "subm",
/// or "subsd".
#[wasm_bindgen]
pub fn verify(kind: &str, matrix_json: &str, t: usize, seed: u64) -> Result<String, JsError> {
    api::verify(kind, matrix_json, t, seed).map_err(|e| JsError::new(&e))
}
