//! The demo operations as plain Rust with string errors.

use liaison_forge::corpus;
use liaison_forge::json::{CertificateJson, GbReportJson, MatrixJson};
use liaison_forge::liaison::{
    biliaison_chain_with, check_ht1, check_subm, check_subsd, classify as classify_matrix,
    sylvester_random_sweep, verify_cross_identities, DescentOptions,
};
use liaison_forge::pmatrix::{minor_ideal, MatrixStructure, PolyMatrix};

type ApiResult = Result<String, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn parse_matrix(matrix_json: &str) -> Result<PolyMatrix, String> {
    let json: MatrixJson = serde_json::from_str(matrix_json).map_err(err)?;
    json.to_matrix().map_err(err)
}

pub fn corpus_names() -> String {
    serde_json::to_string(&corpus::names()).expect("serializable")
}

pub fn corpus_matrix(name: &str) -> ApiResult {
    let entry = corpus::builtin(name).map_err(err)?;
    let payload = serde_json::json!({
        "t": entry.t,
        "source": entry.source,
        "matrix": MatrixJson::from_matrix(&entry.matrix),
    });
    Ok(serde_json::to_string_pretty(&payload).expect("serializable"))
}

pub fn classify(matrix_json: &str, t: usize) -> ApiResult {
    let matrix = parse_matrix(matrix_json)?;
    let report = classify_matrix(&matrix, t).map_err(err)?;
    let gb = minor_ideal(&matrix, t).map_err(err)?.groebner();
    let payload = serde_json::json!({
        "report": report,
        "ideal": GbReportJson::from_basis(&gb),
    });
    Ok(serde_json::to_string_pretty(&payload).expect("serializable"))
}

pub fn chain(matrix_json: &str, t: usize, seed: u64, force_char2: bool) -> ApiResult {
    let matrix = parse_matrix(matrix_json)?;
    let opts = DescentOptions {
        force_char_two: force_char2,
        ..Default::default()
    };
    let cert = biliaison_chain_with(&matrix, t, seed, &opts).map_err(|e| {
        let mut msg = e.to_string();
        if let liaison_forge::error::Error::ChainObstruction {
            expected_ht_t_of_o,
            attempts,
            ..
        } = &e
        {
            for a in attempts {
                msg.push_str(&format!(
                    "\nseed {}: ht I_t(O) = {} (expected {})",
                    a.seed, a.ht_t_of_o, expected_ht_t_of_o
                ));
            }
        }
        msg
    })?;
    let json = CertificateJson::from_chain(&matrix, t, seed, &cert);
    Ok(serde_json::to_string_pretty(&json).expect("serializable"))
}

pub fn verify(kind: &str, matrix_json: &str, t: usize, seed: u64) -> ApiResult {
    let matrix = parse_matrix(matrix_json)?;
    let payload = match kind {
        "cross" => {
            let o = matrix.delete_last_row().map_err(err)?;
            let gb = minor_ideal(&o, t).map_err(err)?.groebner();
            let report = verify_cross_identities(&matrix, t, &gb).map_err(err)?;
            serde_json::json!({"kind": "cross", "pass": report.failed == 0, "report": report})
        }
        "sylvester" => {
            let (checked, failed) = sylvester_random_sweep(&matrix, t, seed, 50).map_err(err)?;
            serde_json::json!({"kind": "sylvester", "pass": failed == 0,
                "membership": {"checked": checked, "failed": failed}})
        }
        "ht1" => {
            let report = check_ht1(&matrix, t, seed).map_err(err)?;
            serde_json::json!({"kind": "ht1", "pass": report.ok, "report": report})
        }
        "subm" => {
            let o = if matrix.structure() == MatrixStructure::Symmetric {
                matrix.delete_last_row().map_err(err)?
            } else {
                matrix.clone()
            };
            let report = check_subm(&o, t).map_err(err)?;
            serde_json::json!({"kind": "subm", "pass": report.condition2, "report": report})
        }
        "subsd" => {
            let report = check_subsd(&matrix, t).map_err(err)?;
            serde_json::json!({"kind": "subsd", "pass": report.condition2, "report": report})
        }
        other => return Err(format!("unknown verify kind `{other}`")),
    };
    Ok(serde_json::to_string_pretty(&payload).expect("serializable"))
}
