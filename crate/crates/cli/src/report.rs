use std::path::Path;

use serde::Serialize;

use liaison_forge::timing;

/// Envelope for `--json` output: command echo, tool version, seed, phase
/// timings, warnings, and the command-specific payload.
#[derive(Serialize)]
pub struct RunReport<'a, T: Serialize> {
    pub command: &'a str,
    pub argv: Vec<String>,
    pub version: &'static str,
    pub seed: u64,
    pub timing_ms: TimingJson,
    pub warnings: Vec<String>,
    pub result: &'a T,
}

#[derive(Serialize)]
pub struct TimingJson {
    pub parse: f64,
    pub groebner: f64,
    pub heights: f64,
    pub identities: f64,
    pub reduction: f64,
}

impl<'a, T: Serialize> RunReport<'a, T> {
    pub fn new(command: &'a str, seed: u64, result: &'a T) -> RunReport<'a, T> {
        let t = timing::snapshot();
        RunReport {
            command,
            argv: std::env::args().skip(1).collect(),
            version: env!("CARGO_PKG_VERSION"),
            seed,
            timing_ms: TimingJson {
                parse: round(t.parse),
                groebner: round(t.groebner),
                heights: round(t.heights),
                identities: round(t.identities),
                reduction: round(t.reduction),
            },
            warnings: Vec::new(),
            result,
        }
    }

    pub fn with_warnings(mut self, warnings: Vec<String>) -> Self {
        self.warnings = warnings;
        self
    }
}

fn round(v: f64) -> f64 {
    (v * 1e3).round() / 1e3
}

pub fn print_or_write<T: Serialize>(path: &Path, payload: &T) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(payload).expect("serializable payload");
    std::fs::write(path, text)
}
