use thiserror::Error;

/// Per-seed diagnostic kept by the descent retry loop, so a failed descent
/// can report exactly which heights broke genericity for every attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttemptDiagnostic {
    pub seed: u64,
    pub corner_entry_zero: bool,
    pub ht_t_of_m: i64,
    pub ht_t_of_o: i64,
    pub ht_t1_of_n: i64,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime field modulus {0} exceeds 2^31")]
    ModulusTooLarge(u64),
    #[error("ring must have at least one variable")]
    EmptyRing,
    #[error("minor index out of range")]
    IndexOutOfRange,
    #[error("minor row and column sets must have equal cardinality")]
    MinorShapeMismatch,
    #[error("minor size {t} out of range for a {rows}x{cols} matrix")]
    MinorSizeOutOfRange { t: usize, rows: usize, cols: usize },
    #[error("matrix has wrong structure: expected {expected}, found {found}")]
    WrongStructure {
        expected: &'static str,
        found: &'static str,
    },
    #[error("matrix entries at ({i},{j}) and ({j},{i}) break the declared symmetry")]
    NotSymmetric { i: usize, j: usize },
    #[error("matrix shape {rows}x{cols} does not fit the declared structure")]
    BadShape { rows: usize, cols: usize },
    #[error("matrix admits no consistent degree grading")]
    NoConsistentGrading,
    #[error("generator must be nonzero")]
    ZeroGenerator,
    #[error("operation requires a nonzero polynomial argument")]
    ZeroArgument,
    #[error("ideal is not homogeneous")]
    InhomogeneousInput,
    #[error("operation undefined for the unit ideal")]
    UnitIdeal,
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("matrix is not {0} determinantal: {1}")]
    NotDeterminantal(&'static str, String),
    #[error("descent step requires 2 <= t <= m-1, got t={t} for m={m}")]
    StepSizeOutOfRange { t: usize, m: usize },
    #[error("matrix has invertible entries; descent is undefined")]
    InvertibleEntries,
    #[error("descent over a field of characteristic 2 refused (pass the force flag to reproduce the obstruction)")]
    CharTwoRefused,
    #[error("genericity retry budget exhausted after {} attempts", attempts.len())]
    GenericityExhausted { attempts: Vec<AttemptDiagnostic> },
    #[error("chain obstruction at step {step_index}: descent heights below their generic values for every seed")]
    ChainObstruction {
        step_index: usize,
        expected_ht_t_of_o: i64,
        attempts: Vec<AttemptDiagnostic>,
    },
    #[error("unknown corpus entry `{0}`")]
    UnknownCorpusName(String),
    #[error("corpus parameter out of range: {0}")]
    CorpusParamOutOfRange(String),
    #[error("invalid JSON payload: {0}")]
    Json(String),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
