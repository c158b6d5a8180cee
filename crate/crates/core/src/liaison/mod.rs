//! Classification of symmetric / almost-symmetric determinantal ideals,
//! the descent step that deletes the last row after a generic congruence,
//! the full biliaison chain down to a complete intersection, and the exact
//! minor-identity and height verifications certifying every step.

mod checks;
mod descent;
mod identities;

pub use checks::{check_ht1, check_subm, check_subsd, Ht1Report, SubmReport, SubsdReport};
pub use descent::{
    biliaison_chain, biliaison_chain_with, descend_step, descend_step_with, DescentOptions,
};
pub use identities::{
    sylvester_exact_identity, sylvester_membership, sylvester_random_sweep,
    verify_cross_identities, CrossIdentityReport, CrossWitness,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{height, ideal_equal, saturate_irrelevant, IdealBasis};
use crate::pmatrix::{binomial, minor_ideal, MatrixStructure, PolyMatrix};

/// True iff no entry of the matrix is a nonzero constant.
pub fn no_invertible_entries(m: &PolyMatrix) -> bool {
    m.no_invertible_entries()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    SymmetricDeterminantal,
    AlmostSymmetricDeterminantal,
    Neither(String),
}

impl Verdict {
    pub fn is_positive(&self) -> bool {
        !matches!(self, Verdict::Neither(_))
    }
}

/// Outcome of the determinantal classification: structural checks,
/// t-homogeneity, saturatedness of the minor ideal, and the comparison of
/// its height against the maximal codimension for the shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub structure_ok: bool,
    pub t_homogeneous: bool,
    pub saturated: bool,
    pub expected_codim: i64,
    /// Height of the minor ideal; -1 when it cannot be computed because
    /// the ideal is inhomogeneous.
    pub actual_codim: i64,
    pub verdict: Verdict,
}

/// Classifies a symmetric or almost-symmetric matrix at minor size `t`.
/// Symmetric matrices target codimension C(m-t+2, 2); almost-symmetric
/// ones target C(m-t+2, 2) - 1 with m the column count.
pub fn classify(m: &PolyMatrix, t: usize) -> Result<ClassificationReport> {
    let (expected, positive): (i64, Verdict) = match m.structure() {
        MatrixStructure::General => {
            return Err(Error::WrongStructure {
                expected: "symmetric or almost_symmetric",
                found: "general",
            })
        }
        MatrixStructure::Symmetric => (
            binomial(m.rows() as i64 - t as i64 + 2, 2),
            Verdict::SymmetricDeterminantal,
        ),
        MatrixStructure::AlmostSymmetric => (
            binomial(m.cols() as i64 - t as i64 + 2, 2) - 1,
            Verdict::AlmostSymmetricDeterminantal,
        ),
    };
    if t == 0 || t > m.rows().min(m.cols()) {
        return Err(Error::MinorSizeOutOfRange {
            t,
            rows: m.rows(),
            cols: m.cols(),
        });
    }

    let t_homogeneous = m.is_t_homogeneous(t)?;
    let ideal = minor_ideal(m, t)?;
    let homogeneous_ideal = ideal.all_homogeneous();
    let actual_codim = if homogeneous_ideal {
        height(&ideal)?
    } else {
        -1
    };
    let saturated = if homogeneous_ideal {
        ideal_equal(&ideal, &saturate_irrelevant(&ideal)?)?
    } else {
        false
    };

    let verdict = if !t_homogeneous {
        Verdict::Neither("matrix is not t-homogeneous".into())
    } else if !saturated {
        Verdict::Neither("minor ideal is not saturated".into())
    } else if actual_codim != expected {
        Verdict::Neither(format!(
            "codimension {actual_codim} differs from the maximal value {expected}"
        ))
    } else {
        positive
    };

    Ok(ClassificationReport {
        structure_ok: true,
        t_homogeneous,
        saturated,
        expected_codim: expected,
        actual_codim,
        verdict,
    })
}

/// Classification entry point that insists on the almost-symmetric shape.
pub fn classify_almost(o: &PolyMatrix, t: usize) -> Result<ClassificationReport> {
    if o.structure() != MatrixStructure::AlmostSymmetric {
        return Err(Error::WrongStructure {
            expected: "almost_symmetric",
            found: o.structure().name(),
        });
    }
    classify(o, t)
}

/// Heights recorded by one descent step, named after the minor ideals they
/// measure: I_t(M), I_t(O), I_{t-1}(N), I_{t-1}(O).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepHeights {
    #[serde(rename = "ht_ItM")]
    pub t_of_m: i64,
    #[serde(rename = "ht_ItO")]
    pub t_of_o: i64,
    #[serde(rename = "ht_It1N")]
    pub t1_of_n: i64,
    #[serde(rename = "ht_It1O")]
    pub t1_of_o: i64,
}

/// Certificate for one biliaison descent step: the congruence-transformed
/// symmetric matrix, the almost-symmetric matrix obtained by deleting its
/// last row, the next symmetric matrix obtained by also deleting the last
/// column, the degree shift of the linear equivalence, all heights, and
/// the outcome of every identity check.
#[derive(Debug, Clone)]
pub struct StepCertificate {
    pub t: usize,
    pub symmetric_matrix: PolyMatrix,
    pub almost_matrix: PolyMatrix,
    pub next_matrix: PolyMatrix,
    pub seed_used: u64,
    pub retries: u32,
    /// Shift of the linear equivalence: the degree of the transformed
    /// corner entry, always positive.
    pub shift: i64,
    pub heights: StepHeights,
    pub ht1_ok: bool,
    pub subm_condition2: bool,
    pub subm_sufficient: bool,
    pub identities_checked: usize,
    pub identities_failed: usize,
}

/// Full descent record: one step per minor size from t down to 2, plus the
/// terminal entry ideal and its complete-intersection data.
#[derive(Debug, Clone)]
pub struct ChainCertificate {
    pub steps: Vec<StepCertificate>,
    pub terminal_ideal: IdealBasis,
    pub terminal_mu: usize,
    pub terminal_height: i64,
    pub terminal_is_ci: bool,
}
