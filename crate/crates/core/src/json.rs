//! Serialization schemas for matrices, ideals, bases, and chain
//! certificates, with conversions to and from the core types. Polynomial
//! entries are strings in the ring grammar.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{krull_dimension, GroebnerBasis, IdealBasis};
use crate::liaison::{ChainCertificate, StepCertificate, StepHeights};
use crate::pmatrix::{MatrixStructure, PolyMatrix};
use crate::ring::{parse_polynomial, FieldSpec, MonomialOrder, PolyRing};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingJson {
    pub vars: Vec<String>,
    /// 0 for the rationals, a prime p for Z/p.
    pub char: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

impl RingJson {
    pub fn from_ring(ring: &Arc<PolyRing>) -> RingJson {
        RingJson {
            vars: ring.var_names().to_vec(),
            char: ring.characteristic(),
            order: Some(order_name(ring.order())),
        }
    }

    pub fn to_ring(&self) -> Result<Arc<PolyRing>> {
        let field = if self.char == 0 {
            FieldSpec::Rationals
        } else {
            FieldSpec::prime_field(self.char)?
        };
        let order = match self.order.as_deref() {
            None | Some("grevlex") => MonomialOrder::GrevLex,
            Some("lex") => MonomialOrder::Lex,
            Some(other) => match other.strip_prefix("elim:") {
                Some(k) => MonomialOrder::Elimination(
                    k.parse()
                        .map_err(|_| Error::Json(format!("bad order `{other}`")))?,
                ),
                None => return Err(Error::Json(format!("unknown monomial order `{other}`"))),
            },
        };
        PolyRing::new(self.vars.clone(), field, order)
    }
}

fn order_name(order: MonomialOrder) -> String {
    match order {
        MonomialOrder::GrevLex => "grevlex".to_string(),
        MonomialOrder::Lex => "lex".to_string(),
        MonomialOrder::Elimination(k) => format!("elim:{k}"),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub ring: RingJson,
    pub structure: String,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &PolyMatrix) -> MatrixJson {
        let entries = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.entry(i, j).render()).collect())
            .collect();
        MatrixJson {
            ring: RingJson::from_ring(m.ring()),
            structure: m.structure().name().to_string(),
            entries,
        }
    }

    pub fn to_matrix(&self) -> Result<PolyMatrix> {
        self.to_matrix_in(&self.ring.to_ring()?)
    }

    /// Parses the entries into an explicit ring, used by field overrides.
    pub fn to_matrix_in(&self, ring: &Arc<PolyRing>) -> Result<PolyMatrix> {
        let structure = match self.structure.as_str() {
            "symmetric" => MatrixStructure::Symmetric,
            "almost_symmetric" => MatrixStructure::AlmostSymmetric,
            "general" => MatrixStructure::General,
            other => return Err(Error::Json(format!("unknown structure `{other}`"))),
        };
        let rows = self.entries.len();
        if rows == 0 {
            return Err(Error::Json("matrix has no rows".into()));
        }
        let cols = self.entries[0].len();
        let mut parsed = Vec::with_capacity(rows * cols);
        for row in &self.entries {
            if row.len() != cols {
                return Err(Error::Json("ragged matrix rows".into()));
            }
            for s in row {
                parsed.push(parse_polynomial(s, ring)?);
            }
        }
        PolyMatrix::new(ring, rows, cols, parsed, structure)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: RingJson,
    pub generators: Vec<String>,
}

impl IdealJson {
    pub fn from_ideal(ideal: &IdealBasis) -> IdealJson {
        IdealJson {
            ring: RingJson::from_ring(ideal.ring()),
            generators: ideal.generators().iter().map(|g| g.render()).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<IdealBasis> {
        let ring = self.ring.to_ring()?;
        let gens = self
            .generators
            .iter()
            .map(|s| parse_polynomial(s, &ring))
            .collect::<Result<Vec<_>>>()?;
        IdealBasis::new(&ring, gens)
    }
}

/// Reduced-basis report: elements, leading monomials, and the dimension
/// and height read off the leading-term ideal.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GbReportJson {
    pub ring: RingJson,
    pub elements: Vec<String>,
    pub leading_monomials: Vec<String>,
    pub dimension: i64,
    pub height: i64,
}

impl GbReportJson {
    pub fn from_basis(gb: &GroebnerBasis) -> GbReportJson {
        let dim = krull_dimension(gb);
        let lead = gb
            .elements()
            .iter()
            .map(|g| {
                let (_, m) = g.leading().expect("basis elements are nonzero");
                crate::ring::Polynomial::term(g.ring(), g.ring().field().one(), m.clone()).render()
            })
            .collect();
        GbReportJson {
            ring: RingJson::from_ring(gb.ring()),
            elements: gb.elements().iter().map(|g| g.render()).collect(),
            leading_monomials: lead,
            dimension: dim,
            height: gb.ring().num_vars() as i64 - dim,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityCountsJson {
    pub checked: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepJson {
    pub t: usize,
    pub a: i64,
    pub seed_used: u64,
    pub retries: u32,
    pub heights: StepHeights,
    pub identities: IdentityCountsJson,
    pub ht1_ok: bool,
    pub subm_condition2: bool,
    pub subm_sufficient: bool,
    #[serde(rename = "M")]
    pub matrix: MatrixJson,
    #[serde(rename = "O")]
    pub deleted_row: MatrixJson,
    #[serde(rename = "N")]
    pub deleted_row_col: MatrixJson,
}

impl StepJson {
    pub fn from_step(step: &StepCertificate) -> StepJson {
        StepJson {
            t: step.t,
            a: step.shift,
            seed_used: step.seed_used,
            retries: step.retries,
            heights: step.heights,
            identities: IdentityCountsJson {
                checked: step.identities_checked,
                failed: step.identities_failed,
            },
            ht1_ok: step.ht1_ok,
            subm_condition2: step.subm_condition2,
            subm_sufficient: step.subm_sufficient,
            matrix: MatrixJson::from_matrix(&step.symmetric_matrix),
            deleted_row: MatrixJson::from_matrix(&step.almost_matrix),
            deleted_row_col: MatrixJson::from_matrix(&step.next_matrix),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TerminalJson {
    pub generators: Vec<String>,
    pub mu: usize,
    pub height: i64,
    pub is_ci: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    pub input: MatrixJson,
    pub t: usize,
    pub seed: u64,
    pub steps: Vec<StepJson>,
    pub terminal: TerminalJson,
}

impl CertificateJson {
    pub fn from_chain(
        input: &PolyMatrix,
        t: usize,
        seed: u64,
        chain: &ChainCertificate,
    ) -> CertificateJson {
        CertificateJson {
            input: MatrixJson::from_matrix(input),
            t,
            seed,
            steps: chain.steps.iter().map(StepJson::from_step).collect(),
            terminal: TerminalJson {
                generators: chain
                    .terminal_ideal
                    .generators()
                    .iter()
                    .map(|g| g.render())
                    .collect(),
                mu: chain.terminal_mu,
                height: chain.terminal_height,
                is_ci: chain.terminal_is_ci,
            },
        }
    }
}
