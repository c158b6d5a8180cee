use super::{
    classify, verify_cross_identities, ChainCertificate, StepCertificate, StepHeights, Verdict,
};
use crate::error::{AttemptDiagnostic, Error, Result};
use crate::groebner::{height, krull_dimension, minimal_generator_count, minor_height_from_gb};
use crate::pmatrix::{binomial, generic_congruence, minor_ideal, MatrixStructure, PolyMatrix};

#[derive(Debug, Clone, Copy)]
pub struct DescentOptions {
    /// Allows running over characteristic 2 to reproduce the obstruction;
    /// descent is refused there otherwise.
    pub force_char_two: bool,
    /// Seeds tried before giving up on genericity: seed, seed+1, ...
    pub retry_budget: u32,
}

impl Default for DescentOptions {
    fn default() -> Self {
        DescentOptions {
            force_char_two: false,
            retry_budget: 8,
        }
    }
}

pub fn descend_step(m: &PolyMatrix, t: usize, seed: u64) -> Result<StepCertificate> {
    descend_step_with(m, t, seed, &DescentOptions::default())
}

/// One biliaison descent step. Applies a seeded generic congruence
/// (retrying while the corner entry vanishes or any height misses its
/// generic value), deletes the last row and column, records all four
/// heights, the degree shift, and runs the cross-minor membership checks.
pub fn descend_step_with(
    m: &PolyMatrix,
    t: usize,
    seed: u64,
    opts: &DescentOptions,
) -> Result<StepCertificate> {
    if m.ring().characteristic() == 2 && !opts.force_char_two {
        return Err(Error::CharTwoRefused);
    }
    let size = m.rows();
    if m.structure() != MatrixStructure::Symmetric {
        return Err(Error::WrongStructure {
            expected: "symmetric",
            found: m.structure().name(),
        });
    }
    if t < 2 || t + 1 > size {
        return Err(Error::StepSizeOutOfRange { t, m: size });
    }
    if !m.no_invertible_entries() {
        return Err(Error::InvertibleEntries);
    }
    let report = classify(m, t)?;
    if report.verdict != Verdict::SymmetricDeterminantal {
        let reason = match report.verdict {
            Verdict::Neither(r) => r,
            _ => "matrix is almost-symmetric, not symmetric".into(),
        };
        return Err(Error::NotDeterminantal("symmetric", reason));
    }

    let c = binomial(size as i64 - t as i64 + 2, 2) - 1;
    let mut attempts: Vec<AttemptDiagnostic> = Vec::new();
    for retry in 0..opts.retry_budget {
        let s = seed + retry as u64;
        let (m2, _p) = generic_congruence(m, s)?;
        let corner = m2.entry(size - 1, size - 1).clone();
        let o = m2.delete_last_row()?;
        let n = o.delete_last_column()?;

        let ht_m = height(&minor_ideal(&m2, t)?)?;
        let o_ideal = minor_ideal(&o, t)?;
        let o_gb = o_ideal.groebner();
        let ht_o = minor_height_from_gb(&o_gb);
        let ht_n = height(&minor_ideal(&n, t - 1)?)?;
        let ht_o1 = height(&minor_ideal(&o, t - 1)?)?;

        let heights_ok = ht_m == c + 1 && ht_o == c && ht_n == c + 1;
        if corner.is_zero() || !heights_ok {
            attempts.push(AttemptDiagnostic {
                seed: s,
                corner_entry_zero: corner.is_zero(),
                ht_t_of_m: ht_m,
                ht_t_of_o: ht_o,
                ht_t1_of_n: ht_n,
            });
            continue;
        }

        let shift = corner.total_degree().unwrap_or(0) as i64;
        if shift == 0 {
            return Err(Error::Internal("corner entry degenerated to a constant"));
        }
        let cross = verify_cross_identities(&m2, t, &o_gb)?;
        return Ok(StepCertificate {
            t,
            symmetric_matrix: m2,
            almost_matrix: o,
            next_matrix: n,
            seed_used: s,
            retries: retry,
            shift,
            heights: StepHeights {
                t_of_m: ht_m,
                t_of_o: ht_o,
                t1_of_n: ht_n,
                t1_of_o: ht_o1,
            },
            ht1_ok: ht_m - ht_o <= 1,
            subm_condition2: ht_o1 > c,
            subm_sufficient: ht_n == c + 1,
            identities_checked: cross.checked,
            identities_failed: cross.failed,
        });
    }
    if attempts
        .iter()
        .all(|a| a.ht_t_of_m != c + 1 || a.ht_t_of_o != c || a.ht_t1_of_n != c + 1)
    {
        Err(Error::ChainObstruction {
            step_index: 0,
            expected_ht_t_of_o: c,
            attempts,
        })
    } else {
        Err(Error::GenericityExhausted { attempts })
    }
}

/// Runs the full descent: one step per minor size from `t` down to 2, each
/// feeding the deleted-row-and-column matrix into the next, terminating in
/// the entry ideal of the final matrix, which is checked to be a complete
/// intersection. With `t = 1` the chain is empty.
pub fn biliaison_chain(m: &PolyMatrix, t: usize, seed: u64) -> Result<ChainCertificate> {
    biliaison_chain_with(m, t, seed, &DescentOptions::default())
}

pub fn biliaison_chain_with(
    m: &PolyMatrix,
    t: usize,
    seed: u64,
    opts: &DescentOptions,
) -> Result<ChainCertificate> {
    if t == 0 || t > m.rows().min(m.cols()) {
        return Err(Error::MinorSizeOutOfRange {
            t,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut steps = Vec::new();
    let mut current = m.clone();
    let mut current_t = t;
    while current_t >= 2 {
        let step = descend_step_with(&current, current_t, seed, opts).map_err(|e| match e {
            Error::ChainObstruction {
                expected_ht_t_of_o,
                attempts,
                ..
            } => Error::ChainObstruction {
                step_index: steps.len(),
                expected_ht_t_of_o,
                attempts,
            },
            other => other,
        })?;
        current = step.next_matrix.clone();
        current_t -= 1;
        steps.push(step);
    }
    let terminal_ideal = minor_ideal(&current, 1)?;
    let (terminal_mu, terminal_height, terminal_is_ci) = if terminal_ideal.is_zero_ideal() {
        (0, 0, false)
    } else {
        let gb = terminal_ideal.groebner();
        if gb.is_unit_ideal() {
            (0, 0, false)
        } else {
            let mu = minimal_generator_count(&terminal_ideal)?;
            let ht = terminal_ideal.ring().num_vars() as i64 - krull_dimension(&gb);
            (mu, ht, mu as i64 == ht)
        }
    };
    Ok(ChainCertificate {
        steps,
        terminal_ideal,
        terminal_mu,
        terminal_height,
        terminal_is_ci,
    })
}
