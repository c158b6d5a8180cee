use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{symmetric_row_degrees, MatrixStructure, PolyMatrix};
use crate::error::{Error, Result};
use crate::ring::{Coeff, Monomial, PolyRing, Polynomial};
use std::sync::Arc;

/// Bound on scalar draws: coefficients come from {-16..16} \ {0}, reduced
/// into the field.
const DRAW_BOUND: u64 = 16;

fn draw_scalar(ring: &Arc<PolyRing>, rng: &mut ChaCha8Rng) -> Coeff {
    let u = rng.next_u64() % (2 * DRAW_BOUND);
    let v: i64 = if u < DRAW_BOUND {
        (u + 1) as i64
    } else {
        -((u - DRAW_BOUND + 1) as i64)
    };
    ring.field().from_i64(v)
}

fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; num_vars];
    fill(&mut out, &mut exps, 0, degree);
    fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u16>, var: usize, remaining: u32) {
        if var + 1 == exps.len() {
            exps[var] = remaining as u16;
            out.push(Monomial::new(exps.iter().copied()));
            exps[var] = 0;
            return;
        }
        for e in 0..=remaining {
            exps[var] = e as u16;
            fill(out, exps, var + 1, remaining - e);
        }
        exps[var] = 0;
    }
    out
}

fn draw_form(ring: &Arc<PolyRing>, degree: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let terms = monomials_of_degree(ring.num_vars(), degree)
        .into_iter()
        .map(|m| (draw_scalar(ring, rng), m));
    Polynomial::from_terms(ring, terms)
}

/// A graded invertible transform for the given row degrees: entry (i, j)
/// is zero when `d[j] < d[i]`, a scalar when equal, and a random
/// homogeneous form of degree `d[j] - d[i]` otherwise. Equal-degree
/// diagonal blocks are redrawn until invertible.
pub fn random_graded_transform(
    ring: &Arc<PolyRing>,
    degrees: &[i64],
    rng: &mut ChaCha8Rng,
) -> Result<PolyMatrix> {
    let m = degrees.len();
    let mut entries = vec![Polynomial::zero(ring); m * m];
    for i in 0..m {
        for j in 0..m {
            if degrees[j] > degrees[i] {
                entries[i * m + j] = draw_form(ring, (degrees[j] - degrees[i]) as u32, rng);
            }
        }
    }
    // equal-degree groups form the scalar diagonal blocks
    let mut distinct: Vec<i64> = degrees.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for deg in distinct {
        let idx: Vec<usize> = (0..m).filter(|&i| degrees[i] == deg).collect();
        let mut tries = 0;
        loop {
            for &i in &idx {
                for &j in &idx {
                    entries[i * m + j] = Polynomial::constant(ring, draw_scalar(ring, rng));
                }
            }
            if scalar_block_invertible(ring, &entries, &idx, m) {
                break;
            }
            tries += 1;
            if tries > 64 {
                return Err(Error::Internal("could not draw an invertible scalar block"));
            }
        }
    }
    PolyMatrix::new(ring, m, m, entries, MatrixStructure::General)
}

fn scalar_block_invertible(
    ring: &Arc<PolyRing>,
    entries: &[Polynomial],
    idx: &[usize],
    m: usize,
) -> bool {
    // Gaussian elimination on the constant block
    let field = ring.field();
    let k = idx.len();
    let mut a: Vec<Coeff> = Vec::with_capacity(k * k);
    for &i in idx {
        for &j in idx {
            let e = &entries[i * m + j];
            let c = e
                .leading()
                .map(|(c, _)| c.clone())
                .unwrap_or_else(|| field.zero());
            a.push(c);
        }
    }
    for col in 0..k {
        let pivot = (col..k).find(|&r| !field.is_zero(&a[r * k + col]));
        let Some(pivot) = pivot else { return false };
        if pivot != col {
            for j in 0..k {
                a.swap(col * k + j, pivot * k + j);
            }
        }
        let inv = field.inv(&a[col * k + col]);
        for r in col + 1..k {
            let factor = field.mul(&a[r * k + col], &inv);
            if field.is_zero(&factor) {
                continue;
            }
            for j in col..k {
                let delta = field.mul(&factor, &a[col * k + j]);
                a[r * k + j] = field.sub(&a[r * k + j], &delta);
            }
        }
    }
    true
}

/// The congruence transform `P^T * M * P` of a symmetric matrix; the result
/// is symmetric and generates the same minor ideals when `P` is invertible.
pub fn apply_congruence(m: &PolyMatrix, p: &PolyMatrix) -> Result<PolyMatrix> {
    if m.structure() != MatrixStructure::Symmetric {
        return Err(Error::WrongStructure {
            expected: "symmetric",
            found: m.structure().name(),
        });
    }
    if p.rows() != m.rows() || p.cols() != m.rows() {
        return Err(Error::BadShape {
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    let product = p.transpose().matmul(m)?.matmul(p)?;
    product.with_structure(MatrixStructure::Symmetric)
}

/// Seeded generic graded congruence: draws a graded invertible `P` from a
/// deterministic generator and returns `(P^T M P, P)`. The input must be
/// symmetric with a congruence-compatible degree grading.
pub fn generic_congruence(m: &PolyMatrix, seed: u64) -> Result<(PolyMatrix, PolyMatrix)> {
    if m.structure() != MatrixStructure::Symmetric {
        return Err(Error::WrongStructure {
            expected: "symmetric",
            found: m.structure().name(),
        });
    }
    let (degrees, _shift) = symmetric_row_degrees(m).ok_or(Error::NoConsistentGrading)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_graded_transform(m.ring(), &degrees, &mut rng)?;
    let transformed = apply_congruence(m, &p)?;
    Ok((transformed, p))
}
