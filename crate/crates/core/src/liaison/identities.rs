use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{normal_form, GroebnerBasis};
use crate::pmatrix::{combinations, det_of_listed, minor_ideal, MatrixStructure, PolyMatrix};
use crate::ring::Polynomial;
use crate::timing::{self, Phase};

/// Tuple pair witnessing a failed cross-minor membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossWitness {
    pub rows_a: Vec<usize>,
    pub cols_a: Vec<usize>,
    pub rows_b: Vec<usize>,
    pub cols_b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossIdentityReport {
    pub checked: usize,
    pub failed: usize,
    pub witnesses: Vec<CrossWitness>,
}

/// Verifies, for every pair of (t-1)-tuples (i, j) and (k, l) with indices
/// below the last row, that
///
/// ```text
/// M[i+last; j+last] * M[k; l] - M[k+last; l+last] * M[i; j]
/// ```
///
/// reduces to zero modulo the basis of the t-minors of M that avoid the
/// last row. All tuple-pair combinations are counted; pairs with
/// (i, j) = (k, l) are identically zero and skip the reduction.
pub fn verify_cross_identities(
    m: &PolyMatrix,
    t: usize,
    basis_of_deleted_row: &GroebnerBasis,
) -> Result<CrossIdentityReport> {
    if m.structure() != MatrixStructure::Symmetric {
        return Err(Error::WrongStructure {
            expected: "symmetric",
            found: m.structure().name(),
        });
    }
    let size = m.rows();
    if t < 2 || t > size {
        return Err(Error::MinorSizeOutOfRange {
            t,
            rows: size,
            cols: size,
        });
    }
    // guard against a mismatched basis: every t-minor avoiding the last row
    // must already reduce to zero
    let o = m.delete_last_row()?;
    for g in minor_ideal(&o, t)?.generators() {
        if !normal_form(g, basis_of_deleted_row)?.is_zero() {
            return Err(Error::Internal(
                "supplied basis does not contain the deleted-row minor ideal",
            ));
        }
    }

    let _t = timing::start(Phase::Identities);
    let last = size - 1;
    let tuples = combinations(last, t - 1);
    let mut report = CrossIdentityReport {
        checked: 0,
        failed: 0,
        witnesses: Vec::new(),
    };
    let mut pairs: Vec<(&Vec<usize>, &Vec<usize>)> = Vec::new();
    for rows in &tuples {
        for cols in &tuples {
            pairs.push((rows, cols));
        }
    }
    for &(rows_a, cols_a) in &pairs {
        for &(rows_b, cols_b) in &pairs {
            report.checked += 1;
            if rows_a == rows_b && cols_a == cols_b {
                continue; // the difference is syntactically zero
            }
            let big_a = bordered(m, rows_a, cols_a, last);
            let small_b = det_of_listed(m, rows_b, cols_b);
            let big_b = bordered(m, rows_b, cols_b, last);
            let small_a = det_of_listed(m, rows_a, cols_a);
            let diff = big_a.mul(&small_b)?.sub(&big_b.mul(&small_a)?)?;
            if !normal_form(&diff, basis_of_deleted_row)?.is_zero() {
                report.failed += 1;
                report.witnesses.push(CrossWitness {
                    rows_a: rows_a.clone(),
                    cols_a: cols_a.clone(),
                    rows_b: rows_b.clone(),
                    cols_b: cols_b.clone(),
                });
            }
        }
    }
    Ok(report)
}

fn bordered(m: &PolyMatrix, rows: &[usize], cols: &[usize], last: usize) -> Polynomial {
    let mut r = rows.to_vec();
    let mut c = cols.to_vec();
    r.push(last);
    c.push(last);
    det_of_listed(m, &r, &c)
}

/// Membership form of the minor-product identity: for a-tuples (i, j, k, l),
/// `M[i;j]*M[k;l] - M[k;j]*M[i;l]` lies in the (a+1)-minor ideal.
pub fn sylvester_membership(
    m: &PolyMatrix,
    a: usize,
    rows_a: &[usize],
    cols_a: &[usize],
    rows_b: &[usize],
    cols_b: &[usize],
) -> Result<bool> {
    for tuple in [rows_a, cols_a, rows_b, cols_b] {
        if tuple.len() != a || !tuple.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::MinorShapeMismatch);
        }
    }
    if a + 1 > m.rows().min(m.cols()) {
        return Err(Error::MinorSizeOutOfRange {
            t: a + 1,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if rows_a.iter().chain(rows_b).any(|&i| i >= m.rows())
        || cols_a.iter().chain(cols_b).any(|&j| j >= m.cols())
    {
        return Err(Error::IndexOutOfRange);
    }
    let gb = minor_ideal(m, a + 1)?.groebner();
    let ij = det_of_listed(m, rows_a, cols_a);
    let kl = det_of_listed(m, rows_b, cols_b);
    let kj = det_of_listed(m, rows_b, cols_a);
    let il = det_of_listed(m, rows_a, cols_b);
    let diff = ij.mul(&kl)?.sub(&kj.mul(&il)?)?;
    Ok(normal_form(&diff, &gb)?.is_zero())
}

/// Seeded sweep of the membership form: draws tuple quadruples uniformly
/// from the a-subsets and reduces each product difference modulo the
/// (a+1)-minor ideal, which is computed once.
pub fn sylvester_random_sweep(
    m: &PolyMatrix,
    a: usize,
    seed: u64,
    draws: usize,
) -> Result<(usize, usize)> {
    use rand_chacha::ChaCha8Rng;
    use rand_core::{RngCore, SeedableRng};
    if a + 1 > m.rows().min(m.cols()) {
        return Err(Error::MinorSizeOutOfRange {
            t: a + 1,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let gb = minor_ideal(m, a + 1)?.groebner();
    let row_tuples = combinations(m.rows(), a);
    let col_tuples = combinations(m.cols(), a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick =
        |v: &[Vec<usize>]| -> Vec<usize> { v[(rng.next_u64() % v.len() as u64) as usize].clone() };
    let mut failed = 0;
    for _ in 0..draws {
        let ra = pick(&row_tuples);
        let ca = pick(&col_tuples);
        let rb = pick(&row_tuples);
        let cb = pick(&col_tuples);
        let ij = det_of_listed(m, &ra, &ca);
        let kl = det_of_listed(m, &rb, &cb);
        let kj = det_of_listed(m, &rb, &ca);
        let il = det_of_listed(m, &ra, &cb);
        let diff = ij.mul(&kl)?.sub(&kj.mul(&il)?)?;
        if !normal_form(&diff, &gb)?.is_zero() {
            failed += 1;
        }
    }
    Ok((draws, failed))
}

/// The exact two-rows-shared determinant identity, checked as an equality
/// of polynomials (no reduction): with rows i_1..i_a, extra row k, columns
/// j_1..j_a, extra column l,
///
/// ```text
/// M[i; j] * M[i\i_a + k; j\j_a + l]  -  M[i\i_a + k; j] * M[i; j\j_a + l]
///   = M[i\i_a; j\j_a] * M[i + k; j + l]
/// ```
pub fn sylvester_exact_identity(
    m: &PolyMatrix,
    rows: &[usize],
    cols: &[usize],
    extra_row: usize,
    extra_col: usize,
) -> Result<bool> {
    let a = rows.len();
    if a == 0 || cols.len() != a {
        return Err(Error::MinorShapeMismatch);
    }
    if rows.iter().any(|&i| i >= m.rows())
        || cols.iter().any(|&j| j >= m.cols())
        || extra_row >= m.rows()
        || extra_col >= m.cols()
    {
        return Err(Error::IndexOutOfRange);
    }
    let head_rows = &rows[..a - 1];
    let head_cols = &cols[..a - 1];
    let swapped_rows: Vec<usize> = head_rows.iter().copied().chain([extra_row]).collect();
    let swapped_cols: Vec<usize> = head_cols.iter().copied().chain([extra_col]).collect();
    let full_rows: Vec<usize> = rows.iter().copied().chain([extra_row]).collect();
    let full_cols: Vec<usize> = cols.iter().copied().chain([extra_col]).collect();

    let lhs = det_of_listed(m, rows, cols)
        .mul(&det_of_listed(m, &swapped_rows, &swapped_cols))?
        .sub(&det_of_listed(m, &swapped_rows, cols).mul(&det_of_listed(
            m,
            rows,
            &swapped_cols,
        ))?)?;
    let rhs = if a == 1 {
        det_of_listed(m, &full_rows, &full_cols)
    } else {
        det_of_listed(m, head_rows, head_cols).mul(&det_of_listed(m, &full_rows, &full_cols))?
    };
    Ok(lhs == rhs)
}
