use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{height, IdealBasis};
use crate::pmatrix::{binomial, generic_congruence, minor_ideal, MatrixStructure, PolyMatrix};

/// Height-drop certificate for the last-row deletion after a generic
/// congruence: `delta = ht I_t(M) - ht I_t(O)`, bounded by 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ht1Report {
    pub delta: i64,
    pub ok: bool,
    pub seed_used: u64,
    pub retries: u32,
    pub ht_t_of_m: i64,
    pub ht_t_of_o: i64,
}

fn minor_ideal_or_zero(m: &PolyMatrix, t: usize) -> Result<IdealBasis> {
    if t > m.rows().min(m.cols()) {
        Ok(IdealBasis::zero(m.ring()))
    } else {
        minor_ideal(m, t)
    }
}

/// Applies a generic symmetry-preserving congruence, deletes the last row,
/// and measures the height drop of the t-minor ideal. Retries the seed
/// while the transformed corner entry is zero, except in the trivial case
/// where the whole last row and column vanish.
pub fn check_ht1(m: &PolyMatrix, t: usize, seed: u64) -> Result<Ht1Report> {
    if m.structure() != MatrixStructure::Symmetric {
        return Err(Error::WrongStructure {
            expected: "symmetric",
            found: m.structure().name(),
        });
    }
    if t == 0 || t > m.rows() {
        return Err(Error::MinorSizeOutOfRange {
            t,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_t_homogeneous(t)? {
        return Err(Error::InhomogeneousInput);
    }
    if !m.no_invertible_entries() {
        return Err(Error::InvertibleEntries);
    }
    let size = m.rows();
    let budget = 8u32;
    let mut attempts = Vec::new();
    for retry in 0..budget {
        let s = seed + retry as u64;
        let (m2, _) = generic_congruence(m, s)?;
        let corner_zero = m2.entry(size - 1, size - 1).is_zero();
        let border_zero = (0..size).all(|i| m2.entry(size - 1, i).is_zero());
        if corner_zero && !border_zero {
            attempts.push(crate::error::AttemptDiagnostic {
                seed: s,
                corner_entry_zero: true,
                ht_t_of_m: -1,
                ht_t_of_o: -1,
                ht_t1_of_n: -1,
            });
            continue;
        }
        let o = m2.delete_last_row()?;
        let ht_m = height(&minor_ideal_or_zero(&m2, t)?)?;
        let ht_o = height(&minor_ideal_or_zero(&o, t)?)?;
        let delta = ht_m - ht_o;
        return Ok(Ht1Report {
            delta,
            ok: delta <= 1,
            seed_used: s,
            retries: retry,
            ht_t_of_m: ht_m,
            ht_t_of_o: ht_o,
        });
    }
    Err(Error::GenericityExhausted { attempts })
}

/// Generic-complete-intersection criteria for an almost-symmetric
/// determinantal matrix: with c = C(m-t+2, 2) - 1, condition 2 holds when
/// `ht I_{t-1}(O) >= c+1`; the sufficient condition holds when
/// `ht I_{t-1}(N) = c+1` for N the left symmetric block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmReport {
    pub c: i64,
    pub condition2: bool,
    pub sufficient: bool,
    pub ht_t1_of_o: i64,
    pub ht_t1_of_n: i64,
}

pub fn check_subm(o: &PolyMatrix, t: usize) -> Result<SubmReport> {
    if o.structure() != MatrixStructure::AlmostSymmetric {
        return Err(Error::WrongStructure {
            expected: "almost_symmetric",
            found: o.structure().name(),
        });
    }
    if t < 2 || t > o.rows() {
        return Err(Error::MinorSizeOutOfRange {
            t,
            rows: o.rows(),
            cols: o.cols(),
        });
    }
    let c = binomial(o.cols() as i64 - t as i64 + 2, 2) - 1;
    let ht_t1_of_o = height(&minor_ideal(o, t - 1)?)?;
    let n = o.delete_last_column()?;
    let ht_t1_of_n = height(&minor_ideal(&n, t - 1)?)?;
    Ok(SubmReport {
        c,
        condition2: ht_t1_of_o > c,
        sufficient: ht_t1_of_n == c + 1,
        ht_t1_of_o,
        ht_t1_of_n,
    })
}

/// The symmetric analogue: with c+1 = C(m-t+2, 2), condition 2 holds when
/// `ht I_{t-1}(M) >= c+2`; the sufficient condition checks
/// `ht I_{t-1}(O) >= c+2` for O the last-row deletion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsdReport {
    pub c: i64,
    pub condition2: bool,
    pub sufficient: bool,
    pub ht_t1_of_m: i64,
    pub ht_t1_of_o: i64,
}

pub fn check_subsd(m: &PolyMatrix, t: usize) -> Result<SubsdReport> {
    if m.structure() != MatrixStructure::Symmetric {
        return Err(Error::WrongStructure {
            expected: "symmetric",
            found: m.structure().name(),
        });
    }
    if t < 2 || t > m.rows() {
        return Err(Error::MinorSizeOutOfRange {
            t,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let c = binomial(m.rows() as i64 - t as i64 + 2, 2) - 1;
    let ht_t1_of_m = height(&minor_ideal(m, t - 1)?)?;
    let o = m.delete_last_row()?;
    let ht_t1_of_o = height(&minor_ideal(&o, t - 1)?)?;
    Ok(SubsdReport {
        c,
        condition2: ht_t1_of_m >= c + 2,
        sufficient: ht_t1_of_o >= c + 2,
        ht_t1_of_m,
        ht_t1_of_o,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liaison::test_support::*;
    use crate::ring::PolyRing;

    fn section_one_example() -> (PolyMatrix, PolyMatrix) {
        let ring = PolyRing::rationals(&["x0", "x1", "x2", "x3"]);
        let m = matrix(
            &ring,
            &[
                &["x0", "x1", "x2"],
                &["x1", "x0", "x3"],
                &["x2", "x3", "x2"],
            ],
            MatrixStructure::Symmetric,
        );
        let o = matrix(
            &ring,
            &[&["x0", "x1", "x2"], &["x1", "x0", "x3"]],
            MatrixStructure::AlmostSymmetric,
        );
        (m, o)
    }

    #[test]
    fn worked_example_heights_and_subm_flags() {
        let (_, o) = section_one_example();
        let report = check_subm(&o, 2).unwrap();
        assert_eq!(report.c, 2);
        assert_eq!(report.ht_t1_of_o, 4);
        assert!(report.condition2);
        assert_eq!(report.ht_t1_of_n, 2);
        assert!(!report.sufficient);
    }

    #[test]
    fn worked_example_ht1_is_bounded() {
        let (m, _) = section_one_example();
        let report = check_ht1(&m, 2, 0).unwrap();
        assert!(report.ok, "delta = {}", report.delta);
        assert!(report.delta == 0 || report.delta == 1);
    }

    #[test]
    fn zero_border_matrix_has_no_height_drop() {
        let ring = PolyRing::rationals(&["x0", "x1", "x5"]);
        let m = matrix(
            &ring,
            &[&["x0", "x1", "0"], &["x1", "x5", "0"], &["0", "0", "0"]],
            MatrixStructure::Symmetric,
        );
        let report = check_ht1(&m, 2, 0).unwrap();
        assert_eq!(report.delta, 0);
        assert!(report.ok);
    }

    #[test]
    fn veronese_ht1_delta_is_one() {
        let ring = PolyRing::prime_field(&["x0", "x1", "x2", "x3", "x4", "x5"], 32003).unwrap();
        let m = veronese_matrix(&ring);
        let report = check_ht1(&m, 2, 0).unwrap();
        assert_eq!(report.delta, 1);
        assert!(report.ok);
    }

    #[test]
    fn veronese_subsd_condition2() {
        let ring = PolyRing::prime_field(&["x0", "x1", "x2", "x3", "x4", "x5"], 32003).unwrap();
        let m = veronese_matrix(&ring);
        let report = check_subsd(&m, 2).unwrap();
        // I_1(M) is the full variable ideal of height 6 >= c+2 = 4
        assert_eq!(report.ht_t1_of_m, 6);
        assert!(report.condition2);
    }

    #[test]
    fn generic_symmetric_three_by_three_subsd_t3() {
        let ring = PolyRing::prime_field(&["a", "b", "c", "d", "e", "f"], 32003).unwrap();
        let m = matrix(
            &ring,
            &[&["a", "b", "c"], &["b", "d", "e"], &["c", "e", "f"]],
            MatrixStructure::Symmetric,
        );
        let report = check_subsd(&m, 3).unwrap();
        // codim of the determinant is c+1 = 1; ht I_2(M) = 3 >= c+2 = 2
        assert_eq!(report.c, 0);
        assert_eq!(report.ht_t1_of_m, 3);
        assert!(report.condition2);
    }

    #[test]
    fn generic_four_by_four_subsd_t2() {
        let vars: Vec<String> = (1..=4)
            .flat_map(|i| (i..=4).map(move |j| format!("x{i}{j}")))
            .collect();
        let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let ring = PolyRing::prime_field(&var_refs, 32003).unwrap();
        let entry = |i: usize, j: usize| format!("x{}{}", i.min(j), i.max(j));
        let rows: Vec<Vec<String>> = (1..=4)
            .map(|i| (1..=4).map(|j| entry(i, j)).collect())
            .collect();
        let row_refs: Vec<Vec<&str>> = rows
            .iter()
            .map(|r| r.iter().map(|s| s.as_str()).collect())
            .collect();
        let row_slices: Vec<&[&str]> = row_refs.iter().map(|r| r.as_slice()).collect();
        let m = matrix(&ring, &row_slices, MatrixStructure::Symmetric);
        let report = check_subsd(&m, 2).unwrap();
        // ht I_1(M) = 10 >= c+2 = 7
        assert_eq!(report.ht_t1_of_m, 10);
        assert_eq!(report.c + 2, 7);
        assert!(report.condition2);
    }

    #[test]
    fn subm_rejects_t_below_two() {
        let (_, o) = section_one_example();
        assert!(check_subm(&o, 1).is_err());
    }
}
