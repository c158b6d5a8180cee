use std::collections::{HashMap, HashSet};

use super::{combinations, MinorIndex, PolyMatrix};
use crate::error::{Error, Result};
use crate::groebner::IdealBasis;
use crate::ring::Polynomial;

/// Exact determinant of the selected submatrix. Fraction-free Bareiss
/// elimination is the primary path; cofactor expansion is the fallback
/// should an exact division ever fail.
pub fn minor(m: &PolyMatrix, idx: &MinorIndex) -> Result<Polynomial> {
    if idx.rows().last().copied().unwrap_or(0) >= m.rows()
        || idx.cols().last().copied().unwrap_or(0) >= m.cols()
    {
        return Err(Error::IndexOutOfRange);
    }
    Ok(det_of_listed(m, idx.rows(), idx.cols()))
}

/// Determinant of the submatrix assembled with rows and columns in the
/// listed order (no sorting, repeats allowed — a repeat gives zero).
/// Exposed for the minor-product identities, which are sensitive to the
/// listed orientation.
pub fn det_of_listed(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    assert_eq!(rows.len(), cols.len());
    let sub: Vec<Vec<Polynomial>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| m.entry(i, j).clone()).collect())
        .collect();
    match det_bareiss(&sub) {
        Some(d) => d,
        None => det_cofactor(&sub),
    }
}

/// Cofactor expansion along the first row, memoized on column subsets.
/// Serves as the fallback path and as a cross-check oracle for Bareiss.
pub fn minor_cofactor(m: &PolyMatrix, idx: &MinorIndex) -> Result<Polynomial> {
    if idx.rows().last().copied().unwrap_or(0) >= m.rows()
        || idx.cols().last().copied().unwrap_or(0) >= m.cols()
    {
        return Err(Error::IndexOutOfRange);
    }
    let sub: Vec<Vec<Polynomial>> = idx
        .rows()
        .iter()
        .map(|&i| idx.cols().iter().map(|&j| m.entry(i, j).clone()).collect())
        .collect();
    Ok(det_cofactor(&sub))
}

fn det_bareiss(a: &[Vec<Polynomial>]) -> Option<Polynomial> {
    let n = a.len();
    let ring = a[0][0].ring().clone();
    if n == 1 {
        return Some(a[0][0].clone());
    }
    let mut w: Vec<Vec<Polynomial>> = a.to_vec();
    let mut sign = false;
    let mut prev = Polynomial::one(&ring);
    for k in 0..n - 1 {
        if w[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&r| !w[r][k].is_zero());
            match pivot {
                Some(r) => {
                    w.swap(k, r);
                    sign = !sign;
                }
                None => return Some(Polynomial::zero(&ring)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = w[k][k]
                    .mul(&w[i][j])
                    .ok()?
                    .sub(&w[i][k].mul(&w[k][j]).ok()?)
                    .ok()?;
                w[i][j] = num.exact_div(&prev)?;
            }
        }
        for row in w.iter_mut().take(n).skip(k + 1) {
            row[k] = Polynomial::zero(&ring);
        }
        prev = w[k][k].clone();
    }
    let det = w[n - 1][n - 1].clone();
    Some(if sign { det.neg() } else { det })
}

fn det_cofactor(a: &[Vec<Polynomial>]) -> Polynomial {
    let n = a.len();
    let ring = a[0][0].ring().clone();
    let full: u32 = (1 << n) - 1;
    let mut memo: HashMap<(u32, u32), Polynomial> = HashMap::new();
    det_cofactor_rec(a, full, full, &mut memo, &ring)
}

fn det_cofactor_rec(
    a: &[Vec<Polynomial>],
    rows: u32,
    cols: u32,
    memo: &mut HashMap<(u32, u32), Polynomial>,
    ring: &std::sync::Arc<crate::ring::PolyRing>,
) -> Polynomial {
    if let Some(d) = memo.get(&(rows, cols)) {
        return d.clone();
    }
    let row_list: Vec<usize> = (0..a.len()).filter(|i| rows & (1 << i) != 0).collect();
    let col_list: Vec<usize> = (0..a.len()).filter(|j| cols & (1 << j) != 0).collect();
    let d = if row_list.len() == 1 {
        a[row_list[0]][col_list[0]].clone()
    } else {
        let r = row_list[0];
        let mut acc = Polynomial::zero(ring);
        for (pos, &c) in col_list.iter().enumerate() {
            if a[r][c].is_zero() {
                continue;
            }
            let sub = det_cofactor_rec(a, rows & !(1 << r), cols & !(1 << c), memo, ring);
            let term = a[r][c].mul(&sub).expect("same ring");
            acc = if pos % 2 == 0 {
                acc.add(&term).expect("same ring")
            } else {
                acc.sub(&term).expect("same ring")
            };
        }
        acc
    };
    memo.insert((rows, cols), d.clone());
    d
}

/// Ideal of all t x t minors, with zero minors dropped and duplicates up to
/// sign removed; generators keep the lexicographic (rows, cols) enumeration
/// order.
pub fn minor_ideal(m: &PolyMatrix, t: usize) -> Result<IdealBasis> {
    if t == 0 || t > m.rows().min(m.cols()) {
        return Err(Error::MinorSizeOutOfRange {
            t,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut seen: HashSet<Polynomial> = HashSet::new();
    let mut gens = Vec::new();
    for rows in combinations(m.rows(), t) {
        for cols in combinations(m.cols(), t) {
            let d = minor(m, &MinorIndex::new(rows.clone(), cols)?)?;
            if d.is_zero() {
                continue;
            }
            if seen.insert(d.sign_canonical()) {
                gens.push(d);
            }
        }
    }
    IdealBasis::new(m.ring(), gens)
}
