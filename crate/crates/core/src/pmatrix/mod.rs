//! Polynomial matrices with symmetric / almost-symmetric structure,
//! t-homogeneity checking, exact minors, minor ideals, and graded
//! symmetry-preserving congruence transformations.

mod congruence;
mod grading;
mod minors;

pub use congruence::{apply_congruence, generic_congruence, random_graded_transform};
pub use grading::{infer_grading, symmetric_row_degrees, DegreeGrading};
pub use minors::{det_of_listed, minor, minor_cofactor, minor_ideal};

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{same_ring, PolyRing, Polynomial};

/// Declared shape constraint of a matrix. `Symmetric` means square with
/// mirrored entries; `AlmostSymmetric` means size (m-1) x m with the left
/// (m-1) x (m-1) block symmetric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixStructure {
    General,
    Symmetric,
    AlmostSymmetric,
}

impl MatrixStructure {
    pub fn name(&self) -> &'static str {
        match self {
            MatrixStructure::General => "general",
            MatrixStructure::Symmetric => "symmetric",
            MatrixStructure::AlmostSymmetric => "almost_symmetric",
        }
    }
}

/// Rectangular matrix of polynomials over one ring, row-major, immutable.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    structure: MatrixStructure,
}

impl PolyMatrix {
    pub fn new(
        ring: &Arc<PolyRing>,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial>,
        structure: MatrixStructure,
    ) -> Result<PolyMatrix> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::BadShape { rows, cols });
        }
        for e in &entries {
            if !same_ring(ring, e.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        let m = PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
            structure,
        };
        m.check_structure()?;
        Ok(m)
    }

    fn check_structure(&self) -> Result<()> {
        match self.structure {
            MatrixStructure::General => Ok(()),
            MatrixStructure::Symmetric => {
                if self.rows != self.cols {
                    return Err(Error::BadShape {
                        rows: self.rows,
                        cols: self.cols,
                    });
                }
                for i in 0..self.rows {
                    for j in (i + 1)..self.cols {
                        if self.entry(i, j) != self.entry(j, i) {
                            return Err(Error::NotSymmetric { i, j });
                        }
                    }
                }
                Ok(())
            }
            MatrixStructure::AlmostSymmetric => {
                if self.rows + 1 != self.cols {
                    return Err(Error::BadShape {
                        rows: self.rows,
                        cols: self.cols,
                    });
                }
                for i in 0..self.rows {
                    for j in (i + 1)..self.rows {
                        if self.entry(i, j) != self.entry(j, i) {
                            return Err(Error::NotSymmetric { i, j });
                        }
                    }
                }
                Ok(())
            }
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn structure(&self) -> MatrixStructure {
        self.structure
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    /// True iff no entry is a nonzero constant.
    pub fn no_invertible_entries(&self) -> bool {
        !self.entries.iter().any(|e| e.is_constant() && !e.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Deletes the last row of a symmetric matrix, yielding an
    /// almost-symmetric (m-1) x m matrix.
    pub fn delete_last_row(&self) -> Result<PolyMatrix> {
        if self.structure != MatrixStructure::Symmetric {
            return Err(Error::WrongStructure {
                expected: "symmetric",
                found: self.structure.name(),
            });
        }
        if self.rows < 2 {
            return Err(Error::BadShape { rows: 0, cols: 1 });
        }
        let entries = self.entries[..(self.rows - 1) * self.cols].to_vec();
        PolyMatrix::new(
            &self.ring,
            self.rows - 1,
            self.cols,
            entries,
            MatrixStructure::AlmostSymmetric,
        )
    }

    /// Deletes the last column of an almost-symmetric matrix, yielding its
    /// symmetric left block.
    pub fn delete_last_column(&self) -> Result<PolyMatrix> {
        if self.structure != MatrixStructure::AlmostSymmetric {
            return Err(Error::WrongStructure {
                expected: "almost_symmetric",
                found: self.structure.name(),
            });
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols - 1));
        for i in 0..self.rows {
            for j in 0..self.cols - 1 {
                entries.push(self.entry(i, j).clone());
            }
        }
        PolyMatrix::new(
            &self.ring,
            self.rows,
            self.cols - 1,
            entries,
            MatrixStructure::Symmetric,
        )
    }

    /// `true` iff every s x s minor is homogeneous for all s <= t. A
    /// consistent grading certifies this for every t at once; without one
    /// the minors are checked exhaustively.
    pub fn is_t_homogeneous(&self, t: usize) -> Result<bool> {
        if t == 0 || t > self.rows.min(self.cols) {
            return Err(Error::MinorSizeOutOfRange {
                t,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if infer_grading(self).is_some() {
            return Ok(true);
        }
        for s in 1..=t {
            for row_set in combinations(self.rows, s) {
                for col_set in combinations(self.cols, s) {
                    let d = minor(self, &MinorIndex::new(row_set.clone(), col_set.clone())?)?;
                    if !d.is_homogeneous() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
            structure: MatrixStructure::General,
        }
    }

    /// Matrix product; structures are not propagated.
    pub fn matmul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::BadShape {
                rows: other.rows,
                cols: other.cols,
            });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(
            &self.ring,
            self.rows,
            other.cols,
            entries,
            MatrixStructure::General,
        )
    }

    /// Reinterprets the matrix with a different structure tag, revalidating.
    pub fn with_structure(&self, structure: MatrixStructure) -> Result<PolyMatrix> {
        PolyMatrix::new(
            &self.ring,
            self.rows,
            self.cols,
            self.entries.clone(),
            structure,
        )
    }
}

/// Row and column selection for a minor: strictly increasing index tuples
/// of equal length (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorIndex {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorIndex {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<MinorIndex> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::MinorShapeMismatch);
        }
        if !strictly_increasing(&rows) || !strictly_increasing(&cols) {
            return Err(Error::IndexOutOfRange);
        }
        Ok(MinorIndex { rows, cols })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Binomial coefficient as i64; zero when k is out of range.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
