use super::{GroebnerBasis, IdealBasis};
use crate::error::{Error, Result};
use crate::timing::{self, Phase};

/// Krull dimension of `ring / <G>`, computed combinatorially on the
/// leading-term ideal: the maximum cardinality of a variable subset S such
/// that no leading monomial is supported entirely inside S. The unit ideal
/// reports -1.
pub fn krull_dimension(gb: &GroebnerBasis) -> i64 {
    let n = gb.ring().num_vars();
    assert!(n <= 63, "dimension search supports at most 63 variables");
    let supports: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support_mask())
        .collect();
    if supports.contains(&0) {
        return -1; // a unit leads the basis
    }
    if supports.is_empty() {
        return n as i64; // zero ideal
    }
    let full: u64 = if n == 63 { u64::MAX >> 1 } else { (1 << n) - 1 };
    for size in (0..=n).rev() {
        let mut found = false;
        let mut mask: u64 = 0;
        // enumerate subsets of the given size in increasing mask order
        loop {
            if (mask.count_ones() as usize) == size && supports.iter().all(|&s| s & !mask != 0) {
                found = true;
                break;
            }
            if mask == full {
                break;
            }
            mask += 1;
        }
        if found {
            return size as i64;
        }
    }
    unreachable!("the empty subset is independent for proper ideals")
}

/// Height (codimension) of a homogeneous ideal: `num_vars` minus the Krull
/// dimension of the quotient. The unit ideal reports `num_vars + 1`, which
/// exceeds every proper height.
pub fn height(ideal: &IdealBasis) -> Result<i64> {
    if !ideal.all_homogeneous() {
        return Err(Error::InhomogeneousInput);
    }
    let _t = timing::start(Phase::Heights);
    let gb = ideal.groebner();
    Ok(ideal.ring().num_vars() as i64 - krull_dimension(&gb))
}

/// Height read off an already computed basis, for callers that reuse the
/// basis for reductions.
pub fn minor_height_from_gb(gb: &GroebnerBasis) -> i64 {
    let _t = timing::start(Phase::Heights);
    gb.ring().num_vars() as i64 - krull_dimension(gb)
}
