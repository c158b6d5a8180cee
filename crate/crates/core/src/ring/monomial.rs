use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Monomial order. `Elimination(k)` is a block order that compares the
/// first `k` variables by graded reverse lex before the rest, so any
/// monomial containing a block-one variable exceeds every monomial in the
/// remaining variables only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len());
        match self {
            MonomialOrder::GrevLex => grevlex(&a.exps, &b.exps, a.deg, b.deg),
            MonomialOrder::Lex => lex(&a.exps, &b.exps),
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(a.exps.len());
                let (da, db) = (block_degree(&a.exps[..k]), block_degree(&b.exps[..k]));
                grevlex(&a.exps[..k], &b.exps[..k], da, db)
                    .then_with(|| grevlex(&a.exps[k..], &b.exps[k..], a.deg - da, b.deg - db))
            }
        }
    }
}

fn block_degree(exps: &[u16]) -> u32 {
    exps.iter().map(|&e| e as u32).sum()
}

fn grevlex(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    // larger exponent in the last differing position loses
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
        ord => ord,
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

/// Exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 12]>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u16>) -> Monomial {
        let exps: SmallVec<[u16; 12]> = exps.into_iter().collect();
        let deg = block_degree(&exps);
        Monomial { exps, deg }
    }

    pub fn one(num_vars: usize) -> Monomial {
        Monomial {
            exps: smallvec::smallvec![0; num_vars],
            deg: 0,
        }
    }

    pub fn var(num_vars: usize, index: usize) -> Monomial {
        let mut exps: SmallVec<[u16; 12]> = smallvec::smallvec![0; num_vars];
        exps[index] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            deg: self.deg - other.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 12]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let deg = block_degree(&exps);
        Monomial { exps, deg }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of variables with nonzero exponent; valid for <= 64 variables.
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    /// Exponent of one variable.
    pub fn exp(&self, index: usize) -> u16 {
        self.exps[index]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::new(exps.iter().copied())
    }

    #[test]
    fn grevlex_ties_break_on_last_variable() {
        let ord = MonomialOrder::GrevLex;
        // x0*x2 vs x1^2: equal degree, last differing exponent is var 2
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // degree dominates
        assert_eq!(ord.cmp(&m(&[3, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        // one is minimal
        assert_eq!(ord.cmp(&m(&[0, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn lex_compares_leading_variable_first() {
        let ord = MonomialOrder::Lex;
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn elimination_block_dominates() {
        let ord = MonomialOrder::Elimination(1);
        // u^1 beats any monomial without u
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        // without u, falls back to grevlex on the tail
        assert_eq!(ord.cmp(&m(&[0, 2, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1]);
        let b = m(&[1, 0]);
        assert!(b.divides(&a));
        assert_eq!(a.try_div(&b).unwrap(), m(&[1, 1]));
        assert_eq!(a.lcm(&m(&[0, 3])), m(&[2, 3]));
        assert!(m(&[1, 0]).is_coprime_with(&m(&[0, 2])));
        assert!(!m(&[1, 1]).is_coprime_with(&m(&[0, 2])));
    }
}
