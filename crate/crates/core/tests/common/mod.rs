//! Independent oracles and generators shared by the integration suites.
//! Everything here is deliberately naive and separate from the library's
//! own algorithms: permutation-sum determinants, criterion-free Buchberger
//! closure, and degree-bounded linear-algebra membership.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;

use liaison_forge::pmatrix::{MatrixStructure, PolyMatrix};
use liaison_forge::ring::{Coeff, FieldSpec, Monomial, PolyRing, Polynomial};

/// Determinant as the full signed permutation sum.
pub fn leibniz_det(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    let n = rows.len();
    assert_eq!(n, cols.len());
    let ring = m.ring().clone();
    let mut acc = Polynomial::zero(&ring);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let sign = permutation_sign(&perm);
        let mut prod = Polynomial::one(&ring);
        for (i, &p) in perm.iter().enumerate() {
            prod = prod.mul(m.entry(rows[i], cols[p])).unwrap();
        }
        acc = if sign {
            acc.sub(&prod).unwrap()
        } else {
            acc.add(&prod).unwrap()
        };
        if !next_permutation(&mut perm) {
            break;
        }
    }
    acc
}

fn permutation_sign(perm: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Full multivariate division by a list of divisors, written from scratch
/// for oracle use.
pub fn oracle_reduce(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = *ring.field();
    let order = ring.order();
    let mut remainder: Vec<(Coeff, Monomial)> = Vec::new();
    let mut work = f.clone();
    'outer: while let Some((c, m)) = work.leading().map(|(c, m)| (c.clone(), m.clone())) {
        for g in divisors {
            if g.is_zero() {
                continue;
            }
            let (gc, gm) = g.leading().unwrap();
            if gm.divides(&m) {
                let shift = m.try_div(gm).unwrap();
                let q = field.div(&c, gc);
                let shifted = g
                    .terms()
                    .iter()
                    .map(|(tc, tm)| (field.mul(tc, &q), tm.mul(&shift)));
                let sub = Polynomial::from_terms(&ring, shifted);
                work = work.sub(&sub).unwrap();
                continue 'outer;
            }
        }
        remainder.push((c, m));
        let rest = work.terms()[1..].to_vec();
        work = Polynomial::from_terms(&ring, rest);
    }
    let _ = order;
    Polynomial::from_terms(&ring, remainder)
}

/// Criterion-free Buchberger closure followed by a naive reduction pass:
/// every S-polynomial is processed, no pruning.
pub fn naive_reduced_gb(gens: &[Polynomial]) -> Vec<Polynomial> {
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Vec::new();
    }
    let ring = gens[0].ring().clone();
    let field = *ring.field();
    let mut basis = gens;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (fc, fm) = basis[i].leading().unwrap();
        let (gc, gm) = basis[j].leading().unwrap();
        let lcm = fm.lcm(gm);
        let uf = lcm.try_div(fm).unwrap();
        let ug = lcm.try_div(gm).unwrap();
        let left = Polynomial::from_terms(
            &ring,
            basis[i]
                .terms()
                .iter()
                .map(|(c, m)| (field.div(c, fc), m.mul(&uf))),
        );
        let right = Polynomial::from_terms(
            &ring,
            basis[j]
                .terms()
                .iter()
                .map(|(c, m)| (field.div(c, gc), m.mul(&ug))),
        );
        let s = left.sub(&right).unwrap();
        let r = oracle_reduce(&s, &basis);
        if !r.is_zero() {
            let new = basis.len();
            basis.push(r);
            for k in 0..new {
                pairs.push((k, new));
            }
        }
    }
    // minimize
    let order = ring.order();
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }
    // inter-reduce and normalize
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, h)| h.clone())
            .collect();
        minimal[i] = oracle_reduce(&minimal[i], &others).monic();
    }
    minimal.retain(|g| !g.is_zero());
    minimal.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    minimal
}

/// True when every S-polynomial of the list reduces to zero under the
/// oracle division.
pub fn spoly_closure_holds(basis: &[Polynomial]) -> bool {
    if basis.len() < 2 {
        return true;
    }
    let ring = basis[0].ring().clone();
    let field = *ring.field();
    for j in 0..basis.len() {
        for i in 0..j {
            let (fc, fm) = basis[i].leading().unwrap();
            let (gc, gm) = basis[j].leading().unwrap();
            let lcm = fm.lcm(gm);
            let uf = lcm.try_div(fm).unwrap();
            let ug = lcm.try_div(gm).unwrap();
            let left = Polynomial::from_terms(
                &ring,
                basis[i]
                    .terms()
                    .iter()
                    .map(|(c, m)| (field.div(c, fc), m.mul(&uf))),
            );
            let right = Polynomial::from_terms(
                &ring,
                basis[j]
                    .terms()
                    .iter()
                    .map(|(c, m)| (field.div(c, gc), m.mul(&ug))),
            );
            let s = left.sub(&right).unwrap();
            if !oracle_reduce(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

fn monomials_up_to(num_vars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; num_vars];
    fn rec(out: &mut Vec<Monomial>, exps: &mut Vec<u16>, var: usize, left: u32) {
        if var == exps.len() {
            out.push(Monomial::new(exps.iter().copied()));
            return;
        }
        for e in 0..=left {
            exps[var] = e as u16;
            rec(out, exps, var + 1, left - e);
            exps[var] = 0;
        }
    }
    rec(&mut out, &mut exps, 0, bound);
    out
}

/// Degree-bounded membership by linear algebra over Z/p: spans all
/// monomial multiples `m * g` with total degree at most `bound` and row
/// reduces. Exact for homogeneous ideals whenever `bound >= deg f`.
pub fn macaulay_member(f: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    let ring = f.ring().clone();
    let p = match ring.field() {
        FieldSpec::PrimeField(p) => *p as u64,
        FieldSpec::Rationals => panic!("the membership oracle runs over a prime field"),
    };
    if f.is_zero() {
        return true;
    }
    if f.total_degree().unwrap() > bound {
        return false;
    }
    let monos = monomials_up_to(ring.num_vars(), bound);
    let index: HashMap<Monomial, usize> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let width = monos.len();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let gdeg = g.total_degree().unwrap();
        if gdeg > bound {
            continue;
        }
        for m in monomials_up_to(ring.num_vars(), bound - gdeg) {
            let mut row = vec![0u64; width];
            let mut fits = true;
            for (c, gm) in g.terms() {
                let prod = gm.mul(&m);
                match index.get(&prod) {
                    Some(&k) => {
                        let v = match c {
                            Coeff::Mod(v) => *v,
                            Coeff::Rat(_) => unreachable!(),
                        };
                        row[k] = (row[k] + v) % p;
                    }
                    None => {
                        fits = false;
                        break;
                    }
                }
            }
            if fits {
                rows.push(row);
            }
        }
    }
    let mut target = vec![0u64; width];
    for (c, m) in f.terms() {
        let v = match c {
            Coeff::Mod(v) => *v,
            Coeff::Rat(_) => unreachable!(),
        };
        target[index[m]] = v;
    }
    // eliminate
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut reduced: Vec<Vec<u64>> = Vec::new();
    for row in rows {
        let mut row = row;
        for (r, &pc) in reduced.iter().zip(&pivot_cols) {
            if row[pc] != 0 {
                let factor = row[pc];
                for k in 0..width {
                    row[k] = (row[k] + (p - factor) * r[k]) % p;
                }
            }
        }
        if let Some(lead) = row.iter().position(|&v| v != 0) {
            let inv = mod_inv(row[lead], p);
            for v in row.iter_mut() {
                *v = (*v * inv) % p;
            }
            reduced.push(row);
            pivot_cols.push(lead);
        }
    }
    for (r, &pc) in reduced.iter().zip(&pivot_cols) {
        if target[pc] != 0 {
            let factor = target[pc];
            for k in 0..width {
                target[k] = (target[k] + (p - factor) * r[k]) % p;
            }
        }
    }
    target.iter().all(|&v| v == 0)
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Seeded random polynomial: up to `max_terms` terms of degree at most
/// `max_deg` with small coefficients.
pub fn random_poly(
    ring: &Arc<PolyRing>,
    rng: &mut ChaCha8Rng,
    max_terms: usize,
    max_deg: u16,
) -> Polynomial {
    let n = ring.num_vars();
    let field = ring.field();
    let terms = (0..1 + (rng.next_u64() as usize % max_terms)).map(|_| {
        let mut exps = vec![0u16; n];
        let mut left = max_deg;
        for e in exps.iter_mut() {
            let d = (rng.next_u64() % (left as u64 + 1)) as u16;
            *e = d;
            left -= d;
        }
        let c: i64 = (rng.next_u64() % 19) as i64 - 9;
        (field.from_i64(c), Monomial::new(exps))
    });
    Polynomial::from_terms(ring, terms)
}

/// Seeded random homogeneous polynomial of exact degree `deg` (or zero).
pub fn random_homogeneous(
    ring: &Arc<PolyRing>,
    rng: &mut ChaCha8Rng,
    max_terms: usize,
    deg: u32,
) -> Polynomial {
    let n = ring.num_vars();
    let field = ring.field();
    let terms = (0..1 + (rng.next_u64() as usize % max_terms)).map(|_| {
        let mut exps = vec![0u16; n];
        let mut left = deg as u16;
        for (i, e) in exps.iter_mut().enumerate() {
            if i + 1 == n {
                *e = left;
            } else {
                let d = (rng.next_u64() % (left as u64 + 1)) as u16;
                *e = d;
                left -= d;
            }
        }
        let c: i64 = (rng.next_u64() % 19) as i64 - 9;
        (field.from_i64(c), Monomial::new(exps))
    });
    Polynomial::from_terms(ring, terms)
}

/// Seeded random square matrix with entries of degree at most `max_deg`.
pub fn random_square_matrix(
    ring: &Arc<PolyRing>,
    rng: &mut ChaCha8Rng,
    size: usize,
    max_deg: u16,
) -> PolyMatrix {
    let entries = (0..size * size)
        .map(|_| random_poly(ring, rng, 3, max_deg))
        .collect();
    PolyMatrix::new(ring, size, size, entries, MatrixStructure::General).unwrap()
}

/// The distinct symmetric matrices of the corpus, one per underlying
/// matrix (grid entries share theirs across t).
pub fn corpus_symmetric_matrices() -> Vec<(String, PolyMatrix)> {
    let mut out = Vec::new();
    for name in [
        "veronese",
        "generic_sym(1,1)",
        "generic_sym(2,1)",
        "generic_sym(3,1)",
        "generic_sym(4,1)",
        "ci(2)",
        "ci(3)",
        "ci(4)",
        "ht_example",
        "bruns_char2",
    ] {
        let entry = liaison_forge::corpus::builtin(name).unwrap();
        out.push((name.to_string(), entry.matrix));
    }
    out
}
