//! Buchberger-based ideal engine: reduced Groebner bases, normal forms,
//! membership, dimension and height, colon ideals, saturation,
//! intersections, and minimal generator counts.

mod dimension;
mod ops;

pub use dimension::{height, krull_dimension, minor_height_from_gb};
pub use ops::{
    ideal_contains, ideal_equal, ideal_quotient, intersect, is_complete_intersection,
    minimal_generator_count, saturate_by, saturate_irrelevant,
};

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::timing::{self, Phase};

/// Generator list for an ideal. Generators are nonzero, share one ring,
/// and keep their construction order.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealBasis {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
}

impl IdealBasis {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<IdealBasis> {
        for g in &generators {
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            if !same_ring(ring, g.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(IdealBasis {
            ring: ring.clone(),
            generators,
        })
    }

    /// Zero ideal.
    pub fn zero(ring: &Arc<PolyRing>) -> IdealBasis {
        IdealBasis {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn all_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// Reduced Groebner basis under the ring's own order.
    pub fn groebner(&self) -> GroebnerBasis {
        buchberger(self, self.ring.order())
    }
}

/// Reduced Groebner basis: monic elements, no leading monomial divides
/// another, every element fully reduced against the others. For a fixed
/// ideal and order the element list is canonical.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial>,
    leads: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements
            .iter()
            .any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }
}

/// Reduced Groebner basis of the ideal spanned by `basis` under `order`.
/// Pair selection is the normal strategy (minimal lcm degree, ties by
/// index); the coprime-lead and chain criteria prune pairs.
pub fn buchberger(basis: &IdealBasis, order: MonomialOrder) -> GroebnerBasis {
    let _t = timing::start(Phase::Groebner);
    let ring = if basis.ring.order() == order {
        basis.ring.clone()
    } else {
        basis.ring.with_order(order)
    };
    let identity_map: Vec<usize> = (0..ring.num_vars()).collect();
    let gens: Vec<Polynomial> = basis
        .generators
        .iter()
        .map(|g| {
            if same_ring(&ring, g.ring()) {
                g.clone()
            } else {
                g.map_to_ring(&ring, &identity_map)
            }
        })
        .collect();
    let elements = buchberger_core(&ring, gens);
    let leads = elements
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero").clone())
        .collect();
    GroebnerBasis {
        ring,
        elements,
        leads,
    }
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

fn buchberger_core(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.primitive());
        }
    }

    let mut queue: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    let mut alive: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |queue: &mut BinaryHeap<Reverse<(u32, usize, usize)>>,
                     alive: &mut HashSet<(usize, usize)>,
                     basis: &[Polynomial],
                     i: usize,
                     j: usize| {
        let lcm = basis[i]
            .leading_monomial()
            .unwrap()
            .lcm(basis[j].leading_monomial().unwrap());
        queue.push(Reverse((lcm.degree(), i, j)));
        alive.insert((i, j));
    };
    for j in 1..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, &mut alive, &basis, i, j);
        }
    }

    while let Some(Reverse((_, i, j))) = queue.pop() {
        if !alive.remove(&(i, j)) {
            continue; // stale heap entry
        }
        let lm_i = basis[i].leading_monomial().unwrap();
        let lm_j = basis[j].leading_monomial().unwrap();
        if lm_i.is_coprime_with(lm_j) {
            continue; // first criterion
        }
        let lcm = lm_i.lcm(lm_j);
        // second (chain) criterion: a third element divides the lcm and both
        // of its pairs with i and j were already handled
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !alive.contains(&pair_key(i, k))
                && !alive.contains(&pair_key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(ring, &basis[i], &basis[j], &lcm);
        let r = reduce_scaled(&s, &basis);
        if !r.is_zero() {
            let new = basis.len();
            basis.push(r.primitive());
            for k in 0..new {
                push_pair(&mut queue, &mut alive, &basis, k, new);
            }
        }
    }

    reduce_basis(basis)
}

fn s_polynomial(
    ring: &Arc<PolyRing>,
    f: &Polynomial,
    g: &Polynomial,
    lcm: &Monomial,
) -> Polynomial {
    let field = ring.field();
    let (fc, fm) = f.leading().unwrap();
    let (gc, gm) = g.leading().unwrap();
    let uf = lcm.try_div(fm).unwrap();
    let ug = lcm.try_div(gm).unwrap();
    let a = field.inv(fc);
    let b = field.neg(&field.inv(gc));
    Polynomial::zero(ring)
        .add_scaled_shifted(f, &a, &uf)
        .add_scaled_shifted(g, &b, &ug)
}

/// Full reduction used inside Buchberger; the result may be rescaled, so it
/// is only meaningful up to a unit.
fn reduce_scaled(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    reduce_impl(p, basis, |g| g)
}

fn reduce_impl<'a, F>(p: &Polynomial, basis: &'a [Polynomial], select: F) -> Polynomial
where
    F: Fn(&'a Polynomial) -> &'a Polynomial,
{
    let ring = p.ring().clone();
    let field = ring.field();
    let mut remainder: Vec<(crate::ring::Coeff, Monomial)> = Vec::new();
    let mut work = p.clone();
    'outer: while let Some((c, m)) = work.leading().map(|(c, m)| (c.clone(), m.clone())) {
        for g in basis {
            let g = select(g);
            if g.is_zero() {
                continue;
            }
            let (gc, gm) = g.leading().unwrap();
            if gm.divides(&m) {
                let shift = m.try_div(gm).unwrap();
                let factor = field.neg(&field.div(&c, gc));
                work = work.add_scaled_shifted(g, &factor, &shift);
                continue 'outer;
            }
        }
        remainder.push((c, m));
        work = Polynomial::from_terms(&ring, work.terms()[1..].iter().cloned());
    }
    Polynomial::from_terms(&ring, remainder)
}

/// Minimizes and inter-reduces a Groebner basis into the canonical reduced
/// form, sorted ascending by leading monomial.
fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.retain(|g| !g.is_zero());
    if basis.is_empty() {
        return basis;
    }
    let ring = basis[0].ring().clone();
    let order = ring.order();
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    // minimize: drop any element whose lead is divisible by an earlier kept lead
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !kept
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            kept.push(g);
        }
    }
    // inter-reduce tails against all other kept elements
    for i in 0..kept.len() {
        let g = kept[i].clone();
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, h)| h.clone())
            .collect();
        kept[i] = reduce_scaled(&g, &others);
    }
    kept.retain(|g| !g.is_zero());
    for g in &mut kept {
        *g = g.monic();
    }
    kept.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    kept
}

/// Complete multivariate division remainder of `f` by the basis.
/// `normal_form(f, G) == 0` iff `f` lies in the ideal spanned by `G`;
/// for a reduced basis the remainder is canonical and idempotent.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    let _t = timing::start(Phase::Reduction);
    let f = if same_ring(f.ring(), &gb.ring) {
        f.clone()
    } else if f.ring().var_names() == gb.ring.var_names() && f.ring().field() == gb.ring.field() {
        // same variables, different order: re-sort terms
        let map: Vec<usize> = (0..f.ring().num_vars()).collect();
        f.map_to_ring(&gb.ring, &map)
    } else {
        return Err(Error::RingMismatch);
    };
    Ok(reduce_impl(&f, &gb.elements, |g| g))
}
