use super::{height, normal_form, GroebnerBasis, IdealBasis};
use crate::error::{Error, Result};
use crate::ring::{same_ring, Polynomial};

/// Ideal intersection via the elimination trick: in `R[u]`,
/// `I cap J = (u*I + (1-u)*J) cap R`.
pub fn intersect(a: &IdealBasis, b: &IdealBasis) -> Result<IdealBasis> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(IdealBasis::zero(ring));
    }
    let uname = ring.fresh_var_name("_u");
    let ext = ring.extend_front(&uname);
    let up: Vec<usize> = (0..ring.num_vars()).map(|i| i + 1).collect();
    let u = Polynomial::var(&ext, 0);
    let one_minus_u = Polynomial::one(&ext).sub(&u)?;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(u.mul(&g.map_to_ring(&ext, &up))?);
    }
    for h in b.generators() {
        gens.push(one_minus_u.mul(&h.map_to_ring(&ext, &up))?);
    }
    let ext_ideal = IdealBasis::new(&ext, gens)?;
    let gb = ext_ideal.groebner();
    eliminate_front(ring, &gb)
}

/// Elements of an elimination-order basis not involving the front variable,
/// restricted back to the base ring.
fn eliminate_front(
    ring: &std::sync::Arc<crate::ring::PolyRing>,
    gb: &GroebnerBasis,
) -> Result<IdealBasis> {
    let mut down: Vec<Option<usize>> = vec![None];
    down.extend((0..ring.num_vars()).map(Some));
    let mut gens = Vec::new();
    for g in gb.elements() {
        if let Some(r) = g.try_restrict(ring, &down) {
            gens.push(r);
        }
    }
    IdealBasis::new(ring, gens)
}

/// Colon ideal `(I : f)` via the syzygy route on the intersection:
/// generators of `I cap (f)` divided exactly by `f`.
pub fn ideal_quotient(ideal: &IdealBasis, f: &Polynomial) -> Result<IdealBasis> {
    if f.is_zero() {
        return Err(Error::ZeroArgument);
    }
    if !same_ring(ideal.ring(), f.ring()) {
        return Err(Error::RingMismatch);
    }
    let principal = IdealBasis::new(ideal.ring(), vec![f.clone()])?;
    let inter = intersect(ideal, &principal)?;
    let mut gens = Vec::new();
    for g in inter.generators() {
        let q = g
            .exact_div(f)
            .ok_or(Error::Internal("intersection element not divisible by f"))?;
        gens.push(q);
    }
    IdealBasis::new(ideal.ring(), gens)
}

/// Saturation `(I : f^inf)` by the added-variable trick: adjoin `u`,
/// eliminate it from `I + (1 - u*f)`. When both the ideal and `f` are
/// homogeneous the result is checked to be homogeneous again.
pub fn saturate_by(ideal: &IdealBasis, f: &Polynomial) -> Result<IdealBasis> {
    if f.is_zero() {
        return Err(Error::ZeroArgument);
    }
    if !same_ring(ideal.ring(), f.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = ideal.ring();
    if ideal.is_zero_ideal() {
        return Ok(IdealBasis::zero(ring));
    }
    let uname = ring.fresh_var_name("_u");
    let ext = ring.extend_front(&uname);
    let up: Vec<usize> = (0..ring.num_vars()).map(|i| i + 1).collect();
    let u = Polynomial::var(&ext, 0);
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.map_to_ring(&ext, &up))
        .collect();
    gens.push(Polynomial::one(&ext).sub(&u.mul(&f.map_to_ring(&ext, &up))?)?);
    let gb = IdealBasis::new(&ext, gens)?.groebner();
    let result = eliminate_front(ring, &gb)?;
    if ideal.all_homogeneous() && f.is_homogeneous() && !result.all_homogeneous() {
        return Err(Error::Internal(
            "saturation of homogeneous input lost homogeneity",
        ));
    }
    Ok(result)
}

/// Saturation with respect to the irrelevant maximal ideal, as the
/// intersection of the per-variable saturations. Containment shortcuts
/// skip intersections whenever one side already contains the other.
pub fn saturate_irrelevant(ideal: &IdealBasis) -> Result<IdealBasis> {
    if !ideal.all_homogeneous() {
        return Err(Error::InhomogeneousInput);
    }
    let ring = ideal.ring();
    if ideal.is_zero_ideal() {
        return Ok(IdealBasis::zero(ring));
    }
    let mut acc: Option<(IdealBasis, GroebnerBasis)> = None;
    for i in 0..ring.num_vars() {
        let xi = Polynomial::var(ring, i);
        let sat = saturate_by(ideal, &xi)?;
        let sat_gb = sat.groebner();
        acc = Some(match acc {
            None => (sat, sat_gb),
            Some((acc_ideal, acc_gb)) => {
                if acc_gb.elements() == sat_gb.elements() {
                    (acc_ideal, acc_gb)
                } else if contains_with_gb(&acc_gb, &sat)? {
                    // sat is the smaller ideal
                    (sat, sat_gb)
                } else if contains_with_gb(&sat_gb, &acc_ideal)? {
                    (acc_ideal, acc_gb)
                } else {
                    let inter = intersect(&acc_ideal, &sat)?;
                    let gb = inter.groebner();
                    (inter, gb)
                }
            }
        });
    }
    Ok(acc.expect("ring has at least one variable").0)
}

fn contains_with_gb(outer_gb: &GroebnerBasis, inner: &IdealBasis) -> Result<bool> {
    for g in inner.generators() {
        if !normal_form(g, outer_gb)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `inner` is contained in `outer`, decided by normal forms of
/// all generators.
pub fn ideal_contains(outer: &IdealBasis, inner: &IdealBasis) -> Result<bool> {
    if !same_ring(outer.ring(), inner.ring()) {
        return Err(Error::RingMismatch);
    }
    let gb = outer.groebner();
    contains_with_gb(&gb, inner)
}

/// Equality as mutual containment; independent of generator order.
pub fn ideal_equal(a: &IdealBasis, b: &IdealBasis) -> Result<bool> {
    Ok(ideal_contains(a, b)? && ideal_contains(b, a)?)
}

/// Cardinality of a minimal homogeneous generating set (graded Nakayama):
/// generators are processed degree-ascending and kept exactly when not in
/// the ideal of those kept so far.
pub fn minimal_generator_count(ideal: &IdealBasis) -> Result<usize> {
    if !ideal.all_homogeneous() {
        return Err(Error::InhomogeneousInput);
    }
    let mut sorted: Vec<&Polynomial> = ideal.generators().iter().collect();
    sorted.sort_by_key(|g| g.total_degree().unwrap_or(0));
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in sorted {
        if kept.is_empty() {
            kept.push(g.clone());
            continue;
        }
        let gb = IdealBasis::new(ideal.ring(), kept.clone())?.groebner();
        if !normal_form(g, &gb)?.is_zero() {
            kept.push(g.clone());
        }
    }
    Ok(kept.len())
}

/// A proper homogeneous ideal is a complete intersection exactly when its
/// minimal generator count equals its height.
pub fn is_complete_intersection(ideal: &IdealBasis) -> Result<bool> {
    if ideal.is_zero_ideal() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.all_homogeneous() {
        return Err(Error::InhomogeneousInput);
    }
    let gb = ideal.groebner();
    if gb.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    let mu = minimal_generator_count(ideal)? as i64;
    let ht = height(ideal)?;
    Ok(mu == ht)
}
