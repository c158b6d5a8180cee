use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use super::{same_ring, Coeff, FieldSpec, Monomial, PolyRing};
use crate::error::{Error, Result};

/// Sparse polynomial: terms strictly descending in the ring's monomial
/// order, no zero coefficients, no duplicate monomials. Canonical form is
/// structural, so `==` on same-ring polynomials is mathematical equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Coeff, Monomial)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Polynomial {
        if ring.field().is_zero(&c) {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(c, Monomial::one(ring.num_vars()))],
        }
    }

    pub fn constant_i64(ring: &Arc<PolyRing>, n: i64) -> Polynomial {
        Polynomial::constant(ring, ring.field().from_i64(n))
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Polynomial {
        assert!(index < ring.num_vars());
        Polynomial {
            ring: ring.clone(),
            terms: vec![(ring.field().one(), Monomial::var(ring.num_vars(), index))],
        }
    }

    pub fn term(ring: &Arc<PolyRing>, c: Coeff, m: Monomial) -> Polynomial {
        if ring.field().is_zero(&c) {
            return Polynomial::zero(ring);
        }
        assert_eq!(m.num_vars(), ring.num_vars());
        Polynomial {
            ring: ring.clone(),
            terms: vec![(c, m)],
        }
    }

    /// Builds the canonical form from arbitrary terms: sorts, merges equal
    /// monomials, drops zeros.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Coeff, Monomial)>,
    ) -> Polynomial {
        let order = ring.order();
        let mut terms: Vec<(Coeff, Monomial)> = terms.into_iter().collect();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let field = ring.field();
        let mut out: Vec<(Coeff, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => {
                    *lc = field.add(lc, &c);
                    if field.is_zero(lc) {
                        out.pop();
                    }
                }
                _ => {
                    if !field.is_zero(&c) {
                        out.push((c, m));
                    }
                }
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].1.is_one()
            && self.terms[0].0 == self.ring.field().one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn leading(&self) -> Option<(&Coeff, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    /// Total degree of the highest-degree term; `None` for the zero
    /// polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// All monomials share one total degree. Zero is homogeneous by
    /// convention.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => {
                let d = self.terms.iter().map(|(_, m)| m.degree()).max().unwrap();
                let _ = m0;
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merged(other, false, None))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merged(other, true, None))
    }

    /// self + sign * c * x^shift * other, computed by a single linear merge
    /// of the two sorted term lists. This is the inner loop of polynomial
    /// reduction.
    pub(crate) fn add_scaled_shifted(
        &self,
        other: &Polynomial,
        c: &Coeff,
        shift: &Monomial,
    ) -> Polynomial {
        self.merged(other, false, Some((c, shift)))
    }

    fn merged(
        &self,
        other: &Polynomial,
        negate: bool,
        scale: Option<(&Coeff, &Monomial)>,
    ) -> Polynomial {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let transform = |c: &Coeff, m: &Monomial| -> (Coeff, Monomial) {
            let (mut c2, mut m2) = (c.clone(), m.clone());
            if let Some((sc, sm)) = scale {
                c2 = field.mul(&c2, sc);
                m2 = m2.mul(sm);
            }
            if negate {
                c2 = field.neg(&c2);
            }
            (c2, m2)
        };
        while i < self.terms.len() && j < other.terms.len() {
            let (oc, om) = transform(&other.terms[j].0, &other.terms[j].1);
            match order.cmp(&self.terms[i].1, &om) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((oc, om));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].0, &oc);
                    if !field.is_zero(&c) {
                        out.push((c, om));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < other.terms.len() {
            out.push(transform(&other.terms[j].0, &other.terms[j].1));
            j += 1;
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (field.neg(c), m.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tc, m)| (field.mul(tc, c), m.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let field = self.ring.field();
        // accumulate into a hash map, then canonicalize once
        let mut acc: std::collections::HashMap<Monomial, Coeff> =
            std::collections::HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ac, am) in &self.terms {
            for (bc, bm) in &other.terms {
                let m = am.mul(bm);
                let c = field.mul(ac, bc);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let sum = field.add(e.get(), &c);
                        if field.is_zero(&sum) {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let order = self.ring.order();
        let mut terms: Vec<(Coeff, Monomial)> = acc.into_iter().map(|(m, c)| (c, m)).collect();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Exact quotient `self / divisor`; `None` when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(same_ring(&self.ring, &divisor.ring));
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let field = self.ring.field();
        let (dc, dm) = divisor.leading().unwrap();
        let mut rem = self.clone();
        let mut quot_terms: Vec<(Coeff, Monomial)> = Vec::new();
        while let Some((rc, rm)) = rem.leading() {
            let qm = rm.try_div(dm)?;
            let qc = field.div(rc, dc);
            let neg_qc = field.neg(&qc);
            rem = rem.add_scaled_shifted(divisor, &neg_qc, &qm);
            quot_terms.push((qc, qm));
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: quot_terms,
        })
    }

    /// Leading coefficient scaled to 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((lc, _)) => {
                let inv = self.ring.field().inv(lc);
                self.scale(&inv)
            }
        }
    }

    /// Over Q: clears denominators and divides by the integer content, with
    /// the leading coefficient made positive; elsewhere returns the monic
    /// form. Keeps intermediate coefficients small during basis reduction.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        match self.ring.field() {
            FieldSpec::PrimeField(_) => self.monic(),
            FieldSpec::Rationals => {
                let mut den = BigInt::one();
                for (c, _) in &self.terms {
                    let r = c.as_rational().unwrap();
                    den = den.lcm(r.denom());
                }
                let mut content = BigInt::zero();
                for (c, _) in &self.terms {
                    let r = c.as_rational().unwrap();
                    let n = r.numer() * (&den / r.denom());
                    content = content.gcd(&n);
                }
                if content.is_zero() {
                    return self.clone();
                }
                let lead_neg = self.terms[0].0.as_rational().unwrap().is_negative();
                if lead_neg {
                    content = -content;
                }
                let factor = Coeff::Rat(Box::new(BigRational::new(den, content)));
                self.scale(&factor)
            }
        }
    }

    /// Negates when the leading coefficient has negative canonical sign,
    /// giving a representative of {f, -f}.
    pub fn sign_canonical(&self) -> Polynomial {
        match self.leading() {
            Some((lc, _)) if self.ring.field().is_negative_rep(lc) => self.neg(),
            _ => self.clone(),
        }
    }

    /// Re-interprets the polynomial in another ring over the same field,
    /// sending variable `i` to variable `var_map[i]`. Terms are re-sorted
    /// under the target order.
    pub fn map_to_ring(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.num_vars());
        let n = target.num_vars();
        let terms = self.terms.iter().map(|(c, m)| {
            let mut exps = vec![0u16; n];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[var_map[i]] += e;
            }
            (c.clone(), Monomial::new(exps))
        });
        Polynomial::from_terms(target, terms)
    }

    /// Restricts to a target ring that contains a subset of the variables;
    /// `None` if the polynomial involves a variable outside the subset.
    /// `var_map[i] = Some(j)` sends source variable `i` to target `j`.
    pub fn try_restrict(
        &self,
        target: &Arc<PolyRing>,
        var_map: &[Option<usize>],
    ) -> Option<Polynomial> {
        let n = target.num_vars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let mut exps = vec![0u16; n];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let j = var_map[i]?;
                    exps[j] += e;
                }
            }
            terms.push((c.clone(), Monomial::new(exps)));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    pub fn render(&self) -> String {
        format!("{self}")
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (idx, (c, m)) in self.terms.iter().enumerate() {
            let rendered = field.render(c);
            let (sign, magnitude) = match rendered.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", rendered),
            };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = &self.ring.var_names()[i];
                    if e == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == "1" {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", magnitude, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_polynomial;

    fn ring6() -> Arc<PolyRing> {
        PolyRing::rationals(&["x0", "x1", "x2", "x3", "x4", "x5"])
    }

    #[test]
    fn difference_of_squares() {
        let r = ring6();
        let sum = parse_polynomial("x0 + x1", &r).unwrap();
        let diff = parse_polynomial("x0 - x1", &r).unwrap();
        let expected = parse_polynomial("x0^2 - x1^2", &r).unwrap();
        assert_eq!(sum.mul(&diff).unwrap(), expected);
    }

    #[test]
    fn zero_is_the_additive_identity() {
        let r = ring6();
        let f = parse_polynomial("3*x0*x2 - x4", &r).unwrap();
        assert_eq!(f.add(&Polynomial::zero(&r)).unwrap(), f);
        assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let r = PolyRing::prime_field(&["x", "y"], 2).unwrap();
        let f = parse_polynomial("x + y", &r).unwrap();
        let expected = parse_polynomial("x^2 + y^2", &r).unwrap();
        assert_eq!(f.mul(&f).unwrap(), expected);
    }

    #[test]
    fn degrees_and_homogeneity() {
        let r = ring6();
        let f = parse_polynomial("x0*x5 - x1^2", &r).unwrap();
        assert_eq!(f.total_degree(), Some(2));
        assert!(f.is_homogeneous());

        let g = parse_polynomial("x0 + x0^2", &r).unwrap();
        assert_eq!(g.total_degree(), Some(2));
        assert!(!g.is_homogeneous());

        let zero = Polynomial::zero(&r);
        assert_eq!(zero.total_degree(), None);
        assert!(zero.is_homogeneous());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r1 = ring6();
        let r2 = PolyRing::rationals(&["y"]);
        let f = Polynomial::var(&r1, 0);
        let g = Polynomial::var(&r2, 0);
        assert!(matches!(f.add(&g), Err(Error::RingMismatch)));
        assert!(matches!(f.mul(&g), Err(Error::RingMismatch)));
    }

    #[test]
    fn exact_division() {
        let r = ring6();
        let f = parse_polynomial("x0^2 - x1^2", &r).unwrap();
        let g = parse_polynomial("x0 - x1", &r).unwrap();
        let q = f.exact_div(&g).unwrap();
        assert_eq!(q, parse_polynomial("x0 + x1", &r).unwrap());
        let h = parse_polynomial("x0^2 + x1", &r).unwrap();
        assert!(h.exact_div(&g).is_none());
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Polynomial>();
        assert_send_sync::<PolyRing>();
        assert_send_sync::<crate::pmatrix::PolyMatrix>();
        assert_send_sync::<crate::groebner::GroebnerBasis>();

        let r = ring6();
        let f = std::sync::Arc::new(parse_polynomial("x0*x5 - x1^2", &r).unwrap());
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let f = f.clone();
                std::thread::spawn(move || f.mul(&f).unwrap().total_degree())
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), Some(4));
        }
    }
}
