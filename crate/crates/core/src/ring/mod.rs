//! Exact sparse multivariate polynomial arithmetic over Q and Z/p with
//! pluggable monomial orders.
//!
//! All values are immutable after construction; operations never mutate
//! their arguments.

mod coeff;
mod monomial;
mod parse;
mod poly;

pub use coeff::{Coeff, FieldSpec};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::Polynomial;

use std::sync::Arc;

use crate::error::{Error, Result};

/// Ambient ring descriptor: named variables, coefficient field, monomial
/// order. Rings are shared behind `Arc` and compared structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, field: FieldSpec, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        if vars.is_empty() {
            return Err(Error::EmptyRing);
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(PolyRing { vars, field, order }))
    }

    /// Q[vars] under grevlex.
    pub fn rationals(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            vars.iter().map(|s| s.to_string()).collect(),
            FieldSpec::Rationals,
            MonomialOrder::GrevLex,
        )
        .expect("valid ring")
    }

    /// (Z/p)[vars] under grevlex.
    pub fn prime_field(vars: &[&str], p: u64) -> Result<Arc<PolyRing>> {
        PolyRing::new(
            vars.iter().map(|s| s.to_string()).collect(),
            FieldSpec::prime_field(p)?,
            MonomialOrder::GrevLex,
        )
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    /// Same variables and field under a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            vars: self.vars.clone(),
            field: self.field,
            order,
        })
    }

    /// Extends the ring by a fresh variable in front (index 0) under an
    /// order eliminating it. Used by saturation and intersection.
    pub fn extend_front(&self, name: &str) -> Arc<PolyRing> {
        let mut vars = Vec::with_capacity(self.vars.len() + 1);
        vars.push(name.to_string());
        vars.extend(self.vars.iter().cloned());
        Arc::new(PolyRing {
            vars,
            field: self.field,
            order: MonomialOrder::Elimination(1),
        })
    }

    /// A variable name of the form `prefix`, `prefix_1`, ... not already
    /// present in the ring.
    pub fn fresh_var_name(&self, prefix: &str) -> String {
        if self.var_index(prefix).is_none() {
            return prefix.to_string();
        }
        let mut i = 1usize;
        loop {
            let candidate = format!("{prefix}_{i}");
            if self.var_index(&candidate).is_none() {
                return candidate;
            }
            i += 1;
        }
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
