//! Exact computer algebra for symmetric and almost-symmetric determinantal
//! ideals: sparse polynomial arithmetic, a Buchberger-based ideal engine,
//! and the biliaison descent chain with certificate-level verification.

pub mod corpus;
pub mod error;
pub mod groebner;
pub mod json;
pub mod liaison;
pub mod pmatrix;
pub mod ring;
pub mod timing;

pub use error::{Error, Result};
