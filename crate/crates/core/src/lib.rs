//! Exact cohomology models of configuration spaces of orientable surfaces,
//! cup length and zero-divisor cup length, and topological-complexity reports.

pub mod algebra;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod models;
pub mod monomial;
pub mod presentation;
pub mod tc;
pub mod zcl;

pub use error::{Error, Result};
pub use field::{Field, FieldKind, Gf2, Rational};
