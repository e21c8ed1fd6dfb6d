//! Factorization theory for finite commutative rings with zero divisors.
//!
//! The crate builds finite rings and modules as dense tables, forms the
//! idealization `R(+)M`, and decides the factorization predicates (atoms,
//! présimplifiable, ACCP, bounded factorization, U-boundedness of zero,
//! unique factorization) by exhaustive computation. Theorem-level checkers
//! tie the predicates together on concrete inputs.

pub mod block;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod factor;
pub mod idealization;
pub mod module;
pub mod report;
pub mod ring;
pub mod set;
pub mod spec;

pub use error::{Error, Result};
pub use ring::{Elem, FiniteRing, Ideal};
