//! Exact computations with finite-dimensional Bol algebras.
//!
//! An algebra is given by rational structure constants for an antisymmetric
//! product `x·y` and a ternary operation `(x,y,z)`. On top of that the crate
//! checks the Bol identities, works with ideals, quotients and the weak
//! derived series, computes the weak radical with a certificate, and searches
//! for a subalgebra complementing it.
//!
//! ```
//! use bolalg::{catalog, check_axioms, structure::weak_radical};
//!
//! let v = catalog::type_i();
//! assert!(check_axioms(&v).all_pass());
//! assert!(weak_radical(&v).unwrap().radical.is_full());
//! ```
//!
//! All arithmetic is over `Q` with arbitrary precision; nothing is rounded.

pub mod algebra;
pub mod axioms;
pub mod boltext;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod ideals;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod structure;
pub mod tensor;

pub use algebra::{AlgebraBuilder, BolAlgebra, LinearMap, Slot};
pub use axioms::{check_axioms, AxiomFailure, AxiomReport, Identity};
pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, Subspace, Vector};
