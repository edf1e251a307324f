//! Structure theory: ideal lattices, the weak radical and complements of it.

pub mod lattice;
pub mod levi;
mod poly;
pub mod radical;

pub use lattice::{enumerate_ideals, enumerate_ideals_with, EnumerationMode, IdealFamily, IdealLattice};
pub use levi::{complement_of, levi_complement, verify_levi, GridBounds, LeviChecks, LeviMethod, LeviResult};
pub use radical::{is_semisimple, weak_radical, RadicalCertificate};
