//! Character-theoretic λ-invariant transfer in ℓ-extensions of fields over
//! the cyclotomic Zℓ-extension, checked against an exact lattice-cohomology
//! oracle.

pub mod delta_chars;
pub mod gee_chars;
pub mod lattice;
pub mod genus;
pub mod tower;
pub mod gen;
pub mod par;
pub mod verify;
pub mod cli;
