//! Exact Kazhdan–Lusztig data and a-function analysis for small Coxeter groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`] — rationals, cyclotomic numbers, Laurent polynomials;
//! * [`linalg`] — exact matrices over cyclotomic fields;
//! * [`coxeter`] — graphs, canonical words, Bruhat order, enumeration;
//! * [`hecke`] — Hecke algebra, KL polynomials, structure constants, cells;
//! * [`dihedral`] — irreducible representations of finite dihedral groups;
//! * [`rep`] — analysis of matrix representations (a-value criterion);
//! * [`rrep`] — construction and classification of R-representations.

pub mod arith;
pub mod coxeter;
pub mod dihedral;
mod error;
pub mod hecke;
pub mod linalg;
pub mod rep;
pub mod rrep;

pub use error::{Error, Result};
