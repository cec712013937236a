//! Coxeter graphs, words and canonical element forms, Bruhat order and
//! enumeration of finite or length-capped groups.

mod graph;
mod group;

pub use graph::{CoxeterGraph, EdgeOrder};
pub use group::{CoxeterGroup, Element, Enumeration, Word};
