//! Exact growth series and rational Euler characteristics of Dyer groups.
//!
//! A Dyer group is given by a [`DyerGraph`]: vertices carry cyclic orders,
//! edges carry labels. The crate computes the spherical growth series as a
//! canonical [`RationalFunction`], classifies spherical subgraphs, evaluates
//! Euler characteristics, and cross-checks everything against brute-force
//! normal-form models in [`oracle`].

pub mod cli;
pub mod coxeter;
pub mod dyergraph;
pub mod euler;
pub mod growth;
pub mod oracle;
pub mod ratfun;

pub use dyergraph::{DyerGraph, GraphError, GraphSpec, Order, VertexSubset};
pub use growth::{growth, GrowthResult, Strategy};
pub use ratfun::{Polynomial, RationalFunction};
