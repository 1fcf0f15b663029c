//! Workbench for exact and fractional triangle cover/packing numbers,
//! spectral expander checks, GF(2) cycle-space calculations and the
//! configuration-fairness calculus on doubled graphs.
//!
//! The crate is organized around a dense-bitset [`graph::Graph`] carrier:
//!
//! * [`graph`] — graphs, lexicographic products, doubles, blowups, random
//!   subgraphs, triangle enumeration and the plain-text exchange format;
//! * [`spectral`] — in-crate symmetric eigensolver, expander-mixing checks,
//!   weighted doubled-graph matrices and triangle-free expander generators;
//! * [`f2`] — edge-space linear algebra over GF(2): cycle/cut spaces,
//!   generation by induced and short cycles, cut decompositions;
//! * [`duality`] — exact (branch-and-bound) and fractional (in-crate simplex)
//!   triangle packing/cover solvers;
//! * [`fairness`] — configurations on compound doubled graphs, c-weights,
//!   canonicalization, adversarial fairness probing and a tiny exhaustive
//!   oracle;
//! * [`extremal`] — crossing-triangle Mantel solver, regular-pair density
//!   checks, a counting-lemma verifier and Chernoff tail bounds;
//! * [`experiment`] — batch harness and CSV/JSON reporting behind the
//!   `tuzalab` CLI.

pub mod bits;
pub mod duality;
pub mod error;
pub mod experiment;
pub mod extremal;
pub mod f2;
pub mod fairness;
pub mod graph;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};
