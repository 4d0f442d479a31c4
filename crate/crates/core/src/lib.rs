//! Detecting and counting simple paths on `k` vertices.
//!
//! Engines:
//!
//! * [`graph::enumerate_k_paths`] / [`graph::dfs_decide`]: exhaustive search,
//!   the oracle for everything else.
//! * [`color_coding`]: random k-colorings with a colorful-path DP, plus an
//!   inclusion-exclusion colorful walk counter in polynomial space.
//! * [`divide_color`]: recursive Red/Blue splitting with Δ-joins.
//! * [`hom`]: exact counting by inclusion-exclusion over homomorphism
//!   counts, and its colorful randomized variant.
//! * [`algebraic`]: evaluation of a walk polynomial over GF(2^s) at random
//!   points.
//!
//! Randomized engines take a 64-bit seed and are one-sided: YES answers are
//! always correct.

pub mod algebraic;
pub mod color_coding;
pub mod divide_color;
pub mod graph;
pub mod hom;
pub mod report;
pub mod rng;
mod walks;

pub use graph::{Graph, GraphError, PathWitness};
pub use report::{Algorithm, Decision, TrialReport};
