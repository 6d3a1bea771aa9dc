//! Exact construction and certification of approximations between classes of
//! submodular set functions.
//!
//! The crate provides:
//!
//! - exact rational oracles for the function classes involved (tables,
//!   budgeted additive, coverage systems, hitting weights, directed and
//!   undirected cut functions, cardinality profiles, sqrt-modular
//!   surrogates, and nonnegative combinations) — [`oracle`];
//! - the constructive approximations: a directed cut graph with arc weights
//!   taken from minimum separating sets, a Gomory-Hu tree for symmetric
//!   functions, closed-form and sampled coverage approximations of budgeted
//!   additive functions, and decompositions of concave cardinality profiles
//!   into budgeted additive parts — [`construct`];
//! - hard instances and linear-programming certificates bounding how well
//!   coverage functions can approximate the uniform budgeted instance —
//!   [`certify`];
//! - exhaustive, exact verifiers for submodularity, symmetry, monotonicity,
//!   approximation ratios, the Gomory-Hu edge property, and coverage
//!   recognition via Mobius inversion — [`verify`].
//!
//! Everything is exact: values are big rationals throughout, subsets are
//! bitmasks scanned in ascending order, and every reported witness
//! re-evaluates to the claimed violation.

pub mod error;
pub mod graph;
pub mod mask;
pub mod oracle;
pub mod rational;


pub mod certify;
pub mod construct;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{WeightedDigraph, WeightedGraph, WeightedTree};
pub use mask::{all_masks, submasks, Mask, MAX_GROUND_SET};
pub use oracle::{
    CoverageSystem, DenseTable, Guard, HardSpec, Oracle, Value, DEFAULT_MAX_EXHAUSTIVE,
};
pub use rational::{format_rational, parse_rational, Rat};
