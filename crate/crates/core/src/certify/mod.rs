//! Lower-bound instances and linear-programming certificates.

pub mod dual;
mod primal;

pub use dual::{dual_certificate, primal_construction_bound, DualCertificate, MAX_DUAL_K};
pub use primal::{
    check_symmetrized_feasible, symmetrized_primal_optimum, symmetrized_primal_solution,
    SymmetrizedPrimal, MAX_PRIMAL_N,
};

use crate::error::Result;
use crate::oracle::{HardSpec, Oracle};

/// Instantiates one of the hard instances: the general indicator on (A, A
/// complement), the symmetric nontrivial-set indicator, or the uniform
/// budgeted instance with n = k^2 and budget k.
pub fn hard_instance(spec: HardSpec) -> Result<Oracle> {
    Oracle::hard(spec)
}
