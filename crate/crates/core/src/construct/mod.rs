//! Constructive approximations: the directed-cut graph, the Gomory-Hu tree,
//! the coverage approximations of budgeted additive functions, and the
//! concave-profile decompositions.

mod coverage;
mod decompose;
mod directed;
mod gomory;
mod separator;

pub use coverage::{budgeted_expected_coverage, budgeted_sampled_coverage, ExpectedCoverage};
pub use decompose::{
    concave_modular_to_budgeted, decompose_uniform_profile, DecompTerm, Decomposition,
};
pub use directed::directed_cut_approx;
pub use gomory::gomory_hu_tree;
pub use separator::{min_separating_set, SeparatorResult};

pub(crate) use separator::min_separating_table;

use crate::error::Result;
use crate::oracle::Oracle;
use crate::rational::Rat;

/// The sqrt-of-modular surrogate g(S) = sqrt(sum of a_e over S), realized
/// from given coefficients. Comparisons against its values go through
/// squared rationals; see [`crate::oracle::Value`].
pub fn sqrt_modular_surrogate(values: Vec<Rat>) -> Result<Oracle> {
    Oracle::sqrt_modular(values)
}
