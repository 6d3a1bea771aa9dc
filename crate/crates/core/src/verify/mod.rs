//! Exhaustive, exact verification of the properties the constructions rely
//! on: submodularity, symmetry, monotonicity, approximation sandwiches, the
//! Gomory-Hu edge property, coverage recognition, and the intersection
//! bound. Every scan walks masks in ascending order and reports the first
//! violation it meets.

mod coverage;
pub mod ensemble;
mod gomory;
mod properties;
mod ratio;

pub use coverage::{is_coverage, CoverageDecision, HittingWeights};
pub use gomory::check_gomory_hu;
pub use properties::{check_class, check_submodular, ClassReport};
pub use ratio::{approximation_ratio, ApproxReport, Theta};

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::oracle::Oracle;
use num_traits::Zero;

/// Identification of the first violation found by a scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A single offending subset.
    Subset(Mask),
    /// A pair of subsets whose values conflict.
    SubsetPair { s: Mask, t: Mask },
    /// A subset and two elements outside it (submodularity violations).
    SubsetElems { s: Mask, i: usize, j: usize },
    /// A tree edge, with the component that should attain its weight.
    Edge { u: usize, v: usize, component: Mask },
}

/// Outcome of one exhaustive property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    pub fn ok() -> Self {
        PropertyReport {
            holds: true,
            witness: None,
        }
    }

    pub fn violated(witness: Witness) -> Self {
        PropertyReport {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Checks f(intersection of the sets) <= sum of f over the sets, the
/// intersection bound satisfied by every nonnegative submodular f.
pub fn intersection_bound_probe(f: &Oracle, sets: &[Mask]) -> Result<PropertyReport> {
    if sets.is_empty() {
        return Err(Error::EmptySetList);
    }
    let n = f.ground_set_size();
    let mut meet = Mask::full(n);
    let mut total = crate::rational::Rat::zero();
    for s in sets {
        if !s.fits(n) {
            return Err(Error::DimensionMismatch {
                context: format!("subset {s:?} outside ground set of size {n}"),
            });
        }
        meet = meet.intersect(*s);
        total += f.eval_rational(*s).ok_or(Error::IrrationalOracle)?;
    }
    let lhs = f.eval_rational(meet).ok_or(Error::IrrationalOracle)?;
    if lhs <= total {
        Ok(PropertyReport::ok())
    } else {
        Ok(PropertyReport::violated(Witness::Subset(meet)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::HardSpec;
    use crate::rational::rat;

    #[test]
    fn probe_is_reflexive_on_a_single_set() {
        let f = Oracle::hard(HardSpec::Symmetric { n: 4 }).unwrap();
        let a = Mask::from_elements(&[1, 2]);
        assert!(intersection_bound_probe(&f, &[a]).unwrap().holds);
    }

    #[test]
    fn probe_hard_symmetric_pair() {
        let f = Oracle::hard(HardSpec::Symmetric { n: 4 }).unwrap();
        let sets = [Mask::from_elements(&[0, 1]), Mask::from_elements(&[1, 2])];
        // f({1}) = 1 <= 1 + 1
        assert!(intersection_bound_probe(&f, &sets).unwrap().holds);
    }

    #[test]
    fn probe_flags_non_submodular_inputs() {
        // f(empty) large, f of everything else 0: intersection of disjoint
        // sets violates the bound, witnessing non-submodularity.
        let mut values = vec![rat(0); 8];
        values[0] = rat(5);
        let f = Oracle::table(3, values).unwrap();
        let sets = [Mask::singleton(0), Mask::singleton(1)];
        let report = intersection_bound_probe(&f, &sets).unwrap();
        assert!(!report.holds);
        assert_eq!(report.witness, Some(Witness::Subset(Mask::EMPTY)));
    }

    #[test]
    fn probe_rejects_empty_list() {
        let f = Oracle::hard(HardSpec::Symmetric { n: 4 }).unwrap();
        assert!(matches!(
            intersection_bound_probe(&f, &[]),
            Err(Error::EmptySetList)
        ));
    }
}
