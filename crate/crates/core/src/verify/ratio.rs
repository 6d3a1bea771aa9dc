//! Exact approximation-ratio reports.

use crate::error::{Error, Result};
use crate::mask::{all_masks, Mask};
use crate::oracle::{DenseTable, Guard, Oracle};
use crate::rational::Rat;
use num_traits::Zero;

/// The exact ratio, or infinity when the candidate is positive somewhere the
/// target vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theta {
    Finite(Rat),
    Infinite,
}

impl Theta {
    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            Theta::Finite(r) => Some(r),
            Theta::Infinite => None,
        }
    }
}

/// Sandwich report for a candidate approximator g of a target f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxReport {
    /// f(S) <= g(S) everywhere.
    pub lower_ok: bool,
    /// First subset violating the lower inequality, in ascending mask order.
    pub witness_lower: Option<Mask>,
    /// max over subsets with f(S) > 0 of g(S)/f(S); 1 for the zero pair.
    pub theta: Theta,
    /// First subset attaining the ratio (or the first zero-set conflict when
    /// the ratio is infinite); absent only for the all-zero degenerate case.
    pub witness_theta: Option<Mask>,
    /// Every subset with f(S) = 0 < g(S), in ascending mask order.
    pub zero_set_conflicts: Vec<Mask>,
}

/// Exhaustively compares a candidate against a target on every subset,
/// producing exact lower-inequality and ratio verdicts.
pub fn approximation_ratio(target: &Oracle, candidate: &Oracle, guard: Guard) -> Result<ApproxReport> {
    if target.ground_set_size() != candidate.ground_set_size() {
        return Err(Error::DimensionMismatch {
            context: format!(
                "target over {} elements, candidate over {}",
                target.ground_set_size(),
                candidate.ground_set_size()
            ),
        });
    }
    let f = DenseTable::from_oracle(target, guard)?;
    let g = DenseTable::from_oracle(candidate, guard)?;
    let n = f.n();

    let mut lower_ok = true;
    let mut witness_lower = None;
    let mut zero_set_conflicts = Vec::new();
    let mut best: Option<(Rat, Mask)> = None;
    for s in all_masks(n) {
        let fs = f.value(s);
        let gs = g.value(s);
        if lower_ok && fs > gs {
            lower_ok = false;
            witness_lower = Some(s);
        }
        if fs.is_zero() {
            if !gs.is_zero() {
                zero_set_conflicts.push(s);
            }
        } else {
            let ratio = gs / fs;
            match &best {
                Some((b, _)) if &ratio <= b => {}
                _ => best = Some((ratio, s)),
            }
        }
    }

    let (theta, witness_theta) = if let Some(&first_conflict) = zero_set_conflicts.first() {
        (Theta::Infinite, Some(first_conflict))
    } else {
        match best {
            Some((ratio, s)) => (Theta::Finite(ratio), Some(s)),
            // both functions identically zero
            None => (Theta::Finite(Rat::from_integer(1.into())), None),
        }
    };

    Ok(ApproxReport {
        lower_ok,
        witness_lower,
        theta,
        witness_theta,
        zero_set_conflicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn identity_has_ratio_one() {
        let f = Oracle::budgeted_additive(vec![rat(1), rat(2)], rat(2)).unwrap();
        let report = approximation_ratio(&f, &f, Guard::default()).unwrap();
        assert!(report.lower_ok);
        assert_eq!(report.theta, Theta::Finite(rat(1)));
        assert!(report.zero_set_conflicts.is_empty());
    }

    #[test]
    fn ratio_and_witness_are_the_first_maximizer() {
        let f = Oracle::table(2, vec![rat(0), rat(1), rat(1), rat(2)]).unwrap();
        let g = Oracle::table(2, vec![rat(0), rat(2), ratio(3, 2), rat(2)]).unwrap();
        let report = approximation_ratio(&f, &g, Guard::default()).unwrap();
        assert!(report.lower_ok);
        assert_eq!(report.theta, Theta::Finite(rat(2)));
        assert_eq!(report.witness_theta, Some(Mask::singleton(0)));
    }

    #[test]
    fn zero_set_conflict_is_infinite() {
        let f = Oracle::table(2, vec![rat(0), rat(1), rat(0), rat(1)]).unwrap();
        let g = Oracle::table(2, vec![rat(0), rat(1), rat(1), rat(1)]).unwrap();
        let report = approximation_ratio(&f, &g, Guard::default()).unwrap();
        assert_eq!(report.theta, Theta::Infinite);
        assert_eq!(report.zero_set_conflicts, vec![Mask::singleton(1)]);
        assert_eq!(report.witness_theta, Some(Mask::singleton(1)));
    }

    #[test]
    fn lower_violation_reports_first_mask() {
        let f = Oracle::table(2, vec![rat(0), rat(2), rat(2), rat(2)]).unwrap();
        let g = Oracle::table(2, vec![rat(0), rat(1), rat(3), rat(3)]).unwrap();
        let report = approximation_ratio(&f, &g, Guard::default()).unwrap();
        assert!(!report.lower_ok);
        assert_eq!(report.witness_lower, Some(Mask::singleton(0)));
    }

    #[test]
    fn zero_pair_defaults_to_ratio_one() {
        let z = Oracle::table(2, vec![rat(0); 4]).unwrap();
        let report = approximation_ratio(&z, &z, Guard::default()).unwrap();
        assert!(report.lower_ok);
        assert_eq!(report.theta, Theta::Finite(rat(1)));
        assert_eq!(report.witness_theta, None);
    }
}
