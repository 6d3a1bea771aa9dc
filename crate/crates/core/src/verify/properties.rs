//! Submodularity and function-class checks.

use crate::error::Result;
use crate::mask::{all_masks, Mask};
use crate::oracle::{DenseTable, Guard, Oracle};
use crate::verify::{PropertyReport, Witness};
use num_traits::{Signed, Zero};

/// Exhaustive submodularity check through the local second-difference
/// condition: f(S+i) + f(S+j) >= f(S+i+j) + f(S) for all S and i < j outside
/// S. Equivalent to the pairwise definition at n^2 2^n cost instead of 4^n.
pub fn check_submodular(f: &Oracle, guard: Guard) -> Result<PropertyReport> {
    let table = DenseTable::from_oracle(f, guard)?;
    let n = table.n();
    for s in all_masks(n) {
        for i in 0..n {
            if s.contains(i) {
                continue;
            }
            for j in (i + 1)..n {
                if s.contains(j) {
                    continue;
                }
                let si = s.insert(i);
                let sj = s.insert(j);
                let sij = si.insert(j);
                if table.value(si) + table.value(sj) < table.value(sij) + table.value(s) {
                    return Ok(PropertyReport::violated(Witness::SubsetElems { s, i, j }));
                }
            }
        }
    }
    Ok(PropertyReport::ok())
}

/// Per-property reports for the basic function classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub nonnegative: PropertyReport,
    pub monotone: PropertyReport,
    pub symmetric: PropertyReport,
    pub zero_boundary: PropertyReport,
}

/// Exhaustively checks nonnegativity, monotonicity, symmetry, and the
/// zero-boundary condition f(empty) = f(U) = 0.
pub fn check_class(f: &Oracle, guard: Guard) -> Result<ClassReport> {
    let table = DenseTable::from_oracle(f, guard)?;
    let n = table.n();

    let mut nonnegative = PropertyReport::ok();
    for s in all_masks(n) {
        if table.value(s).is_negative() {
            nonnegative = PropertyReport::violated(Witness::Subset(s));
            break;
        }
    }

    let mut monotone = PropertyReport::ok();
    'mono: for s in all_masks(n) {
        for i in 0..n {
            if !s.contains(i) && table.value(s) > table.value(s.insert(i)) {
                monotone = PropertyReport::violated(Witness::SubsetPair {
                    s,
                    t: s.insert(i),
                });
                break 'mono;
            }
        }
    }

    let mut symmetric = PropertyReport::ok();
    for s in all_masks(n) {
        let c = s.complement(n);
        if table.value(s) != table.value(c) {
            symmetric = PropertyReport::violated(Witness::SubsetPair { s, t: c });
            break;
        }
    }

    let zero_boundary = if !table.value(Mask::EMPTY).is_zero() {
        PropertyReport::violated(Witness::Subset(Mask::EMPTY))
    } else if !table.value(Mask::full(n)).is_zero() {
        PropertyReport::violated(Witness::Subset(Mask::full(n)))
    } else {
        PropertyReport::ok()
    };

    Ok(ClassReport {
        nonnegative,
        monotone,
        symmetric,
        zero_boundary,
    })
}
