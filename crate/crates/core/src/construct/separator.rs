//! Exhaustive minimum separating sets.

use crate::error::{Error, Result};
use crate::mask::{submasks, Mask};
use crate::oracle::{DenseTable, Guard, Oracle};
use crate::rational::Rat;

/// A subset containing `u` and excluding `v` of minimum value, together with
/// that value. Ties break to the numerically least mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorResult {
    pub witness: Mask,
    pub value: Rat,
}

/// Scans all 2^(n-2) subsets containing `u` and excluding `v` and returns the
/// minimizer, breaking ties toward the lexicographically least mask.
pub fn min_separating_set(
    f: &Oracle,
    u: usize,
    v: usize,
    guard: Guard,
) -> Result<SeparatorResult> {
    let n = f.ground_set_size();
    if u >= n {
        return Err(Error::ElementOutOfRange { element: u, n });
    }
    if v >= n {
        return Err(Error::ElementOutOfRange { element: v, n });
    }
    if u == v {
        return Err(Error::IdenticalPair);
    }
    let table = DenseTable::from_oracle(f, guard)?;
    Ok(min_separating_table(&table, u, v))
}

/// Table-backed scan. Submasks of the free elements are enumerated in
/// ascending order, so the first strict minimum is the least mask.
pub(crate) fn min_separating_table(table: &DenseTable, u: usize, v: usize) -> SeparatorResult {
    let n = table.n();
    debug_assert!(u < n && v < n && u != v);
    let free = Mask::full(n).remove(u).remove(v);
    let mut best: Option<SeparatorResult> = None;
    for sub in submasks(free) {
        let candidate = sub.insert(u);
        let value = table.value(candidate);
        match &best {
            Some(b) if value >= &b.value => {}
            _ => {
                best = Some(SeparatorResult {
                    witness: candidate,
                    value: value.clone(),
                })
            }
        }
    }
    best.expect("at least one separating set exists")
}
