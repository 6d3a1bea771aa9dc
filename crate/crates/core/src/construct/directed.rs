//! The directed-cut approximation of a general submodular function.

use crate::construct::separator::min_separating_table;
use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;
use crate::mask::{all_masks, Mask};
use crate::oracle::{DenseTable, Guard, Oracle};
use crate::rational::Rat;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

/// Builds the weighted digraph whose arc (u, v) carries the minimum value of
/// f over subsets separating u from v. For submodular f with zero boundary
/// values, the resulting cut function c satisfies
/// f(S) <= c(S) <= (n^2/4) f(S) on every subset.
///
/// Nonnegativity and the boundary conditions are checked here; submodularity
/// is the caller's responsibility (the sandwich is only guaranteed for
/// submodular inputs).
pub fn directed_cut_approx(f: &Oracle, guard: Guard) -> Result<WeightedDigraph> {
    let table = DenseTable::from_oracle(f, guard)?;
    let n = table.n();
    if !table.value(Mask::EMPTY).is_zero() {
        return Err(Error::BoundaryNonzero {
            which: "the empty set",
        });
    }
    if !table.value(Mask::full(n)).is_zero() {
        return Err(Error::BoundaryNonzero {
            which: "the universe",
        });
    }
    for s in all_masks(n) {
        if table.value(s).is_negative() {
            return Err(Error::NegativeOnSubset { witness: s });
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    // the pair scans are independent; collect preserves pair order, so the
    // result is the same at any thread count
    let weights: Vec<Rat> = pairs
        .par_iter()
        .map(|&(u, v)| min_separating_table(&table, u, v).value)
        .collect();
    let mut g = WeightedDigraph::new(n)?;
    for (&(u, v), w) in pairs.iter().zip(weights) {
        g.add_arc(u, v, w)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::HardSpec;
    use crate::rational::{rat, Rat};

    #[test]
    fn hard_general_yields_bipartite_unit_arcs() {
        let a = Mask::from_elements(&[0, 1]);
        let f = Oracle::hard(HardSpec::General { n: 4, a_set: a }).unwrap();
        let g = directed_cut_approx(&f, Guard::default()).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                if u == v {
                    continue;
                }
                let expected = if a.contains(u) && !a.contains(v) {
                    rat(1)
                } else {
                    rat(0)
                };
                assert_eq!(g.weight(u, v), expected, "arc ({u},{v})");
            }
        }
    }

    #[test]
    fn cut_function_dominates_directed_cut_input() {
        // Inequality (1) specialized: approximating a directed cut function
        // never dips below it.
        let base = WeightedDigraph::from_arcs(
            3,
            vec![(0, 1, rat(2)), (1, 2, rat(1)), (2, 0, rat(3))],
        )
        .unwrap();
        let f = Oracle::directed_cut(base.clone());
        let g = directed_cut_approx(&f, Guard::default()).unwrap();
        for s in all_masks(3) {
            assert!(g.cut_value(s) >= base.cut_value(s), "violated at {s:?}");
        }
    }

    #[test]
    fn zero_function_gives_zero_graph() {
        let f = Oracle::table(3, vec![Rat::zero(); 8]).unwrap();
        let g = directed_cut_approx(&f, Guard::default()).unwrap();
        assert_eq!(g.arcs().count(), 0);
        for s in all_masks(3) {
            assert_eq!(g.cut_value(s), rat(0));
        }
    }

    #[test]
    fn rejects_nonzero_boundary() {
        let f = Oracle::budgeted_additive(vec![rat(1), rat(1)], rat(1)).unwrap();
        assert!(matches!(
            directed_cut_approx(&f, Guard::default()),
            Err(Error::BoundaryNonzero { .. })
        ));
    }
}
