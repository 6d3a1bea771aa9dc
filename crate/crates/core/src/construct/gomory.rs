//! Gomory-Hu trees of symmetric submodular functions by contraction.

use crate::construct::separator::min_separating_table;
use crate::error::{Error, Result};
use crate::graph::WeightedTree;
use crate::mask::{all_masks, Mask};
use crate::oracle::{DenseTable, Guard, Oracle};
use crate::rational::Rat;
use crate::verify::check_gomory_hu;
use num_traits::{Signed, Zero};

/// Contraction-based Gomory-Hu construction.
///
/// A tree over blocks of a partition starts as the single block U. Each
/// round takes the first block X with two or more elements, contracts every
/// neighboring subtree to a super-element, finds a minimum set separating
/// the two lowest-index elements of X in the contracted function, splits X
/// along it, and reattaches each subtree to the side holding its
/// super-element. The new edge carries the minimizer's value.
///
/// The finished tree is re-validated edge by edge before it is returned, so
/// any failure of the contraction argument surfaces as
/// [`Error::GomoryHuValidationFailed`] rather than a bad tree.
pub fn gomory_hu_tree(f: &Oracle, guard: Guard) -> Result<WeightedTree> {
    let table = DenseTable::from_oracle(f, guard)?;
    let n = table.n();
    if !table.value(Mask::EMPTY).is_zero() {
        return Err(Error::BoundaryNonzero {
            which: "the empty set",
        });
    }
    for s in all_masks(n) {
        if table.value(s).is_negative() {
            return Err(Error::NegativeOnSubset { witness: s });
        }
        if table.value(s) != table.value(s.complement(n)) {
            return Err(Error::NotSymmetric { witness: s });
        }
    }

    let mut blocks: Vec<Mask> = vec![Mask::full(n)];
    let mut edges: Vec<(usize, usize, Rat)> = Vec::new();

    while let Some(bi) = blocks.iter().position(|b| b.len() >= 2) {
        let x = blocks[bi];
        let mut x_elems = x.elements();
        let u = x_elems.next().expect("block has elements");
        let v = x_elems.next().expect("block has two elements");

        // Each edge incident to X roots a subtree of the block tree; record
        // (incident edge index, union of that subtree's original elements).
        let incident: Vec<usize> = (0..edges.len())
            .filter(|&e| edges[e].0 == bi || edges[e].1 == bi)
            .collect();
        let mut subtree_masks: Vec<(usize, Mask)> = Vec::with_capacity(incident.len());
        for &e in &incident {
            let start = if edges[e].0 == bi { edges[e].1 } else { edges[e].0 };
            let mut seen = vec![false; blocks.len()];
            seen[bi] = true;
            seen[start] = true;
            let mut stack = vec![start];
            let mut union = blocks[start];
            while let Some(b) = stack.pop() {
                for &(p, q, _) in &edges {
                    let other = if p == b { q } else if q == b { p } else { continue };
                    if !seen[other] {
                        seen[other] = true;
                        union = union.union(blocks[other]);
                        stack.push(other);
                    }
                }
            }
            subtree_masks.push((e, union));
        }
        // Contracted ground set: X's own elements ascending, then the
        // super-elements in ascending mask order so the numbering is
        // reproducible.
        subtree_masks.sort_by_key(|(_, m)| m.0);
        let mut parts: Vec<Mask> = x.elements().map(Mask::singleton).collect();
        let mut vertex_of_edge: Vec<(usize, usize)> = Vec::with_capacity(subtree_masks.len());
        for (e, m) in &subtree_masks {
            vertex_of_edge.push((*e, parts.len()));
            parts.push(*m);
        }

        let nc = parts.len();
        let contracted = DenseTable::from_values(
            nc,
            all_masks(nc)
                .map(|s| table.eval_contracted(&parts, s).clone())
                .collect(),
        );
        // u and v are the two lowest elements of X, i.e. contracted 0 and 1.
        let sep = min_separating_table(&contracted, 0, 1);

        let mut x_u = Mask::EMPTY;
        for (idx, elem) in x.elements().enumerate() {
            if sep.witness.contains(idx) {
                x_u = x_u.insert(elem);
            }
        }
        let x_v = x.minus(x_u);
        debug_assert!(x_u.contains(u) && x_v.contains(v));

        blocks[bi] = x_u;
        blocks.push(x_v);
        let vi = blocks.len() - 1;
        for (e, vertex) in &vertex_of_edge {
            if !sep.witness.contains(*vertex) {
                // subtree landed on the v side; reattach its edge
                let (p, q, _) = edges[*e];
                if p == bi {
                    edges[*e].0 = vi;
                } else {
                    debug_assert_eq!(q, bi);
                    edges[*e].1 = vi;
                }
            }
        }
        edges.push((bi, vi, sep.value));
    }

    let elem_of_block: Vec<usize> = blocks
        .iter()
        .map(|b| {
            debug_assert_eq!(b.len(), 1);
            b.elements().next().unwrap()
        })
        .collect();
    let tree_edges = edges
        .into_iter()
        .map(|(p, q, w)| (elem_of_block[p], elem_of_block[q], w))
        .collect();
    let tree = WeightedTree::new(n, tree_edges)?;

    let report = check_gomory_hu(f, &tree, guard)?;
    if !report.holds {
        return Err(Error::GomoryHuValidationFailed);
    }
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::HardSpec;
    use crate::rational::rat;

    #[test]
    fn hard_symmetric_tree_weights_are_one() {
        let f = Oracle::hard(HardSpec::Symmetric { n: 4 }).unwrap();
        let t = gomory_hu_tree(&f, Guard::default()).unwrap();
        assert_eq!(t.edges().len(), 3);
        for (_, _, w) in t.edges() {
            assert_eq!(w, &rat(1));
        }
        // sandwich 1 <= c(S) <= 3 on nontrivial subsets, by direct scan
        for s in all_masks(4) {
            if s.is_empty() || s.is_full(4) {
                assert_eq!(t.cut_value(s), rat(0));
            } else {
                let c = t.cut_value(s);
                assert!(c >= rat(1) && c <= rat(3), "cut {c} at {s:?}");
            }
        }
    }

    #[test]
    fn tree_cut_input_is_reproduced_exactly() {
        let path = WeightedTree::new(
            4,
            vec![(0, 1, rat(3)), (1, 2, rat(1)), (2, 3, rat(2))],
        )
        .unwrap();
        let f = Oracle::tree_cut(path.clone());
        let t = gomory_hu_tree(&f, Guard::default()).unwrap();
        for s in all_masks(4) {
            assert_eq!(t.cut_value(s), path.cut_value(s), "mismatch at {s:?}");
        }
    }

    #[test]
    fn zero_function_gives_zero_tree() {
        let f = Oracle::table(3, vec![rat(0); 8]).unwrap();
        let t = gomory_hu_tree(&f, Guard::default()).unwrap();
        for (_, _, w) in t.edges() {
            assert_eq!(w, &rat(0));
        }
    }

    #[test]
    fn single_element_ground_set() {
        let f = Oracle::table(1, vec![rat(0), rat(0)]).unwrap();
        let t = gomory_hu_tree(&f, Guard::default()).unwrap();
        assert!(t.edges().is_empty());
    }

    #[test]
    fn rejects_asymmetric_input() {
        let f = Oracle::budgeted_additive(vec![rat(1), rat(2)], rat(2)).unwrap();
        assert!(matches!(
            gomory_hu_tree(&f, Guard::default()),
            Err(Error::NotSymmetric { .. })
        ));
    }
}
