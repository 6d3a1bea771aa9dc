//! The Gomory-Hu edge property, re-verified from scratch.

use crate::construct::min_separating_table;
use crate::error::{Error, Result};
use crate::graph::WeightedTree;
use crate::oracle::{DenseTable, Guard, Oracle};
use crate::verify::{PropertyReport, Witness};

/// Checks, for every tree edge {u, v}, that the edge weight equals the
/// exhaustive minimum of f over sets separating u from v AND that the
/// component of the tree on u's side attains it. The caller asserts that f
/// is symmetric.
pub fn check_gomory_hu(f: &Oracle, tree: &WeightedTree, guard: Guard) -> Result<PropertyReport> {
    if f.ground_set_size() != tree.node_count() {
        return Err(Error::DimensionMismatch {
            context: format!(
                "function over {} elements, tree over {}",
                f.ground_set_size(),
                tree.node_count()
            ),
        });
    }
    let table = DenseTable::from_oracle(f, guard)?;
    for (idx, &(u, v, ref w)) in tree.edges().iter().enumerate() {
        let component = tree.component_without_edge(idx, u);
        let min_value = min_separating_table(&table, u, v).value;
        if w != &min_value || table.value(component) != w {
            return Ok(PropertyReport::violated(Witness::Edge { u, v, component }));
        }
    }
    Ok(PropertyReport::ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::gomory_hu_tree;
    use crate::graph::WeightedGraph;
    use crate::mask::Mask;
    use crate::oracle::HardSpec;
    use crate::rational::{rat, Rat};

    #[test]
    fn constructed_tree_passes() {
        let f = Oracle::hard(HardSpec::Symmetric { n: 4 }).unwrap();
        let t = gomory_hu_tree(&f, Guard::default()).unwrap();
        assert!(check_gomory_hu(&f, &t, Guard::default()).unwrap().holds);
    }

    #[test]
    fn perturbed_weight_fails_at_that_edge() {
        let f = Oracle::hard(HardSpec::Symmetric { n: 4 }).unwrap();
        let t = gomory_hu_tree(&f, Guard::default()).unwrap();
        let mut edges: Vec<(usize, usize, Rat)> = t.edges().to_vec();
        edges[1].2 = rat(2);
        let (eu, ev, _) = edges[1];
        let bad = WeightedTree::new(4, edges).unwrap();
        let report = check_gomory_hu(&f, &bad, Guard::default()).unwrap();
        assert!(!report.holds);
        match report.witness {
            Some(Witness::Edge { u, v, .. }) => assert_eq!((u, v), (eu, ev)),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn weighted_star_is_its_own_gomory_hu_tree() {
        // each leaf edge's component is the singleton leaf, a minimum cut
        let weights = [rat(2), crate::rational::ratio(1, 2), rat(3)];
        let edges: Vec<(usize, usize, Rat)> = (1..4)
            .zip(weights.iter())
            .map(|(leaf, w)| (0, leaf, w.clone()))
            .collect();
        let star_graph = WeightedGraph::from_edges(4, edges.clone()).unwrap();
        let f = Oracle::undirected_cut(star_graph);
        let star_tree = WeightedTree::new(4, edges).unwrap();
        let report = check_gomory_hu(&f, &star_tree, Guard::default()).unwrap();
        assert!(report.holds);
        // cross-check one leaf by brute force
        let table = DenseTable::from_oracle(&f, Guard::default()).unwrap();
        let m = min_separating_table(&table, 0, 2);
        assert_eq!(&m.value, table.value(Mask::singleton(2)));
    }
}
