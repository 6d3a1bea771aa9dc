//! Weighted graphs whose cut functions serve as approximators.

use crate::error::{Error, Result};
use crate::mask::{Mask, MAX_GROUND_SET};
use crate::rational::{is_nonneg, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;

fn check_node_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            n,
            max: MAX_GROUND_SET,
        });
    }
    Ok(())
}

/// Directed graph with nonnegative rational arc weights; absent arcs weigh 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    n: usize,
    weights: BTreeMap<(usize, usize), Rat>,
}

impl WeightedDigraph {
    pub fn new(n: usize) -> Result<Self> {
        check_node_count(n)?;
        Ok(Self {
            n,
            weights: BTreeMap::new(),
        })
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize, Rat)>) -> Result<Self> {
        let mut g = Self::new(n)?;
        for (u, v, w) in arcs {
            g.add_arc(u, v, w)?;
        }
        Ok(g)
    }

    /// Adds `w` to the weight of arc (u, v).
    pub fn add_arc(&mut self, u: usize, v: usize, w: Rat) -> Result<()> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::DimensionMismatch {
                context: format!("arc ({u},{v}) invalid for {} nodes", self.n),
            });
        }
        if !is_nonneg(&w) {
            return Err(Error::NegativeValue {
                context: "arc weight",
            });
        }
        if !w.is_zero() {
            *self.weights.entry((u, v)).or_insert_with(Rat::zero) += w;
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn weight(&self, u: usize, v: usize) -> Rat {
        self.weights.get(&(u, v)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Arcs with nonzero weight, ascending by (tail, head).
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.weights.iter().map(|(&(u, v), w)| (u, v, w))
    }

    /// Total weight of arcs leaving S: tails in S, heads outside.
    pub fn cut_value(&self, s: Mask) -> Rat {
        let mut total = Rat::zero();
        for (&(u, v), w) in &self.weights {
            if s.contains(u) && !s.contains(v) {
                total += w;
            }
        }
        total
    }
}

/// Undirected graph with nonnegative rational edge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    weights: BTreeMap<(usize, usize), Rat>,
}

impl WeightedGraph {
    pub fn new(n: usize) -> Result<Self> {
        check_node_count(n)?;
        Ok(Self {
            n,
            weights: BTreeMap::new(),
        })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, Rat)>,
    ) -> Result<Self> {
        let mut g = Self::new(n)?;
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: Rat) -> Result<()> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::DimensionMismatch {
                context: format!("edge {{{u},{v}}} invalid for {} nodes", self.n),
            });
        }
        if !is_nonneg(&w) {
            return Err(Error::NegativeValue {
                context: "edge weight",
            });
        }
        if !w.is_zero() {
            let key = (u.min(v), u.max(v));
            *self.weights.entry(key).or_insert_with(Rat::zero) += w;
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Edges with nonzero weight, ascending by (min endpoint, max endpoint).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.weights.iter().map(|(&(u, v), w)| (u, v, w))
    }

    pub fn total_weight(&self) -> Rat {
        self.weights.values().cloned().sum()
    }

    /// Total weight of edges with exactly one endpoint in S.
    pub fn cut_value(&self, s: Mask) -> Rat {
        let mut total = Rat::zero();
        for (&(u, v), w) in &self.weights {
            if s.contains(u) != s.contains(v) {
                total += w;
            }
        }
        total
    }
}

/// Spanning tree with nonnegative rational edge weights. The edge set is
/// validated to be connected and acyclic on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedTree {
    n: usize,
    edges: Vec<(usize, usize, Rat)>,
}

impl WeightedTree {
    pub fn new(n: usize, edges: Vec<(usize, usize, Rat)>) -> Result<Self> {
        check_node_count(n)?;
        if edges.len() + 1 != n {
            return Err(Error::NotASpanningTree {
                reason: "edge count is not n - 1",
            });
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v, ref w) in &edges {
            if u >= n || v >= n || u == v {
                return Err(Error::NotASpanningTree {
                    reason: "edge endpoint out of range",
                });
            }
            if !is_nonneg(w) {
                return Err(Error::NegativeValue {
                    context: "tree edge weight",
                });
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(Error::NotASpanningTree {
                    reason: "edge set contains a cycle",
                });
            }
            parent[ru] = rv;
        }
        let mut edges = edges
            .into_iter()
            .map(|(u, v, w)| (u.min(v), u.max(v), w))
            .collect::<Vec<_>>();
        edges.sort_by_key(|&(u, v, _)| (u, v));
        Ok(Self { n, edges })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, Rat)] {
        &self.edges
    }

    pub fn cut_value(&self, s: Mask) -> Rat {
        let mut total = Rat::zero();
        for (u, v, w) in &self.edges {
            if s.contains(*u) != s.contains(*v) {
                total += w;
            }
        }
        total
    }

    /// The component of the tree containing `root` after deleting edge
    /// `edge_index`, as a mask.
    pub fn component_without_edge(&self, edge_index: usize, root: usize) -> Mask {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v, _)) in self.edges.iter().enumerate() {
            if i != edge_index {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut seen = Mask::singleton(root);
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen.contains(y) {
                    seen = seen.insert(y);
                    stack.push(y);
                }
            }
        }
        seen
    }
}
