//! Simple undirected graphs and the modification operations studied here:
//! vertex deletion, edge deletion, vertex contraction, edge contraction,
//! edge subdivision and neighbourhood-edge removal (`G ⊙ v`).
//!
//! A [`Graph`] is an immutable value. Every operation returns a fresh graph
//! together with an [`IdMap`] from old vertex ids to new ones, so callers can
//! carry vertex sets across a modification.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexBits;
use crate::error::GraphError;

pub type Vertex = usize;

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop { v: a });
        }
        Ok(Self {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Old-to-new vertex id mapping produced by a modification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdMap {
    forward: Vec<Option<Vertex>>,
    new_order: usize,
}

impl IdMap {
    fn identity(n: usize) -> Self {
        Self {
            forward: (0..n).map(Some).collect(),
            new_order: n,
        }
    }

    /// Survivors keep relative order and are renumbered `0..`.
    fn compacting(n: usize, removed: Vertex) -> Self {
        let forward = (0..n)
            .map(|x| match x.cmp(&removed) {
                std::cmp::Ordering::Less => Some(x),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(x - 1),
            })
            .collect();
        Self {
            forward,
            new_order: n - 1,
        }
    }

    /// New id of an old vertex, `None` if it was removed.
    pub fn get(&self, old: Vertex) -> Option<Vertex> {
        self.forward.get(old).copied().flatten()
    }

    /// Maps a set of old ids, silently dropping removed vertices.
    pub fn map_set(&self, set: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
        set.iter().filter_map(|&x| self.get(x)).collect()
    }

    /// The reverse mapping: for each new id, the old id it came from.
    ///
    /// Vertices created by the operation (a subdivision vertex) have no
    /// preimage and map to `None`. When two old vertices merged, the new id
    /// maps back to the smaller one.
    pub fn inverse(&self) -> Vec<Option<Vertex>> {
        let mut inv = vec![None; self.new_order];
        for (old, new) in self.forward.iter().enumerate() {
            if let Some(new) = *new {
                if inv[new].is_none() {
                    inv[new] = Some(old);
                }
            }
        }
        inv
    }

    pub fn new_order(&self) -> usize {
        self.new_order
    }
}

/// Result of a modification: the new graph and where old ids went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modified {
    pub graph: Graph,
    pub map: IdMap,
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, deduplicating repeated edges.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut sets = vec![BTreeSet::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::EdgeOutOfRange { u: a, v: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            sets[a].insert(b);
            sets[b].insert(a);
        }
        Ok(Self::from_sets(sets))
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let pairs: Vec<_> = edges.into_iter().map(|e| e.endpoints()).collect();
        Self::from_edge_list(n, &pairs)
    }

    fn from_sets(sets: Vec<BTreeSet<Vertex>>) -> Self {
        Self {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    fn to_sets(&self) -> Vec<BTreeSet<Vertex>> {
        self.adj
            .iter()
            .map(|a| a.iter().copied().collect())
            .collect()
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbour list of `v`.
    ///
    /// Panics if `v` is out of range; use [`Graph::check_vertex`] first for
    /// untrusted input.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Maximum degree; 0 for edgeless (and empty) graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.order() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// All edges in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| {
            nb.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.order() })
        }
    }

    fn check_edge(&self, e: Edge) -> Result<(), GraphError> {
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(GraphError::MissingEdge { u: e.u, v: e.v })
        }
    }

    /// Open neighbourhoods as bitsets, indexed by vertex.
    pub fn neighbor_bits(&self) -> Vec<VertexBits> {
        let n = self.order();
        self.adj
            .iter()
            .map(|nb| VertexBits::from_iter_with(n, nb.iter().copied()))
            .collect()
    }

    pub fn is_pendant(&self, v: Vertex) -> Result<bool, GraphError> {
        self.check_vertex(v)?;
        Ok(self.degree(v) == 1)
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        reached == n
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Modified, GraphError> {
        self.check_vertex(v)?;
        let map = IdMap::compacting(self.order(), v);
        let adj = self
            .vertices()
            .filter(|&x| x != v)
            .map(|x| self.adj[x].iter().filter_map(|&y| map.get(y)).collect())
            .collect();
        Ok(Modified {
            graph: Self { adj },
            map,
        })
    }

    /// `G - e`.
    pub fn delete_edge(&self, e: Edge) -> Result<Modified, GraphError> {
        self.check_edge(e)?;
        let mut sets = self.to_sets();
        sets[e.u].remove(&e.v);
        sets[e.v].remove(&e.u);
        Ok(Modified {
            graph: Self::from_sets(sets),
            map: IdMap::identity(self.order()),
        })
    }

    /// `G / v`: delete `v` and make its open neighbourhood a clique.
    pub fn contract_vertex(&self, v: Vertex) -> Result<Modified, GraphError> {
        self.check_vertex(v)?;
        let mut sets = self.to_sets();
        let nb = &self.adj[v];
        for &a in nb {
            for &b in nb {
                if a != b {
                    sets[a].insert(b);
                }
            }
        }
        let with_clique = Self::from_sets(sets);
        with_clique.delete_vertex(v)
    }

    /// `G / e`: merge the endpoints into the vertex with the smaller id.
    pub fn contract_edge(&self, e: Edge) -> Result<Modified, GraphError> {
        self.check_edge(e)?;
        let (keep, gone) = (e.u, e.v);
        let mut sets = self.to_sets();
        let gone_nb = std::mem::take(&mut sets[gone]);
        for y in gone_nb {
            sets[y].remove(&gone);
            if y != keep {
                sets[y].insert(keep);
                sets[keep].insert(y);
            }
        }
        sets[keep].remove(&gone);
        let merged = Self::from_sets(sets);
        let Modified { graph, map } = merged.delete_vertex(gone)?;
        let merged_id = map.get(keep);
        let mut forward = map.forward;
        forward[gone] = merged_id;
        Ok(Modified {
            graph,
            map: IdMap {
                forward,
                new_order: map.new_order,
            },
        })
    }

    /// Replaces `uv` by a path `u w v` through a new vertex `w = n`.
    pub fn subdivide_edge(&self, e: Edge) -> Result<Modified, GraphError> {
        self.check_edge(e)?;
        let w = self.order();
        let mut sets = self.to_sets();
        sets.push(BTreeSet::new());
        sets[e.u].remove(&e.v);
        sets[e.v].remove(&e.u);
        for x in [e.u, e.v] {
            sets[x].insert(w);
            sets[w].insert(x);
        }
        let mut map = IdMap::identity(self.order());
        map.new_order = w + 1;
        Ok(Modified {
            graph: Self::from_sets(sets),
            map,
        })
    }

    /// `G ⊙ v`: remove every edge joining two neighbours of `v`.
    pub fn odot_vertex(&self, v: Vertex) -> Result<Modified, GraphError> {
        self.check_vertex(v)?;
        let nb = &self.adj[v];
        let adj = self
            .vertices()
            .map(|x| {
                if nb.binary_search(&x).is_ok() {
                    self.adj[x]
                        .iter()
                        .copied()
                        .filter(|y| nb.binary_search(y).is_err())
                        .collect()
                } else {
                    self.adj[x].clone()
                }
            })
            .collect();
        Ok(Modified {
            graph: Self { adj },
            map: IdMap::identity(self.order()),
        })
    }

    /// Number of edges with both endpoints in `N(v)`.
    pub fn edges_within_neighborhood(&self, v: Vertex) -> usize {
        let nb = &self.adj[v];
        nb.iter()
            .map(|&a| {
                self.adj[a]
                    .iter()
                    .filter(|&&b| b > a && nb.binary_search(&b).is_ok())
                    .count()
            })
            .sum()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        g(n, &e)
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((0, n - 1));
        g(n, &e)
    }

    fn k3() -> Graph {
        g(3, &[(0, 1), (1, 2), (0, 2)])
    }

    fn star3() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3)])
    }

    #[test]
    fn construction() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.size(), 3);
        assert_eq!(p4.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(k3().max_degree(), 2);
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(GraphError::SelfLoop { v: 0 })
        );
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::EdgeOutOfRange { .. })
        ));
        // duplicates collapse
        assert_eq!(g(2, &[(0, 1), (1, 0), (0, 1)]).size(), 1);
        assert_eq!(Graph::empty(3).max_degree(), 0);
    }

    #[test]
    fn delete_vertex_examples() {
        assert_eq!(cycle(4).delete_vertex(0).unwrap().graph, path(3));
        assert_eq!(star3().delete_vertex(0).unwrap().graph, Graph::empty(3));
        let m = path(4).delete_vertex(1).unwrap();
        assert_eq!(m.graph, g(3, &[(1, 2)]));
        assert_eq!(m.map.get(0), Some(0));
        assert_eq!(m.map.get(1), None);
        assert_eq!(m.map.get(3), Some(2));
        assert_eq!(m.map.inverse(), vec![Some(0), Some(2), Some(3)]);
        assert!(path(2).delete_vertex(5).is_err());
    }

    #[test]
    fn delete_edge_examples() {
        for e in k3().edges() {
            let h = k3().delete_edge(e).unwrap().graph;
            assert_eq!(h.size(), 2);
            assert_eq!(h.degrees().iter().filter(|&&d| d == 2).count(), 1);
        }
        assert_eq!(
            path(2).delete_edge(Edge::new(0, 1).unwrap()).unwrap().graph,
            Graph::empty(2)
        );
        assert_eq!(
            cycle(4)
                .delete_edge(Edge::new(0, 3).unwrap())
                .unwrap()
                .graph,
            path(4)
        );
        assert_eq!(
            path(3).delete_edge(Edge::new(0, 2).unwrap()),
            Err(GraphError::MissingEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn contract_vertex_examples() {
        assert_eq!(cycle(4).contract_vertex(0).unwrap().graph, k3());
        assert_eq!(path(3).contract_vertex(1).unwrap().graph, path(2));
        assert_eq!(star3().contract_vertex(0).unwrap().graph, k3());
        // pendant: plain deletion
        assert_eq!(
            path(4).contract_vertex(3).unwrap(),
            path(4).delete_vertex(3).unwrap()
        );
    }

    #[test]
    fn contract_edge_examples() {
        let e01 = Edge::new(0, 1).unwrap();
        let e12 = Edge::new(1, 2).unwrap();
        assert_eq!(path(3).contract_edge(e01).unwrap().graph, path(2));
        assert_eq!(path(3).contract_edge(e12).unwrap().graph, path(2));
        for e in k3().edges() {
            assert_eq!(k3().contract_edge(e).unwrap().graph, path(2));
        }
        for e in cycle(4).edges() {
            assert_eq!(cycle(4).contract_edge(e).unwrap().graph, k3());
        }
        let m = path(4).contract_edge(e12).unwrap();
        assert_eq!(m.map.get(1), Some(1));
        assert_eq!(m.map.get(2), Some(1));
        assert_eq!(m.map.get(3), Some(2));
    }

    #[test]
    fn subdivide_examples() {
        assert_eq!(
            path(2)
                .subdivide_edge(Edge::new(0, 1).unwrap())
                .unwrap()
                .graph,
            g(3, &[(0, 2), (1, 2)])
        );
        assert_eq!(
            k3().subdivide_edge(Edge::new(0, 1).unwrap()).unwrap().graph,
            g(4, &[(0, 3), (3, 1), (1, 2), (2, 0)])
        );
        assert_eq!(
            path(3)
                .subdivide_edge(Edge::new(0, 1).unwrap())
                .unwrap()
                .graph,
            g(4, &[(0, 3), (3, 1), (1, 2)])
        );
    }

    #[test]
    fn odot_examples() {
        assert_eq!(k3().odot_vertex(0).unwrap().graph, g(3, &[(0, 1), (0, 2)]));
        assert_eq!(cycle(4).odot_vertex(0).unwrap().graph, cycle(4));
        assert_eq!(path(4).odot_vertex(3).unwrap().graph, path(4));
        assert_eq!(k3().edges_within_neighborhood(0), 1);
    }

    #[test]
    fn connectivity_and_pendants() {
        assert!(path(4).is_connected());
        assert!(!g(4, &[(0, 1), (2, 3)]).is_connected());
        assert!(path(4).is_pendant(0).unwrap());
        assert!(!cycle(4).is_pendant(2).unwrap());
        assert!(cycle(4).is_pendant(4).is_err());
    }
}
