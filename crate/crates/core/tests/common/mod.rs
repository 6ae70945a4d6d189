//! Brute-force reference shared by the integration tests. Deliberately does
//! not touch the library's solver, bitsets or checkers.

#![allow(dead_code)]

use itertools::Itertools;
use stdom::{Graph, Kind};

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
}

/// Domination test written from the definitions, on plain adjacency lists.
pub fn dominates(adj: &[Vec<usize>], kind: Kind, set: &[usize]) -> bool {
    let inside = |x: usize| set.contains(&x);
    (0..adj.len()).all(|x| {
        inside(x)
            || adj[x].iter().any(|&y| {
                inside(y)
                    && match kind {
                        Kind::Ordinary => true,
                        Kind::Strong => adj[y].len() >= adj[x].len(),
                        Kind::Weak => adj[y].len() <= adj[x].len(),
                    }
            })
    })
}

/// Smallest dominating set of the given kind, by trying all subsets in order
/// of increasing size.
pub fn oracle(g: &Graph, kind: Kind) -> (usize, Vec<usize>) {
    let adj = adjacency(g);
    let n = adj.len();
    for k in 0..=n {
        if let Some(s) = (0..n).combinations(k).find(|s| dominates(&adj, kind, s)) {
            return (k, s);
        }
    }
    unreachable!("the whole vertex set always dominates")
}

pub fn is_sds(g: &Graph, set: &[usize]) -> bool {
    dominates(&adjacency(g), Kind::Strong, set)
}
