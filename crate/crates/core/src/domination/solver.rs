//! Exact minimum-cardinality domination by branch and bound.
//!
//! All three domination variants reduce to set cover: vertex `y` covers
//! itself and every neighbour `x` it is allowed to dominate. Because degrees
//! never change while a set is being searched, the eligibility lists are
//! computed once up front.
//!
//! The search asks "is there a cover of size at most `k`?" for increasing
//! `k`, starting at a packing lower bound and stopping below the greedy
//! upper bound. Inside one decision search:
//!
//! * a vertex whose cover set is contained in another's is never chosen
//!   (static dominance, ties keep the smaller id);
//! * an uncovered vertex with a single remaining candidate forces it;
//! * we branch on the uncovered vertex with the fewest candidates, and each
//!   rejected candidate is excluded from the later sibling branches;
//! * a node is cut when the chosen size plus a greedy packing of uncovered
//!   vertices with pairwise disjoint candidate sets exceeds `k`.
//!
//! Every pruning rule is admissible, so the answer is exact.

use crate::bitset::VertexBits;
use crate::graph::{Graph, Vertex};

use super::Kind;

pub(crate) struct CoverProblem {
    n: usize,
    /// For each vertex `x`, the vertices allowed to cover it (including `x`).
    candidates: Vec<VertexBits>,
    /// For each vertex `y`, the vertices it covers when chosen.
    covers: Vec<VertexBits>,
}

impl CoverProblem {
    pub(crate) fn new(g: &Graph, kind: Kind) -> Self {
        let n = g.order();
        let mut candidates: Vec<_> = (0..n).map(|x| VertexBits::from_iter_with(n, [x])).collect();
        let mut covers = candidates.clone();
        for x in g.vertices() {
            for &y in g.neighbors(x) {
                if kind.may_dominate(g.degree(y), g.degree(x)) {
                    candidates[x].insert(y);
                    covers[y].insert(x);
                }
            }
        }
        Self {
            n,
            candidates,
            covers,
        }
    }

    pub(crate) fn covers(&self, y: Vertex) -> &VertexBits {
        &self.covers[y]
    }

    fn dominated_choices(&self) -> VertexBits {
        let mut out = VertexBits::empty(self.n);
        for a in 0..self.n {
            let ca = &self.covers[a];
            let dominated = (0..self.n).any(|b| {
                b != a
                    && ca.is_subset(&self.covers[b])
                    && (b < a || ca.len() < self.covers[b].len())
            });
            if dominated {
                out.insert(a);
            }
        }
        out
    }

    fn packing_bound(&self, uncovered: &VertexBits, excluded: &VertexBits) -> usize {
        let mut order: Vec<(usize, Vertex)> = uncovered
            .iter()
            .map(|x| (self.candidates[x].difference_len(excluded), x))
            .collect();
        order.sort_unstable();
        let mut used = VertexBits::empty(self.n);
        let mut bound = 0;
        for (_, x) in order {
            let mut c = self.candidates[x].clone();
            c.difference_with(excluded);
            if c.is_disjoint(&used) {
                used.union_with(&c);
                bound += 1;
            }
        }
        bound
    }
}

/// Greedy cover: repeatedly take the vertex covering the most uncovered
/// vertices, ties to the smaller id.
pub(crate) fn greedy_cover(p: &CoverProblem) -> VertexBits {
    let all = VertexBits::prefix(p.n, p.n);
    let mut covered = VertexBits::empty(p.n);
    let mut chosen = VertexBits::empty(p.n);
    while covered != all {
        let mut best = (0, 0);
        for y in 0..p.n {
            let gain = p.covers[y].difference_len(&covered);
            if gain > best.0 {
                best = (gain, y);
            }
        }
        chosen.insert(best.1);
        covered.union_with(&p.covers[best.1]);
    }
    chosen
}

pub(crate) struct Outcome {
    pub set: VertexBits,
    pub nodes: u64,
}

pub(crate) fn minimum_cover(p: &CoverProblem) -> Outcome {
    let greedy = greedy_cover(p);
    let mut search = Search {
        p,
        all: VertexBits::prefix(p.n, p.n),
        nodes: 0,
        found: None,
    };
    let excluded = p.dominated_choices();
    let empty = VertexBits::empty(p.n);
    let lower = p.packing_bound(&search.all, &excluded);
    for k in lower..greedy.len() {
        if search.decide(empty.clone(), empty.clone(), excluded.clone(), k) {
            let set = search.found.take().expect("decide returned true");
            return Outcome {
                set,
                nodes: search.nodes,
            };
        }
    }
    Outcome {
        set: greedy,
        nodes: search.nodes,
    }
}

struct Search<'a> {
    p: &'a CoverProblem,
    all: VertexBits,
    nodes: u64,
    found: Option<VertexBits>,
}

impl Search<'_> {
    fn decide(
        &mut self,
        mut chosen: VertexBits,
        mut covered: VertexBits,
        excluded: VertexBits,
        k: usize,
    ) -> bool {
        self.nodes += 1;
        let p = self.p;
        let mut size = chosen.len();

        // unit propagation
        let branch_on = loop {
            if covered == self.all {
                self.found = Some(chosen);
                return true;
            }
            if size >= k {
                return false;
            }
            let mut pick: Option<(usize, Vertex)> = None;
            for x in self.all.iter().filter(|&x| !covered.contains(x)) {
                let c = p.candidates[x].difference_len(&excluded);
                if c == 0 {
                    return false;
                }
                if pick.is_none_or(|(best, _)| c < best) {
                    pick = Some((c, x));
                    if c == 1 {
                        break;
                    }
                }
            }
            let (count, x) = pick.expect("some vertex is uncovered");
            if count > 1 {
                break x;
            }
            let y = p.candidates[x]
                .first_not_in(&excluded)
                .expect("one candidate left");
            chosen.insert(y);
            covered.union_with(&p.covers[y]);
            size += 1;
        };

        let mut uncovered = self.all.clone();
        uncovered.difference_with(&covered);
        if size + p.packing_bound(&uncovered, &excluded) > k {
            return false;
        }

        let mut options: Vec<(usize, Vertex)> = p.candidates[branch_on]
            .iter()
            .filter(|&y| !excluded.contains(y))
            .map(|y| (p.covers[y].difference_len(&covered), y))
            .collect();
        options.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut excluded = excluded;
        for (_, y) in options {
            let mut next_chosen = chosen.clone();
            next_chosen.insert(y);
            let mut next_covered = covered.clone();
            next_covered.union_with(&p.covers[y]);
            if self.decide(next_chosen, next_covered, excluded.clone(), k) {
                return true;
            }
            excluded.insert(y);
        }
        false
    }
}
