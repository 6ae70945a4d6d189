mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use stdom::io::{parse, serialize};
use stdom::{
    gamma_exact, gamma_st_exact, gamma_w_exact, is_dominating_set, is_strong_dominating_set,
    is_weak_dominating_set, verify_theorem, Edge, Graph, Solver, Target, TheoremId, TheoremOutcome,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_and_vertex(max_n: usize) -> impl Strategy<Value = (Graph, usize)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0..n)
    })
}

fn graph_and_edge(max_n: usize) -> impl Strategy<Value = (Graph, Edge)> {
    graph(max_n)
        .prop_filter("needs an edge", |g| g.size() > 0)
        .prop_flat_map(|g| {
            let m = g.size();
            (Just(g), 0..m)
        })
        .prop_map(|(g, i)| {
            let e = g.edges().nth(i).unwrap();
            (g, e)
        })
}

/// Sorted, loop-free, symmetric adjacency.
fn well_formed(g: &Graph) -> bool {
    g.vertices().all(|v| {
        let nb = g.neighbors(v);
        nb.windows(2).all(|w| w[0] < w[1])
            && nb
                .iter()
                .all(|&u| u != v && u < g.order() && g.neighbors(u).contains(&v))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn round_trip(g in graph(12)) {
        prop_assert_eq!(parse(&serialize(&g)).unwrap(), g);
    }

    #[test]
    fn delete_vertex_arithmetic((g, v) in graph_and_vertex(10)) {
        let h = g.delete_vertex(v).unwrap();
        prop_assert!(well_formed(&h.graph));
        prop_assert_eq!(h.graph.order(), g.order() - 1);
        prop_assert_eq!(h.graph.size(), g.size() - g.degree(v));
        prop_assert_eq!(h.map.get(v), None);
    }

    #[test]
    fn contract_vertex_arithmetic((g, v) in graph_and_vertex(10)) {
        let h = g.contract_vertex(v).unwrap();
        prop_assert!(well_formed(&h.graph));
        prop_assert_eq!(h.graph.order(), g.order() - 1);
        let d = g.degree(v);
        let missing = d * d.saturating_sub(1) / 2 - g.edges_within_neighborhood(v);
        prop_assert_eq!(h.graph.size(), g.size() - d + missing);
        if missing == 0 {
            prop_assert_eq!(&h.graph, &g.delete_vertex(v).unwrap().graph);
        }
    }

    #[test]
    fn odot_edge_count((g, v) in graph_and_vertex(10)) {
        let h = g.odot_vertex(v).unwrap().graph;
        prop_assert!(well_formed(&h));
        prop_assert_eq!(h.order(), g.order());
        prop_assert_eq!(h.size(), g.size() - g.edges_within_neighborhood(v));
        if g.degree(v) <= 1 {
            prop_assert_eq!(h, g);
        }
    }

    #[test]
    fn edge_operations((g, e) in graph_and_edge(10)) {
        let del = g.delete_edge(e).unwrap().graph;
        prop_assert!(well_formed(&del));
        prop_assert_eq!(del.size(), g.size() - 1);

        let sub = g.subdivide_edge(e).unwrap().graph;
        prop_assert!(well_formed(&sub));
        prop_assert_eq!((sub.order(), sub.size()), (g.order() + 1, g.size() + 1));

        let c = g.contract_edge(e).unwrap();
        prop_assert!(well_formed(&c.graph));
        prop_assert_eq!(c.graph.order(), g.order() - 1);
        let (a, b) = e.endpoints();
        let common = g.neighbors(a).iter().filter(|x| g.neighbors(b).contains(x)).count();
        prop_assert_eq!(c.graph.size(), g.size() - 1 - common);
        prop_assert_eq!(c.map.get(a), c.map.get(b));
    }

    #[test]
    fn whole_vertex_set_dominates_every_way(g in graph(10)) {
        let all: BTreeSet<_> = g.vertices().collect();
        prop_assert!(is_dominating_set(&g, &all).unwrap());
        prop_assert!(is_strong_dominating_set(&g, &all).unwrap());
        prop_assert!(is_weak_dominating_set(&g, &all).unwrap());
    }

    #[test]
    fn gamma_below_strong_and_weak(g in graph(9)) {
        let gamma = gamma_exact(&g).unwrap().value;
        prop_assert!(gamma <= gamma_st_exact(&g).unwrap().value);
        prop_assert!(gamma <= gamma_w_exact(&g).unwrap().value);
    }

    #[test]
    fn checker_agrees_with_reference(g in graph(8), bits in any::<u8>()) {
        let set: Vec<_> = g.vertices().filter(|&v| bits >> v & 1 == 1).collect();
        let tree: BTreeSet<_> = set.iter().copied().collect();
        prop_assert_eq!(is_strong_dominating_set(&g, &tree).unwrap(), common::is_sds(&g, &set));
    }

    #[test]
    fn reports_are_self_consistent((g, v) in graph_and_vertex(8)) {
        for t in [TheoremId::VertexDeletion, TheoremId::VertexContraction, TheoremId::PendantContraction, TheoremId::NeighborhoodEdgeRemoval] {
            if let TheoremOutcome::Report(r) = verify_theorem(&g, Target::Vertex(v), t, &Solver::default()).unwrap() {
                let after = r.gamma_after as i64;
                prop_assert_eq!(r.upper_tight, after == r.upper);
                prop_assert_eq!(r.lower_tight, r.lower == Some(after));
                prop_assert_eq!(r.violated, after > r.upper || r.lower.is_some_and(|l| after < l));
                for c in &r.constructions {
                    let cand: Vec<_> = c.candidate.iter().copied().collect();
                    prop_assert!(c.candidate.len() <= g.order() + 1);
                    prop_assert_eq!(c.within_bound, cand.len() as i64 <= c.size_bound);
                }
            }
        }
    }
}
