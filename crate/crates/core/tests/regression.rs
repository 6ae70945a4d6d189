//! Fixed graphs whose outcomes must not drift.

mod common;

use stdom::campaign::{analyse_graph, Check, Severity};
use stdom::io::{graph_hash, parse};
use stdom::{gen_gnp, gen_random_tree, rng_for, Graph, Kind, Solver, Target};

#[test]
fn seeded_generators() {
    let g = gen_gnp(6, 0.5, &mut rng_for(42, 0));
    assert_eq!(
        graph_hash(&g),
        "a92f6e70927466ad6d3a72feb6ad1b7d525d33e9dda7c10140ba813547154a29"
    );
    let t = gen_random_tree(8, &mut rng_for(2024, 0));
    assert_eq!(
        t,
        parse("8 7\n0 6\n1 2\n1 7\n3 7\n4 5\n5 6\n5 7\n").unwrap()
    );
}

/// Smallest known graph where deleting a vertex raises γ_st by more than
/// deg(v) - 1: removing leaf 2 (or its twin 5) drops deg(1), and 6 loses
/// its dominator.
#[test]
fn deletion_upper_bound_counterexample_is_critical() {
    let g = Graph::from_edge_list(7, &[(0, 4), (0, 6), (1, 2), (1, 5), (1, 6), (3, 4), (3, 6)])
        .unwrap();
    assert_eq!(common::oracle(&g, Kind::Strong).0, 2);
    assert_eq!(
        common::oracle(&g.delete_vertex(2).unwrap().graph, Kind::Strong).0,
        3
    );

    let findings = analyse_graph(0, 0, &g, &[Check::T21], Solver::default()).unwrap();
    let critical: Vec<_> = findings
        .iter()
        .filter(|f| f.severity == Severity::Critical)
        .map(|f| f.target)
        .collect();
    assert_eq!(
        critical,
        vec![Some(Target::Vertex(2)), Some(Target::Vertex(5))]
    );
}

#[test]
fn nine_vertex_tree_counterexample() {
    let g = parse("9 8\n0 5\n0 8\n1 6\n2 6\n3 4\n4 7\n5 7\n6 7\n").unwrap();
    assert_eq!(common::oracle(&g, Kind::Strong).0, 3);
    for leaf in [1, 2] {
        assert_eq!(
            common::oracle(&g.delete_vertex(leaf).unwrap().graph, Kind::Strong).0,
            4
        );
    }
}

#[test]
fn k3_odot_values_from_the_oracle() {
    let k3 = stdom::gallery::complete(3).unwrap();
    assert_eq!(common::oracle(&k3, Kind::Strong).0, 1);
    for v in 0..3 {
        let h = k3.odot_vertex(v).unwrap().graph;
        // a path centred on v
        assert_eq!((h.size(), h.degree(v)), (2, 2));
        assert_eq!(common::oracle(&h, Kind::Strong).0, 1);
    }
}
