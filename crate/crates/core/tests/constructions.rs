//! Audits the proof constructions over every graph on at most six vertices.

mod common;

use stdom::campaign::{analyse_graph, Check, Severity};
use stdom::generate::all_labelled_graphs;
use stdom::{Analysis, Direction, Solver, Target, TheoremId, TheoremOutcome};

#[test]
fn pendant_constructions_always_hold() {
    let solver = Solver::default();
    for n in 2..=6 {
        for g in all_labelled_graphs(n) {
            let a = Analysis::new(&g, solver).unwrap();
            for v in g.vertices().filter(|&v| g.degree(v) == 1) {
                let TheoremOutcome::Report(r) = a
                    .verify(Target::Vertex(v), TheoremId::PendantContraction)
                    .unwrap()
                else {
                    panic!("pendant target refused");
                };
                assert!(r.constructions_hold(), "{g:?} v={v}: {:?}", r.constructions);
                let e = stdom::Edge::new(v, g.neighbors(v)[0]).unwrap();
                let TheoremOutcome::Report(r) = a
                    .verify(Target::Edge(e), TheoremId::PendantEdgeContraction)
                    .unwrap()
                else {
                    panic!("pendant edge refused");
                };
                assert!(r.constructions_hold(), "{g:?} e={e}: {:?}", r.constructions);
            }
        }
    }
}

#[test]
fn pendant_odot_witness_is_the_original_set() {
    let solver = Solver::default();
    for g in all_labelled_graphs(5) {
        let a = Analysis::new(&g, solver).unwrap();
        for v in g.vertices().filter(|&v| g.degree(v) == 1) {
            let r = a.bounds_odot(v).unwrap();
            assert_eq!(r.gamma_after, r.gamma_before);
            let c =
                stdom::theorems::construct_odot_witness(&g, v, &a.gamma.witness.vertices).unwrap();
            assert!(c.valid);
            assert_eq!(c.candidate, a.gamma.witness.vertices);
        }
    }
}

#[test]
fn failed_constructions_are_never_critical_on_their_own() {
    let solver = Solver::default();
    for n in 1..=5 {
        for g in all_labelled_graphs(n) {
            for f in analyse_graph(0, 0, &g, &Check::ALL, solver).unwrap() {
                let failed = f.constructions.iter().any(|c| !c.holds());
                match f.severity {
                    Severity::Critical => assert_eq!(f.violated, Some(true)),
                    Severity::ConstructionInvalid => assert!(failed && f.violated == Some(false)),
                    Severity::BoundViolation => assert_eq!(f.theorem, Some(Check::T24)),
                    Severity::TightnessHit | Severity::Info => assert!(!failed),
                }
                // every recorded candidate was re-checked in the right graph
                for c in &f.constructions {
                    if c.direction == Direction::Reverse {
                        let cand: Vec<_> = c.candidate.iter().copied().collect();
                        assert_eq!(c.valid, common::is_sds(&g, &cand));
                    }
                }
            }
        }
    }
}
