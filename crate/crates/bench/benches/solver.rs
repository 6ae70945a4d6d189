use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use stdom::campaign::{run_campaign, CampaignConfig, Family, Order};
use stdom::gallery::{figure_graph, FigureId, GALLERY_SOLVER_CAP};
use stdom::{gen_gnp, rng_for, Kind, Solver, Target, TheoremId};

fn exact_solver(c: &mut Criterion) {
    let solver = Solver::default();
    let mut group = c.benchmark_group("gamma_st/gnp");
    for (n, p) in [(16, 0.3), (24, 0.3), (32, 0.2), (40, 0.15)] {
        let graphs: Vec<_> = {
            let mut rng = rng_for(7, n as u64);
            (0..8).map(|_| gen_gnp(n, p, &mut rng)).collect()
        };
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("n{n}_p{p}")),
            &graphs,
            |b, gs| {
                b.iter(|| {
                    for g in gs {
                        black_box(solver.gamma(g, Kind::Strong).unwrap().value);
                    }
                })
            },
        );
    }
    group.finish();
}

fn figures(c: &mut Criterion) {
    let solver = Solver::with_cap(GALLERY_SOLVER_CAP);
    let mut group = c.benchmark_group("figures");
    for id in FigureId::ALL {
        let entry = figure_graph(id).unwrap();
        group.bench_function(format!("gamma_st/{}", id.name()), |b| {
            b.iter(|| black_box(solver.gamma_st(&entry.graph).unwrap().value))
        });
        group.bench_function(format!("verify/{}", id.name()), |b| {
            b.iter(|| black_box(entry.verify(solver).unwrap().matches))
        });
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let g = gen_gnp(12, 0.4, &mut rng_for(3, 0));
    let solver = Solver::default();
    c.bench_function("verify_theorem/all_vertices_n12", |b| {
        b.iter(|| {
            let a = stdom::Analysis::new(&g, solver).unwrap();
            for v in g.vertices() {
                for t in [
                    TheoremId::VertexDeletion,
                    TheoremId::NeighborhoodEdgeRemoval,
                ] {
                    black_box(a.verify(Target::Vertex(v), t).unwrap());
                }
            }
        })
    });

    let cfg = CampaignConfig {
        seed: 1,
        families: vec![Family::Gnp {
            n: Order::Range([4, 9]),
            p: 0.5,
            trials: Some(50),
        }],
        ..CampaignConfig::default()
    };
    c.bench_function("campaign/gnp50_n4-9", |b| {
        b.iter(|| black_box(run_campaign(&cfg).unwrap().summary.findings))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = exact_solver, figures, verification
}
criterion_main!(benches);
