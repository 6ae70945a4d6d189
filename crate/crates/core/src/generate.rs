//! Seeded graph generators and exhaustive labelled enumeration.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64`; independent
//! families draw from distinct streams of the same seed. The identifier
//! [`PRNG_ID`] is written into campaign output so runs can be reproduced.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub const PRNG_ID: &str = "chacha8 (rand_chacha 0.9, seed_from_u64, one stream per family)";

pub type GraphRng = ChaCha8Rng;

/// Generator for family number `stream` under `seed`.
pub fn rng_for(seed: u64, stream: u64) -> GraphRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Erdős–Rényi `G(n, p)`: pairs are visited in lexicographic order and each
/// is kept with probability `p`.
pub fn gen_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("pairs are in range and loop-free")
}

/// Uniform labelled tree on `n` vertices by decoding a random Prüfer sequence.
pub fn gen_random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        let edges: &[(usize, usize)] = if n == 2 { &[(0, 1)] } else { &[] };
        return Graph::from_edge_list(n, edges).expect("valid");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Graph::from_edge_list(n, &prufer_decode(n, &seq)).expect("decoded tree is simple")
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&x| degree[x] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let last: Vec<_> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

/// Every labelled graph on `n` vertices: graph number `i` contains the pair
/// with lexicographic index `j` iff bit `j` of `i` is set.
pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    assert!(
        pairs.len() < 64,
        "exhaustive enumeration limited to n <= 11"
    );
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edge_list(n, &edges).expect("valid pairs")
    })
}
