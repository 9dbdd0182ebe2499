#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tindex_core::Graph;

/// Connected bipartite graph on `n` vertices with parts `0..s` and `s..n`.
pub fn random_connected_bipartite(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(n >= 2);
    loop {
        let s = rng.random_range(1..n);
        let p = rng.random_range(0.2..0.8);
        let mut edges = Vec::new();
        for i in 0..s {
            for j in s..n {
                if rng.random_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Two random connected bipartite graphs joined by one edge `(u, w)`.
pub fn random_bridge_context(rng: &mut ChaCha8Rng, max_n: usize) -> (Graph, usize, usize) {
    let n1 = rng.random_range(2..=max_n - 2);
    let n2 = rng.random_range(2..=max_n - n1);
    let a = random_connected_bipartite(rng, n1);
    let b = random_connected_bipartite(rng, n2);
    let u = rng.random_range(0..n1);
    let w = n1 + rng.random_range(0..n2);
    let edges = a
        .edges()
        .chain(b.edges().map(|(p, q)| (p + n1, q + n1)))
        .chain([(u, w)]);
    (Graph::new(n1 + n2, edges).unwrap(), u, w)
}
