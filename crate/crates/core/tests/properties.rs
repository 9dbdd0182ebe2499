mod common;

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tindex_core::canon::certificate;
use tindex_core::constructors::{b_graph, BkSpec};
use tindex_core::extremal::optimize;
use tindex_core::indices::{integer, rational};
use tindex_core::oracle::{
    enumerate_connected_bipartite, filter_by_cut_edges, Catalog, OracleConfig,
};
use tindex_core::{Graph, IndexKind, IndexValues, Rational};

fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

#[test]
fn certificates_count_all_graphs() {
    let counts: Vec<usize> = (1..=6)
        .map(|n| {
            all_labeled(n)
                .map(|g| certificate(&g).unwrap())
                .collect::<BTreeSet<_>>()
                .len()
        })
        .collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
}

fn bridges_by_deletion(g: &Graph) -> Vec<(usize, usize)> {
    let base = g.components().len();
    g.edges()
        .filter(|&(u, v)| g.remove_edge(u, v).unwrap().components().len() > base)
        .collect()
}

#[test]
fn bridges_match_deletion() {
    for n in 1..=6 {
        for g in all_labeled(n) {
            assert_eq!(g.bridges(), bridges_by_deletion(&g), "{g:?}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        let n = rng.random_range(7..=14);
        let p = rng.random_range(0.1..0.5);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(g.bridges(), bridges_by_deletion(&g), "{g:?}");
    }
}

/// Index values from a Floyd-Warshall distance matrix.
#[allow(clippy::needless_range_loop)]
fn floyd_values(g: &Graph) -> [Rational; 5] {
    let n = g.n();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][m] + d[m][j] < d[i][j] {
                    d[i][j] = d[i][m] + d[m][j];
                }
            }
        }
    }
    let zero = || integer(0);
    let (mut w, mut ww, mut h, mut cei, mut eds) = (zero(), zero(), zero(), zero(), zero());
    for i in 0..n {
        let ecc = *d[i].iter().max().unwrap() as i64;
        let trans: u64 = d[i].iter().sum();
        cei += rational(g.degree(i) as i64, ecc);
        eds += integer(ecc * trans as i64);
        for j in i + 1..n {
            let x = d[i][j] as i64;
            w += integer(x);
            ww += rational(x + x * x, 2);
            h += rational(1, x);
        }
    }
    [w, ww, h, cei, eds]
}

#[test]
fn indices_match_floyd_warshall() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..400 {
        let n = 2 + i % 14;
        let g = if i % 2 == 0 {
            common::random_connected_bipartite(&mut rng, n)
        } else {
            let g = random_graph(&mut rng, n, 0.5);
            if !g.is_connected() {
                continue;
            }
            g
        };
        let values = IndexValues::of(&g).unwrap();
        let expected = floyd_values(&g);
        for (kind, want) in IndexKind::ALL.into_iter().zip(expected) {
            assert_eq!(values.get(kind), want, "{kind} of {g:?}");
        }
    }
}

#[test]
fn indices_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..300 {
        let n = rng.random_range(2..=12);
        let g = common::random_connected_bipartite(&mut rng, n);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        assert_eq!(
            IndexValues::of(&g).unwrap(),
            IndexValues::of(&g.permute(&perm)).unwrap()
        );
    }
}

#[test]
fn wiener_ties_only_for_odd_n_small_k() {
    for n in 5..=40usize {
        for k in (1..=n - 4).chain([n - 1]) {
            let ties = optimize(IndexKind::Wiener, n, k).unwrap().optimal_x.len() == 2;
            let predicted = n % 2 == 1 && 2 * k + 4 < n;
            assert_eq!(ties, predicted, "n={n} k={k}");
        }
    }
}

#[test]
fn cut_edge_filters() {
    let config = OracleConfig::default();
    let five = enumerate_connected_bipartite(5, &config).unwrap();
    let trees: Vec<Graph> = filter_by_cut_edges(five.clone(), 4).collect();
    assert_eq!(trees.len(), 3);
    assert!(trees.iter().all(|t| t.m() == 4));
    let member = certificate(&b_graph(BkSpec::new(5, 1, 2).unwrap())).unwrap();
    assert!(filter_by_cut_edges(five, 1).any(|g| certificate(&g).unwrap() == member));
    for n in 5..=9 {
        let catalog = Catalog::build(n, &config).unwrap();
        assert_eq!(catalog.with_cut_edges(n - 2).count(), 0);
        assert_eq!(catalog.with_cut_edges(n - 3).count(), 0);
    }
}

#[test]
fn extremal_examples() {
    let config = OracleConfig::default();
    let seven = Catalog::build(7, &config).unwrap();
    let cei = seven.extremal(IndexKind::Cei, 1).unwrap();
    let b33 = certificate(&b_graph(BkSpec::new(7, 1, 3).unwrap())).unwrap();
    assert_eq!(cei.certificates, BTreeSet::from([b33]));
    assert_eq!(cei.value, rational(53, 6));

    let nine = Catalog::build(9, &config).unwrap();
    let bound = optimize(IndexKind::Harary, 9, 1).unwrap();
    let predicted: BTreeSet<_> = bound
        .family
        .iter()
        .map(|&s| certificate(&b_graph(s)).unwrap())
        .collect();
    assert_eq!(
        nine.extremal(IndexKind::Harary, 1).unwrap().certificates,
        predicted
    );

    let eight = Catalog::build(8, &config).unwrap();
    let w = eight.extremal(IndexKind::Wiener, 2).unwrap();
    assert_eq!(w.value, integer(48));
    let b24 = certificate(&b_graph(BkSpec::new(8, 2, 2).unwrap())).unwrap();
    assert_eq!(w.certificates, BTreeSet::from([b24]));
}

#[test]
fn oracle_is_deterministic_across_worker_counts() {
    let one = OracleConfig {
        cap: 9,
        workers: Some(1),
    };
    let four = OracleConfig {
        cap: 9,
        workers: Some(4),
    };
    for n in [6, 8] {
        let a = Catalog::build(n, &one).unwrap();
        let b = Catalog::build(n, &four).unwrap();
        let ca: Vec<_> = a.entries.iter().map(|e| e.certificate.clone()).collect();
        let cb: Vec<_> = b.entries.iter().map(|e| e.certificate.clone()).collect();
        assert_eq!(ca, cb);
        for kind in IndexKind::ALL {
            for k in tindex_core::oracle::theorem_ks(n) {
                assert_eq!(
                    a.verify(kind, k).unwrap().without_timing(),
                    b.verify(kind, k).unwrap().without_timing()
                );
            }
        }
    }
}
