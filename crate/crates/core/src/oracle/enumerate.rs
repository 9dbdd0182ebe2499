//! Exhaustive enumeration of connected bipartite graphs up to isomorphism.
//!
//! A connected bipartite graph has a unique bipartition, so for each split
//! `s <= t` it is enough to list `s x t` biadjacency matrices up to row and
//! column permutations (and transposition when `s == t`). Columns are kept as
//! `s`-bit masks in non-decreasing order, which quotients out column
//! permutations; a matrix is kept when no row permutation (or transposed row
//! permutation) gives a smaller sorted column list.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{certificate, Certificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::IndexValues;

pub const DEFAULT_CAP: usize = 9;
pub const MAX_CAP: usize = 10;
/// Largest order accepted by [`labeled_filter`].
pub const LABELED_LIMIT: usize = 7;

/// Size cap and worker count shared by the oracle entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: usize,
    /// `None` uses rayon's global pool.
    pub workers: Option<usize>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_CAP,
            workers: None,
        }
    }
}

impl OracleConfig {
    pub fn with_cap(cap: usize) -> OracleConfig {
        OracleConfig {
            cap,
            ..OracleConfig::default()
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        let limit = self.cap.min(MAX_CAP);
        if n > limit {
            return Err(Error::TooLarge { n, limit });
        }
        if n == 0 {
            return Err(Error::Infeasible("n = 0".into()));
        }
        Ok(())
    }

    /// Runs `f` on a dedicated pool when a worker count is set.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }
}

/// One order `n`, optionally restricted to `k` cut edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationTask {
    pub n: usize,
    pub k: Option<usize>,
}

impl EnumerationTask {
    pub fn new(n: usize, k: Option<usize>, config: &OracleConfig) -> Result<EnumerationTask> {
        config.check(n)?;
        Ok(EnumerationTask { n, k })
    }

    /// Part sizes `(s, t)` with `s <= t` and `s + t = n`.
    pub fn splits(&self) -> Vec<(usize, usize)> {
        if self.n == 1 {
            return Vec::new();
        }
        (1..=self.n / 2).map(|s| (s, self.n - s)).collect()
    }
}

fn permutations(s: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; s], &mut out);
    out
}

struct Split {
    s: usize,
    t: usize,
    /// `tables[p][mask]` is `mask` with its bits moved by the `p`-th permutation.
    tables: Vec<Vec<u32>>,
}

impl Split {
    fn new(s: usize, t: usize) -> Split {
        let tables = permutations(s)
            .into_iter()
            .map(|p| {
                (0..1u32 << s)
                    .map(|mask| {
                        (0..s).fold(0, |acc, i| {
                            if mask >> i & 1 == 1 {
                                acc | 1 << p[i]
                            } else {
                                acc
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        Split { s, t, tables }
    }

    fn connected(&self, cols: &[u32]) -> bool {
        let rows = self.rows(cols);
        let (full_x, full_y) = ((1u32 << self.s) - 1, (1u32 << self.t) - 1);
        let (mut rx, mut ry) = (1u32, 0u32);
        loop {
            let ny = (0..self.s)
                .filter(|&i| rx >> i & 1 == 1)
                .fold(ry, |a, i| a | rows[i]);
            let nx = (0..self.t)
                .filter(|&j| ny >> j & 1 == 1)
                .fold(rx, |a, j| a | cols[j]);
            if (nx, ny) == (rx, ry) {
                return rx == full_x && ry == full_y;
            }
            rx = nx;
            ry = ny;
        }
    }

    fn rows(&self, cols: &[u32]) -> Vec<u32> {
        (0..self.s)
            .map(|i| (0..self.t).fold(0, |a, j| if cols[j] >> i & 1 == 1 { a | 1 << j } else { a }))
            .collect()
    }

    fn smaller_image(&self, cols: &[u32], scratch: &mut Vec<u32>) -> bool {
        for table in &self.tables[1..] {
            scratch.clear();
            scratch.extend(cols.iter().map(|&c| table[c as usize]));
            scratch.sort_unstable();
            if scratch.as_slice() < cols {
                return true;
            }
        }
        false
    }

    fn canonical(&self, cols: &[u32], scratch: &mut Vec<u32>) -> bool {
        if self.smaller_image(cols, scratch) {
            return false;
        }
        if self.s == self.t {
            let rows = self.rows(cols);
            for table in &self.tables {
                scratch.clear();
                scratch.extend(rows.iter().map(|&c| table[c as usize]));
                scratch.sort_unstable();
                if scratch.as_slice() < cols {
                    return false;
                }
            }
        }
        true
    }

    fn graph(&self, cols: &[u32]) -> Graph {
        let mut edges = Vec::new();
        for (j, &c) in cols.iter().enumerate() {
            for i in 0..self.s {
                if c >> i & 1 == 1 {
                    edges.push((i, self.s + j));
                }
            }
        }
        Graph::new(self.s + self.t, edges).expect("biadjacency edges are in range")
    }

    /// All canonical connected matrices whose first column is `first`.
    fn classes_from(&self, first: u32) -> Vec<Graph> {
        let mut out = Vec::new();
        let mut cols = vec![first];
        let mut scratch = Vec::with_capacity(self.t);
        self.extend(&mut cols, &mut scratch, &mut out);
        out
    }

    fn extend(&self, cols: &mut Vec<u32>, scratch: &mut Vec<u32>, out: &mut Vec<Graph>) {
        if cols.len() == self.t {
            if self.connected(cols) && self.canonical(cols, scratch) {
                out.push(self.graph(cols));
            }
            return;
        }
        let last = *cols.last().expect("non-empty prefix");
        for c in last..1u32 << self.s {
            cols.push(c);
            self.extend(cols, scratch, out);
            cols.pop();
        }
    }
}

/// Representatives straight from the generator, one per canonical matrix.
pub(crate) fn generate(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    let task = EnumerationTask { n, k: None };
    let work: Vec<(usize, usize, u32)> = task
        .splits()
        .into_iter()
        .flat_map(|(s, t)| (1..1u32 << s).map(move |c| (s, t, c)))
        .collect();
    let splits: Vec<Split> = task
        .splits()
        .into_iter()
        .map(|(s, t)| Split::new(s, t))
        .collect();
    work.par_iter()
        .flat_map_iter(|&(s, _, c)| splits[s - 1].classes_from(c))
        .collect()
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub certificate: Certificate,
    /// The canonically labeled representative.
    pub graph: Graph,
    pub bridges: usize,
    /// `None` only for `K_1`, whose eccentricities are all zero.
    pub values: Option<IndexValues>,
}

/// Every connected bipartite graph on `n` vertices, sorted by certificate.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub n: usize,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn build(n: usize, config: &OracleConfig) -> Result<Catalog> {
        config.check(n)?;
        config.install(|| {
            let mut entries = generate(n)
                .into_par_iter()
                .map(|g| {
                    let certificate = certificate(&g)?;
                    let graph = certificate.graph();
                    Ok(CatalogEntry {
                        bridges: graph.bridges().len(),
                        values: if graph.n() > 1 {
                            Some(IndexValues::of(&graph)?)
                        } else {
                            None
                        },
                        certificate,
                        graph,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            entries.sort_by(|a, b| a.certificate.cmp(&b.certificate));
            entries.dedup_by(|a, b| a.certificate == b.certificate);
            Ok(Catalog { n, entries })
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn with_cut_edges(&self, k: usize) -> impl Iterator<Item = &CatalogEntry> + '_ {
        self.entries.iter().filter(move |e| e.bridges == k)
    }

    /// Cut-edge counts attained by some graph of the catalog.
    pub fn feasible_cut_edges(&self) -> BTreeSet<usize> {
        self.entries.iter().map(|e| e.bridges).collect()
    }

    pub fn certificates(&self) -> BTreeSet<Certificate> {
        self.entries.iter().map(|e| e.certificate.clone()).collect()
    }
}

/// Canonically labeled connected bipartite graphs on `n` vertices, sorted by certificate.
pub fn enumerate_connected_bipartite(n: usize, config: &OracleConfig) -> Result<Vec<Graph>> {
    Ok(Catalog::build(n, config)?
        .entries
        .into_iter()
        .map(|e| e.graph)
        .collect())
}

/// Graphs with exactly `k` bridges.
pub fn filter_by_cut_edges<I>(graphs: I, k: usize) -> impl Iterator<Item = Graph>
where
    I: IntoIterator<Item = Graph>,
{
    graphs.into_iter().filter(move |g| g.bridges().len() == k)
}

/// Certificates of all connected bipartite graphs on `n` vertices, found by
/// testing every labeled graph. Independent of the matrix generator.
pub fn labeled_filter(n: usize, config: &OracleConfig) -> Result<BTreeSet<Certificate>> {
    if n > LABELED_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: LABELED_LIMIT,
        });
    }
    if n == 0 {
        return Err(Error::Infeasible("n = 0".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    config.install(|| {
        (0..total)
            .into_par_iter()
            .filter_map(|mask| {
                let mut rows = [0u16; LABELED_LIMIT];
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                }
                if !two_colorable_connected(&rows[..n]) {
                    return None;
                }
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::new(n, edges).expect("pairs are in range");
                Some(certificate(&g))
            })
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().collect())
    })
}

fn two_colorable_connected(rows: &[u16]) -> bool {
    let n = rows.len();
    let mut color = [u8::MAX; LABELED_LIMIT];
    let mut stack = vec![0usize];
    color[0] = 0;
    let mut seen = 1;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if rows[u] >> v & 1 == 0 {
                continue;
            }
            if color[v] == u8::MAX {
                color[v] = 1 - color[u];
                seen += 1;
                stack.push(v);
            } else if color[v] == color[u] {
                return false;
            }
        }
    }
    seen == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let config = OracleConfig::default();
        let counts: Vec<usize> = (1..=7)
            .map(|n| enumerate_connected_bipartite(n, &config).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 5, 17, 44]);
    }

    #[test]
    fn generator_output_is_already_unique() {
        for n in 1..=8 {
            let raw = generate(n);
            let certs: BTreeSet<_> = raw.iter().map(|g| certificate(g).unwrap()).collect();
            assert_eq!(raw.len(), certs.len(), "n = {n}");
        }
    }

    #[test]
    fn trees_on_five_vertices() {
        let all = enumerate_connected_bipartite(5, &OracleConfig::default()).unwrap();
        assert_eq!(filter_by_cut_edges(all, 4).count(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            Catalog::build(10, &OracleConfig::default()),
            Err(Error::TooLarge { n: 10, limit: 9 })
        ));
        assert!(matches!(
            Catalog::build(11, &OracleConfig::with_cap(64)),
            Err(Error::TooLarge { n: 11, limit: 10 })
        ));
    }

    #[test]
    fn labeled_filter_agrees_small() {
        let config = OracleConfig::default();
        for n in 1..=5 {
            assert_eq!(
                labeled_filter(n, &config).unwrap(),
                Catalog::build(n, &config).unwrap().certificates()
            );
        }
    }
}
