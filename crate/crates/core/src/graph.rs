//! Simple undirected graphs and the BFS-level structure the indices are built on.
//!
//! A [`Graph`] is immutable once built. Operations that change the edge set
//! ([`Graph::add_edge`], [`Graph::permute`]) return a fresh value.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Marks a vertex that BFS could not reach.
pub const UNREACHABLE: u32 = u32::MAX;

/// Simple undirected graph on vertices `0..n` with sorted neighbor lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
            m += row.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Graph {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, m }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.n() {
            Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// `G + uv`. Fails if the edge is already present.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        for (a, b) in [(u, v), (v, u)] {
            let pos = adj[a].binary_search(&b).unwrap_err();
            adj[a].insert(pos, b);
        }
        Ok(Graph { adj, m: self.m + 1 })
    }

    /// `G - uv`, used when checking cut edges by deletion.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::Hypothesis(format!("edge {u}-{v} is absent")));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&x| x != v);
        adj[v].retain(|&x| x != u);
        Ok(Graph { adj, m: self.m - 1 })
    }

    /// Relabels vertex `u` as `perm[u]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut adj = vec![Vec::new(); self.n()];
        for (u, row) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = row.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adj[perm[u]] = mapped;
        }
        Graph { adj, m: self.m }
    }

    /// BFS layer numbers from `source`.
    pub fn distances_from(&self, source: usize) -> Result<DistanceRow> {
        self.check_vertex(source)?;
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::with_capacity(self.n());
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.adj[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        Ok(DistanceRow { source, dist })
    }

    pub fn eccentricity(&self, u: usize) -> Result<u32> {
        let row = self.distances_from(u)?;
        row.max_finite().ok_or(Error::Disconnected)
    }

    /// Sum of distances from `u` to every vertex.
    pub fn transmission(&self, u: usize) -> Result<u64> {
        let row = self.distances_from(u)?;
        row.total().ok_or(Error::Disconnected)
    }

    pub fn is_connected(&self) -> bool {
        match self.n() {
            0 | 1 => true,
            _ => self
                .distances_from(0)
                .map(|row| row.dist.iter().all(|&d| d != UNREACHABLE))
                .unwrap_or(false),
        }
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Cut edges, found with a single iterative depth-first low-link pass.
    ///
    /// Returned as `(u, v)` with `u < v`, sorted.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut order = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = Vec::new();
        let mut clock = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if order[root] != usize::MAX {
                continue;
            }
            order[root] = clock;
            low[root] = clock;
            clock += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(frame) = stack.last_mut() {
                let (u, parent, idx) = *frame;
                if idx < self.adj[u].len() {
                    frame.2 += 1;
                    let v = self.adj[u][idx];
                    if v == parent {
                        continue;
                    }
                    if order[v] == usize::MAX {
                        order[v] = clock;
                        low[v] = clock;
                        clock += 1;
                        stack.push((v, u, 0));
                    } else {
                        low[u] = low[u].min(order[v]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] > order[parent] {
                            out.push((parent.min(u), parent.max(u)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Two-coloring of every component, or `None` if some cycle is odd.
    ///
    /// The smallest vertex of each component is placed in `X`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let (x, y) = (0..n).partition(|&u| color[u] == 0);
        Some(Bipartition { x, y })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Vertices of degree one.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.degree(u) == 1).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Hop counts from one source vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<u32>,
}

impl DistanceRow {
    pub fn is_complete(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }

    /// Largest distance, or `None` if some vertex is unreachable.
    pub fn max_finite(&self) -> Option<u32> {
        if self.is_complete() {
            self.dist.iter().copied().max()
        } else {
            None
        }
    }

    /// Sum of distances, or `None` if some vertex is unreachable.
    pub fn total(&self) -> Option<u64> {
        if self.is_complete() {
            Some(self.dist.iter().map(|&d| u64::from(d)).sum())
        } else {
            None
        }
    }
}

/// The two color classes of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl Bipartition {
    /// Part sizes as `(smaller, larger)`.
    pub fn sizes(&self) -> (usize, usize) {
        let (a, b) = (self.x.len(), self.y.len());
        (a.min(b), a.max(b))
    }

    pub fn separates(&self, g: &Graph) -> bool {
        let mut side = vec![None; g.n()];
        for &u in &self.x {
            side[u] = Some(0u8);
        }
        for &u in &self.y {
            side[u] = Some(1u8);
        }
        side.iter().all(Option::is_some) && g.edges().all(|(u, v)| side[u] != side[v])
    }
}
