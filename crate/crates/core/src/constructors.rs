//! Builders for stars, complete bipartite graphs and pendant-decorated cores.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `S_n`: vertex 0 joined to every other vertex.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Infeasible("a star needs at least one vertex".into()));
    }
    Graph::new(n, (1..n).map(|v| (0, v)))
}

/// `K_{s,t}` with parts `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return Err(Error::Infeasible(format!(
            "K_{{{s},{t}}} needs both parts nonempty"
        )));
    }
    Graph::new(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("complete graph edges are in range")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Infeasible(format!(
            "C_{n} needs at least 3 vertices"
        )));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Parameters of `B_k(x, n-k-x)`: `K_{x, n-k-x}` with `k` pendant vertices on
/// one vertex of the part of size `x`.
///
/// The star `S_n` is the degenerate member `k = n - 1`, recorded with `x = 1`
/// (a single core vertex carrying every pendant).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BkSpec {
    pub n: usize,
    pub k: usize,
    pub x: usize,
}

impl BkSpec {
    pub fn new(n: usize, k: usize, x: usize) -> Result<BkSpec> {
        if x >= 2 && k < n && 2 * x > n - k {
            return Err(Error::Infeasible(format!(
                "x <= n-k-x violated: {x} > {}",
                (n - k).saturating_sub(x)
            )));
        }
        check_cut_edge_count(n, k)?;
        if k + 1 == n {
            if x != 1 {
                return Err(Error::Infeasible(format!(
                    "k = n-1 = {k} is the star; x must be 1, got {x}"
                )));
            }
            return Ok(BkSpec { n, k, x });
        }
        if k == 0 {
            return Err(Error::Infeasible(
                "k = 0: B_k needs at least one pendant vertex".into(),
            ));
        }
        if x < 2 {
            return Err(Error::Infeasible(format!("x >= 2 violated: x = {x}")));
        }
        Ok(BkSpec { n, k, x })
    }

    /// The star `S_n` as a member of the family.
    pub fn star(n: usize) -> Result<BkSpec> {
        if n == 0 {
            return Err(Error::Infeasible("a star needs at least one vertex".into()));
        }
        BkSpec::new(n, n - 1, 1)
    }

    pub fn is_star(&self) -> bool {
        self.k + 1 == self.n
    }

    /// Size of the part without the pendant support vertex.
    pub fn y(&self) -> usize {
        self.n - self.k - self.x
    }
}

impl fmt::Display for BkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_star() {
            write!(f, "S_{}", self.n)
        } else {
            write!(f, "B_{}({},{})", self.k, self.x, self.y())
        }
    }
}

/// Rejects cut-edge counts no connected bipartite graph on `n >= 5` vertices can have.
///
/// Every bipartite graph with a cycle has a core of at least four vertices, so
/// `k = n-2` and `k = n-3` are impossible; `k >= n` exceeds the edge budget of a tree.
pub fn check_cut_edge_count(n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Infeasible("n = 0".into()));
    }
    if k >= n {
        return Err(Error::Infeasible(format!("k = {k} > n-1 = {}", n - 1)));
    }
    if k + 1 == n {
        return Ok(());
    }
    if k + 2 == n {
        return Err(Error::Infeasible(format!(
            "k = n-2 = {k} infeasible for bipartite"
        )));
    }
    if k + 3 == n {
        return Err(Error::Infeasible(format!(
            "k = n-3 = {k} infeasible for bipartite"
        )));
    }
    Ok(())
}

/// `B_k(x, n-k-x)` with the canonical labeling: part of size `x` first
/// (vertex 0 carries the pendants), then the other part, then the pendants.
pub fn b_graph(spec: BkSpec) -> Graph {
    if spec.is_star() {
        return star(spec.n).expect("star spec has n >= 1");
    }
    let mut pendants = vec![0; spec.n - spec.k];
    pendants[0] = spec.k;
    DecoratedCore {
        s: spec.x,
        t: spec.y(),
        pendants,
    }
    .realize()
}

/// A vertex of a decorated core: `X(i)` in the part of size `s`, `Y(j)` in the
/// part of size `t`. Indices are zero-based; the text form is one-based (`x1`, `y2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CoreVertex {
    X(usize),
    Y(usize),
}

impl CoreVertex {
    pub fn in_x(self) -> bool {
        matches!(self, CoreVertex::X(_))
    }
}

impl fmt::Display for CoreVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreVertex::X(i) => write!(f, "x{}", i + 1),
            CoreVertex::Y(j) => write!(f, "y{}", j + 1),
        }
    }
}

impl FromStr for CoreVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<CoreVertex> {
        let bad = || Error::Infeasible(format!("bad core vertex '{s}', expected x<i> or y<j>"));
        let (side, idx) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match side {
            "x" | "X" => Ok(CoreVertex::X(idx - 1)),
            "y" | "Y" => Ok(CoreVertex::Y(idx - 1)),
            _ => Err(bad()),
        }
    }
}

/// `K_{s,t}` with a number of pendant vertices hung on each core vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecoratedCore {
    pub s: usize,
    pub t: usize,
    /// Pendant counts indexed `x1..xs` then `y1..yt`.
    pub pendants: Vec<usize>,
}

impl DecoratedCore {
    pub fn new(s: usize, t: usize) -> Result<DecoratedCore> {
        if s == 0 || t == 0 {
            return Err(Error::Infeasible(format!(
                "core K_{{{s},{t}}} needs both parts nonempty"
            )));
        }
        Ok(DecoratedCore {
            s,
            t,
            pendants: vec![0; s + t],
        })
    }

    /// Builder form: `core.with(CoreVertex::X(0), 2)`.
    pub fn with(mut self, v: CoreVertex, count: usize) -> Result<DecoratedCore> {
        let slot = self.slot(v)?;
        self.pendants[slot] = count;
        Ok(self)
    }

    pub fn slot(&self, v: CoreVertex) -> Result<usize> {
        match v {
            CoreVertex::X(i) if i < self.s => Ok(i),
            CoreVertex::Y(j) if j < self.t => Ok(self.s + j),
            _ => Err(Error::Infeasible(format!(
                "{v} is not a vertex of K_{{{},{}}}",
                self.s, self.t
            ))),
        }
    }

    pub fn pendants_at(&self, v: CoreVertex) -> Result<usize> {
        Ok(self.pendants[self.slot(v)?])
    }

    pub fn core_vertex(&self, slot: usize) -> CoreVertex {
        if slot < self.s {
            CoreVertex::X(slot)
        } else {
            CoreVertex::Y(slot - self.s)
        }
    }

    pub fn total_pendants(&self) -> usize {
        self.pendants.iter().sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.s + self.t + self.total_pendants()
    }

    /// Core vertices carrying at least one pendant.
    pub fn decorated(&self) -> Vec<CoreVertex> {
        (0..self.s + self.t)
            .filter(|&i| self.pendants[i] > 0)
            .map(|i| self.core_vertex(i))
            .collect()
    }

    /// Labeling: `x1..xs` as `0..s`, `y1..yt` as `s..s+t`, then pendants
    /// grouped by support vertex in that same order.
    pub fn realize(&self) -> Graph {
        let core = self.s + self.t;
        let mut edges: Vec<(usize, usize)> = (0..self.s)
            .flat_map(|u| (self.s..core).map(move |v| (u, v)))
            .collect();
        let mut next = core;
        for (support, &count) in self.pendants.iter().enumerate() {
            for _ in 0..count {
                edges.push((support, next));
                next += 1;
            }
        }
        Graph::new(next, edges).expect("decorated core edges are in range")
    }
}
