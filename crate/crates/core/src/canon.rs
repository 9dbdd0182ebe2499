//! Canonical certificates for small graphs.
//!
//! The certificate is the lexicographically smallest graph6 bit string over
//! all relabelings that list vertices in non-decreasing degree order. The set
//! of such relabelings is itself an isomorphism invariant, so equal
//! certificates mean isomorphic graphs. The search is a depth-first
//! branch-and-bound over label positions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Default vertex limit for [`certificate`].
pub const DEFAULT_LIMIT: usize = 10;

/// Canonical form of a graph, stored as the graph6 text of the canonical labeling.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Certificate(String);

impl Certificate {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonically labeled graph.
    pub fn graph(&self) -> Graph {
        graph6::decode(&self.0).expect("certificates hold valid graph6")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Certificate with the default size limit.
pub fn certificate(g: &Graph) -> Result<Certificate> {
    certificate_with_limit(g, DEFAULT_LIMIT)
}

pub fn certificate_with_limit(g: &Graph, limit: usize) -> Result<Certificate> {
    let n = g.n();
    if n > limit || n > 64 {
        return Err(Error::TooLarge {
            n,
            limit: limit.min(64),
        });
    }
    let perm = canonical_labeling(g);
    Ok(Certificate(graph6::encode(&g.permute(&perm))))
}

/// Returns `perm` such that `g.permute(&perm)` is the canonical form.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let rows: Vec<u64> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect();
    let degrees = g.degrees();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&u| (degrees[u], u));
    // class_of_position[i] = the degree every vertex at label i must have
    let class_of_position: Vec<usize> = by_degree.iter().map(|&u| degrees[u]).collect();

    let mut search = Search {
        rows,
        degrees,
        class_of_position,
        order: vec![0; n],
        used: 0,
        current: vec![0; n],
        best: None,
        best_order: Vec::new(),
    };
    search.descend(0, true);

    let mut perm = vec![0; n];
    for (label, &vertex) in search.best_order.iter().enumerate() {
        perm[vertex] = label;
    }
    perm
}

struct Search {
    rows: Vec<u64>,
    degrees: Vec<usize>,
    class_of_position: Vec<usize>,
    order: Vec<usize>,
    used: u64,
    current: Vec<u64>,
    best: Option<Vec<u64>>,
    best_order: Vec<usize>,
}

impl Search {
    /// Row `depth` of the bit string for candidate `v`: bit `depth-1-j` set when
    /// `v` is adjacent to the vertex at label `j`, so integer order is string order.
    fn row_bits(&self, v: usize, depth: usize) -> u64 {
        let mut bits = 0u64;
        for j in 0..depth {
            bits = (bits << 1) | ((self.rows[v] >> self.order[j]) & 1);
        }
        bits
    }

    /// `tight` means the labels placed so far reproduce the best prefix exactly.
    /// Returns true if `best` was replaced somewhere below.
    fn descend(&mut self, depth: usize, tight: bool) -> bool {
        let n = self.rows.len();
        if depth == n {
            if self.best.is_none() || !tight {
                self.best = Some(self.current.clone());
                self.best_order = self.order.clone();
                return true;
            }
            return false;
        }
        let want = self.class_of_position[depth];
        let mut tight = tight && self.best.is_some();
        let mut improved = false;
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.degrees[v] != want {
                continue;
            }
            let bits = self.row_bits(v, depth);
            let child_tight = match &self.best {
                Some(best) if tight => {
                    if bits > best[depth] {
                        continue;
                    }
                    bits == best[depth]
                }
                _ => false,
            };
            self.order[depth] = v;
            self.current[depth] = bits;
            self.used |= 1 << v;
            let replaced = self.descend(depth + 1, child_tight || self.best.is_none());
            self.used &= !(1 << v);
            if replaced {
                improved = true;
                // the new best shares this frame's prefix
                tight = true;
            }
        }
        improved
    }
}
