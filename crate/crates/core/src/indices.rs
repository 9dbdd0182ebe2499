//! The five distance-based indices, evaluated exactly from all-pairs BFS.
//!
//! Integer-valued indices (Wiener, hyper-Wiener, eccentricity distance sum)
//! are returned as [`BigInt`]; Harary and the connective eccentricity index
//! as reduced [`Rational`]s.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};

/// Exact fraction with a positive denominator in lowest terms.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

/// How an index reacts to adding an edge to a connected, non-complete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Monotonicity {
    Decreasing,
    Increasing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IndexKind {
    #[serde(rename = "W")]
    Wiener,
    #[serde(rename = "WW")]
    HyperWiener,
    #[serde(rename = "H")]
    Harary,
    #[serde(rename = "CEI")]
    Cei,
    #[serde(rename = "EDS")]
    Eds,
}

impl IndexKind {
    pub const ALL: [IndexKind; 5] = [
        IndexKind::Wiener,
        IndexKind::HyperWiener,
        IndexKind::Harary,
        IndexKind::Cei,
        IndexKind::Eds,
    ];

    pub fn monotonicity(self) -> Monotonicity {
        match self {
            IndexKind::Wiener | IndexKind::HyperWiener | IndexKind::Eds => Monotonicity::Decreasing,
            IndexKind::Harary | IndexKind::Cei => Monotonicity::Increasing,
        }
    }

    /// Short tag used on the command line and in tables.
    pub fn tag(self) -> &'static str {
        match self {
            IndexKind::Wiener => "W",
            IndexKind::HyperWiener => "WW",
            IndexKind::Harary => "H",
            IndexKind::Cei => "CEI",
            IndexKind::Eds => "EDS",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Wiener => "Wiener index",
            IndexKind::HyperWiener => "hyper-Wiener index",
            IndexKind::Harary => "Harary index",
            IndexKind::Cei => "connective eccentricity index",
            IndexKind::Eds => "eccentricity distance sum",
        }
    }

    /// Evaluates this index on `g`.
    pub fn evaluate(self, g: &Graph) -> Result<Rational> {
        let d = Distances::new(g)?;
        d.value(self)
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<IndexKind> {
        match s.to_ascii_lowercase().as_str() {
            "w" | "wiener" => Ok(IndexKind::Wiener),
            "ww" | "hyper-wiener" => Ok(IndexKind::HyperWiener),
            "h" | "harary" => Ok(IndexKind::Harary),
            "cei" | "ce" => Ok(IndexKind::Cei),
            "eds" | "d" => Ok(IndexKind::Eds),
            other => Err(Error::Infeasible(format!("unknown index '{other}'"))),
        }
    }
}

/// All-pairs distance matrix of a connected graph.
///
/// Computing this once and reading every index from it is the intended
/// pattern when more than one index is needed.
#[derive(Debug, Clone)]
pub struct Distances<'g> {
    graph: &'g Graph,
    n: usize,
    matrix: Vec<u32>,
}

impl<'g> Distances<'g> {
    /// Runs one BFS per source. Fails on disconnected input.
    pub fn new(graph: &'g Graph) -> Result<Self> {
        let n = graph.n();
        let rows: Vec<Vec<u32>> = if n >= 128 {
            (0..n)
                .into_par_iter()
                .map(|u| graph.distances_from(u).map(|r| r.dist))
                .collect::<Result<_>>()?
        } else {
            (0..n)
                .map(|u| graph.distances_from(u).map(|r| r.dist))
                .collect::<Result<_>>()?
        };
        let matrix: Vec<u32> = rows.into_iter().flatten().collect();
        if matrix.contains(&UNREACHABLE) {
            return Err(Error::Disconnected);
        }
        Ok(Distances { graph, n, matrix })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.matrix[u * self.n + v]
    }

    fn row(&self, u: usize) -> &[u32] {
        &self.matrix[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, u: usize) -> u32 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }

    pub fn transmission(&self, u: usize) -> u64 {
        self.row(u).iter().map(|&d| u64::from(d)).sum()
    }

    /// `hist[d]` = number of unordered pairs at distance `d`.
    pub fn histogram(&self) -> Vec<u64> {
        let mut hist = Vec::new();
        for u in 0..self.n {
            for &d in &self.row(u)[u + 1..] {
                let d = d as usize;
                if hist.len() <= d {
                    hist.resize(d + 1, 0);
                }
                hist[d] += 1;
            }
        }
        hist
    }

    pub fn wiener(&self) -> BigInt {
        let total: u128 = self
            .histogram()
            .iter()
            .enumerate()
            .map(|(d, &c)| d as u128 * u128::from(c))
            .sum();
        BigInt::from(total)
    }

    pub fn hyper_wiener(&self) -> BigInt {
        // d + d^2 is always even, so the halving is exact per pair
        let total: u128 = self
            .histogram()
            .iter()
            .enumerate()
            .map(|(d, &c)| {
                let d = d as u128;
                (d + d * d) / 2 * u128::from(c)
            })
            .sum();
        BigInt::from(total)
    }

    pub fn harary(&self) -> Rational {
        let mut sum = Rational::zero();
        for (d, &c) in self.histogram().iter().enumerate().skip(1) {
            if c > 0 {
                sum += rational(c as i64, d as i64);
            }
        }
        sum
    }

    pub fn cei(&self) -> Result<Rational> {
        if self.n < 2 {
            return Err(Error::ZeroEccentricity);
        }
        // group degree mass by eccentricity to keep the rational sum short
        let mut mass: Vec<u64> = Vec::new();
        for u in 0..self.n {
            let e = self.eccentricity(u) as usize;
            if mass.len() <= e {
                mass.resize(e + 1, 0);
            }
            mass[e] += self.graph.degree(u) as u64;
        }
        let mut sum = Rational::zero();
        for (e, &deg) in mass.iter().enumerate().skip(1) {
            if deg > 0 {
                sum += rational(deg as i64, e as i64);
            }
        }
        Ok(sum)
    }

    pub fn eds(&self) -> BigInt {
        let total: u128 = (0..self.n)
            .map(|u| u128::from(self.eccentricity(u)) * u128::from(self.transmission(u)))
            .sum();
        BigInt::from(total)
    }

    pub fn value(&self, kind: IndexKind) -> Result<Rational> {
        Ok(match kind {
            IndexKind::Wiener => Rational::from_integer(self.wiener()),
            IndexKind::HyperWiener => Rational::from_integer(self.hyper_wiener()),
            IndexKind::Harary => self.harary(),
            IndexKind::Cei => self.cei()?,
            IndexKind::Eds => Rational::from_integer(self.eds()),
        })
    }

    pub fn all(&self) -> Result<IndexValues> {
        Ok(IndexValues {
            wiener: self.wiener(),
            hyper_wiener: self.hyper_wiener(),
            harary: self.harary(),
            cei: self.cei()?,
            eds: self.eds(),
        })
    }
}

/// The five indices of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexValues {
    pub wiener: BigInt,
    pub hyper_wiener: BigInt,
    pub harary: Rational,
    pub cei: Rational,
    pub eds: BigInt,
}

impl IndexValues {
    pub fn of(g: &Graph) -> Result<IndexValues> {
        Distances::new(g)?.all()
    }

    pub fn get(&self, kind: IndexKind) -> Rational {
        match kind {
            IndexKind::Wiener => Rational::from_integer(self.wiener.clone()),
            IndexKind::HyperWiener => Rational::from_integer(self.hyper_wiener.clone()),
            IndexKind::Harary => self.harary.clone(),
            IndexKind::Cei => self.cei.clone(),
            IndexKind::Eds => Rational::from_integer(self.eds.clone()),
        }
    }
}

pub fn wiener(g: &Graph) -> Result<BigInt> {
    Ok(Distances::new(g)?.wiener())
}

pub fn hyper_wiener(g: &Graph) -> Result<BigInt> {
    Ok(Distances::new(g)?.hyper_wiener())
}

pub fn harary(g: &Graph) -> Result<Rational> {
    Ok(Distances::new(g)?.harary())
}

pub fn cei(g: &Graph) -> Result<Rational> {
    Distances::new(g)?.cei()
}

pub fn eds(g: &Graph) -> Result<BigInt> {
    Ok(Distances::new(g)?.eds())
}
