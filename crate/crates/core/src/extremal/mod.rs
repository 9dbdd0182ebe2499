//! Closed-form index values on the family `B_k(x, n-k-x)` and their optimum
//! over the admissible `x`.
//!
//! [`optimize`] is the reference answer. [`published`] evaluates the bound
//! statements clause by clause and [`reconcile`](published::reconcile)
//! compares the two.

pub mod published;

use std::fmt;
use std::ops::RangeInclusive;

use num_traits::One;
use serde::Serialize;

use crate::constructors::{check_cut_edge_count, star, BkSpec};
use crate::error::{Error, Result};
use crate::indices::{integer, rational, IndexKind, Monotonicity, Rational};

pub use published::{
    published_case, reconcile, CaseLabel, PrintedMember, PublishedCase, Reconciliation, Relation,
};

/// Which side the extremal value bounds the index from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    LowerBound,
    UpperBound,
}

impl Direction {
    pub fn of(kind: IndexKind) -> Direction {
        match kind.monotonicity() {
            Monotonicity::Decreasing => Direction::LowerBound,
            Monotonicity::Increasing => Direction::UpperBound,
        }
    }

    /// True when `a` is strictly better than `b` as an extremal value.
    pub fn better(self, a: &Rational, b: &Rational) -> bool {
        match self {
            Direction::LowerBound => a < b,
            Direction::UpperBound => a > b,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::LowerBound => "lower-bound",
            Direction::UpperBound => "upper-bound",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `a x^2 + b x + c`.
#[derive(Debug, Clone, PartialEq)]
pub struct Quadratic {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Quadratic {
    pub fn eval(&self, x: &Rational) -> Rational {
        (&self.a * x + &self.b) * x + &self.c
    }

    pub fn vertex(&self) -> Rational {
        -&self.b / (&self.a * integer(2))
    }
}

/// The polynomial in `x` giving `kind` of `B_k(x, n-k-x)`.
pub fn polynomial(kind: IndexKind, n: usize, k: usize) -> Quadratic {
    let n = integer(n as i64);
    let k = integer(k as i64);
    let q = |a: Rational, b: Rational, c: Rational| Quadratic { a, b, c };
    let r = |p: i64, d: i64| rational(p, d);
    match kind {
        // f(x) = x^2 + (2k-n)x + n^2 - n - 2k
        IndexKind::Wiener => q(
            Rational::one(),
            &k * r(2, 1) - &n,
            &n * &n - &n - &k * r(2, 1),
        ),
        // g(x) = 2x^2 + (5k-2n)x + 3/2 n^2 - 3/2 n - 5k
        IndexKind::HyperWiener => q(
            r(2, 1),
            &k * r(5, 1) - &n * r(2, 1),
            &n * &n * r(3, 2) - &n * r(3, 2) - &k * r(5, 1),
        ),
        // h(x) = (-6x^2 + (6n-8k)x + 3n^2 - 3n + 8k) / 12
        IndexKind::Harary => q(
            r(-1, 2),
            (&n * r(6, 1) - &k * r(8, 1)) / r(12, 1),
            (&n * &n * r(3, 1) - &n * r(3, 1) + &k * r(8, 1)) / r(12, 1),
        ),
        // psi(x) = (-5x^2 + (5n-5k-1)x + 4k + n) / 6
        IndexKind::Cei => q(
            r(-5, 6),
            (&n * r(5, 1) - &k * r(5, 1) - r(1, 1)) / r(6, 1),
            (&k * r(4, 1) + &n) / r(6, 1),
        ),
        // phi(x) = 5x^2 + (11k-3n-3)x + 4n^2 + 2kn - 5n - 14k + 2
        IndexKind::Eds => q(
            r(5, 1),
            &k * r(11, 1) - &n * r(3, 1) - r(3, 1),
            &n * &n * r(4, 1) + &k * &n * r(2, 1) - &n * r(5, 1) - &k * r(14, 1) + r(2, 1),
        ),
    }
}

/// `kind` of the star `S_n`.
pub fn star_value(kind: IndexKind, n: usize) -> Rational {
    let n = n as i64;
    match kind {
        IndexKind::Wiener => integer((n - 1) * (n - 1)),
        IndexKind::HyperWiener => rational((n - 1) * (3 * n - 4), 2),
        IndexKind::Harary => rational(n * n + n - 2, 4),
        IndexKind::Cei => rational(3 * (n - 1), 2),
        IndexKind::Eds => integer((n - 1) * (4 * n - 5)),
    }
}

/// Exact `kind` of `b_graph(n, k, x)` from the closed forms.
pub fn closed_form(kind: IndexKind, n: usize, k: usize, x: usize) -> Result<Rational> {
    let spec = BkSpec::new(n, k, x)?;
    Ok(closed_form_spec(kind, spec))
}

pub fn closed_form_spec(kind: IndexKind, spec: BkSpec) -> Rational {
    if spec.is_star() {
        return star_value(kind, spec.n);
    }
    polynomial(kind, spec.n, spec.k).eval(&integer(spec.x as i64))
}

/// The values of `x` for which `B_k(x, n-k-x)` is defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissible {
    /// `k = n-1`: the only member is the star.
    Star,
    Range(RangeInclusive<usize>),
}

impl Admissible {
    pub fn values(&self) -> Vec<usize> {
        match self {
            Admissible::Star => vec![1],
            Admissible::Range(r) => r.clone().collect(),
        }
    }
}

pub fn admissible_x(n: usize, k: usize) -> Result<Admissible> {
    check_cut_edge_count(n, k)?;
    if k + 1 == n {
        return Ok(Admissible::Star);
    }
    if k == 0 {
        return Err(Error::Infeasible(
            "k = 0: B_k needs at least one pendant vertex".into(),
        ));
    }
    Ok(Admissible::Range(2..=(n - k) / 2))
}

/// Optimum of one index over the family, with every `x` attaining it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundResult {
    pub index: IndexKind,
    pub n: usize,
    pub k: usize,
    pub direction: Direction,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub value: Rational,
    pub optimal_x: Vec<usize>,
    #[serde(serialize_with = "ser_family")]
    pub family: Vec<BkSpec>,
}

fn ser_family<S: serde::Serializer>(
    family: &[BkSpec],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(family.iter().map(|b| b.to_string()))
}

pub fn optimize(kind: IndexKind, n: usize, k: usize) -> Result<BoundResult> {
    if n < 5 {
        return Err(Error::Infeasible(format!(
            "bounds need n >= 5, got n = {n}"
        )));
    }
    let direction = Direction::of(kind);
    let (value, optimal_x) = match admissible_x(n, k)? {
        Admissible::Star => (kind.evaluate(&star(n)?)?, vec![1]),
        Admissible::Range(range) => {
            let (lo, hi) = (*range.start(), *range.end());
            let poly = polynomial(kind, n, k);
            let v = poly.vertex();
            let floor = v.floor().to_integer();
            let mut candidates = vec![lo, hi];
            for delta in -1i64..=2 {
                let c: num_bigint::BigInt = &floor + delta;
                if let Ok(c) = usize::try_from(c) {
                    if (lo..=hi).contains(&c) {
                        candidates.push(c);
                    }
                }
            }
            candidates.sort_unstable();
            candidates.dedup();
            let mut best: Option<Rational> = None;
            let mut xs = Vec::new();
            for x in candidates {
                let val = poly.eval(&integer(x as i64));
                match &best {
                    Some(b) if direction.better(b, &val) => {}
                    Some(b) if *b == val => xs.push(x),
                    _ => {
                        best = Some(val);
                        xs = vec![x];
                    }
                }
            }
            (best.expect("admissible range is non-empty"), xs)
        }
    };
    let family = optimal_x
        .iter()
        .map(|&x| BkSpec::new(n, k, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundResult {
        index: kind,
        n,
        k,
        direction,
        value,
        optimal_x,
        family,
    })
}
