//! Graph surgeries that push a graph toward the extremal family, with the
//! index changes each one is known to produce.
//!
//! * [`lemma3_contract`] turns a non-pendant bridge into a pendant edge.
//! * [`lemma4_shift`] moves the pendants of one core vertex onto another vertex
//!   of the same part.
//! * [`lemma5_shift`] moves the pendants of a vertex in the larger part onto a
//!   vertex of the smaller part.
//! * [`monotonicity_probe`] checks every index against single edge additions.

use num_traits::Signed;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructors::{CoreVertex, DecoratedCore};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{integer, rational, IndexKind, IndexValues, Monotonicity, Rational};

/// A bridge `uw` of a connected graph together with the two sides it separates.
#[derive(Debug, Clone)]
pub struct CutEdgeContext {
    pub graph: Graph,
    pub u: usize,
    pub w: usize,
    /// Component of `u` in `graph - uw`.
    pub side_u: Vec<usize>,
    /// Component of `w` in `graph - uw`.
    pub side_w: Vec<usize>,
}

impl CutEdgeContext {
    pub fn new(graph: Graph, u: usize, w: usize) -> Result<CutEdgeContext> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let cut = graph.remove_edge(u, w)?;
        let comps = cut.components();
        if comps.len() != 2 {
            return Err(Error::Hypothesis(format!("{u}-{w} is not a cut edge")));
        }
        let (side_u, side_w) = if comps[0].binary_search(&u).is_ok() {
            (comps[0].clone(), comps[1].clone())
        } else {
            (comps[1].clone(), comps[0].clone())
        };
        Ok(CutEdgeContext {
            graph,
            u,
            w,
            side_u,
            side_w,
        })
    }
}

/// Identifies `u` with `w` and re-attaches `w` as a pendant of the merged vertex.
///
/// Vertex and edge counts are preserved; labels other than `w` keep their meaning.
pub fn lemma3_contract(ctx: &CutEdgeContext) -> Result<Graph> {
    if ctx.side_u.len() < 2 || ctx.side_w.len() < 2 {
        return Err(Error::Hypothesis(format!(
            "both sides of {}-{} need at least 2 vertices (have {} and {})",
            ctx.u,
            ctx.w,
            ctx.side_u.len(),
            ctx.side_w.len()
        )));
    }
    let (u, w) = (ctx.u, ctx.w);
    let edges = ctx.graph.edges().map(|(a, b)| {
        if (a, b) == (u.min(w), u.max(w)) {
            (a, b)
        } else {
            (if a == w { u } else { a }, if b == w { u } else { b })
        }
    });
    Graph::new(ctx.graph.n(), edges)
}

fn check_core(core: &DecoratedCore) -> Result<()> {
    if core.s < 2 || core.t < 2 {
        return Err(Error::Hypothesis(format!(
            "core K_{{{},{}}} needs both parts of size at least 2",
            core.s, core.t
        )));
    }
    Ok(())
}

/// Moves every pendant of `u` onto `v`, where `u` and `v` share a part.
pub fn lemma4_shift(core: &DecoratedCore, u: CoreVertex, v: CoreVertex) -> Result<DecoratedCore> {
    check_core(core)?;
    if u.in_x() != v.in_x() {
        return Err(Error::Hypothesis(format!(
            "{u} and {v} lie in different parts"
        )));
    }
    if u == v {
        return Err(Error::Hypothesis(format!(
            "{u} and {v} are the same vertex"
        )));
    }
    let (su, sv) = (core.slot(u)?, core.slot(v)?);
    let (a, b) = (core.pendants[su], core.pendants[sv]);
    if a == 0 || b == 0 {
        return Err(Error::Hypothesis(format!(
            "both {u} and {v} need pendants (have {a} and {b})"
        )));
    }
    let mut out = core.clone();
    out.pendants[su] = 0;
    out.pendants[sv] = a + b;
    Ok(out)
}

/// Moves every pendant of `y_q` (part of size `t`) onto `x_p` (part of size `s <= t`).
pub fn lemma5_shift(
    core: &DecoratedCore,
    x_p: CoreVertex,
    y_q: CoreVertex,
) -> Result<DecoratedCore> {
    check_core(core)?;
    if core.s > core.t {
        return Err(Error::Hypothesis(format!(
            "needs s <= t, have s = {} > t = {}",
            core.s, core.t
        )));
    }
    if !x_p.in_x() || y_q.in_x() {
        return Err(Error::Hypothesis(format!(
            "{x_p} must be an x-vertex and {y_q} a y-vertex"
        )));
    }
    let (sx, sy) = (core.slot(x_p)?, core.slot(y_q)?);
    let (a, b) = (core.pendants[sx], core.pendants[sy]);
    if a == 0 || b == 0 {
        return Err(Error::Hypothesis(format!(
            "both {x_p} and {y_q} need pendants (have {a} and {b})"
        )));
    }
    if core.total_pendants() != a + b {
        return Err(Error::Hypothesis(format!(
            "pendants on vertices other than {x_p} and {y_q}"
        )));
    }
    let mut out = core.clone();
    out.pendants[sy] = 0;
    out.pendants[sx] = a + b;
    Ok(out)
}

/// What a transformation is expected to do to one index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum Expectation {
    Decrease,
    Increase,
    NonDecrease,
    #[serde(serialize_with = "crate::report::ser_rational")]
    Exactly(Rational),
}

impl Expectation {
    pub fn holds(&self, delta: &Rational) -> bool {
        match self {
            Expectation::Decrease => delta.is_negative(),
            Expectation::Increase => delta.is_positive(),
            Expectation::NonDecrease => !delta.is_negative(),
            Expectation::Exactly(v) => delta == v,
        }
    }

    /// Strict movement in the index's edge-addition direction.
    pub fn improving(kind: IndexKind) -> Expectation {
        match kind.monotonicity() {
            Monotonicity::Decreasing => Expectation::Decrease,
            Monotonicity::Increasing => Expectation::Increase,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub index: IndexKind,
    pub expected: Expectation,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub delta: Rational,
    pub holds: bool,
}

/// Before/after comparison of one transformation.
#[derive(Debug, Clone, Serialize)]
pub struct TransformReport {
    pub transform: &'static str,
    #[serde(serialize_with = "crate::report::ser_graph6")]
    pub before: Graph,
    #[serde(serialize_with = "crate::report::ser_graph6")]
    pub after: Graph,
    pub claims: Vec<Claim>,
}

impl TransformReport {
    fn build(
        transform: &'static str,
        before: Graph,
        after: Graph,
        expect: impl Fn(IndexKind) -> Expectation,
    ) -> Result<TransformReport> {
        let vb = IndexValues::of(&before)?;
        let va = IndexValues::of(&after)?;
        let claims = IndexKind::ALL
            .iter()
            .map(|&index| {
                let delta = va.get(index) - vb.get(index);
                let expected = expect(index);
                let holds = expected.holds(&delta);
                Claim {
                    index,
                    expected,
                    delta,
                    holds,
                }
            })
            .collect();
        Ok(TransformReport {
            transform,
            before,
            after,
            claims,
        })
    }

    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }

    pub fn delta(&self, index: IndexKind) -> &Rational {
        &self
            .claims
            .iter()
            .find(|c| c.index == index)
            .expect("every index has a claim")
            .delta
    }
}

/// Applies [`lemma3_contract`] and checks all five indices move strictly in
/// their edge-addition direction.
pub fn check_lemma3(ctx: &CutEdgeContext) -> Result<TransformReport> {
    let after = lemma3_contract(ctx)?;
    TransformReport::build("lemma3", ctx.graph.clone(), after, Expectation::improving)
}

/// Applies [`lemma4_shift`]. With pendants only on `u` and `v` (a and b of them),
/// W drops by exactly 2ab, WW by 7ab and H rises by ab/4; otherwise only the
/// directions are claimed. CEI never decreases; EDS strictly decreases.
pub fn check_lemma4(core: &DecoratedCore, u: CoreVertex, v: CoreVertex) -> Result<TransformReport> {
    let shifted = lemma4_shift(core, u, v)?;
    let a = core.pendants_at(u)? as i64;
    let b = core.pendants_at(v)? as i64;
    let only_pair = core.total_pendants() as i64 == a + b;
    TransformReport::build(
        "lemma4",
        core.realize(),
        shifted.realize(),
        |index| match index {
            IndexKind::Wiener if only_pair => Expectation::Exactly(integer(-2 * a * b)),
            IndexKind::HyperWiener if only_pair => Expectation::Exactly(integer(-7 * a * b)),
            IndexKind::Harary if only_pair => Expectation::Exactly(rational(a * b, 4)),
            IndexKind::Cei => Expectation::NonDecrease,
            other => Expectation::improving(other),
        },
    )
}

/// Applies [`lemma5_shift`]: W, WW, EDS drop, H rises, and CEI rises by
/// exactly s(t-1)/6.
pub fn check_lemma5(
    core: &DecoratedCore,
    x_p: CoreVertex,
    y_q: CoreVertex,
) -> Result<TransformReport> {
    let shifted = lemma5_shift(core, x_p, y_q)?;
    let (s, t) = (core.s as i64, core.t as i64);
    TransformReport::build(
        "lemma5",
        core.realize(),
        shifted.realize(),
        |index| match index {
            IndexKind::Cei => Expectation::Exactly(rational(s * (t - 1), 6)),
            other => Expectation::improving(other),
        },
    )
}

/// One failed edge-addition check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeViolation {
    pub u: usize,
    pub v: usize,
    pub index: IndexKind,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub delta: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub n: usize,
    pub m: usize,
    pub absent_edges: usize,
    pub probed: usize,
    /// Violation counts in `IndexKind::ALL` order.
    pub violations: [usize; 5],
    pub details: Vec<EdgeViolation>,
}

impl MonotonicityReport {
    pub fn clean(&self) -> bool {
        self.violations.iter().all(|&v| v == 0)
    }
}

/// Adds each of up to `samples` absent edges and checks that every index moves
/// strictly in its edge-addition direction. When fewer than all absent edges
/// are probed they are drawn with a ChaCha8 generator seeded by `seed`.
pub fn monotonicity_probe(g: &Graph, samples: usize, seed: u64) -> Result<MonotonicityReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Err(Error::Hypothesis(
            "complete graph has no absent edge".into(),
        ));
    }
    let absent = g.non_edges();
    let chosen: Vec<(usize, usize)> = if samples >= absent.len() {
        absent.clone()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut idx = sample(&mut rng, absent.len(), samples).into_vec();
        idx.sort_unstable();
        idx.into_iter().map(|i| absent[i]).collect()
    };
    let base = IndexValues::of(g)?;
    let mut violations = [0usize; 5];
    let mut details = Vec::new();
    for &(u, v) in &chosen {
        let plus = IndexValues::of(&g.add_edge(u, v)?)?;
        for (slot, &index) in IndexKind::ALL.iter().enumerate() {
            let delta = plus.get(index) - base.get(index);
            if !Expectation::improving(index).holds(&delta) {
                violations[slot] += 1;
                details.push(EdgeViolation { u, v, index, delta });
            }
        }
    }
    Ok(MonotonicityReport {
        n: g.n(),
        m: g.m(),
        absent_edges: absent.len(),
        probed: chosen.len(),
        violations,
        details,
    })
}
