//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use tindex_core::constructors::{b_graph, BkSpec, CoreVertex, DecoratedCore};
use tindex_core::extremal::{admissible_x, closed_form, reconcile};
use tindex_core::indices::{integer, rational};
use tindex_core::oracle::{labeled_filter, structural_facts, theorem_ks, Catalog, OracleConfig};
use tindex_core::transforms::{
    check_lemma3, check_lemma4, check_lemma5, monotonicity_probe, CutEdgeContext,
};
use tindex_core::{IndexKind, IndexValues, Rational};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn closed_forms() -> Outcome {
    let triples: Vec<(usize, usize, usize)> = (5..=60usize)
        .flat_map(|n| theorem_ks(n).into_iter().map(move |k| (n, k)))
        .flat_map(|(n, k)| {
            admissible_x(n, k)
                .unwrap()
                .values()
                .into_iter()
                .map(move |x| (n, k, x))
        })
        .collect();
    let failures: Vec<String> = triples
        .par_iter()
        .flat_map_iter(|&(n, k, x)| {
            let g = b_graph(BkSpec::new(n, k, x).unwrap());
            let direct = IndexValues::of(&g).unwrap();
            IndexKind::ALL
                .into_iter()
                .filter(move |&kind| closed_form(kind, n, k, x).unwrap() != direct.get(kind))
                .map(move |kind| format!("{kind}({n},{k},{x})"))
                .collect::<Vec<_>>()
        })
        .collect();
    outcome(
        failures.is_empty(),
        format!(
            "{} (n,k,x) triples with 5 <= n <= 60, 5 indices each, {} mismatches {:?}",
            triples.len(),
            failures.len(),
            &failures[..failures.len().min(5)]
        ),
    )
}

fn spot_values() -> Outcome {
    let b = IndexValues::of(&b_graph(BkSpec::new(5, 1, 2).unwrap())).unwrap();
    let want: [(IndexKind, Rational); 5] = [
        (IndexKind::Wiener, integer(16)),
        (IndexKind::HyperWiener, integer(23)),
        (IndexKind::Harary, rational(22, 3)),
        (IndexKind::Cei, rational(9, 2)),
        (IndexKind::Eds, integer(79)),
    ];
    let mut bad: Vec<String> = want
        .iter()
        .filter(|(kind, v)| b.get(*kind) != *v)
        .map(|(kind, v)| format!("{kind}: got {} want {v}", b.get(*kind)))
        .collect();
    let cei = IndexValues::of(&b_graph(BkSpec::new(6, 1, 2).unwrap()))
        .unwrap()
        .cei;
    let psi = closed_form(IndexKind::Cei, 6, 1, 2).unwrap();
    if cei != rational(19, 3) || psi != cei {
        bad.push(format!("CEI(B_1(2,3)): got {cei}, closed form {psi}"));
    }
    outcome(
        bad.is_empty(),
        format!(
            "B_1(2,2) values and CEI(B_1(2,3)) = 19/3; {} mismatches {bad:?}",
            bad.len()
        ),
    )
}

/// Criteria 3 and 6 share the catalogs.
fn theorem_verification(catalogs: &[Catalog]) -> (Outcome, Outcome) {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let mut structural = Vec::new();
    let mut extremal_graphs = 0;
    for catalog in catalogs {
        for kind in IndexKind::ALL {
            for k in theorem_ks(catalog.n) {
                let report = catalog.verify(kind, k).unwrap();
                checked += 1;
                if !report.is_match() {
                    mismatches.push(format!(
                        "{kind} n={} k={k}: {:?}",
                        catalog.n, report.verdict
                    ));
                }
                for c in &report.oracle_extremal {
                    extremal_graphs += 1;
                    let facts = structural_facts(&c.graph()).unwrap();
                    if !facts.all() {
                        structural.push(format!("{kind} n={} k={k} {c}: {facts:?}", catalog.n));
                    }
                }
            }
        }
    }
    let mut infeasible = Vec::new();
    for catalog in catalogs {
        let n = catalog.n;
        let want: BTreeSet<usize> = (0..=n - 4).chain([n - 1]).collect();
        if catalog.feasible_cut_edges() != want {
            infeasible.push(format!("n={n}: {:?}", catalog.feasible_cut_edges()));
        }
    }
    let verification = outcome(
        mismatches.is_empty(),
        format!(
            "{checked} (index,n,k) cells for 5 <= n <= 9, value and family; {} mismatches {mismatches:?}",
            mismatches.len()
        ),
    );
    let facts = outcome(
        structural.is_empty() && infeasible.is_empty(),
        format!(
            "feasible k = {{0..n-4}} u {{n-1}} for 5 <= n <= 9 ({} exceptions); {extremal_graphs} extremal graphs checked, {} exceptions {structural:?}",
            infeasible.len(),
            structural.len()
        ),
    );
    (verification, facts)
}

fn errata() -> Outcome {
    let mut problems = Vec::new();
    let mut flagged = 0;
    for n in 5..=12usize {
        for kind in IndexKind::ALL {
            let rec = reconcile(kind, n, n - 1).unwrap();
            let expect = matches!(kind, IndexKind::Wiener | IndexKind::Cei | IndexKind::Eds);
            if rec.has("value-mismatch") != expect {
                problems.push(format!("{kind} star n={n}: {}", rec.status()));
            }
            if expect && rec.has("value-mismatch") {
                flagged += 1;
            }
            if rec.has("family-mismatch") || rec.has("direction-conflict") {
                problems.push(format!("{kind} star n={n}: {}", rec.status()));
            }
        }
        for k in 1..=n - 4 {
            for kind in IndexKind::ALL {
                let rec = reconcile(kind, n, k).unwrap();
                if rec.has("direction-conflict") != (kind == IndexKind::HyperWiener) {
                    problems.push(format!("{kind} n={n} k={k}: {}", rec.status()));
                }
            }
        }
    }
    outcome(
        problems.is_empty(),
        format!(
            "{flagged} star conflicts flagged (W, CEI, EDS at 5 <= n <= 12), WW direction conflict on every non-star cell; {} unexpected {problems:?}",
            problems.len()
        ),
    )
}

fn lemma_suites() -> Outcome {
    let mut failures = Vec::new();

    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut edges = 0;
    for i in 0..1000 {
        let n = 3 + i % 8;
        let g = common::random_connected_bipartite(&mut rng, n);
        let report = monotonicity_probe(&g, usize::MAX, 0).unwrap();
        edges += report.probed;
        if !report.clean() {
            failures.push(format!("lemma2 {g:?}: {:?}", report.violations));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let (g, u, w) = common::random_bridge_context(&mut rng, 10);
        let ctx = CutEdgeContext::new(g, u, w).unwrap();
        let report = check_lemma3(&ctx).unwrap();
        if !report.all_hold() {
            failures.push(format!("lemma3 {:?} {u}-{w}", ctx.graph));
        }
    }

    let mut grid = 0;
    for s in 2..=4 {
        for t in s..=4 {
            for a in 1..=3 {
                for b in 1..=3 {
                    let pairs = [
                        (CoreVertex::X(0), CoreVertex::X(1)),
                        (CoreVertex::Y(0), CoreVertex::Y(1)),
                    ];
                    for (u, v) in pairs {
                        let core = DecoratedCore::new(s, t)
                            .unwrap()
                            .with(u, a)
                            .unwrap()
                            .with(v, b)
                            .unwrap();
                        let report = check_lemma4(&core, u, v).unwrap();
                        let ab = (a * b) as i64;
                        let exact = *report.delta(IndexKind::Wiener) == integer(-2 * ab)
                            && *report.delta(IndexKind::HyperWiener) == integer(-7 * ab)
                            && *report.delta(IndexKind::Harary) == rational(ab, 4);
                        grid += 1;
                        if !report.all_hold() || !exact {
                            failures.push(format!("lemma4 core({s},{t}) {u}:{a} {v}:{b}"));
                        }
                    }
                    let (x, y) = (CoreVertex::X(0), CoreVertex::Y(0));
                    let core = DecoratedCore::new(s, t)
                        .unwrap()
                        .with(x, a)
                        .unwrap()
                        .with(y, b)
                        .unwrap();
                    let report = check_lemma5(&core, x, y).unwrap();
                    grid += 1;
                    let want = rational((s * (t - 1)) as i64, 6);
                    if !report.all_hold() || *report.delta(IndexKind::Cei) != want {
                        failures.push(format!("lemma5 core({s},{t}) {x}:{a} {y}:{b}"));
                    }
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "lemma2 on 1000 graphs ({edges} absent edges), lemma3 on 200 bridge contexts, {grid} lemma4/lemma5 grid cases; {} violations {:?}",
            failures.len(),
            &failures[..failures.len().min(5)]
        ),
    )
}

fn dual_method(config: &OracleConfig) -> Outcome {
    let mut bad = Vec::new();
    let mut sizes = Vec::new();
    for n in 1..=7 {
        let generated = Catalog::build(n, config).unwrap().certificates();
        let filtered = labeled_filter(n, config).unwrap();
        sizes.push(generated.len());
        if generated != filtered {
            bad.push(format!("n={n}: {} vs {}", generated.len(), filtered.len()));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "certificate sets agree for n <= 7 (class sizes {sizes:?}); {} disagreements {bad:?}",
            bad.len()
        ),
    )
}

fn main() -> ExitCode {
    let config = OracleConfig::default();
    let mut all = true;
    let mut report = |id: &str, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        all &= o.pass;
        println!(
            "acceptance {id} {name}: {} ({:.2?}) {}",
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed(),
            o.detail
        );
    };
    report("1", "closed-form agreement", &mut closed_forms);
    report("2", "spot values", &mut spot_values);

    let mut facts = None;
    report("3", "theorem verification", &mut || {
        let catalogs: Vec<Catalog> = (5..=9)
            .map(|n| Catalog::build(n, &config).unwrap())
            .collect();
        let (verification, structure) = theorem_verification(&catalogs);
        facts = Some(structure);
        verification
    });
    report("4", "errata detection", &mut errata);
    report("5", "lemma property suites", &mut lemma_suites);
    report("6", "structural facts", &mut || facts.take().unwrap());
    report("7", "enumeration soundness", &mut || dual_method(&config));

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
