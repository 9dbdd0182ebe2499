//! The bound statements as printed, clause by clause, and their comparison
//! against [`optimize`](super::optimize).

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{optimize, BoundResult, Direction};
use crate::constructors::BkSpec;
use crate::error::Result;
use crate::indices::{integer, rational, IndexKind, Rational};
use crate::report::fraction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "=")]
    Equal,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
            Relation::Equal => "=",
        }
    }

    /// Whether a bound printed with this relation can be a `direction` bound.
    pub fn consistent_with(self, direction: Direction) -> bool {
        matches!(
            (self, direction),
            (Relation::Equal, _)
                | (Relation::AtLeast, Direction::LowerBound)
                | (Relation::AtMost, Direction::UpperBound)
        )
    }
}

/// Theorem and clause of a printed bound, e.g. `T8(iv)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseLabel {
    pub theorem: u8,
    pub clause: &'static str,
    /// The printed condition selecting the clause.
    pub condition: String,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}({})", self.theorem, self.clause)
    }
}

/// An extremal graph as printed: the star, or `B_k(x, y)` with possibly
/// non-integral parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PrintedMember {
    Star,
    Bk {
        k: usize,
        #[serde(serialize_with = "crate::report::ser_rational")]
        x: Rational,
        #[serde(serialize_with = "crate::report::ser_rational")]
        y: Rational,
    },
}

impl PrintedMember {
    /// The member as a valid parameter set, or the reason it is not one.
    pub fn to_spec(&self, n: usize, k: usize) -> std::result::Result<BkSpec, String> {
        match self {
            PrintedMember::Star => BkSpec::star(n).map_err(|e| e.to_string()),
            PrintedMember::Bk { x, y, .. } => {
                if !x.is_integer() || !y.is_integer() {
                    return Err(format!(
                        "non-integral parameters ({}, {})",
                        fraction(x),
                        fraction(y)
                    ));
                }
                if x + y != integer((n - k) as i64) {
                    return Err(format!("x + y = {} differs from n - k = {}", x + y, n - k));
                }
                let xi =
                    usize::try_from(x.to_integer()).map_err(|_| format!("x = {x} negative"))?;
                BkSpec::new(n, k, xi).map_err(|e| e.to_string())
            }
        }
    }
}

impl fmt::Display for PrintedMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrintedMember::Star => f.write_str("S_n"),
            PrintedMember::Bk { k, x, y } => write!(f, "B_{k}({x},{y})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PublishedCase {
    pub label: CaseLabel,
    pub relation: Relation,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub value: Rational,
    pub family: Vec<PrintedMember>,
}

const ROMAN: [&str; 12] = [
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii",
];

pub fn theorem_of(kind: IndexKind) -> u8 {
    match kind {
        IndexKind::Wiener => 6,
        IndexKind::HyperWiener => 7,
        IndexKind::Harary => 8,
        IndexKind::Cei => 9,
        IndexKind::Eds => 10,
    }
}

fn printed_relation(kind: IndexKind) -> Relation {
    match kind {
        IndexKind::Wiener | IndexKind::Eds => Relation::AtLeast,
        IndexKind::HyperWiener | IndexKind::Harary | IndexKind::Cei => Relation::AtMost,
    }
}

/// Selects the printed clause for `(n, k)` by its k-range and residue
/// conditions and evaluates the printed value and family.
///
/// `Ok(None)` means no clause covers `(n, k)`.
pub fn published_case(kind: IndexKind, n: usize, k: usize) -> Result<Option<PublishedCase>> {
    super::admissible_x(n, k)?;
    let theorem = theorem_of(kind);
    let label = |i: usize, condition: String| CaseLabel {
        theorem,
        clause: ROMAN[i],
        condition,
    };
    let (ni, ki) = (n as i64, k as i64);
    let nn = integer(ni);
    let kk = integer(ki);
    let r = rational;
    let bk = |x: Rational, y: Rational| PrintedMember::Bk { k, x, y };
    let q = |v: Rational, d: i64| v / integer(d);

    if k + 1 == n {
        let value = match kind {
            IndexKind::Wiener => r(ni * (ni - 1), 2),
            IndexKind::HyperWiener => r((ni - 1) * (3 * ni - 4), 2),
            IndexKind::Harary | IndexKind::Cei | IndexKind::Eds => r(ni * ni + ni - 2, 4),
        };
        return Ok(Some(PublishedCase {
            label: label(0, "k = n-1".into()),
            relation: Relation::Equal,
            value,
            family: vec![PrintedMember::Star],
        }));
    }
    let relation = printed_relation(kind);
    let two = || bk(integer(2), integer(ni - ki - 2));
    let case = |label: CaseLabel, value: Rational, family: Vec<PrintedMember>| {
        Some(PublishedCase {
            label,
            relation,
            value,
            family,
        })
    };

    let out = match kind {
        IndexKind::Wiener => {
            if 2 * ki >= ni - 4 {
                case(
                    label(1, "(n-4)/2 <= k <= n-4".into()),
                    integer(ni * ni - 3 * ni + 2 * ki + 4),
                    vec![two()],
                )
            } else if ni % 2 == 1 {
                let value = r(3 * ni * ni + 1, 4) + integer(ki * ni - ki * ki - 2 * ki - ni);
                case(
                    label(2, "1 <= k < (n-4)/2, n odd".into()),
                    value,
                    vec![
                        bk(r(ni - 2 * ki - 1, 2), r(ni + 1, 2)),
                        bk(r(ni - 2 * ki + 1, 2), r(ni - 1, 2)),
                    ],
                )
            } else {
                let value = r(3 * ni * ni, 4) + integer(ki * ni - ki * ki - 2 * ki - ni);
                case(
                    label(3, "1 <= k < (n-4)/2, n even".into()),
                    value,
                    vec![bk(r(ni - 2 * ki, 2), r(ni, 2))],
                )
            }
        }
        IndexKind::HyperWiener => {
            if 5 * ki >= 2 * ni - 8 {
                case(
                    label(1, "(2n-8)/5 <= k <= n-4".into()),
                    r(3 * ni * ni - 11 * ni, 2) + integer(5 * ki + 8),
                    vec![two()],
                )
            } else {
                let res = (ni - 5 * ki).rem_euclid(4);
                let base = &nn * &nn + r(5, 2) * &kk * &nn - r(3, 2) * &nn - r(5, 1) * &kk;
                let c = [0, 1, 4, 1][res as usize];
                let value = base - r(25 * ki * ki - c, 8);
                let m = |dx: i64, dy: i64| bk(r(2 * ni - 5 * ki + dx, 4), r(2 * ni + ki + dy, 4));
                let family = match res {
                    0 => vec![m(0, 0)],
                    1 => vec![m(-1, 1)],
                    2 => vec![m(-2, 2), m(2, -2)],
                    _ => vec![m(1, -1)],
                };
                case(
                    label(
                        2 + res as usize,
                        format!("k < (2n-8)/5, n-5k = {res} (mod 4)"),
                    ),
                    value,
                    family,
                )
            }
        }
        IndexKind::Harary => {
            if 4 * ki >= 3 * ni - 12 {
                case(
                    label(1, "(3n-12)/4 <= k <= n-4".into()),
                    r(3 * ni * ni + 9 * ni - 8 * ki - 24, 12),
                    vec![two()],
                )
            } else {
                let res = (3 * ni - 4 * ki).rem_euclid(6);
                let base = r(3 * ni * ni - 2 * ni, 8) + r(2 * ki * ki - 3 * ki * ni + 6 * ki, 9);
                let offset = [
                    r(0, 1),
                    r(-1, 72),
                    r(-1, 18),
                    r(-1, 8),
                    r(-1, 18),
                    r(-1, 72),
                ];
                let m = |d: i64| bk(r(3 * ni - 4 * ki + d, 6), r(3 * ni - 2 * ki - d, 6));
                let family = match res {
                    0 => vec![m(0)],
                    1 => vec![m(-1)],
                    2 => vec![m(-2)],
                    3 => vec![m(-3), m(3)],
                    4 => vec![m(2)],
                    _ => vec![m(1)],
                };
                case(
                    label(
                        2 + res as usize,
                        format!("k < (3n-12)/4, 3n-4k = {res} (mod 6)"),
                    ),
                    base + &offset[res as usize],
                    family,
                )
            }
        }
        IndexKind::Cei => {
            let res = (5 * ni - 5 * ki).rem_euclid(10);
            let base = r(5 * ni * ni + 5 * ki * ki, 24) + r(ni - 5 * ki * ni, 12) + r(3 * ki, 4);
            match res {
                0 => case(
                    label(1, "5n-5k = 0 (mod 10)".into()),
                    base,
                    vec![bk(r(5 * ni - 5 * ki, 10), r(5 * ni - 5 * ki, 10))],
                ),
                5 => case(
                    label(2, "5n-5k = 5 (mod 10)".into()),
                    base - r(1, 8),
                    vec![bk(r(5 * ni - 5 * ki - 5, 10), r(5 * ni - 5 * ki + 5, 10))],
                ),
                _ => None,
            }
        }
        IndexKind::Eds => {
            if 11 * ki >= 3 * ni - 23 {
                case(
                    label(1, "(3n-23)/11 <= k <= n-4".into()),
                    integer(4 * ni * ni + 2 * ki * ni - 11 * ni + 8 * ki + 16),
                    vec![two()],
                )
            } else {
                let res = (3 * ni - 11 * ki + 3).rem_euclid(10) as usize;
                const C: [i64; 10] = [31, 32, 35, 40, 47, 56, 47, 40, 35, 32];
                const DX: [i64; 10] = [3, 2, 1, 0, -1, -2, 7, 6, 5, 4];
                let value = q(integer(71 * ni * ni - 121 * ki * ki + C[res]), 20)
                    + q(integer(53 * ki * ni - 59 * ni - 107 * ki), 10);
                let m = |dx: i64| bk(r(3 * ni - 11 * ki + dx, 10), r(7 * ni + ki - dx, 10));
                let mut family = vec![m(DX[res])];
                if res == 5 {
                    family.push(m(8));
                }
                case(
                    label(
                        2 + res,
                        format!("k < (3n-23)/11, 3n-11k+3 = {res} (mod 10)"),
                    ),
                    value,
                    family,
                )
            }
        }
    };
    Ok(out)
}

/// One disagreement between the printed statement and the computed optimum.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "finding", rename_all = "kebab-case")]
pub enum Finding {
    NoClause,
    ValueMismatch {
        #[serde(serialize_with = "crate::report::ser_rational")]
        printed: Rational,
        #[serde(serialize_with = "crate::report::ser_rational")]
        computed: Rational,
    },
    InvalidFamilyMember {
        member: String,
        reason: String,
    },
    FamilyMismatch {
        printed: Vec<String>,
        computed: Vec<String>,
    },
    DirectionConflict {
        printed: Relation,
        proven: Direction,
    },
}

impl Finding {
    pub fn tag(&self) -> &'static str {
        match self {
            Finding::NoClause => "no-clause",
            Finding::ValueMismatch { .. } => "value-mismatch",
            Finding::InvalidFamilyMember { .. } => "invalid-family-member",
            Finding::FamilyMismatch { .. } => "family-mismatch",
            Finding::DirectionConflict { .. } => "direction-conflict",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reconciliation {
    pub bound: BoundResult,
    pub printed: Option<PublishedCase>,
    pub findings: Vec<Finding>,
}

impl Reconciliation {
    pub fn is_match(&self) -> bool {
        self.findings.is_empty()
    }

    /// `match`, or the finding tags joined by `;`.
    pub fn status(&self) -> String {
        if self.findings.is_empty() {
            return "match".into();
        }
        self.findings
            .iter()
            .map(Finding::tag)
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn has(&self, tag: &str) -> bool {
        self.findings.iter().any(|f| f.tag() == tag)
    }
}

/// Compares [`optimize`] with [`published_case`] on value, family and direction.
pub fn reconcile(kind: IndexKind, n: usize, k: usize) -> Result<Reconciliation> {
    let bound = optimize(kind, n, k)?;
    let printed = published_case(kind, n, k)?;
    let mut findings = Vec::new();
    match &printed {
        None => findings.push(Finding::NoClause),
        Some(case) => {
            if case.value != bound.value {
                findings.push(Finding::ValueMismatch {
                    printed: case.value.clone(),
                    computed: bound.value.clone(),
                });
            }
            let mut specs = BTreeSet::new();
            let mut invalid = false;
            for member in &case.family {
                match member.to_spec(n, k) {
                    Ok(spec) => {
                        specs.insert(spec.x);
                    }
                    Err(reason) => {
                        invalid = true;
                        findings.push(Finding::InvalidFamilyMember {
                            member: member.to_string(),
                            reason,
                        });
                    }
                }
            }
            let computed: BTreeSet<usize> = bound.optimal_x.iter().copied().collect();
            if invalid || specs != computed {
                findings.push(Finding::FamilyMismatch {
                    printed: case.family.iter().map(|m| m.to_string()).collect(),
                    computed: bound.family.iter().map(|b| b.to_string()).collect(),
                });
            }
            if !case.relation.consistent_with(bound.direction) {
                findings.push(Finding::DirectionConflict {
                    printed: case.relation,
                    proven: bound.direction,
                });
            }
        }
    }
    Ok(Reconciliation {
        bound,
        printed,
        findings,
    })
}
