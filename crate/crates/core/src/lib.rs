//! Distance-based topological indices of connected bipartite graphs with a
//! prescribed number of cut edges, their extremal graphs, and an exhaustive
//! oracle for small orders.

pub mod canon;
pub mod constructors;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod oracle;
pub mod report;
pub mod transforms;

pub use canon::{certificate, Certificate};
pub use constructors::{b_graph, BkSpec, CoreVertex, DecoratedCore};
pub use error::{Error, Result};
pub use extremal::{closed_form, optimize, BoundResult, Direction};
pub use graph::Graph;
pub use indices::{IndexKind, IndexValues, Monotonicity, Rational};
pub use oracle::{Catalog, OracleConfig, Verdict, VerificationReport};
