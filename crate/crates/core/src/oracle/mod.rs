//! Brute-force ground truth for small orders.

pub mod enumerate;
pub mod verify;

pub use enumerate::{
    enumerate_connected_bipartite, filter_by_cut_edges, labeled_filter, Catalog, CatalogEntry,
    EnumerationTask, OracleConfig, DEFAULT_CAP, MAX_CAP,
};
pub use verify::{
    extremal_search, proposition1_check, structural_facts, theorem_ks, verify_theorem, ExtremalSet,
    StructuralFacts, Verdict, VerificationReport,
};
