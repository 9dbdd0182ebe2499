//! Criterion benchmarks for tindex-core; see `benches/`.
