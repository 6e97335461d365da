//! Criterion benchmarks for pathbetti; see `benches/`.
