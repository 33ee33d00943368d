//! Criterion benchmarks for `decant-core`; see `benches/`.
