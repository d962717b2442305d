//! Criterion benchmarks for `euledit-core`; see `benches/`.
