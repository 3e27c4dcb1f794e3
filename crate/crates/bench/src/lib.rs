//! Benchmarks for the biquat workspace live under `benches/`.
