//! Criterion benchmarks for cherednik-core; see `benches/core.rs`.
