//! Benchmark-only package; see `benches/garside.rs`.
