//! Benchmark-only crate; see `benches/`.

pub use arq_core;
