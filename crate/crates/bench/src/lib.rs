//! Criterion benchmarks for the exact and asymptotic kernels live in `benches/`.
