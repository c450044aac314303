//! Instance generation and batch benchmarking.

mod bench;
mod generate;
mod manifest;

pub use bench::{
    bench_run, Algorithm, BenchInstance, BenchOptions, BenchRecord, BENCH_CSV_HEADER, BENCH_CSV_VERSION,
};
pub use generate::{generate, GeneratorParams};
pub use manifest::{load_manifest, Manifest};
