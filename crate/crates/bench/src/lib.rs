//! Benchmark-only crate; see the `benches/` directory. The library target
//! exists solely to anchor the package in the workspace.
