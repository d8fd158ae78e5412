//! Acceptance suite for `nsgraph`. The criteria live in `tests/acceptance.rs`
//! and run with `cargo test -p nsgraph-verification`.
