//! Shared resource caps for the exhaustive generators.

/// Default cap on crystal-graph truncation size; `CRYSTAL_MAX_SIZE`
/// overrides it.
pub const DEFAULT_MAX_SIZE: u32 = 20;

/// Cap on biorder cardinality for configuration-crystal enumeration
/// (3^12 = 531441 configurations).
pub const BIORDER_BOUND: usize = 12;

/// Effective generation cap: `CRYSTAL_MAX_SIZE` when set and parseable,
/// otherwise [`DEFAULT_MAX_SIZE`].
pub fn max_size_cap() -> u32 {
    std::env::var("CRYSTAL_MAX_SIZE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_SIZE)
}
