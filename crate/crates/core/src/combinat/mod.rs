//! Bernoulli and Stirling numbers, integer partitions and Bell polynomials.
//!
//! Bernoulli and Stirling tables are built lazily and kept in process-wide
//! caches up to [`table_cache_limit`] rows; indices beyond the limit are
//! computed on the fly without being stored.

mod bell;
mod bernoulli;
mod partition;
mod stirling;

use std::sync::atomic::{AtomicUsize, Ordering};

pub use bell::{bell_complete, bell_complete_all, bell_partial, exp_transform};
pub use bernoulli::{bernoulli_minus, bernoulli_plus};
pub use partition::{partitions, Partition};
pub use stirling::{stirling_first, stirling_second};

static CACHE_LIMIT: AtomicUsize = AtomicUsize::new(64);

/// Largest index kept in the Bernoulli/Stirling caches.
pub fn table_cache_limit() -> usize {
    CACHE_LIMIT.load(Ordering::Relaxed)
}

pub fn set_table_cache_limit(limit: usize) {
    CACHE_LIMIT.store(limit, Ordering::Relaxed);
}
