//! Deterministic parallel search.
//!
//! `HELLY_THREADS` caps worker threads: unset uses rayon's default, `0`
//! forces serial execution. Every search returns the lowest matching index,
//! so answers never depend on scheduling.

use std::sync::OnceLock;

use rayon::prelude::*;
use rayon::ThreadPool;

pub const THREADS_ENV: &str = "HELLY_THREADS";

fn pool() -> Option<&'static ThreadPool> {
    static POOL: OnceLock<Option<ThreadPool>> = OnceLock::new();
    POOL.get_or_init(|| {
        let requested = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok());
        match requested {
            Some(0) => None,
            Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build().ok(),
            None => rayon::ThreadPoolBuilder::new().build().ok(),
        }
    })
    .as_ref()
}

/// Index of the first item satisfying `pred`.
pub fn position_first<T, F>(items: &[T], pred: F) -> Option<usize>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    // Tiny inputs are not worth the fork/join.
    if items.len() < 16 {
        return items.iter().position(pred);
    }
    match pool() {
        Some(p) => p.install(|| items.par_iter().position_first(pred)),
        None => items.iter().position(pred),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn returns_lowest_index() {
        let v: Vec<u32> = (0..10_000).collect();
        assert_eq!(position_first(&v, |&x| x % 997 == 996), Some(996));
        assert_eq!(position_first(&v, |&x| x > 20_000), None);
    }
}
