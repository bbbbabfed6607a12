//! Tiling checks split across worker threads.

use dlat_core::geometry::{TilingChecker, TilingConfig, TilingCounts, TilingReport};

pub const MAX_WORKERS: usize = 64;

/// Runs the samples in contiguous chunks, one per worker, and merges the
/// counters in chunk order. Each sample depends only on the seed and its
/// index, so the report is independent of `workers`.
pub fn check_tiling_parallel(config: TilingConfig, workers: usize) -> dlat_core::Result<TilingReport> {
    let workers = workers.clamp(1, MAX_WORKERS);
    let checker = TilingChecker::new(config)?;
    let total = checker.config().samples;
    let chunk = total.div_ceil(workers).max(1);
    let ranges: Vec<_> = (0..total).step_by(chunk).map(|s| s..(s + chunk).min(total)).collect();

    let results: Vec<dlat_core::Result<TilingCounts>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|range| {
                let checker = &checker;
                scope.spawn(move || checker.run_range(range))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("tiling worker panicked"))
            .collect()
    });

    let mut counts = TilingCounts::default();
    for part in results {
        counts.merge(part?);
    }
    TilingReport::new(&checker, counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dlat_core::geometry::check_tiling;

    #[test]
    fn worker_count_does_not_change_the_report() {
        let config = TilingConfig::new(3, 0, 6, 500, 42);
        let serial = check_tiling(config.clone()).unwrap();
        for workers in [1, 3, 8] {
            assert_eq!(check_tiling_parallel(config.clone(), workers).unwrap(), serial);
        }
    }

    #[test]
    fn zero_samples() {
        let report = check_tiling_parallel(TilingConfig::new(2, 0, 4, 0, 1), 4).unwrap();
        assert_eq!(report.counts.samples, 0);
        assert!(report.pass());
    }
}
