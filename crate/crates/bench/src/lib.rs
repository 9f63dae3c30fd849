//! Benchmark cases shared by the criterion targets.

use r1d_core::enumerate::enumerate;
use r1d_core::{SearchMode, SearchSpec};

/// Cells small enough to benchmark repeatedly, with their counts.
pub const CELLS: &[(u32, u32, u64)] = &[(3, 3, 12), (4, 4, 82), (4, 5, 38), (4, 7, 4), (5, 9, 2)];

/// Counts the fundamental models of one cell on `workers` threads.
pub fn count(n: u32, d: u32, workers: usize) -> u64 {
    let spec = SearchSpec::new(n, d)
        .mode(SearchMode::CountOnly)
        .workers(workers);
    enumerate(&spec)
        .expect("benchmark cells fit the default budget")
        .count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells_have_the_listed_counts() {
        for &(n, d, expected) in CELLS {
            assert_eq!(count(n, d, 1), expected, "({n}, {d})");
        }
    }
}
