//! Fixtures shared by the criterion benchmarks.

use normal_depth::FrobeniusModule;

/// Parameter points small enough to enumerate in a benchmark iteration.
pub const GRID: &[(u64, usize, u32)] = &[(7, 3, 2), (3, 5, 2), (5, 4, 2), (13, 3, 3)];

pub fn module(q: u64, n: usize) -> FrobeniusModule {
    FrobeniusModule::from_order(q, n).expect("benchmark parameters are valid")
}
