//! Grid sweeps, the check registry, report generation and persistence for
//! the verification suite.

mod checks;
mod grid;
mod report;
mod sweep;

pub use checks::{check_ids, is_known_check, CheckDef, REGISTRY};
pub use grid::{GridSpec, TauScale};
pub use report::{
    read_report_json, render_csv, render_json, render_markdown, write_report, CheckSummary,
    ReportFormat, SuiteReport,
};
pub use sweep::{run_bounds_suite, SweepConfig};

/// Deterministic, dependency-free generator for the randomized strip samples.
#[derive(Debug, Clone)]
pub(crate) struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}
