//! Command-line front end for `soclelab`: analyze single groups, scan
//! catalogs and directories of group files, and export Cayley tables.

pub mod catalog;
pub mod report;
pub mod scan;
pub mod source;

use soclelab::Error;

pub use report::{analyze, default_prime, AnalysisReport, Outcome, TheoremMode};
pub use scan::{scan, ScanOptions, ScanResult, ScanRow};
pub use source::Source;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CONSISTENCY: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

/// Exit code for an error that stopped a command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Consistency(_) => EXIT_CONSISTENCY,
        Error::Unsupported(_)
        | Error::OrderCap { .. }
        | Error::InvalidPrime(_)
        | Error::Inapplicable(_) => EXIT_UNSUPPORTED,
        _ => EXIT_INPUT,
    }
}

/// Caps the global thread pool at `SOCLELAB_THREADS` when it is set.
pub fn init_threads() {
    if let Some(n) = std::env::var("SOCLELAB_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}
