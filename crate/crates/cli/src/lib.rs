//! Library half of the command-line tool: command implementations, run
//! reports, and the verification suites.

pub mod commands;
pub mod report;
pub mod verify;

pub use commands::GlobalOpts;
pub use report::{Check, OutputFormat, RunReport};
pub use verify::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_BUDGET_EXCEEDED: i32 = 3;

/// Maps library errors onto the documented exit codes.
pub fn exit_code_for(e: &morse_core::Error) -> i32 {
    use morse_core::Error;
    match e {
        Error::FaceBudget { .. }
        | Error::SubsetBudget { .. }
        | Error::CubeBudget { .. }
        | Error::CollapseBudget(_) => EXIT_BUDGET_EXCEEDED,
        _ => EXIT_INPUT_ERROR,
    }
}
