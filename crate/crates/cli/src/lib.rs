//! Input parsing and output rendering for the `decant` command-line tool.

pub mod dot;
pub mod instance;
pub mod structured;
pub mod text;

pub use instance::{parse_instance, InputError, PuzzleSpecFile};

/// Process exit codes.
pub mod exit {
    /// Target reached, or verification found nothing.
    pub const SOLVABLE: i32 = 0;
    /// Target unreachable, or verification found discrepancies.
    pub const UNSOLVABLE: i32 = 1;
    /// Bad flags, unreadable input or an invalid puzzle.
    pub const INPUT_ERROR: i32 = 2;
}
