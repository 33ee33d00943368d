//! Graph model, pour simulator and shortest-path solver for the generic
//! three-jug decanting puzzle.
//!
//! Three jugs `A`, `B`, `C` with capacities `a > b > c` hold `d` gallons of
//! wine in total. A state is written as the pair `(i, j)` of the contents of
//! `B` and `C`; the content of `A` is implied as `d - i - j`. The goal is to
//! reach two equal halves, i.e. the state `(d/2, 0)`, using only pours that
//! stop when the source runs dry or the destination is full.
//!
//! * [`model`] builds the directed state graph from arithmetic conditions on
//!   the coordinates alone.
//! * [`oracle`] simulates pours from first principles.
//! * [`solver`] answers reachability and shortest-pour-sequence queries.
//! * [`verify`] cross-checks the model against the simulator and against the
//!   classical gcd criterion.

mod error;
pub mod model;
pub mod oracle;
pub mod solver;
mod types;
pub mod verify;

pub use error::Error;
pub use model::{build_graph, classify_edge, edge_exists, EdgeKind, ModelGraph};
pub use oracle::pour;
pub use solver::{
    is_solvable, reachable_set, shortest_path, Solution, SolveResult, SuccessorSource,
};
pub use types::{is_valid_state, Distribution, Jug, Pour, PuzzleInstance, Quadruple};
pub use verify::{
    check_edge_equivalence, gcd_criterion, sweep_edge_equivalence, DiscrepancyReport,
};

pub type Result<T, E = Error> = std::result::Result<T, E>;
