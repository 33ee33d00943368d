use crate::types::{Distribution, Jug};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("capacities and total must be positive integers, got ({a},{b},{c},{d})")]
    NonPositive { a: u32, b: u32, c: u32, d: u32 },
    #[error("capacities must satisfy a > b > c, got a={a}, b={b}, c={c}")]
    Ordering { a: u32, b: u32, c: u32 },
    #[error("total volume d={d} is odd; it must be even to split into two halves")]
    OddTotal { d: u32 },
    #[error("jug B (capacity {b}) cannot hold half of the total d={d}; need b >= d/2")]
    HalfExceedsB { b: u32, d: u32 },
    #[error("total volume d={d} exceeds the combined capacity a+b+c={capacity}")]
    TotalExceedsCapacity { d: u32, capacity: u64 },
    #[error("distribution {state} lies outside the vertex grid 0..={b} x 0..={c}")]
    OutOfBounds { state: Distribution, b: u32, c: u32 },
    #[error("distribution {state} is not a valid state: jug A would hold {a_content} gallons (capacity {a})")]
    InvalidState {
        state: Distribution,
        a_content: i64,
        a: u32,
    },
    #[error("cannot pour jug {0} into itself")]
    SameJug(Jug),
    #[error("no edge from {from} to {to}")]
    NoEdge {
        from: Distribution,
        to: Distribution,
    },
}
