use std::fmt;

use crate::{Error, Result};

/// Puzzle parameters `(a, b, c, d)`: the three jug capacities and the total
/// volume of wine.
///
/// A `Quadruple` can only be obtained through [`Quadruple::new`], so holding
/// one means all of the following hold:
///
/// * `a > b > c > 0`
/// * `d` is even and positive
/// * `b >= d / 2`
/// * `d <= a + b + c`
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quadruple {
    a: u32,
    b: u32,
    c: u32,
    d: u32,
}

impl Quadruple {
    /// Validates the four parameters. Each violated condition maps to its own
    /// error variant. The total is checked against `a + b + c` before the
    /// half-fits-in-B condition, since the latter implies the former.
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 || d == 0 {
            return Err(Error::NonPositive { a, b, c, d });
        }
        if !(a > b && b > c) {
            return Err(Error::Ordering { a, b, c });
        }
        if !d.is_multiple_of(2) {
            return Err(Error::OddTotal { d });
        }
        let capacity = a as u64 + b as u64 + c as u64;
        if d as u64 > capacity {
            return Err(Error::TotalExceedsCapacity { d, capacity });
        }
        if b < d / 2 {
            return Err(Error::HalfExceedsB { b, d });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn capacity(&self, jug: Jug) -> u32 {
        match jug {
            Jug::A => self.a,
            Jug::B => self.b,
            Jug::C => self.c,
        }
    }

    /// The halving target `(d/2, 0)`.
    pub fn half_split(&self) -> Distribution {
        Distribution::new(self.d / 2, 0)
    }

    /// Number of vertices in the state grid, `(b+1)(c+1)`.
    pub fn vertex_count(&self) -> usize {
        (self.b as usize + 1) * (self.c as usize + 1)
    }

    pub fn contains(&self, v: Distribution) -> bool {
        v.i <= self.b && v.j <= self.c
    }

    pub(crate) fn check_bounds(&self, v: Distribution) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::OutOfBounds {
                state: v,
                b: self.b,
                c: self.c,
            })
        }
    }

    /// Implied content of jug A. Negative when `i + j > d`.
    pub fn a_content(&self, v: Distribution) -> i64 {
        self.d as i64 - v.i as i64 - v.j as i64
    }

    /// Validity without the bounds check; callers must ensure `contains(v)`.
    pub(crate) fn is_valid_unchecked(&self, v: Distribution) -> bool {
        let a_content = self.a_content(v);
        (0..=self.a as i64).contains(&a_content)
    }

    pub(crate) fn check_valid(&self, v: Distribution) -> Result<()> {
        self.check_bounds(v)?;
        if self.is_valid_unchecked(v) {
            Ok(())
        } else {
            Err(Error::InvalidState {
                state: v,
                a_content: self.a_content(v),
                a: self.a,
            })
        }
    }

    /// Contents of `[A, B, C]` for a valid state.
    pub fn contents(&self, v: Distribution) -> Result<[u32; 3]> {
        self.check_valid(v)?;
        Ok([self.a_content(v) as u32, v.i, v.j])
    }

    /// Row-major index of `v` in the vertex grid.
    pub fn index_of(&self, v: Distribution) -> usize {
        v.i as usize * (self.c as usize + 1) + v.j as usize
    }

    pub fn vertex_at(&self, index: usize) -> Distribution {
        let width = self.c as usize + 1;
        Distribution::new((index / width) as u32, (index % width) as u32)
    }

    /// All vertices `(i, j)`, `0 <= i <= b`, `0 <= j <= c`, in row-major order.
    pub fn vertices(&self) -> impl Iterator<Item = Distribution> {
        let (b, c) = (self.b, self.c);
        (0..=b).flat_map(move |i| (0..=c).map(move |j| Distribution::new(i, j)))
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

/// Returns whether `v` is a valid state of `q`, i.e. jug A would hold between
/// `0` and `a` gallons. Errors if `v` lies outside the vertex grid.
pub fn is_valid_state(q: &Quadruple, v: Distribution) -> Result<bool> {
    q.check_bounds(v)?;
    Ok(q.is_valid_unchecked(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Jug {
    A,
    B,
    C,
}

impl Jug {
    pub const ALL: [Jug; 3] = [Jug::A, Jug::B, Jug::C];

    pub(crate) fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Jug {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Jug::A => "A",
            Jug::B => "B",
            Jug::C => "C",
        };
        f.write_str(name)
    }
}

/// Contents of jugs B and C. Ordering is row-major: by `i`, then `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Distribution {
    pub i: u32,
    pub j: u32,
}

impl Distribution {
    pub const fn new(i: u32, j: u32) -> Self {
        Self { i, j }
    }
}

impl From<(u32, u32)> for Distribution {
    fn from((i, j): (u32, u32)) -> Self {
        Self { i, j }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A quadruple together with start and target states, both valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PuzzleInstance {
    quadruple: Quadruple,
    start: Distribution,
    target: Distribution,
}

impl PuzzleInstance {
    pub fn new(quadruple: Quadruple, start: Distribution, target: Distribution) -> Result<Self> {
        quadruple.check_valid(start)?;
        quadruple.check_valid(target)?;
        Ok(Self {
            quadruple,
            start,
            target,
        })
    }

    /// Instance with the halving target `(d/2, 0)`.
    pub fn halving(quadruple: Quadruple, start: Distribution) -> Result<Self> {
        Self::new(quadruple, start, quadruple.half_split())
    }

    pub fn quadruple(&self) -> &Quadruple {
        &self.quadruple
    }

    pub fn start(&self) -> Distribution {
        self.start
    }

    pub fn target(&self) -> Distribution {
        self.target
    }
}

/// One pour that stops when the source is empty or the destination is full.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pour {
    pub source: Jug,
    pub destination: Jug,
    pub amount: u32,
    pub result: Distribution,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_figure_quadruple() {
        let q = Quadruple::new(7, 4, 2, 6).unwrap();
        assert_eq!((q.a(), q.b(), q.c(), q.d()), (7, 4, 2, 6));
        assert_eq!(q.vertex_count(), 15);
    }

    #[test]
    fn rejects_each_condition_distinctly() {
        assert_eq!(Quadruple::new(7, 4, 2, 7), Err(Error::OddTotal { d: 7 }));
        assert_eq!(
            Quadruple::new(7, 3, 2, 8),
            Err(Error::HalfExceedsB { b: 3, d: 8 })
        );
        assert_eq!(
            Quadruple::new(4, 4, 2, 6),
            Err(Error::Ordering { a: 4, b: 4, c: 2 })
        );
        assert_eq!(
            Quadruple::new(3, 2, 1, 6),
            Err(Error::HalfExceedsB { b: 2, d: 6 })
        );
        assert_eq!(
            Quadruple::new(5, 4, 3, 14),
            Err(Error::TotalExceedsCapacity {
                d: 14,
                capacity: 12
            })
        );
        assert!(matches!(
            Quadruple::new(7, 4, 0, 6),
            Err(Error::NonPositive { .. })
        ));
        assert!(matches!(
            Quadruple::new(7, 2, 1, 6),
            Err(Error::HalfExceedsB { .. })
        ));
    }

    #[test]
    fn validity() {
        let q = Quadruple::new(7, 4, 2, 6).unwrap();
        assert_eq!(is_valid_state(&q, Distribution::new(0, 0)), Ok(true));

        let q = Quadruple::new(5, 4, 3, 8).unwrap();
        assert_eq!(is_valid_state(&q, Distribution::new(0, 0)), Ok(false));

        let q = Quadruple::new(10, 7, 3, 10).unwrap();
        assert_eq!(is_valid_state(&q, Distribution::new(7, 3)), Ok(true));
        assert!(matches!(
            is_valid_state(&q, Distribution::new(8, 0)),
            Err(Error::OutOfBounds { .. })
        ));
    }

    #[test]
    fn half_split_is_always_a_valid_vertex() {
        for a in 3..=14 {
            for b in 2..a {
                for c in 1..b {
                    for d in (2..=2 * b).step_by(2) {
                        let q = Quadruple::new(a, b, c, d).unwrap();
                        assert_eq!(is_valid_state(&q, q.half_split()), Ok(true));
                    }
                }
            }
        }
    }

    #[test]
    fn instance_rejects_invalid_endpoints() {
        let q = Quadruple::new(5, 4, 3, 8).unwrap();
        assert!(matches!(
            PuzzleInstance::halving(q, Distribution::new(0, 0)),
            Err(Error::InvalidState { a_content: 8, .. })
        ));
        let p = PuzzleInstance::halving(q, Distribution::new(4, 3)).unwrap();
        assert_eq!(p.target(), Distribution::new(4, 0));
    }

    #[test]
    fn index_round_trip() {
        let q = Quadruple::new(10, 7, 3, 10).unwrap();
        for (n, v) in q.vertices().enumerate() {
            assert_eq!(q.index_of(v), n);
            assert_eq!(q.vertex_at(n), v);
        }
        assert_eq!(q.vertices().count(), 32);
    }
}
