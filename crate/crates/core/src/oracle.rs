//! Pour simulation from first principles, with no reference to the graph
//! model. This is the ground truth the model is checked against.

use crate::types::{Distribution, Jug, Pour, Quadruple};
use crate::{Error, Result};

/// Pours `source` into `destination` until the source is empty or the
/// destination is full.
///
/// Returns `Ok(None)` when nothing would move (source empty or destination
/// already full). Errors on an invalid state or when `source == destination`.
pub fn pour(
    q: &Quadruple,
    state: Distribution,
    source: Jug,
    destination: Jug,
) -> Result<Option<Pour>> {
    if source == destination {
        return Err(Error::SameJug(source));
    }
    let mut levels = q.contents(state)?;
    let room = q.capacity(destination) - levels[destination.slot()];
    let amount = levels[source.slot()].min(room);
    if amount == 0 {
        return Ok(None);
    }
    levels[source.slot()] -= amount;
    levels[destination.slot()] += amount;
    Ok(Some(Pour {
        source,
        destination,
        amount,
        result: Distribution::new(levels[1], levels[2]),
    }))
}

/// Every non-trivial pour available from `state`, in `(source, destination)`
/// order A→B, A→C, B→A, B→C, C→A, C→B. Empty for invalid states.
pub fn pours(q: &Quadruple, state: Distribution) -> Result<Vec<Pour>> {
    q.check_bounds(state)?;
    if !q.is_valid_unchecked(state) {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(6);
    for source in Jug::ALL {
        for destination in Jug::ALL {
            if source != destination {
                out.extend(pour(q, state, source, destination)?);
            }
        }
    }
    Ok(out)
}

/// States reachable from `state` by a single pour, sorted row-major with
/// duplicates merged.
pub fn successors(q: &Quadruple, state: Distribution) -> Result<Vec<Distribution>> {
    let mut out: Vec<Distribution> = pours(q, state)?.into_iter().map(|p| p.result).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32, j: u32) -> Distribution {
        Distribution::new(i, j)
    }

    #[test]
    fn pour_examples() {
        let q7 = Quadruple::new(7, 4, 2, 6).unwrap();
        assert_eq!(
            pour(&q7, v(1, 1), Jug::A, Jug::B),
            Ok(Some(Pour {
                source: Jug::A,
                destination: Jug::B,
                amount: 3,
                result: v(4, 1)
            }))
        );
        assert_eq!(pour(&q7, v(4, 0), Jug::A, Jug::B), Ok(None));

        let q10 = Quadruple::new(10, 7, 3, 10).unwrap();
        assert_eq!(
            pour(&q10, v(4, 3), Jug::C, Jug::A),
            Ok(Some(Pour {
                source: Jug::C,
                destination: Jug::A,
                amount: 3,
                result: v(4, 0)
            }))
        );
    }

    #[test]
    fn pour_errors() {
        let q7 = Quadruple::new(7, 4, 2, 6).unwrap();
        assert_eq!(
            pour(&q7, v(1, 1), Jug::B, Jug::B),
            Err(Error::SameJug(Jug::B))
        );
        let q5 = Quadruple::new(5, 4, 3, 8).unwrap();
        assert!(matches!(
            pour(&q5, v(0, 0), Jug::A, Jug::B),
            Err(Error::InvalidState { .. })
        ));
    }

    #[test]
    fn successor_examples() {
        let q7 = Quadruple::new(7, 4, 2, 6).unwrap();
        assert_eq!(
            successors(&q7, v(1, 1)).unwrap(),
            vec![v(0, 1), v(0, 2), v(1, 0), v(1, 2), v(2, 0), v(4, 1)]
        );
        assert_eq!(successors(&q7, v(0, 0)).unwrap(), vec![v(0, 2), v(4, 0)]);
        let q5 = Quadruple::new(5, 4, 3, 8).unwrap();
        assert!(successors(&q5, v(0, 0)).unwrap().is_empty());
    }

    #[test]
    fn empty_and_fill_at_once_is_one_pour() {
        // A holds 2, B has exactly 2 gallons of room
        let q = Quadruple::new(7, 4, 2, 6).unwrap();
        let p = pour(&q, v(2, 2), Jug::A, Jug::B).unwrap().unwrap();
        assert_eq!((p.amount, p.result), (2, v(4, 2)));
    }
}
