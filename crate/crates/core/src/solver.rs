//! Reachability and minimum-pour search over the state graph.
//!
//! Searches run over implicit successors; no graph is materialised.

use std::collections::{BTreeSet, VecDeque};

use crate::model::{self, EdgeKind};
use crate::oracle;
use crate::types::{Distribution, Jug, Pour, PuzzleInstance, Quadruple};
use crate::{Error, Result};

/// Which successor relation a search walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SuccessorSource {
    /// Arithmetic edge conditions of the graph model.
    #[default]
    Model,
    /// Simulated pours.
    Oracle,
}

impl SuccessorSource {
    pub fn successors(self, q: &Quadruple, v: Distribution) -> Result<Vec<Distribution>> {
        match self {
            SuccessorSource::Model => model::successors(q, v),
            SuccessorSource::Oracle => oracle::successors(q, v),
        }
    }

    /// The pour realising the edge `from -> to` under this relation.
    pub fn pour_for(self, q: &Quadruple, from: Distribution, to: Distribution) -> Result<Pour> {
        match self {
            SuccessorSource::Model => decorate(q, from, to),
            SuccessorSource::Oracle => oracle::pours(q, from)?
                .into_iter()
                .find(|p| p.result == to)
                .ok_or(Error::NoEdge { from, to }),
        }
    }
}

/// Derives the pour behind a model edge from the coordinate change alone.
///
/// Condition 1 edges move wine between A and B, condition 2 between A and C,
/// condition 3 between B and C; the sign of the change picks the direction.
pub fn decorate(q: &Quadruple, from: Distribution, to: Distribution) -> Result<Pour> {
    let kind = model::classify_edge(q, from, to)?;
    let (di, dj) = (to.i as i64 - from.i as i64, to.j as i64 - from.j as i64);
    let (source, destination, delta) = match kind {
        EdgeKind::BLevelChange if di > 0 => (Jug::A, Jug::B, di),
        EdgeKind::BLevelChange => (Jug::B, Jug::A, di),
        EdgeKind::CLevelChange if dj > 0 => (Jug::A, Jug::C, dj),
        EdgeKind::CLevelChange => (Jug::C, Jug::A, dj),
        EdgeKind::APreserved if di > 0 => (Jug::C, Jug::B, di),
        EdgeKind::APreserved => (Jug::B, Jug::C, di),
    };
    let pour = Pour {
        source,
        destination,
        amount: delta.unsigned_abs() as u32,
        result: to,
    };
    debug_assert_eq!(
        oracle::pour(q, from, source, destination).ok().flatten(),
        Some(pour),
        "model edge {from} -> {to} disagrees with simulated pour"
    );
    Ok(pour)
}

/// A minimum-length pour sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// Visited states from start to target inclusive.
    pub path: Vec<Distribution>,
    /// `pours[k]` takes `path[k]` to `path[k + 1]`.
    pub pours: Vec<Pour>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub instance: PuzzleInstance,
    /// `None` when the target is unreachable.
    pub solution: Option<Solution>,
}

impl SolveResult {
    pub fn is_solvable(&self) -> bool {
        self.solution.is_some()
    }

    pub fn pour_count(&self) -> Option<usize> {
        self.solution.as_ref().map(|s| s.pours.len())
    }

    pub fn path(&self) -> Option<&[Distribution]> {
        self.solution.as_ref().map(|s| s.path.as_slice())
    }
}

const UNSEEN: u32 = u32::MAX;

/// Forward BFS from `start`. Returns the successor list of every reached
/// vertex (indexed row-major, `None` if unreached).
fn explore(
    q: &Quadruple,
    start: Distribution,
    source: SuccessorSource,
) -> Result<Vec<Option<Vec<Distribution>>>> {
    let mut succ: Vec<Option<Vec<Distribution>>> = vec![None; q.vertex_count()];
    let mut queue = VecDeque::from([start]);
    let mut seen = vec![false; q.vertex_count()];
    seen[q.index_of(start)] = true;
    while let Some(v) = queue.pop_front() {
        let next = source.successors(q, v)?;
        for &w in &next {
            let n = q.index_of(w);
            if !seen[n] {
                seen[n] = true;
                queue.push_back(w);
            }
        }
        succ[q.index_of(v)] = Some(next);
    }
    Ok(succ)
}

/// Shortest pour sequence from the instance's start to its target.
///
/// Among all minimum-length paths the one with the lexicographically least
/// vertex sequence is returned, so results are reproducible.
pub fn shortest_path(p: &PuzzleInstance, source: SuccessorSource) -> SolveResult {
    let q = p.quadruple();
    let (start, target) = (p.start(), p.target());
    let succ = explore(q, start, source).expect("instance endpoints are valid vertices");

    let unsolved = SolveResult {
        instance: *p,
        solution: None,
    };
    if succ[q.index_of(target)].is_none() {
        return unsolved;
    }

    // Distances to the target, over the reached part of the graph.
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); q.vertex_count()];
    for (n, list) in succ.iter().enumerate() {
        for w in list.iter().flatten() {
            preds[q.index_of(*w)].push(n);
        }
    }
    let mut dist = vec![UNSEEN; q.vertex_count()];
    let mut queue = VecDeque::from([q.index_of(target)]);
    dist[q.index_of(target)] = 0;
    while let Some(n) = queue.pop_front() {
        for &m in &preds[n] {
            if dist[m] == UNSEEN {
                dist[m] = dist[n] + 1;
                queue.push_back(m);
            }
        }
    }

    // Greedy descent; successor lists are sorted, so the first neighbour one
    // step closer is the lexicographically least choice.
    let mut path = vec![start];
    let mut at = start;
    while at != target {
        let here = dist[q.index_of(at)];
        at = *succ[q.index_of(at)]
            .as_ref()
            .expect("vertices on a path to the target were reached")
            .iter()
            .find(|w| dist[q.index_of(**w)] == here - 1)
            .expect("a vertex at distance k > 0 has a neighbour at k - 1");
        path.push(at);
    }

    let pours = path
        .windows(2)
        .map(|step| {
            source
                .pour_for(q, step[0], step[1])
                .expect("path edges come from the same relation")
        })
        .collect();
    SolveResult {
        instance: *p,
        solution: Some(Solution { path, pours }),
    }
}

/// All states reachable from `start` (including `start`) over the model.
pub fn reachable_set(q: &Quadruple, start: Distribution) -> Result<BTreeSet<Distribution>> {
    reachable_set_with(q, start, SuccessorSource::Model)
}

pub fn reachable_set_with(
    q: &Quadruple,
    start: Distribution,
    source: SuccessorSource,
) -> Result<BTreeSet<Distribution>> {
    q.check_valid(start)?;
    let succ = explore(q, start, source)?;
    Ok(succ
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_some())
        .map(|(n, _)| q.vertex_at(n))
        .collect())
}

/// Whether the target is reachable from the start.
pub fn is_solvable(p: &PuzzleInstance) -> bool {
    let q = p.quadruple();
    reachable_set(q, p.start())
        .expect("instance start is valid")
        .contains(&p.target())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32, j: u32) -> Distribution {
        Distribution::new(i, j)
    }

    fn halving(a: u32, b: u32, c: u32, d: u32, start: Distribution) -> PuzzleInstance {
        PuzzleInstance::halving(Quadruple::new(a, b, c, d).unwrap(), start).unwrap()
    }

    #[test]
    fn classic_ten_seven_three() {
        let p = halving(10, 7, 3, 10, v(0, 0));
        let r = shortest_path(&p, SuccessorSource::Model);
        let path = r.path().unwrap();
        assert_eq!(path.first(), Some(&v(0, 0)));
        assert_eq!(path.last(), Some(&v(5, 0)));
        assert!(r.pour_count().unwrap() <= 9);
        assert!(is_solvable(&p));
    }

    #[test]
    fn gcd_two_is_unsolvable() {
        let p = halving(10, 6, 4, 10, v(0, 0));
        assert!(!shortest_path(&p, SuccessorSource::Model).is_solvable());
        assert!(!shortest_path(&p, SuccessorSource::Oracle).is_solvable());
        assert!(!is_solvable(&p));
        let reach = reachable_set(p.quadruple(), v(0, 0)).unwrap();
        assert!(reach.iter().all(|w| w.i % 2 == 0 && w.j % 2 == 0));
    }

    #[test]
    fn eight_five_three() {
        assert!(is_solvable(&halving(8, 5, 3, 8, v(0, 0))));
    }

    #[test]
    fn start_equals_target() {
        let p = halving(10, 7, 3, 10, v(5, 0));
        let r = shortest_path(&p, SuccessorSource::Model);
        assert_eq!(r.pour_count(), Some(0));
        assert_eq!(r.path(), Some(&[v(5, 0)][..]));
    }

    #[test]
    fn reachable_examples() {
        let q7 = Quadruple::new(7, 4, 2, 6).unwrap();
        // every level stays even from (0,0), so the half split (3,0) is out
        let reach = reachable_set(&q7, v(0, 0)).unwrap();
        let expected = [v(0, 0), v(0, 2), v(2, 0), v(2, 2), v(4, 0), v(4, 2)];
        assert_eq!(reach.into_iter().collect::<Vec<_>>(), expected);
        let reach = reachable_set(&q7, v(2, 1)).unwrap();
        assert!(reach.contains(&v(3, 0)));
        assert!(reach.contains(&v(2, 1)));
        let q5 = Quadruple::new(5, 4, 3, 8).unwrap();
        assert!(matches!(
            reachable_set(&q5, v(0, 0)),
            Err(Error::InvalidState { .. })
        ));
    }

    #[test]
    fn decoration_matches_oracle() {
        let q = Quadruple::new(10, 7, 3, 10).unwrap();
        for from in q.vertices() {
            for to in model::successors(&q, from).unwrap() {
                let p = decorate(&q, from, to).unwrap();
                assert_eq!(
                    oracle::pour(&q, from, p.source, p.destination).unwrap(),
                    Some(p)
                );
            }
        }
    }

    #[test]
    fn repeated_runs_agree() {
        let p = halving(13, 9, 4, 18, v(9, 4));
        let first = shortest_path(&p, SuccessorSource::Model);
        for _ in 0..3 {
            assert_eq!(shortest_path(&p, SuccessorSource::Model), first);
        }
    }
}
