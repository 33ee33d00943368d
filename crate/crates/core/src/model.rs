//! The directed state graph, defined purely by arithmetic on coordinates.
//!
//! For a quadruple `(a, b, c, d)` the vertices are all `(i, j)` with
//! `0 <= i <= b` and `0 <= j <= c`. There is an edge `(i, j) -> (i', j')`
//! exactly when the two vertices differ, both are valid states, and one of
//! the following holds:
//!
//! 1. `j' = j` and `i'` is one of `0`, `b`, `d - j`, `d - a - j`;
//! 2. `i' = i` and `j'` is one of `0`, `c`, `d - i`, `d - a - i`;
//! 3. `i + j = i' + j'` and either `i'` is `0` or `b`, or `j'` is `0` or `c`.
//!
//! Nothing here simulates a pour; [`crate::oracle`] does that independently.

use std::fmt;

use crate::types::{Distribution, Quadruple};
use crate::{Error, Result};

/// Which of the three edge conditions an edge satisfies. For any existing
/// edge exactly one applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// `j' = j`: only the level of B changes, against A.
    BLevelChange,
    /// `i' = i`: only the level of C changes, against A.
    CLevelChange,
    /// `i + j = i' + j'`: A is untouched, wine moves between B and C.
    APreserved,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::BLevelChange => "b-level-change",
            EdgeKind::CLevelChange => "c-level-change",
            EdgeKind::APreserved => "a-preserved",
        })
    }
}

fn level_targets(q: &Quadruple, capacity: u32, other: u32) -> [i64; 4] {
    let d = q.d() as i64;
    let a = q.a() as i64;
    let other = other as i64;
    [0, capacity as i64, d - other, d - a - other]
}

fn cond_b_level(q: &Quadruple, from: Distribution, to: Distribution) -> bool {
    to.j == from.j && level_targets(q, q.b(), from.j).contains(&(to.i as i64))
}

fn cond_c_level(q: &Quadruple, from: Distribution, to: Distribution) -> bool {
    to.i == from.i && level_targets(q, q.c(), from.i).contains(&(to.j as i64))
}

fn cond_a_preserved(q: &Quadruple, from: Distribution, to: Distribution) -> bool {
    from.i + from.j == to.i + to.j && (to.i == 0 || to.i == q.b() || to.j == 0 || to.j == q.c())
}

fn kind_unchecked(q: &Quadruple, from: Distribution, to: Distribution) -> Option<EdgeKind> {
    if from == to || !q.is_valid_unchecked(from) || !q.is_valid_unchecked(to) {
        return None;
    }
    if cond_b_level(q, from, to) {
        Some(EdgeKind::BLevelChange)
    } else if cond_c_level(q, from, to) {
        Some(EdgeKind::CLevelChange)
    } else if cond_a_preserved(q, from, to) {
        Some(EdgeKind::APreserved)
    } else {
        None
    }
}

/// Edge predicate of the state graph. Errors if either endpoint lies outside
/// the vertex grid.
pub fn edge_exists(q: &Quadruple, from: Distribution, to: Distribution) -> Result<bool> {
    q.check_bounds(from)?;
    q.check_bounds(to)?;
    Ok(kind_unchecked(q, from, to).is_some())
}

/// Returns the condition an existing edge satisfies.
pub fn classify_edge(q: &Quadruple, from: Distribution, to: Distribution) -> Result<EdgeKind> {
    q.check_bounds(from)?;
    q.check_bounds(to)?;
    kind_unchecked(q, from, to).ok_or(Error::NoEdge { from, to })
}

/// Out-neighbours of `from`, sorted row-major.
///
/// Only the at most twelve coordinates named by the three conditions are
/// tried, instead of filtering the whole grid.
pub fn successors(q: &Quadruple, from: Distribution) -> Result<Vec<Distribution>> {
    q.check_bounds(from)?;
    if !q.is_valid_unchecked(from) {
        return Ok(Vec::new());
    }
    let (b, c) = (q.b() as i64, q.c() as i64);
    let (i, j) = (from.i as i64, from.j as i64);
    let sum = i + j;

    let mut candidates: Vec<(i64, i64)> = Vec::with_capacity(12);
    candidates.extend(level_targets(q, q.b(), from.j).iter().map(|&ni| (ni, j)));
    candidates.extend(level_targets(q, q.c(), from.i).iter().map(|&nj| (i, nj)));
    candidates.extend([(0, sum), (b, sum - b), (sum, 0), (sum - c, c)]);

    let mut out: Vec<Distribution> = candidates
        .into_iter()
        .filter(|&(ni, nj)| (0..=b).contains(&ni) && (0..=c).contains(&nj))
        .map(|(ni, nj)| Distribution::new(ni as u32, nj as u32))
        .filter(|&to| kind_unchecked(q, from, to).is_some())
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// The fully materialised state graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelGraph {
    quadruple: Quadruple,
    // indexed by `Quadruple::index_of`, each list sorted row-major
    adjacency: Vec<Vec<Distribution>>,
}

/// Materialises the state graph of `q`.
pub fn build_graph(q: &Quadruple) -> ModelGraph {
    let adjacency = q
        .vertices()
        .map(|v| successors(q, v).expect("grid vertex is in bounds"))
        .collect();
    ModelGraph {
        quadruple: *q,
        adjacency,
    }
}

impl ModelGraph {
    /// Rebuilds a graph from an explicit edge list, e.g. one read back from a
    /// serialized document. Duplicate edges are merged. Endpoints must be
    /// grid vertices; no other check is made, so the result may differ from
    /// [`build_graph`] if the edge list does.
    pub fn from_edges<I>(quadruple: Quadruple, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Distribution, Distribution)>,
    {
        let mut adjacency = vec![Vec::new(); quadruple.vertex_count()];
        for (from, to) in edges {
            quadruple.check_bounds(from)?;
            quadruple.check_bounds(to)?;
            adjacency[quadruple.index_of(from)].push(to);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self {
            quadruple,
            adjacency,
        })
    }

    pub fn quadruple(&self) -> &Quadruple {
        &self.quadruple
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Distribution> {
        self.quadruple.vertices()
    }

    /// # Panics
    ///
    /// If `v` is outside the vertex grid.
    pub fn out_neighbors(&self, v: Distribution) -> &[Distribution] {
        assert!(self.quadruple.contains(v), "{v} is not a vertex");
        &self.adjacency[self.quadruple.index_of(v)]
    }

    /// All edges, ordered by source then target (row-major).
    pub fn edges(&self) -> impl Iterator<Item = (Distribution, Distribution)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(move |(n, list)| {
                let from = self.quadruple.vertex_at(n);
                list.iter().map(move |&to| (from, to))
            })
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// Vertices with in-degree and out-degree zero.
    pub fn isolated(&self) -> Vec<bool> {
        let mut touched: Vec<bool> = self.adjacency.iter().map(|l| !l.is_empty()).collect();
        for (_, to) in self.edges() {
            touched[self.quadruple.index_of(to)] = true;
        }
        touched.into_iter().map(|t| !t).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: u32, b: u32, c: u32, d: u32) -> Quadruple {
        Quadruple::new(a, b, c, d).unwrap()
    }

    fn v(i: u32, j: u32) -> Distribution {
        Distribution::new(i, j)
    }

    #[test]
    fn edge_predicate_examples() {
        let q7 = q(7, 4, 2, 6);
        assert_eq!(edge_exists(&q7, v(1, 1), v(4, 1)), Ok(true));
        assert_eq!(edge_exists(&q7, v(1, 1), v(1, 1)), Ok(false));
        assert_eq!(edge_exists(&q7, v(0, 0), v(3, 0)), Ok(false));
        assert_eq!(edge_exists(&q(5, 4, 3, 8), v(0, 0), v(4, 0)), Ok(false));
        assert!(matches!(
            edge_exists(&q7, v(5, 0), v(0, 0)),
            Err(Error::OutOfBounds { .. })
        ));
    }

    #[test]
    fn classification_examples() {
        let q7 = q(7, 4, 2, 6);
        assert_eq!(
            classify_edge(&q7, v(1, 1), v(4, 1)),
            Ok(EdgeKind::BLevelChange)
        );
        assert_eq!(
            classify_edge(&q7, v(2, 2), v(4, 0)),
            Ok(EdgeKind::APreserved)
        );
        assert_eq!(
            classify_edge(&q7, v(0, 1), v(0, 0)),
            Ok(EdgeKind::CLevelChange)
        );
        assert_eq!(
            classify_edge(&q7, v(0, 0), v(3, 0)),
            Err(Error::NoEdge {
                from: v(0, 0),
                to: v(3, 0)
            })
        );
    }

    #[test]
    fn successor_examples() {
        assert_eq!(
            successors(&q(7, 4, 2, 6), v(1, 1)).unwrap(),
            vec![v(0, 1), v(0, 2), v(1, 0), v(1, 2), v(2, 0), v(4, 1)]
        );
        assert!(successors(&q(5, 4, 3, 8), v(0, 0)).unwrap().is_empty());
        assert_eq!(
            successors(&q(10, 7, 3, 10), v(0, 0)).unwrap(),
            vec![v(0, 3), v(7, 0)]
        );
    }

    #[test]
    fn graph_sizes() {
        let g = build_graph(&q(7, 4, 2, 6));
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(build_graph(&q(10, 7, 3, 10)).vertex_count(), 32);
        assert_eq!(g, build_graph(&q(7, 4, 2, 6)));
    }

    #[test]
    fn invalid_vertices_are_isolated() {
        let q5 = q(5, 4, 3, 8);
        let g = build_graph(&q5);
        let isolated = g.isolated();
        for w in q5.vertices() {
            if !q5.is_valid_unchecked(w) {
                assert!(isolated[q5.index_of(w)], "{w} should be isolated");
            }
        }
        // (0,0), (0,1), (0,2), (1,0), (1,1), (2,0) put more than 5 gallons in A
        assert_eq!(isolated.iter().filter(|&&x| x).count(), 6);
    }

    #[test]
    fn from_edges_round_trip() {
        let g = build_graph(&q(10, 7, 3, 10));
        let back = ModelGraph::from_edges(*g.quadruple(), g.edges()).unwrap();
        assert_eq!(back, g);
    }
}
