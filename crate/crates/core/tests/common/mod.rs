#![allow(dead_code)]

use std::collections::HashMap;
use std::path::Path;

use decant_core::oracle;
use decant_core::{Distribution, Quadruple};
use proptest::prelude::*;

pub fn v(i: u32, j: u32) -> Distribution {
    Distribution::new(i, j)
}

pub fn q(a: u32, b: u32, c: u32, d: u32) -> Quadruple {
    Quadruple::new(a, b, c, d).unwrap()
}

/// Reads an edge list of `(i,j) -> (i',j')` lines; `#` starts a comment.
pub fn read_edge_list(path: impl AsRef<Path>) -> Vec<(Distribution, Distribution)> {
    let text = std::fs::read_to_string(path).unwrap();
    let parse = |s: &str| {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (i, j) = s.split_once(',').unwrap();
        v(i.trim().parse().unwrap(), j.trim().parse().unwrap())
    };
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (from, to) = l.split_once("->").unwrap();
            (parse(from), parse(to))
        })
        .collect()
}

pub fn golden_path(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

/// The three edge conditions restated literally, returned as flags.
pub fn conditions(q: &Quadruple, from: Distribution, to: Distribution) -> [bool; 3] {
    let (a, b, c, d) = (q.a() as i64, q.b() as i64, q.c() as i64, q.d() as i64);
    let (i, j, ni, nj) = (from.i as i64, from.j as i64, to.i as i64, to.j as i64);
    [
        nj == j && [0, b, d - j, d - a - j].contains(&ni),
        ni == i && [0, c, d - i, d - a - i].contains(&nj),
        i + j == ni + nj && (ni == 0 || ni == b || nj == 0 || nj == c),
    ]
}

/// Minimum number of pours from `start` to `target`, found by iterative
/// deepening over simulated pours. A vertex already expanded at a depth no
/// greater than the current one is not expanded again within an iteration.
pub fn min_pours_by_enumeration(
    q: &Quadruple,
    start: Distribution,
    target: Distribution,
) -> Option<usize> {
    fn dfs(
        q: &Quadruple,
        at: Distribution,
        target: Distribution,
        depth: usize,
        bound: usize,
        best: &mut HashMap<Distribution, usize>,
    ) -> bool {
        if at == target {
            return true;
        }
        if depth == bound {
            return false;
        }
        if best.get(&at).is_some_and(|&seen| seen <= depth) {
            return false;
        }
        best.insert(at, depth);
        oracle::pours(q, at)
            .unwrap()
            .into_iter()
            .any(|p| dfs(q, p.result, target, depth + 1, bound, best))
    }
    (0..q.vertex_count()).find(|&bound| dfs(q, start, target, 0, bound, &mut HashMap::new()))
}

/// Strategy over valid quadruples with `a <= max_a`.
pub fn quadruple(max_a: u32) -> impl Strategy<Value = Quadruple> {
    (3..=max_a)
        .prop_flat_map(|a| (Just(a), 2..a))
        .prop_flat_map(|(a, b)| (Just(a), Just(b), 1..b, 1..=b))
        .prop_map(|(a, b, c, half)| Quadruple::new(a, b, c, 2 * half).unwrap())
}

/// Strategy over a quadruple plus a valid state of it.
pub fn quadruple_and_state(max_a: u32) -> impl Strategy<Value = (Quadruple, Distribution)> {
    quadruple(max_a).prop_flat_map(|q| {
        let valid: Vec<Distribution> = q
            .vertices()
            .filter(|&w| decant_core::is_valid_state(&q, w).unwrap())
            .collect();
        (Just(q), proptest::sample::select(valid))
    })
}
