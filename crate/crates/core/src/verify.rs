//! Exhaustive cross-checks: graph model against pour simulation, and graph
//! reachability against the gcd criterion for the classical `a = b + c`
//! puzzle.

use num_integer::Integer;

use crate::solver::{shortest_path, SuccessorSource};
use crate::types::{Distribution, PuzzleInstance, Quadruple};
use crate::{model, oracle, solver};

/// Edge-set differences between the model and the simulated pours for one
/// quadruple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub quadruple: Quadruple,
    /// Pours the simulator allows that the model has no edge for.
    pub missing_in_model: Vec<(Distribution, Distribution)>,
    /// Model edges with no corresponding pour.
    pub extra_in_model: Vec<(Distribution, Distribution)>,
}

impl DiscrepancyReport {
    pub fn is_empty(&self) -> bool {
        self.missing_in_model.is_empty() && self.extra_in_model.is_empty()
    }
}

/// Compares model successors and simulated successors at every vertex.
pub fn check_edge_equivalence(q: &Quadruple) -> DiscrepancyReport {
    let mut report = DiscrepancyReport {
        quadruple: *q,
        missing_in_model: Vec::new(),
        extra_in_model: Vec::new(),
    };
    for v in q.vertices() {
        let by_model = model::successors(q, v).expect("grid vertex");
        let by_pour = oracle::successors(q, v).expect("grid vertex");
        // both lists are sorted
        let (mut m, mut p) = (by_model.iter().peekable(), by_pour.iter().peekable());
        loop {
            match (m.peek(), p.peek()) {
                (Some(x), Some(y)) if x == y => {
                    m.next();
                    p.next();
                }
                (Some(&&x), Some(&&y)) if x < y => {
                    report.extra_in_model.push((v, x));
                    m.next();
                }
                (_, Some(&&y)) => {
                    report.missing_in_model.push((v, y));
                    p.next();
                }
                (Some(&&x), None) => {
                    report.extra_in_model.push((v, x));
                    m.next();
                }
                (None, None) => break,
            }
        }
    }
    report
}

/// Every valid quadruple with `a <= max_a`, ordered by `(a, b, c, d)`.
pub fn admissible_quadruples(max_a: u32) -> impl Iterator<Item = Quadruple> {
    (3..=max_a).flat_map(|a| {
        (2..a).flat_map(move |b| {
            (1..b).flat_map(move |c| {
                (2..=a + b + c)
                    .step_by(2)
                    .filter_map(move |d| Quadruple::new(a, b, c, d).ok())
            })
        })
    })
}

/// Runs [`check_edge_equivalence`] over [`admissible_quadruples`] and keeps
/// only the non-empty reports.
pub fn sweep_edge_equivalence(max_a: u32) -> Vec<DiscrepancyReport> {
    admissible_quadruples(max_a)
        .map(|q| check_edge_equivalence(&q))
        .filter(|r| !r.is_empty())
        .collect()
}

/// The classical criterion: with `a = b + c` and jug A initially full, the
/// wine can be halved iff `a` is divisible by `2 * gcd(b, c)`.
///
/// Returns `None` outside those hypotheses (`a != b + c` or `d != a`).
pub fn gcd_criterion(q: &Quadruple) -> Option<bool> {
    if q.a() != q.b() + q.c() || q.d() != q.a() {
        return None;
    }
    Some(q.a().is_multiple_of(2 * q.b().gcd(&q.c())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdMismatch {
    pub quadruple: Quadruple,
    pub solvable: bool,
    pub criterion: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdSweep {
    /// Number of quadruples to which the criterion applied.
    pub checked: usize,
    pub mismatches: Vec<GcdMismatch>,
}

/// Checks reachability of `(d/2, 0)` from `(0, 0)` against
/// [`gcd_criterion`] for every applicable quadruple with `a <= max_a`.
pub fn sweep_gcd_criterion(max_a: u32) -> GcdSweep {
    let mut sweep = GcdSweep {
        checked: 0,
        mismatches: Vec::new(),
    };
    for a in (4..=max_a).step_by(2) {
        for c in 1..a {
            let b = a - c;
            let Ok(q) = Quadruple::new(a, b, c, a) else {
                continue;
            };
            let criterion = gcd_criterion(&q).expect("a = b + c and d = a");
            let p = PuzzleInstance::halving(q, Distribution::new(0, 0))
                .expect("A full is a valid start");
            let solvable = solver::is_solvable(&p);
            sweep.checked += 1;
            if solvable != criterion {
                sweep.mismatches.push(GcdMismatch {
                    quadruple: q,
                    solvable,
                    criterion,
                });
            }
        }
    }
    sweep
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementMismatch {
    pub instance: PuzzleInstance,
    pub model_pours: Option<usize>,
    pub oracle_pours: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementSweep {
    /// Number of (quadruple, start) instances searched.
    pub checked: usize,
    pub mismatches: Vec<AgreementMismatch>,
}

/// Solves every halving instance (all valid starts) with `a <= max_a` twice,
/// once over model edges and once over simulated pours, and compares the
/// verdict and the minimum pour count.
pub fn sweep_solver_agreement(max_a: u32) -> AgreementSweep {
    let mut sweep = AgreementSweep {
        checked: 0,
        mismatches: Vec::new(),
    };
    for q in admissible_quadruples(max_a) {
        for start in q.vertices() {
            let Ok(p) = PuzzleInstance::halving(q, start) else {
                continue;
            };
            let model_pours = shortest_path(&p, SuccessorSource::Model).pour_count();
            let oracle_pours = shortest_path(&p, SuccessorSource::Oracle).pour_count();
            sweep.checked += 1;
            if model_pours != oracle_pours {
                sweep.mismatches.push(AgreementMismatch {
                    instance: p,
                    model_pours,
                    oracle_pours,
                });
            }
        }
    }
    sweep
}
