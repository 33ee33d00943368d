//! Human-readable output.

use std::fmt::Write;

use decant_core::verify::{AgreementSweep, GcdSweep};
use decant_core::{
    DiscrepancyReport, Distribution, ModelGraph, PuzzleInstance, Quadruple, SolveResult,
};

fn contents(q: &Quadruple, v: Distribution) -> String {
    let [a, b, c] = q.contents(v).expect("valid state");
    format!("({a},{b},{c})")
}

fn header(p: &PuzzleInstance) -> String {
    let q = p.quadruple();
    format!(
        "capacities A={} B={} C={} gal, {} gal of wine; start {}, target {}\n",
        q.a(),
        q.b(),
        q.c(),
        q.d(),
        contents(q, p.start()),
        contents(q, p.target()),
    )
}

/// One line per pour (`source -> destination`, amount, contents of A, B, C
/// afterwards), then a summary line.
pub fn solve(result: &SolveResult) -> String {
    let p = &result.instance;
    let q = p.quadruple();
    let mut out = header(p);
    match &result.solution {
        Some(sol) => {
            for (n, pour) in sol.pours.iter().enumerate() {
                writeln!(
                    out,
                    "{:>3}. {} -> {}  {:>3} gal  {}",
                    n + 1,
                    pour.source,
                    pour.destination,
                    pour.amount,
                    contents(q, pour.result)
                )
                .unwrap();
            }
            let last = *sol.path.last().expect("paths are non-empty");
            writeln!(
                out,
                "solvable: {} pours, final contents {}",
                sol.pours.len(),
                contents(q, last)
            )
            .unwrap();
        }
        None => out.push_str("unsolvable: no sequence of pours reaches the target\n"),
    }
    out
}

pub fn check(result: &SolveResult) -> String {
    let mut out = header(&result.instance);
    out.push_str(if result.is_solvable() {
        "solvable\n"
    } else {
        "unsolvable\n"
    });
    out
}

/// Adjacency listing, one source vertex per line.
pub fn graph(graph: &ModelGraph, hide_isolated: bool) -> String {
    let q = graph.quadruple();
    let isolated = graph.isolated();
    let mut out = format!(
        "graph for {q}: {} vertices, {} edges\n",
        graph.vertex_count(),
        graph.edge_count()
    );
    for v in graph.vertices() {
        if hide_isolated && isolated[q.index_of(v)] {
            continue;
        }
        let targets: Vec<String> = graph
            .out_neighbors(v)
            .iter()
            .map(|w| w.to_string())
            .collect();
        writeln!(out, "{v} -> {}", targets.join(" ")).unwrap();
    }
    out
}

pub fn verify(
    max_a: u32,
    quadruples_checked: usize,
    reports: &[DiscrepancyReport],
    gcd: &GcdSweep,
    agreement: Option<&AgreementSweep>,
) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "edge model vs simulated pours: {quadruples_checked} quadruples with a <= {max_a}, {} discrepancies",
        reports.len()
    )
    .unwrap();
    for r in reports {
        writeln!(
            out,
            "  {}: {} pours missing from model, {} extra model edges",
            r.quadruple,
            r.missing_in_model.len(),
            r.extra_in_model.len()
        )
        .unwrap();
    }
    writeln!(
        out,
        "gcd criterion (a = b + c, A full): {} quadruples, {} mismatches",
        gcd.checked,
        gcd.mismatches.len()
    )
    .unwrap();
    for m in &gcd.mismatches {
        writeln!(
            out,
            "  {}: reachable={} criterion={}",
            m.quadruple, m.solvable, m.criterion
        )
        .unwrap();
    }
    if let Some(s) = agreement {
        writeln!(
            out,
            "model vs simulated-pour search: {} instances, {} mismatches",
            s.checked,
            s.mismatches.len()
        )
        .unwrap();
    }
    out
}
