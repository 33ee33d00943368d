//! Graphviz rendering of the state graph.

use std::fmt::Write;

use decant_core::{Distribution, ModelGraph};

fn node_id(v: Distribution) -> String {
    format!("v_{}_{}", v.i, v.j)
}

/// Renders `graph` as a `digraph`. Nodes come first in row-major order, then
/// one statement per directed edge, ordered by source and target. With
/// `hide_isolated`, vertices without any edge are left out.
pub fn render(graph: &ModelGraph, hide_isolated: bool) -> String {
    let q = graph.quadruple();
    let isolated = graph.isolated();
    let mut out = String::new();
    writeln!(
        out,
        "digraph decant_{}_{}_{}_{} {{",
        q.a(),
        q.b(),
        q.c(),
        q.d()
    )
    .unwrap();
    for v in graph.vertices() {
        if hide_isolated && isolated[q.index_of(v)] {
            continue;
        }
        writeln!(out, "    {} [label=\"{v}\"];", node_id(v)).unwrap();
    }
    for (from, to) in graph.edges() {
        writeln!(out, "    {} -> {};", node_id(from), node_id(to)).unwrap();
    }
    out.push_str("}\n");
    out
}
