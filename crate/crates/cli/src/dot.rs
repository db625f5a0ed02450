//! Graphviz output for Hasse quivers.

use std::fmt::Write;

use tiled_core::{ExponentVector, Quiver};

fn node_label(v: &ExponentVector) -> String {
    if v.is_zero() {
        "0".to_string()
    } else {
        v.to_string()
    }
}

/// Nodes in lexicographic order of their vectors, edges sorted by endpoint index.
pub fn render(q: &Quiver) -> String {
    let mut order: Vec<usize> = (0..q.vertices.len()).collect();
    order.sort_by(|&a, &b| q.vertices[a].as_slice().cmp(q.vertices[b].as_slice()));
    let mut rank = vec![0; order.len()];
    for (k, &v) in order.iter().enumerate() {
        rank[v] = k;
    }
    let mut edges: Vec<(usize, usize)> = q.arrows.iter().map(|&(s, t)| (rank[s], rank[t])).collect();
    edges.sort_unstable();
    edges.dedup();

    let mut out = String::from("digraph V_A {\n    rankdir=LR;\n");
    for (k, &v) in order.iter().enumerate() {
        writeln!(out, "    n{k} [label=\"{}\"];", node_label(&q.vertices[v])).unwrap();
    }
    for (s, t) in edges {
        writeln!(out, "    n{s} -> n{t};").unwrap();
    }
    out.push_str("}\n");
    out
}
