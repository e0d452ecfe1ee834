//! Graphviz DOT output for atom graphs, specialization preorders and
//! posets of admissible structures.

use std::fmt::Write as _;

use crate::contact::AtomGraph;
use crate::extensions::AdmissiblePoset;
use crate::spaces::FiniteSpace;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn digraph(name: &str, nodes: &[String], edges: &[(usize, usize)], undirected: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    if undirected {
        let _ = writeln!(out, "  edge [dir=none];");
    }
    for (i, label) in nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(label));
    }
    for &(i, j) in edges {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    out
}

/// One node per atom and one edge per unordered adjacent pair, loops
/// included.
pub fn atom_graph(g: &AtomGraph) -> String {
    let nodes: Vec<String> = (0..g.atom_count()).map(|i| format!("a{i}")).collect();
    let edges = g.edges();
    digraph("atoms", &nodes, &edges, true)
}

/// Hasse diagram of the specialization preorder, `x -> y` for `x ≤ y`.
/// Points with the same closure share a node.
pub fn space_preorder(x: &FiniteSpace) -> String {
    let n = x.len();
    let mut reps: Vec<usize> = Vec::new();
    let mut class = vec![0usize; n];
    for p in 0..n {
        match reps
            .iter()
            .position(|&r| x.specialization_leq(p, r) && x.specialization_leq(r, p))
        {
            Some(k) => class[p] = k,
            None => {
                class[p] = reps.len();
                reps.push(p);
            }
        }
    }
    let nodes: Vec<String> = (0..reps.len())
        .map(|k| {
            (0..n)
                .filter(|&p| class[p] == k)
                .map(|p| x.name(p))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    let below = |a: usize, b: usize| a != b && x.specialization_leq(reps[a], reps[b]);
    let m = reps.len();
    let edges: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b)))
        .filter(|&(a, b)| below(a, b) && !(0..m).any(|c| below(a, c) && below(c, b)))
        .collect();
    digraph("space", &nodes, &edges, false)
}

/// Cover relation of `⪯_ad`.
pub fn admissible_poset(p: &AdmissiblePoset) -> String {
    let nodes: Vec<String> = p
        .structures
        .iter()
        .map(|s| {
            let bounded = p.space.format_set(s.bounded_points().unwrap_or(0));
            format!("{} | bounded {bounded}", s.structure().rho.kind())
        })
        .collect();
    let mut covers = p.covers();
    covers.sort_unstable();
    digraph("admissible", &nodes, &covers, false)
}
