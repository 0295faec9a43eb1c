//! Graphviz export. Backward steps of a supplied walk are drawn red.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{Digraph, Vertex};

/// Renders `d` as a `digraph`. When `walk` is given (vertex sequence plus
/// closed flag), every arc traversed against its direction is coloured red
/// and every arc traversed forward is drawn bold.
pub fn to_dot(d: &Digraph, walk: Option<(&[Vertex], bool)>) -> String {
    let mut backward: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut forward: HashSet<(Vertex, Vertex)> = HashSet::new();
    if let Some((seq, closed)) = walk {
        let steps = if closed { seq.len() } else { seq.len().saturating_sub(1) };
        for i in 0..steps {
            let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
            if d.has_arc(a, b) {
                forward.insert((a, b));
            } else if d.has_arc(b, a) {
                backward.insert((b, a));
            }
        }
    }
    let mut out = String::from("digraph D {\n");
    for v in 0..d.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in d.arcs() {
        if backward.contains(&(u, v)) {
            let _ = writeln!(out, "  {u} -> {v} [color=red];");
        } else if forward.contains(&(u, v)) {
            let _ = writeln!(out, "  {u} -> {v} [style=bold];");
        } else {
            let _ = writeln!(out, "  {u} -> {v};");
        }
    }
    out.push_str("}\n");
    out
}
