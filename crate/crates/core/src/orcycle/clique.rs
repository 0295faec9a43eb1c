//! Maximum semicomplete subsets, i.e. maximum cliques of the underlying graph.

use crate::graph::{Digraph, Vertex};

/// A largest vertex set inducing a semicomplete digraph. Among all of
/// maximum size the lexicographically smallest (as a sorted list) is chosen.
pub fn max_semicomplete_subset(d: &Digraph) -> Vec<Vertex> {
    let n = d.n();
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| u != v && d.adjacent(u, v)).collect()).collect();
    let mut search = Search {
        adj: &adj,
        current: Vec::new(),
        best: Vec::new(),
    };
    let all: Vec<Vertex> = (0..n).collect();
    search.expand(&all);
    search.best
}

struct Search<'a> {
    adj: &'a [Vec<bool>],
    current: Vec<Vertex>,
    best: Vec<Vertex>,
}

impl Search<'_> {
    // Candidates are visited in increasing order, so cliques are met in
    // lexicographic order and a tie never replaces the incumbent.
    fn expand(&mut self, cand: &[Vertex]) {
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + self.colour_bound(cand) <= self.best.len() {
            return;
        }
        for (idx, &v) in cand.iter().enumerate() {
            if self.current.len() + cand.len() - idx <= self.best.len() {
                return;
            }
            let next: Vec<Vertex> = cand[idx + 1..].iter().copied().filter(|&w| self.adj[v][w]).collect();
            self.current.push(v);
            self.expand(&next);
            self.current.pop();
        }
    }

    /// Number of colours in a greedy proper colouring of the candidates.
    fn colour_bound(&self, cand: &[Vertex]) -> usize {
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        for &v in cand {
            match classes.iter_mut().find(|c| c.iter().all(|&u| !self.adj[u][v])) {
                Some(c) => c.push(v),
                None => classes.push(vec![v]),
            }
        }
        classes.len()
    }
}
