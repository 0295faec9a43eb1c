//! Path covers: greedy start, then terminal-merging reductions until at most
//! α(D) dipaths remain.

use crate::error::SolveError;
use crate::graph::{Digraph, Vertex};

/// Covers `D[vs]` by at most two disjoint dipaths. `Q` may be empty.
pub fn gallai_milgram_2paths(d: &Digraph) -> Result<(Vec<Vertex>, Vec<Vertex>), SolveError> {
    if let Some(t) = d.independent_triple() {
        return Err(SolveError::IndependentTriple(t));
    }
    let all: Vec<Vertex> = (0..d.n()).collect();
    let mut paths = cover_on(d, &all, 2);
    let q = if paths.len() == 2 { paths.pop().unwrap() } else { Vec::new() };
    let p = paths.pop().unwrap_or_default();
    Ok((p, q))
}

/// Dipaths covering `vs`, reduced while more than `target` remain and two
/// terminals are adjacent. With `α(D[vs]) <= target` at most `target` remain.
pub(crate) fn cover_on(d: &Digraph, vs: &[Vertex], target: usize) -> Vec<Vec<Vertex>> {
    let mut active = vec![false; d.n()];
    for &v in vs {
        active[v] = true;
    }
    let mut paths = greedy_cover(d, vs, &active);
    while paths.len() > target {
        match reduce(d, &mut active, paths.clone()) {
            Some(p) => paths = p,
            None => break,
        }
    }
    paths
}

fn greedy_cover(d: &Digraph, vs: &[Vertex], active: &[bool]) -> Vec<Vec<Vertex>> {
    let mut used = vec![false; d.n()];
    let mut paths = Vec::new();
    for &start in vs {
        if used[start] {
            continue;
        }
        used[start] = true;
        let mut path = vec![start];
        let mut cur = start;
        while let Some(next) = d.out_neighbors(cur).find(|&w| active[w] && !used[w]) {
            used[next] = true;
            path.push(next);
            cur = next;
        }
        // extend backwards too
        let mut head = start;
        let mut front = Vec::new();
        while let Some(prev) = d.in_neighbors(head).find(|&w| active[w] && !used[w]) {
            used[prev] = true;
            front.push(prev);
            head = prev;
        }
        front.reverse();
        front.extend(path);
        paths.push(front);
    }
    paths
}

/// One fewer path whose terminal set is a subset of the old one, or `None`
/// when all terminals are pairwise non-adjacent.
fn reduce(d: &Digraph, active: &mut [bool], mut paths: Vec<Vec<Vertex>>) -> Option<Vec<Vec<Vertex>>> {
    let k = paths.len();
    let term: Vec<Vertex> = paths.iter().map(|p| *p.last().unwrap()).collect();
    let (i, j) = (0..k).find_map(|i| {
        (i + 1..k).find_map(|j| {
            if d.has_arc(term[i], term[j]) {
                Some((i, j))
            } else if d.has_arc(term[j], term[i]) {
                Some((j, i))
            } else {
                None
            }
        })
    })?;
    // term[i] -> term[j]
    let (yi, yj) = (term[i], term[j]);
    if paths[j].len() == 1 {
        paths[i].push(yj);
        paths.remove(j);
        return Some(paths);
    }
    paths[j].pop();
    let yj_pred = *paths[j].last().unwrap();
    active[yj] = false;
    let inner = reduce(d, active, paths);
    active[yj] = true;
    let mut inner = inner?;
    let host = inner
        .iter()
        .position(|p| *p.last().unwrap() == yj_pred)
        .or_else(|| inner.iter().position(|p| *p.last().unwrap() == yi))
        .expect("a removed terminal stays among the old ones");
    inner[host].push(yj);
    Some(inner)
}
