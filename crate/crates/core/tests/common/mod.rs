#![allow(dead_code)]

pub mod lemma;

use backarc::{Digraph, Vertex};

/// Unordered pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Every labelled semicomplete digraph on `n` vertices (3 states per pair).
pub fn all_semicomplete(n: usize) -> impl Iterator<Item = Digraph> {
    let ps = pairs(n);
    let total = 3u64.pow(ps.len() as u32);
    (0..total).map(move |mut code| {
        let mut d = Digraph::empty(n);
        for &(i, j) in &ps {
            match code % 3 {
                0 => d.add_arc(i, j).unwrap(),
                1 => d.add_arc(j, i).unwrap(),
                _ => d.add_arc(i, j).unwrap() | d.add_arc(j, i).unwrap(),
            };
            code /= 3;
        }
        d
    })
}

/// Every labelled tournament on `n` vertices.
pub fn all_tournaments(n: usize) -> impl Iterator<Item = Digraph> {
    let ps = pairs(n);
    let total = 1u64 << ps.len();
    (0..total).map(move |code| {
        let arcs = ps
            .iter()
            .enumerate()
            .map(|(b, &(i, j))| if code >> b & 1 == 0 { (i, j) } else { (j, i) });
        Digraph::from_arcs(n, arcs).unwrap()
    })
}

pub fn transitive(n: usize) -> Digraph {
    Digraph::from_arcs(n, pairs(n)).unwrap()
}

pub fn all_vertices(n: usize) -> Vec<Vertex> {
    (0..n).collect()
}

/// Every labelled digraph on `n` vertices (4 states per pair).
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let ps = pairs(n);
    let total = 4u64.pow(ps.len() as u32);
    (0..total).map(move |mut code| {
        let mut d = Digraph::empty(n);
        for &(i, j) in &ps {
            let c = code % 4;
            if c & 1 == 1 {
                d.add_arc(i, j).unwrap();
            }
            if c & 2 == 2 {
                d.add_arc(j, i).unwrap();
            }
            code /= 4;
        }
        d
    })
}

/// Minimum backward steps over Hamilton orpaths (or orcycles when `closed`)
/// by trying every vertex order. `None` when no order is an oriented walk.
pub fn brute_min(d: &Digraph, closed: bool, start: Option<Vertex>, end: Option<Vertex>) -> Option<usize> {
    use itertools::Itertools;
    let n = d.n();
    if n == 0 || (closed && n < 3) {
        return None;
    }
    let mut best: Option<usize> = None;
    for perm in (0..n).permutations(n) {
        if closed && perm[0] != 0 {
            continue;
        }
        if start.is_some_and(|s| perm[0] != s) || end.is_some_and(|e| perm[n - 1] != e) {
            continue;
        }
        if let Some(k) = backward_steps(d, &perm, closed) {
            best = Some(best.map_or(k, |b| b.min(k)));
        }
    }
    best
}

/// Backward steps of `seq`, or `None` if some step joins non-adjacent vertices.
pub fn backward_steps(d: &Digraph, seq: &[Vertex], closed: bool) -> Option<usize> {
    let n = seq.len();
    let steps = if closed { n } else { n.saturating_sub(1) };
    let mut back = 0;
    for i in 0..steps {
        let (a, b) = (seq[i], seq[(i + 1) % n]);
        if d.has_arc(a, b) {
            continue;
        }
        if !d.has_arc(b, a) {
            return None;
        }
        back += 1;
    }
    Some(back)
}

/// Size of a largest vertex set that is pairwise adjacent, by subset scan.
pub fn brute_clique_size(d: &Digraph) -> usize {
    let n = d.n();
    (0u32..1 << n)
        .filter(|&mask| {
            let vs: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            d.is_semicomplete_on(&vs)
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Independence number by subset scan over adjacency bitmasks.
pub fn brute_alpha(d: &Digraph) -> usize {
    let n = d.n();
    assert!(n < 32);
    let adj: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&u| d.adjacent(u, v)).fold(0u32, |m, u| m | 1 << u))
        .collect();
    (0u32..1 << n)
        .filter(|&mask| (0..n).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Whether `seq` visits each vertex of `d` exactly once.
pub fn is_hamilton(d: &Digraph, seq: &[Vertex]) -> bool {
    let mut seen = vec![false; d.n()];
    seq.len() == d.n() && seq.iter().all(|&v| v < d.n() && !std::mem::replace(&mut seen[v], true))
}

/// Exact minima from one pass over all vertex orders: `path[s][t]` for
/// Hamilton orpaths from `s` to `t` (`path[s][s]` when `n == 1`) and the
/// orcycle minimum.
pub struct BruteTables {
    pub path: Vec<Vec<Option<usize>>>,
    pub cycle: Option<usize>,
}

pub fn brute_tables(d: &Digraph) -> BruteTables {
    use itertools::Itertools;
    let n = d.n();
    let mut path = vec![vec![None; n]; n];
    let mut cycle: Option<usize> = None;
    let keep = |slot: &mut Option<usize>, k: usize| *slot = Some(slot.map_or(k, |b: usize| b.min(k)));
    for perm in (0..n).permutations(n) {
        let Some(k) = backward_steps(d, &perm, false) else { continue };
        keep(&mut path[perm[0]][perm[n - 1]], k);
        if n >= 3 && perm[0] == 0 {
            if let Some(c) = backward_steps(d, &perm, true) {
                keep(&mut cycle, c);
            }
        }
    }
    BruteTables { path, cycle }
}

impl BruteTables {
    pub fn free(&self) -> Option<usize> {
        self.path.iter().flatten().flatten().copied().min()
    }

    pub fn from(&self, s: Vertex) -> Option<usize> {
        self.path[s].iter().flatten().copied().min()
    }

    pub fn to(&self, t: Vertex) -> Option<usize> {
        self.path.iter().filter_map(|row| row[t]).min()
    }
}
