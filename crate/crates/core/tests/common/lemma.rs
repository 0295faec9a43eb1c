//! Drivers that call the cycle lemmas under every hypothesis an input meets.

use backarc::orcycle::{dipath_plus_semi, max_semicomplete_subset, PlusSemiCondition};
use backarc::{Digraph, Vertex};
use itertools::Itertools;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::backward_steps;

pub fn neighbours(d: &Digraph, v: Vertex, set: &[Vertex]) -> Vec<Vertex> {
    set.iter().copied().filter(|&u| d.adjacent(u, v)).collect()
}

/// Two semicomplete sides of sizes `a` and `b` followed by link interiors of
/// the given lengths; links run from `X` to `Y`.
pub fn two_sided(a: usize, b: usize, ip: usize, iq: usize, rng: &mut ChaCha8Rng) -> (Digraph, Vec<Vertex>, Vec<Vertex>, Vec<Vertex>, Vec<Vertex>) {
    let n = a + b + ip + iq;
    let x: Vec<Vertex> = (0..a).collect();
    let y: Vec<Vertex> = (a..a + b).collect();
    let mut p = vec![x[0]];
    p.extend(a + b..a + b + ip);
    p.push(y[0]);
    let mut q = vec![x[a - 1]];
    q.extend(a + b + ip..n);
    q.push(y[b - 1]);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for side in [&x, &y] {
        edges.extend(side.iter().copied().tuple_combinations::<(Vertex, Vertex)>());
    }
    for path in [&p, &q] {
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
    }
    let mut d = Digraph::empty(n);
    for (u, v) in edges {
        match rng.gen_range(0..5) {
            0 => {
                d.add_arc(u, v).unwrap();
                d.add_arc(v, u).unwrap();
            }
            1 | 2 => {
                d.add_arc(u, v).unwrap();
            }
            _ => {
                d.add_arc(v, u).unwrap();
            }
        }
    }
    (d, x, y, p, q)
}

/// Calls the lemma under every hypothesis the orpath `p` satisfies and
/// checks each result. Returns how many calls were made.
pub fn plus_semi_all(d: &Digraph, x: &[Vertex], y: &[Vertex], p: &[Vertex]) -> usize {
    let mut calls = 0;
    let mut run = |cond: PlusSemiCondition| {
        let c = dipath_plus_semi(d, x, y, p, cond).unwrap_or_else(|e| panic!("{cond:?} {p:?} {e} {:?}", d.arcs().collect::<Vec<_>>()));
        assert!(c.is_hamilton(d) && c.sigma_minus() <= 5);
        calls += 1;
    };
    let k = p.len();
    let open = backward_steps(d, p, false).unwrap();
    let (y1, yk) = (p[0], p[k - 1]);
    let (n1, nk) = (neighbours(d, y1, x), neighbours(d, yk, x));
    if k >= 2 && !d.adjacent(y1, yk) && !n1.is_empty() && !nk.is_empty() {
        run(PlusSemiCondition::EndsApart);
    }
    if open <= 1 {
        if let Some((a, b)) = n1.iter().cartesian_product(&nk).find(|(a, b)| a != b) {
            run(PlusSemiCondition::DistinctEndNeighbours { x: *a, x_prime: *b });
        }
    }
    if k >= 3 && backward_steps(d, p, true).is_some_and(|c| c <= 2) {
        for i in 0..k {
            let (prev, cur, next) = (p[(i + k - 1) % k], p[i], p[(i + 1) % k]);
            let found = neighbours(d, cur, x).into_iter().find_map(|x2| {
                let x1 = neighbours(d, prev, x).into_iter().find(|&v| v != x2)?;
                let x3 = neighbours(d, next, x).into_iter().find(|&v| v != x2)?;
                Some((x1, x2, x3))
            });
            if let Some((x1, x2, x3)) = found {
                run(PlusSemiCondition::ThreeNeighbours { i, x1, x2, x3 });
            }
        }
    }
    let all_reach = y.iter().all(|&v| !neighbours(d, v, x).is_empty());
    if x.len() >= 4 && all_reach && open <= 1 {
        if (k == 1 && n1.len() < 2) || !d.is_two_connected() {
            // Without 2-connectivity a Hamilton orcycle may not exist at all.
            if let Err(e) = dipath_plus_semi(d, x, y, p, PlusSemiCondition::Dense) {
                assert!(!e.is_internal(), "{e}");
            }
        } else {
            run(PlusSemiCondition::Dense);
        }
    }
    calls
}

/// Runs [`plus_semi_all`] with `X` a largest semicomplete set and again with
/// its last vertex moved to `Y`, over orders of `Y` with at most two
/// backward steps, stopping after roughly `calls_per_side` calls per choice of `X`.
pub fn plus_semi_on(d: &Digraph, calls_per_side: usize) -> usize {
    let n = d.n();
    let best = max_semicomplete_subset(d);
    let mut calls = 0;
    for take in [best.len(), best.len().saturating_sub(1)] {
        let x = &best[..take];
        if x.is_empty() || x.len() == n {
            continue;
        }
        let y: Vec<Vertex> = (0..n).filter(|v| !x.contains(v)).collect();
        calls += plus_semi_with(d, x, &y, calls_per_side);
    }
    calls
}

fn plus_semi_with(d: &Digraph, x: &[Vertex], y: &[Vertex], orders_per_instance: usize) -> usize {
    let mut calls = 0;
    for p in y.iter().copied().permutations(y.len()) {
        if backward_steps(d, &p, false).is_some_and(|b| b <= 2) {
            calls += plus_semi_all(d, x, y, &p);
            if calls >= orders_per_instance {
                break;
            }
        }
    }
    calls
}
