//! Constructions on semicomplete digraphs: Hamilton dipaths and dicycles,
//! orpaths with prescribed ends, and merging of two dipaths.
//!
//! Every function takes the host digraph plus the vertex set `vs` it works
//! on, so callers can pass any induced subdigraph without relabelling.

use crate::error::{ensure_internal, SolveError};
use crate::graph::{Digraph, Vertex};
use crate::walk::{backward_count, OrCycle, OrPath};

pub(crate) fn check_members(d: &Digraph, vs: &[Vertex]) -> Result<(), SolveError> {
    let mut seen = vec![false; d.n()];
    for &v in vs {
        if v >= d.n() {
            return Err(SolveError::pre(format!("vertex {v} out of range")));
        }
        if seen[v] {
            return Err(SolveError::pre(format!("vertex {v} listed twice")));
        }
        seen[v] = true;
    }
    Ok(())
}

pub(crate) fn check_semicomplete(d: &Digraph, vs: &[Vertex]) -> Result<(), SolveError> {
    check_members(d, vs)?;
    match d.missing_pair(vs) {
        Some((u, v)) => Err(SolveError::NotSemicomplete(u, v)),
        None => Ok(()),
    }
}

fn wrap_path(d: &Digraph, seq: Vec<Vertex>) -> Result<OrPath, SolveError> {
    OrPath::new(d, seq).map_err(|f| SolveError::internal(format!("constructed orpath invalid: {f}")))
}

fn wrap_cycle(d: &Digraph, seq: Vec<Vertex>) -> Result<OrCycle, SolveError> {
    OrCycle::new(d, seq).map_err(|f| SolveError::internal(format!("constructed orcycle invalid: {f}")))
}

/// Hamilton dipath of `D[vs]` by insertion: each vertex goes into the first
/// position whose neighbours on the path point into and out of it.
pub fn redei_dipath(d: &Digraph, vs: &[Vertex]) -> Result<OrPath, SolveError> {
    check_semicomplete(d, vs)?;
    if vs.is_empty() {
        return Err(SolveError::TooFewVertices { need: 1, got: 0 });
    }
    let seq = redei_seq(d, vs);
    wrap_path(d, seq)
}

/// Insertion dipath; `vs` must induce a semicomplete digraph.
pub(crate) fn redei_seq(d: &Digraph, vs: &[Vertex]) -> Vec<Vertex> {
    let mut path: Vec<Vertex> = Vec::with_capacity(vs.len());
    for &v in vs {
        let pos = if path.is_empty() || d.has_arc(v, path[0]) {
            0
        } else {
            (1..path.len())
                .find(|&i| d.has_arc(path[i - 1], v) && d.has_arc(v, path[i]))
                .unwrap_or(path.len())
        };
        path.insert(pos, v);
    }
    path
}

/// Hamilton dicycle of the strong semicomplete digraph `D[vs]`, grown from a
/// 3-dicycle one or two vertices at a time.
pub fn moon_dicycle(d: &Digraph, vs: &[Vertex]) -> Result<OrCycle, SolveError> {
    check_semicomplete(d, vs)?;
    if vs.len() < 3 {
        return Err(SolveError::TooFewVertices { need: 3, got: vs.len() });
    }
    let seq = moon_seq(d, vs).ok_or(SolveError::NotStrong)?;
    wrap_cycle(d, seq)
}

/// `None` iff `D[vs]` is not strong. Requires `|vs| >= 3` and semicompleteness.
pub(crate) fn moon_seq(d: &Digraph, vs: &[Vertex]) -> Option<Vec<Vertex>> {
    let mut cycle = first_triangle(d, vs)?;
    let mut inside = vec![false; d.n()];
    for &c in &cycle {
        inside[c] = true;
    }
    let mut outside: Vec<Vertex> = vs.iter().copied().filter(|&v| !inside[v]).collect();
    while !outside.is_empty() {
        let k = cycle.len();
        let insertion = outside.iter().enumerate().find_map(|(oi, &v)| {
            (0..k)
                .find(|&i| d.has_arc(cycle[i], v) && d.has_arc(v, cycle[(i + 1) % k]))
                .map(|i| (oi, i))
        });
        if let Some((oi, i)) = insertion {
            let v = outside.remove(oi);
            cycle.insert(i + 1, v);
            continue;
        }
        // Every outside vertex now either receives all of C or dominates it.
        let c0 = cycle[0];
        let (a, b) = outside
            .iter()
            .filter(|&&a| d.has_arc(c0, a))
            .find_map(|&a| {
                outside
                    .iter()
                    .find(|&&b| d.has_arc(b, c0) && d.has_arc(a, b))
                    .map(|&b| (a, b))
            })?;
        // c0 a b c2 ... replaces c0 c1 c2 ...; c1 returns to the pool.
        let c1 = cycle[1];
        cycle[1] = a;
        cycle.insert(2, b);
        outside.retain(|&v| v != a && v != b);
        outside.push(c1);
    }
    Some(cycle)
}

fn first_triangle(d: &Digraph, vs: &[Vertex]) -> Option<Vec<Vertex>> {
    for &a in vs {
        for &b in vs {
            if b == a || !d.has_arc(a, b) {
                continue;
            }
            for &c in vs {
                if c != a && c != b && d.has_arc(b, c) && d.has_arc(c, a) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// Hamilton `(x,y)`- and `(y,x)`-orpaths of one vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointOrpathPair {
    /// Starts at `x`, ends at `y`.
    pub forward: OrPath,
    /// Starts at `y`, ends at `x`.
    pub reverse: OrPath,
}

impl EndpointOrpathPair {
    pub fn forward_backward(&self) -> usize {
        self.forward.sigma_minus()
    }

    pub fn reverse_backward(&self) -> usize {
        self.reverse.sigma_minus()
    }

    pub fn total_backward(&self) -> usize {
        self.forward_backward() + self.reverse_backward()
    }
}

/// Given a Hamilton dicycle `cycle` of the strong semicomplete `D[vs]`,
/// builds both endpoint orpaths between `x` and `y`. Each direction has at
/// most one backward arc unless its start precedes its end on `cycle`, and
/// the two counts sum to at most two.
pub fn strong_endpoint_orpaths(
    d: &Digraph,
    vs: &[Vertex],
    cycle: &[Vertex],
    x: Vertex,
    y: Vertex,
) -> Result<EndpointOrpathPair, SolveError> {
    check_semicomplete(d, vs)?;
    check_pair(vs, x, y)?;
    check_hamilton_dicycle(d, vs, cycle)?;
    let mut forward = cycle_endpoint_path(d, cycle, x, y);
    let mut reverse = cycle_endpoint_path(d, cycle, y, x);
    if cost(d, &forward) + cost(d, &reverse) > 2 {
        // Non-consecutive ends can defeat the reroutings; add the witness
        // with one backward arc and the cycle-minus-end paths.
        let (witness, starts_at_x) = strong_witness(d, cycle, x, y);
        let extra_f = via_cycle_minus_end(d, vs, x, y);
        let extra_r = via_cycle_minus_end(d, vs, y, x);
        for (slot, cand) in [(&mut forward, extra_f), (&mut reverse, extra_r)] {
            if cost(d, &cand) < cost(d, slot) {
                *slot = cand;
            }
        }
        let slot = if starts_at_x { &mut forward } else { &mut reverse };
        if cost(d, &witness) < cost(d, slot) {
            *slot = witness;
        }
    }
    let pair = EndpointOrpathPair {
        forward: wrap_path(d, forward)?,
        reverse: wrap_path(d, reverse)?,
    };
    ensure_internal!(
        pair.total_backward() <= 2,
        "endpoint orpaths for ({x},{y}) use {} backward arcs",
        pair.total_backward()
    );
    Ok(pair)
}

fn check_pair(vs: &[Vertex], x: Vertex, y: Vertex) -> Result<(), SolveError> {
    if x == y {
        return Err(SolveError::pre("endpoints must differ"));
    }
    if !vs.contains(&x) || !vs.contains(&y) {
        return Err(SolveError::pre("endpoints must lie in the vertex set"));
    }
    Ok(())
}

fn check_hamilton_dicycle(d: &Digraph, vs: &[Vertex], cycle: &[Vertex]) -> Result<(), SolveError> {
    let mut sorted_c = cycle.to_vec();
    sorted_c.sort_unstable();
    let mut sorted_v = vs.to_vec();
    sorted_v.sort_unstable();
    let k = cycle.len();
    if sorted_c != sorted_v || k < 2 || (0..k).any(|i| !d.has_arc(cycle[i], cycle[(i + 1) % k])) {
        return Err(SolveError::pre("cycle is not a Hamilton dicycle of the vertex set"));
    }
    Ok(())
}

/// `(x,y)`-orpath from the Hamilton dicycle `cycle` of a semicomplete set.
///
/// Consecutive ends use the cycle itself (or its one-vertex shift). Otherwise
/// the rerouting candidates around the cycle are tried and the cheapest is
/// kept, ties going to the earliest.
pub(crate) fn cycle_endpoint_path(d: &Digraph, cycle: &[Vertex], x: Vertex, y: Vertex) -> Vec<Vertex> {
    let n = cycle.len();
    let px = cycle.iter().position(|&v| v == x).expect("x on cycle");
    // v[i] is the 0-based form of v_{i+1}; v[0] = x.
    let v: Vec<Vertex> = (0..n).map(|i| cycle[(px + i) % n]).collect();
    let r0 = v.iter().position(|&u| u == y).expect("y on cycle");
    if r0 == n - 1 {
        return v;
    }
    if r0 == 1 {
        let mut p = Vec::with_capacity(n);
        p.push(x);
        p.extend_from_slice(&v[2..]);
        p.push(y);
        return p;
    }
    cheapest(d, rerouting_candidates(d, &v, r0 + 1))
}

fn cheapest(d: &Digraph, cands: Vec<Vec<Vertex>>) -> Vec<Vertex> {
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    for c in cands {
        let k = cost(d, &c);
        if best.as_ref().map_or(true, |(b, _)| k < *b) {
            let done = k == 0;
            best = Some((k, c));
            if done {
                break;
            }
        }
    }
    best.expect("at least one candidate").1
}

/// Reroutings of the dicycle `v_1 ... v_n` (stored 0-based in `v`) into
/// `(v_1, v_r)`-orpaths, `3 <= r <= n-1`, in the order the argument for
/// one backward arc considers them.
fn rerouting_candidates(d: &Digraph, v: &[Vertex], r: usize) -> Vec<Vec<Vertex>> {
    let n = v.len();
    let at = |i: usize| v[i - 1];
    let build = |parts: &[(usize, usize)]| {
        let mut p = Vec::with_capacity(n);
        for &(a, b) in parts {
            if a <= b {
                p.extend((a..=b).map(at));
            }
        }
        p
    };
    let mut out = Vec::new();
    for j in 2..=r {
        if d.has_arc(at(n), at(j)) {
            out.push(build(&[(1, j - 1), (r + 1, n), (j, r)]));
        }
    }
    for j in 1..r {
        if !d.has_arc(at(r + 1), at(j)) {
            out.push(build(&[(1, j), (r + 1, n), (j + 1, r)]));
        }
    }
    for s in (r + 1..n).rev() {
        for j in (2..r).rev() {
            if d.has_arc(at(s), at(j)) {
                out.push(build(&[(1, j - 1), (s + 1, n), (r + 1, s), (j, r)]));
            }
        }
    }
    out
}

/// `b(x,y) <= 2` and `min(b(x,y), b(y,x)) <= 1` in a semicomplete `D[vs]`.
pub fn xy_orpath_bounded(
    d: &Digraph,
    vs: &[Vertex],
    x: Vertex,
    y: Vertex,
) -> Result<EndpointOrpathPair, SolveError> {
    check_semicomplete(d, vs)?;
    check_pair(vs, x, y)?;
    let mut forward = via_cycle_minus_end(d, vs, x, y);
    let mut reverse = via_cycle_minus_end(d, vs, y, x);
    let (witness, starts_at_x) = one_backward_witness(d, vs, x, y);
    let slot = if starts_at_x { &mut forward } else { &mut reverse };
    if cost(d, &witness) < cost(d, slot) {
        *slot = witness;
    }
    let pair = EndpointOrpathPair {
        forward: wrap_path(d, forward)?,
        reverse: wrap_path(d, reverse)?,
    };
    ensure_internal!(
        pair.forward_backward() <= 2 && pair.reverse_backward() <= 2,
        "endpoint orpath for ({x},{y}) exceeds two backward arcs"
    );
    ensure_internal!(
        pair.forward_backward().min(pair.reverse_backward()) <= 1,
        "both endpoint orpaths for ({x},{y}) exceed one backward arc"
    );
    Ok(pair)
}

fn cost(d: &Digraph, seq: &[Vertex]) -> usize {
    backward_count(d, seq, false).unwrap_or(usize::MAX)
}

/// `(x,y)`-orpath: a Hamilton dicycle (or dipath) of `D - y` opened just
/// before `x`, followed by `y`. At most two backward arcs.
fn via_cycle_minus_end(d: &Digraph, vs: &[Vertex], x: Vertex, y: Vertex) -> Vec<Vertex> {
    let rest: Vec<Vertex> = vs.iter().copied().filter(|&v| v != y).collect();
    let ring = if rest.len() >= 3 {
        moon_seq(d, &rest).unwrap_or_else(|| redei_seq(d, &rest))
    } else {
        redei_seq(d, &rest)
    };
    let px = ring.iter().position(|&v| v == x).expect("x in ring");
    let mut p: Vec<Vertex> = ring[px..].iter().chain(&ring[..px]).copied().collect();
    p.push(y);
    p
}

/// Strong components of `D[vs]` in topological order, each with a Hamilton
/// dicycle (or the single vertex / digon order).
struct Layers {
    comps: Vec<Vec<Vertex>>,
    comp_of: Vec<usize>,
}

impl Layers {
    fn new(d: &Digraph, vs: &[Vertex]) -> Layers {
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        let h = d.induced(&sorted);
        let dec = h.strong_decomposition();
        let mut comp_of = vec![usize::MAX; d.n()];
        let comps = dec
            .components
            .iter()
            .enumerate()
            .map(|(ci, c)| {
                let members: Vec<Vertex> = c.iter().map(|&i| sorted[i]).collect();
                for &m in &members {
                    comp_of[m] = ci;
                }
                if members.len() >= 3 {
                    moon_seq(d, &members).expect("strong component")
                } else {
                    members
                }
            })
            .collect();
        Layers { comps, comp_of }
    }

    /// Hamilton dipath of `v`'s component starting at `v`.
    fn starting_at(&self, v: Vertex) -> Vec<Vertex> {
        let c = &self.comps[self.comp_of[v]];
        let p = c.iter().position(|&u| u == v).unwrap();
        c[p..].iter().chain(&c[..p]).copied().collect()
    }

    /// Hamilton dipath of `v`'s component ending at `v`.
    fn ending_at(&self, v: Vertex) -> Vec<Vertex> {
        let c = &self.comps[self.comp_of[v]];
        let p = c.iter().position(|&u| u == v).unwrap();
        c[p + 1..].iter().chain(&c[..=p]).copied().collect()
    }

    /// `S_s`, the components after `s`'s and before `e`'s (cyclically,
    /// skipping both), then `E_e`. `s` and `e` lie in different components.
    fn around(&self, s: Vertex, e: Vertex) -> Vec<Vertex> {
        let (cs, ce) = (self.comp_of[s], self.comp_of[e]);
        let l = self.comps.len();
        let mut p = self.starting_at(s);
        for k in 1..l {
            let ci = (cs + k) % l;
            if ci != ce {
                p.extend_from_slice(&self.comps[ci]);
            }
        }
        p.extend(self.ending_at(e));
        p
    }
}

/// An orpath between `x` and `y` (in one of the two directions) with at most
/// one backward arc. The flag is true when it starts at `x`.
fn one_backward_witness(d: &Digraph, vs: &[Vertex], x: Vertex, y: Vertex) -> (Vec<Vertex>, bool) {
    if vs.len() == 2 {
        return (vec![x, y], true);
    }
    let layers = Layers::new(d, vs);
    if layers.comps.len() == 1 {
        return strong_witness(d, &layers.comps[0], x, y);
    }
    let (cx, cy) = (layers.comp_of[x], layers.comp_of[y]);
    if cx != cy {
        return if cx < cy {
            (layers.around(x, y), true)
        } else {
            (layers.around(y, x), false)
        };
    }
    // Same component: split its witness at the backward step (or after its
    // first vertex) and route through all other components.
    let comp = &layers.comps[cx];
    let (inner, starts_at_x) = if comp.len() == 2 {
        (vec![x, y], true)
    } else {
        strong_witness(d, comp, x, y)
    };
    let audit = crate::walk::audit_sequence(d, &inner, false);
    let cut = audit.backward_steps.first().copied().unwrap_or(0);
    let l = layers.comps.len();
    let mut p: Vec<Vertex> = inner[..=cut].to_vec();
    for k in 1..l {
        p.extend_from_slice(&layers.comps[(cx + k) % l]);
    }
    p.extend_from_slice(&inner[cut + 1..]);
    (p, starts_at_x)
}

/// Witness inside a strong semicomplete set given by its Hamilton dicycle.
fn strong_witness(d: &Digraph, cycle: &[Vertex], x: Vertex, y: Vertex) -> (Vec<Vertex>, bool) {
    let n = cycle.len();
    if n == 2 {
        return (vec![x, y], true);
    }
    let pos = |v: Vertex| cycle.iter().position(|&u| u == v).unwrap();
    let succ = |v: Vertex| cycle[(pos(v) + 1) % n];
    let pred = |v: Vertex| cycle[(pos(v) + n - 1) % n];
    // C[a, b]: the dicycle segment from a to b.
    let seg = |out: &mut Vec<Vertex>, a: Vertex, b: Vertex| {
        let mut i = pos(a);
        loop {
            out.push(cycle[i]);
            if cycle[i] == b {
                break;
            }
            i = (i + 1) % n;
        }
    };
    let ring_from = |start: Vertex, end: Vertex| {
        let mut p = Vec::with_capacity(n);
        seg(&mut p, start, end);
        p
    };
    if succ(x) == y {
        return (ring_from(y, x), false);
    }
    if succ(y) == x {
        return (ring_from(x, y), true);
    }
    let (xp, yp) = (succ(x), succ(y));
    if succ(xp) == y && succ(yp) == x {
        let a = vec![x, xp, yp, y];
        let b = vec![y, yp, xp, x];
        return if cost(d, &a) <= cost(d, &b) { (a, true) } else { (b, false) };
    }
    // Orient so that, when the vertices are two apart, the gap is x^{++} = y.
    let (u, w, flipped) = if succ(yp) == x { (y, x, true) } else { (x, y, false) };
    let (up, wp) = (succ(u), succ(w));
    let (p1, p2) = if succ(up) == w {
        // u u^+ C[w^+, u^-] w   and   w w^+ u^+ C[w^{++}, u]
        let mut p1 = vec![u, up];
        seg(&mut p1, wp, pred(u));
        p1.push(w);
        let mut p2 = vec![w, wp, up];
        seg(&mut p2, succ(wp), u);
        (p1, p2)
    } else {
        // u u^+ C[w^+, u^-] C[u^{++}, w]   and   w w^+ C[u^+, w^-] C[w^{++}, u]
        let mut p1 = vec![u, up];
        seg(&mut p1, wp, pred(u));
        seg(&mut p1, succ(up), w);
        let mut p2 = vec![w, wp];
        seg(&mut p2, up, pred(w));
        seg(&mut p2, succ(wp), u);
        (p1, p2)
    };
    let first = cost(d, &p1) <= cost(d, &p2);
    let (path, from_u) = if first { (p1, true) } else { (p2, false) };
    (path, from_u != flipped)
}

/// Outcome of choosing endpoints across a split `X ∪ Y` of a semicomplete set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointChoice {
    pub x: Vertex,
    pub y: Vertex,
    pub paths: EndpointOrpathPair,
}

/// Picks `x ∈ xs`, `y ∈ ys` with `b(x,y) + b(y,x) <= 2`, where `xs ∪ ys`
/// covers `vs`. Among the candidates the construction offers, the smallest
/// `x` and then the smallest `y` is taken.
pub fn full_union_endpoints(
    d: &Digraph,
    vs: &[Vertex],
    xs: &[Vertex],
    ys: &[Vertex],
) -> Result<EndpointChoice, SolveError> {
    check_semicomplete(d, vs)?;
    if xs.is_empty() || ys.is_empty() {
        return Err(SolveError::pre("both endpoint sets must be non-empty"));
    }
    if xs.iter().chain(ys).any(|v| !vs.contains(v)) {
        return Err(SolveError::pre("endpoint sets must lie in the vertex set"));
    }
    if vs.iter().any(|v| !xs.contains(v) && !ys.contains(v)) {
        return Err(SolveError::pre("endpoint sets must cover the vertex set"));
    }
    if vs.len() < 2 {
        return Err(SolveError::TooFewVertices { need: 2, got: vs.len() });
    }
    let in_x = |v: Vertex| xs.contains(&v);
    let in_y = |v: Vertex| ys.contains(&v);
    let layers = Layers::new(d, vs);
    let choice = if layers.comps.len() == 1 {
        let c = &layers.comps[0];
        let k = c.len();
        let (x, y) = (0..k)
            .filter(|&i| in_y(c[i]) && in_x(c[(i + 1) % k]) && c[i] != c[(i + 1) % k])
            .map(|i| (c[(i + 1) % k], c[i]))
            .min()
            .ok_or_else(|| SolveError::internal("no dicycle arc from Y to X"))?;
        let forward = cycle_endpoint_path(d, c, x, y);
        let reverse = cycle_endpoint_path(d, c, y, x);
        (x, y, forward, reverse)
    } else {
        let l = layers.comps.len();
        let mut best: Option<(Vertex, Vertex)> = None;
        for k in 0..l - 1 {
            for &a in &layers.comps[k] {
                for &b in &layers.comps[k + 1] {
                    for cand in [(a, b), (b, a)] {
                        if in_x(cand.0) && in_y(cand.1) && best.map_or(true, |bst| cand < bst) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        let (x, y) = best.ok_or_else(|| SolveError::internal("no consecutive components split X and Y"))?;
        (x, y, layers.around(x, y), layers.around(y, x))
    };
    let (x, y, forward, reverse) = choice;
    let paths = EndpointOrpathPair {
        forward: wrap_path(d, forward)?,
        reverse: wrap_path(d, reverse)?,
    };
    ensure_internal!(
        paths.total_backward() <= 2,
        "endpoint choice ({x},{y}) uses {} backward arcs",
        paths.total_backward()
    );
    Ok(EndpointChoice { x, y, paths })
}

/// Merges vertex-disjoint dipaths `p` and `q` whose vertices are pairwise
/// adjacent across the two into a single Hamilton dipath of their union.
pub fn path_combine(d: &Digraph, p: &[Vertex], q: &[Vertex]) -> Result<OrPath, SolveError> {
    let mut all = p.to_vec();
    all.extend_from_slice(q);
    check_members(d, &all)?;
    for path in [p, q] {
        if path.windows(2).any(|w| !d.has_arc(w[0], w[1])) {
            return Err(SolveError::pre("inputs must be dipaths"));
        }
    }
    for &a in p {
        for &b in q {
            if !d.adjacent(a, b) {
                return Err(SolveError::NotSemicomplete(a, b));
            }
        }
    }
    let merged = path_combine_seq(d, p, q);
    let path = wrap_path(d, merged)?;
    ensure_internal!(path.sigma_minus() == 0, "merged path has a backward arc");
    Ok(path)
}

/// Two-pointer merge: emit the head of `p` when it dominates the head of `q`.
pub(crate) fn path_combine_seq(d: &Digraph, p: &[Vertex], q: &[Vertex]) -> Vec<Vertex> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(p.len() + q.len());
    while i < p.len() && j < q.len() {
        if d.has_arc(p[i], q[j]) {
            out.push(p[i]);
            i += 1;
        } else {
            out.push(q[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&p[i..]);
    out.extend_from_slice(&q[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn transitive(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn all(n: usize) -> Vec<Vertex> {
        (0..n).collect()
    }

    #[test]
    fn redei_on_tt3_and_cycle() {
        assert_eq!(redei_dipath(&transitive(3), &all(3)).unwrap().vertices(), &[0, 1, 2]);
        let c3 = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(redei_dipath(&c3, &all(3)).unwrap().sigma_minus(), 0);
    }

    #[test]
    fn moon_rejects_transitive() {
        assert!(matches!(moon_dicycle(&transitive(4), &all(4)), Err(SolveError::NotStrong)));
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert!(matches!(moon_dicycle(&d, &all(2)), Err(SolveError::TooFewVertices { .. })));
    }

    #[test]
    fn moon_extends_by_arc_pair() {
        // 0->1->2->0 with 3 dominated by the triangle and 4 dominating it.
        let mut arcs = vec![(0, 1), (1, 2), (2, 0), (3, 4)];
        for c in 0..3 {
            arcs.push((c, 3));
            arcs.push((4, c));
        }
        let d = Digraph::from_arcs(5, arcs).unwrap();
        let c = moon_dicycle(&d, &all(5)).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.sigma_minus(), 0);
    }

    #[test]
    fn tt5_endpoint_values() {
        let d = transitive(5);
        let p = xy_orpath_bounded(&d, &all(5), 1, 3).unwrap();
        assert_eq!(p.forward_backward(), 1);
        assert_eq!(p.reverse_backward(), 2);
    }

    #[test]
    fn full_union_on_tt3() {
        let d = transitive(3);
        let c = full_union_endpoints(&d, &all(3), &[0], &[1, 2]).unwrap();
        assert_eq!((c.x, c.y), (0, 1));
        assert_eq!(c.paths.forward.vertices(), &[0, 2, 1]);
        assert_eq!(c.paths.reverse.vertices(), &[1, 2, 0]);
    }

    #[test]
    fn path_combine_interleaves() {
        let d = Digraph::from_arcs(4, [(0, 1), (2, 3), (2, 0), (1, 3), (0, 3), (2, 1)]).unwrap();
        assert_eq!(path_combine(&d, &[0, 1], &[2, 3]).unwrap().vertices(), &[2, 0, 1, 3]);
    }
}
