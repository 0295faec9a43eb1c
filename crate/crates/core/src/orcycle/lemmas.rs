//! Orcycles assembled from a semicomplete side and either a second
//! semicomplete side or an orpath through the remaining vertices.

use crate::error::{ensure_internal, SolveError};
use crate::graph::{Digraph, Vertex};
use crate::semicomplete::{check_semicomplete, full_union_endpoints, xy_orpath_bounded};
use crate::trace::SolverTrace;
use crate::walk::{backward_count, OrCycle};

/// Which hypothesis of [`dipath_plus_semi`] the caller relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlusSemiCondition {
    /// The orpath's ends are non-adjacent and both have a neighbour in `X`.
    EndsApart,
    /// At most one backward arc on the orpath; `x` is adjacent to its first
    /// vertex, `x_prime` to its last, and `x != x_prime`.
    DistinctEndNeighbours { x: Vertex, x_prime: Vertex },
    /// The orpath closes to an orcycle with at most two backward arcs; `x1`,
    /// `x2`, `x3` neighbour the cycle vertices at `i - 1`, `i`, `i + 1`
    /// (indices modulo the cycle length) and `x2 ∉ {x1, x3}`.
    ThreeNeighbours { i: usize, x1: Vertex, x2: Vertex, x3: Vertex },
    /// `|X| >= 4`, every vertex of `Y` has a neighbour in `X`, and the orpath
    /// has at most one backward arc.
    Dense,
}

pub(crate) fn cycle_cost(d: &Digraph, seq: &[Vertex]) -> usize {
    backward_count(d, seq, true).unwrap_or(usize::MAX)
}

fn neighbours_in(d: &Digraph, v: Vertex, set: &[Vertex]) -> Vec<Vertex> {
    set.iter().copied().filter(|&u| d.adjacent(u, v)).collect()
}

/// A Hamilton `(a,b)`-orpath of the semicomplete `D[set]` with at most two
/// backward arcs; the single vertex when `a == b` and `set = {a}`.
pub(crate) fn q_path(d: &Digraph, set: &[Vertex], a: Vertex, b: Vertex) -> Result<Vec<Vertex>, SolveError> {
    if a == b {
        ensure_internal!(set == [a], "endpoint path from {a} to itself on {set:?}");
        return Ok(vec![a]);
    }
    Ok(xy_orpath_bounded(d, set, a, b)?.forward.into_vertices())
}

fn both_q_paths(d: &Digraph, set: &[Vertex], a: Vertex, b: Vertex) -> Result<(Vec<Vertex>, Vec<Vertex>), SolveError> {
    if a == b {
        let single = q_path(d, set, a, b)?;
        return Ok((single.clone(), single));
    }
    let pair = xy_orpath_bounded(d, set, a, b)?;
    Ok((pair.forward.into_vertices(), pair.reverse.into_vertices()))
}

fn as_cycle(d: &Digraph, seq: Vec<Vertex>) -> Result<OrCycle, SolveError> {
    ensure_internal!(seq.len() == d.n(), "orcycle covers {} of {} vertices", seq.len(), d.n());
    OrCycle::new(d, seq).map_err(|f| SolveError::internal(format!("orcycle invalid: {f}")))
}

fn check_partition(d: &Digraph, x: &[Vertex], y: &[Vertex]) -> Result<(), SolveError> {
    let mut seen = vec![0u8; d.n()];
    for &v in x.iter().chain(y) {
        if v >= d.n() {
            return Err(SolveError::pre(format!("vertex {v} out of range")));
        }
        seen[v] += 1;
    }
    if seen.iter().any(|&c| c != 1) {
        return Err(SolveError::pre("X and Y must partition the vertex set"));
    }
    Ok(())
}

fn normalise_link(p: &[Vertex], in_x: &[bool], in_y: &[bool]) -> Result<Vec<Vertex>, SolveError> {
    if p.len() < 2 {
        return Err(SolveError::pre("linking paths need two ends"));
    }
    let mut p = p.to_vec();
    if in_y[p[0]] {
        p.reverse();
    }
    let (first, last) = (p[0], *p.last().unwrap());
    if !in_x[first] || !in_y[last] {
        return Err(SolveError::pre(format!("path {p:?} does not join X to Y")));
    }
    if p[1..p.len() - 1].iter().any(|&v| in_x[v] || in_y[v]) {
        return Err(SolveError::pre(format!("path {p:?} is not minimal")));
    }
    Ok(p)
}

/// Hamilton orcycle through two disjoint semicomplete sides joined by two
/// vertex-disjoint paths of the underlying graph. At most
/// `2 + (|P| + |Q|) / 2` backward arcs.
pub fn two_semicomplete_cycle(
    d: &Digraph,
    x: &[Vertex],
    y: &[Vertex],
    p: &[Vertex],
    q: &[Vertex],
) -> Result<OrCycle, SolveError> {
    check_semicomplete(d, x)?;
    check_semicomplete(d, y)?;
    let n = d.n();
    if p.iter().chain(q).any(|&v| v >= n) {
        return Err(SolveError::pre("path vertex out of range"));
    }
    let mut in_x = vec![false; n];
    let mut in_y = vec![false; n];
    x.iter().for_each(|&v| in_x[v] = true);
    y.iter().for_each(|&v| in_y[v] = true);
    if x.iter().any(|&v| in_y[v]) {
        return Err(SolveError::pre("X and Y must be disjoint"));
    }
    let p = normalise_link(p, &in_x, &in_y)?;
    let q = normalise_link(q, &in_x, &in_y)?;
    for path in [&p, &q] {
        if let Some(w) = path.windows(2).find(|w| !d.adjacent(w[0], w[1])) {
            return Err(SolveError::NotSemicomplete(w[0], w[1]));
        }
    }
    let mut count = vec![0u8; n];
    for &v in x.iter().chain(y).chain(&p[1..p.len() - 1]).chain(&q[1..q.len() - 1]) {
        count[v] += 1;
    }
    if p[0] == q[0] || p.last() == q.last() || count.iter().any(|&c| c != 1) {
        return Err(SolveError::pre("sides and paths must cover V(D) and the paths must be disjoint"));
    }
    let seq = two_semi_seq(d, x, y, &p, &q, &mut SolverTrace::new())?;
    as_cycle(d, seq)
}

pub(crate) fn two_semi_seq(
    d: &Digraph,
    x: &[Vertex],
    y: &[Vertex],
    p: &[Vertex],
    q: &[Vertex],
    trace: &mut SolverTrace,
) -> Result<Vec<Vertex>, SolveError> {
    let (p0, p1) = (p[0], *p.last().unwrap());
    let (q0, q1) = (q[0], *q.last().unwrap());
    let (h1, h2) = both_q_paths(d, x, p0, q0)?;
    let (h1y, h2y) = both_q_paths(d, y, p1, q1)?;
    let p_in = &p[1..p.len() - 1];
    let q_in = &q[1..q.len() - 1];
    let mut c1 = h1;
    c1.extend_from_slice(q_in);
    c1.extend(h2y);
    c1.extend(p_in.iter().rev());
    let mut c2 = h2;
    c2.extend_from_slice(p_in);
    c2.extend(h1y);
    c2.extend(q_in.iter().rev());
    let (k1, k2) = (cycle_cost(d, &c1), cycle_cost(d, &c2));
    let links = p.len() + q.len();
    ensure_internal!(k1 + k2 <= 4 + links, "candidate pair has {k1}+{k2} backward arcs");
    let bound = 2 + links / 2;
    let (seq, k) = if k1 <= k2 { (c1, k1) } else { (c2, k2) };
    ensure_internal!(k <= bound, "two-sided orcycle has {k} > {bound} backward arcs");
    trace.terminal("two-semicomplete", format!("links {p:?} {q:?}, {k} backward"));
    Ok(seq)
}

/// Hamilton orcycle with at most four backward arcs of a 2-connected digraph
/// covered by two disjoint semicomplete sides.
pub fn two_semicomplete_corollary(d: &Digraph, x: &[Vertex], y: &[Vertex]) -> Result<OrCycle, SolveError> {
    check_partition(d, x, y)?;
    check_semicomplete(d, x)?;
    check_semicomplete(d, y)?;
    let seq = corollary_seq(d, x, y, &mut SolverTrace::new())?;
    as_cycle(d, seq)
}

pub(crate) fn corollary_seq(
    d: &Digraph,
    x: &[Vertex],
    y: &[Vertex],
    trace: &mut SolverTrace,
) -> Result<Vec<Vertex>, SolveError> {
    let edges: Vec<(Vertex, Vertex)> = x
        .iter()
        .flat_map(|&a| y.iter().filter(move |&&b| d.adjacent(a, b)).map(move |&b| (a, b)))
        .collect();
    let pair = edges.iter().enumerate().find_map(|(i, &(a1, b1))| {
        edges[i + 1..]
            .iter()
            .find(|&&(a2, b2)| a2 != a1 && b2 != b1)
            .map(|&e| ((a1, b1), e))
    });
    let Some(((x1, y1), (x2, y2))) = pair else {
        return Err(SolveError::NotTwoConnected);
    };
    let seq = two_semi_seq(d, x, y, &[x1, y1], &[x2, y2], trace)?;
    let k = cycle_cost(d, &seq);
    ensure_internal!(k <= 4, "two-sided orcycle has {k} > 4 backward arcs");
    trace.terminal("two-semicomplete-corollary", format!("links {x1}-{y1}, {x2}-{y2}, {k} backward"));
    Ok(seq)
}

/// Hamilton orcycle with at most five backward arcs from a semicomplete `X`
/// and a Hamilton orpath `p` of `D[Y]`, under the selected condition.
pub fn dipath_plus_semi(
    d: &Digraph,
    x: &[Vertex],
    y: &[Vertex],
    p: &[Vertex],
    condition: PlusSemiCondition,
) -> Result<OrCycle, SolveError> {
    if let Some(t) = d.independent_triple() {
        return Err(SolveError::IndependentTriple(t));
    }
    if x.is_empty() || y.is_empty() {
        return Err(SolveError::pre("X and Y must be non-empty"));
    }
    check_partition(d, x, y)?;
    check_semicomplete(d, x)?;
    let mut sorted_p = p.to_vec();
    sorted_p.sort_unstable();
    let mut sorted_y = y.to_vec();
    sorted_y.sort_unstable();
    if sorted_p != sorted_y {
        return Err(SolveError::pre("P must visit exactly the vertices of Y"));
    }
    let closed = matches!(condition, PlusSemiCondition::ThreeNeighbours { .. });
    let Some(back) = backward_count(d, p, closed) else {
        return Err(SolveError::pre("P is not an orpath of D[Y]"));
    };
    if back > 2 {
        return Err(SolveError::pre(format!("P has {back} > 2 backward arcs")));
    }
    let mut trace = SolverTrace::new();
    let seq = match condition {
        PlusSemiCondition::EndsApart => plus_semi_a(d, x, p, &mut trace)?,
        PlusSemiCondition::DistinctEndNeighbours { x: a, x_prime: b } => plus_semi_b(d, x, p, a, b, &mut trace)?,
        PlusSemiCondition::ThreeNeighbours { i, x1, x2, x3 } => plus_semi_c(d, x, p, i, [x1, x2, x3], &mut trace)?,
        PlusSemiCondition::Dense => plus_semi_d(d, x, y, p, &mut trace)?,
    };
    as_cycle(d, seq)
}

fn finish(d: &Digraph, seq: Vec<Vertex>, label: &'static str, trace: &mut SolverTrace) -> Result<Vec<Vertex>, SolveError> {
    let k = cycle_cost(d, &seq);
    ensure_internal!(seq.len() == d.n(), "{label}: orcycle covers {} of {} vertices", seq.len(), d.n());
    ensure_internal!(k <= 5, "{label}: orcycle has {k} > 5 backward arcs");
    trace.terminal(label, format!("{k} backward"));
    Ok(seq)
}

pub(crate) fn plus_semi_a(
    d: &Digraph,
    x: &[Vertex],
    p: &[Vertex],
    trace: &mut SolverTrace,
) -> Result<Vec<Vertex>, SolveError> {
    let (y1, yk) = (p[0], *p.last().unwrap());
    if p.len() < 2 || d.adjacent(y1, yk) {
        return Err(SolveError::pre("condition (a): the orpath's ends must be distinct and non-adjacent"));
    }
    let n1 = neighbours_in(d, y1, x);
    let nk = neighbours_in(d, yk, x);
    if n1.is_empty() || nk.is_empty() {
        return Err(SolveError::pre("condition (a): an end of the orpath has no neighbour in X"));
    }
    let q = if x.len() == 1 {
        vec![x[0]]
    } else {
        let choice = full_union_endpoints(d, x, &nk, &n1)?;
        choice.paths.forward.into_vertices()
    };
    let mut seq = p.to_vec();
    seq.extend(q);
    finish(d, seq, "dipath-plus-semi-a", trace)
}

pub(crate) fn plus_semi_b(
    d: &Digraph,
    x: &[Vertex],
    p: &[Vertex],
    a: Vertex,
    b: Vertex,
    trace: &mut SolverTrace,
) -> Result<Vec<Vertex>, SolveError> {
    let (y1, yk) = (p[0], *p.last().unwrap());
    if a == b || !x.contains(&a) || !x.contains(&b) {
        return Err(SolveError::pre("condition (b): need two distinct vertices of X"));
    }
    if !d.adjacent(y1, a) || !d.adjacent(yk, b) {
        return Err(SolveError::pre("condition (b): witnesses not adjacent to the orpath's ends"));
    }
    if cycle_cost_open(d, p) > 1 {
        return Err(SolveError::pre("condition (b): orpath has more than one backward arc"));
    }
    let mut seq = p.to_vec();
    seq.extend(q_path(d, x, b, a)?);
    finish(d, seq, "dipath-plus-semi-b", trace)
}

fn cycle_cost_open(d: &Digraph, p: &[Vertex]) -> usize {
    backward_count(d, p, false).unwrap_or(usize::MAX)
}

pub(crate) fn plus_semi_c(
    d: &Digraph,
    x: &[Vertex],
    ring: &[Vertex],
    i: usize,
    [x1, x2, x3]: [Vertex; 3],
    trace: &mut SolverTrace,
) -> Result<Vec<Vertex>, SolveError> {
    let k = ring.len();
    if i >= k {
        return Err(SolveError::pre("condition (c): index outside the cycle"));
    }
    if cycle_cost(d, ring) > 2 {
        return Err(SolveError::pre("condition (c): D[Y] cycle has more than two backward arcs"));
    }
    let (prev, cur, next) = (ring[(i + k - 1) % k], ring[i], ring[(i + 1) % k]);
    let ok = [x1, x2, x3].iter().all(|v| x.contains(v))
        && d.adjacent(x1, prev)
        && d.adjacent(x2, cur)
        && d.adjacent(x3, next)
        && x2 != x1
        && x2 != x3;
    if !ok {
        return Err(SolveError::pre("condition (c): witnesses do not fit the cycle"));
    }
    let (start, q) = if d.has_arc(x2, cur) {
        (i, q_path(d, x, x1, x2)?)
    } else {
        ((i + 1) % k, q_path(d, x, x2, x3)?)
    };
    let mut seq: Vec<Vertex> = ring[start..].iter().chain(&ring[..start]).copied().collect();
    seq.extend(q);
    finish(d, seq, "dipath-plus-semi-c", trace)
}

pub(crate) fn plus_semi_d(
    d: &Digraph,
    x: &[Vertex],
    y: &[Vertex],
    p: &[Vertex],
    trace: &mut SolverTrace,
) -> Result<Vec<Vertex>, SolveError> {
    if x.len() < 4 {
        return Err(SolveError::pre(format!("condition (d): |X| = {} < 4", x.len())));
    }
    let nbrs: Vec<Vec<Vertex>> = p.iter().map(|&v| neighbours_in(d, v, x)).collect();
    if let Some(i) = nbrs.iter().position(|s| s.is_empty()) {
        return Err(SolveError::pre(format!("condition (d): vertex {} has no neighbour in X", p[i])));
    }
    if cycle_cost_open(d, p) > 1 {
        return Err(SolveError::pre("condition (d): orpath has more than one backward arc"));
    }
    let k = p.len();
    let (y1, yk) = (p[0], p[k - 1]);
    if k == 1 {
        return match (nbrs[0].first(), nbrs[0].get(1)) {
            (Some(&a), Some(&b)) => plus_semi_b(d, x, p, a, b, trace),
            _ => Err(SolveError::pre(format!("condition (d): vertex {y1} has a single neighbour"))),
        };
    }
    if !d.adjacent(y1, yk) {
        return plus_semi_a(d, x, p, trace);
    }
    let distinct = nbrs[0]
        .iter()
        .find_map(|&a| nbrs[k - 1].iter().find(|&&b| b != a).map(|&b| (a, b)));
    if let Some((a, b)) = distinct {
        return plus_semi_b(d, x, p, a, b, trace);
    }
    // Every later step treats `p` plus the arc between its ends as a cycle.
    for end in [0, k - 1] {
        if let Some(i) = (1..k - 1).find(|&i| !d.adjacent(p[end], p[i])) {
            let x1 = nbrs[i - 1][0];
            let x3 = nbrs[i + 1][0];
            let x2 = nbrs[i]
                .iter()
                .copied()
                .find(|&v| v != x1 && v != x3)
                .ok_or_else(|| SolveError::internal("vertex far from an end has fewer than three X-neighbours"))?;
            return plus_semi_c(d, x, p, i, [x1, x2, x3], trace);
        }
    }
    if d.is_semicomplete_on(y) {
        return corollary_seq(d, x, y, trace);
    }
    let (i, j) = (1..k - 1)
        .find_map(|i| (i + 1..k - 1).find(|&j| !d.adjacent(p[i], p[j])).map(|j| (i, j)))
        .ok_or_else(|| SolveError::internal("Y is not semicomplete yet every inner pair is adjacent"))?;
    let mut p1: Vec<Vertex> = p[j..].to_vec();
    p1.extend_from_slice(&p[i + 1..j]);
    p1.extend_from_slice(&p[..=i]);
    let mut p2: Vec<Vertex> = p[i..j].to_vec();
    p2.extend_from_slice(&p[..i]);
    p2.extend_from_slice(&p[j + 1..]);
    p2.push(p[j]);
    let choice = full_union_endpoints(d, x, &nbrs[i], &nbrs[j])?;
    p1.extend(choice.paths.forward.into_vertices());
    p2.extend(choice.paths.reverse.into_vertices());
    let (k1, k2) = (cycle_cost(d, &p1), cycle_cost(d, &p2));
    ensure_internal!(
        k1.saturating_add(k2) <= 11,
        "condition (d): candidates have {k1}+{k2} backward arcs"
    );
    trace.note("dipath-plus-semi-d", format!("far pair ({}, {}), candidates {k1}/{k2}", p[i], p[j]));
    finish(d, if k1 <= k2 { p1 } else { p2 }, "dipath-plus-semi-d", trace)
}
