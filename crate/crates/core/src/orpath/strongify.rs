//! Either split a connected non-strong α≤2 digraph into two semicomplete
//! halves, or name at most two arcs whose reverses make it strong.

use crate::error::SolveError;
use crate::graph::{Digraph, Vertex};
use crate::trace::SolverTrace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongifyOutcome {
    /// Both sides induce semicomplete digraphs; together they cover `V(D)`.
    Partition { v1: Vec<Vertex>, v2: Vec<Vertex> },
    /// Existing arcs whose reverses, once added, make the digraph strong.
    ArcSet(Vec<(Vertex, Vertex)>),
}

impl StrongifyOutcome {
    /// Re-checks the outcome against `d` from scratch.
    pub fn is_valid_for(&self, d: &Digraph) -> bool {
        match self {
            StrongifyOutcome::Partition { v1, v2 } => {
                let mut all: Vec<Vertex> = v1.iter().chain(v2).copied().collect();
                all.sort_unstable();
                all == (0..d.n()).collect::<Vec<_>>()
                    && d.is_semicomplete_on(v1)
                    && d.is_semicomplete_on(v2)
            }
            StrongifyOutcome::ArcSet(arcs) => {
                arcs.len() <= 2
                    && arcs.iter().all(|&(u, v)| d.has_arc(u, v))
                    && d.with_reversed(arcs).is_strong()
            }
        }
    }
}

pub fn strongify(d: &Digraph) -> Result<StrongifyOutcome, SolveError> {
    strongify_traced(d, &mut SolverTrace::new())
}

pub(crate) fn strongify_traced(d: &Digraph, trace: &mut SolverTrace) -> Result<StrongifyOutcome, SolveError> {
    if d.n() > 0 && !d.is_connected() {
        return Err(SolveError::Disconnected);
    }
    if let Some(t) = d.independent_triple() {
        return Err(SolveError::IndependentTriple(t));
    }
    if d.is_strong() {
        trace.note("strongify", "already strong");
        return Ok(StrongifyOutcome::ArcSet(Vec::new()));
    }
    let dec = d.strong_decomposition();
    let (s, t) = (dec.initial.len(), dec.terminal.len());
    let outcome = match (s, t) {
        (1, 1) => {
            trace.case("strongify-case-1", "one initial and one terminal component");
            case_one(d, &dec.components[dec.initial[0]], &dec.components[dec.terminal[0]])
        }
        (2, 1) => {
            trace.case("strongify-case-2", "two initial components");
            let i1 = &dec.components[dec.initial[0]];
            let i2 = &dec.components[dec.initial[1]];
            case_two(d, i1, i2, &dec.components[dec.terminal[0]])
        }
        (1, 2) => {
            trace.case("strongify-case-2", "two terminal components, solved on the transpose");
            let dt = d.transpose();
            let dect = dt.strong_decomposition();
            let i1 = &dect.components[dect.initial[0]];
            let i2 = &dect.components[dect.initial[1]];
            match case_two(&dt, i1, i2, &dect.components[dect.terminal[0]])? {
                StrongifyOutcome::ArcSet(arcs) => {
                    Ok(StrongifyOutcome::ArcSet(arcs.into_iter().map(|(u, v)| (v, u)).collect()))
                }
                p => Ok(p),
            }
        }
        (2, 2) => {
            trace.case("strongify-case-3", "two initial and two terminal components");
            let comps = |idx: &[usize]| -> Vec<Vec<Vertex>> { idx.iter().map(|&i| dec.components[i].clone()).collect() };
            case_three(d, comps(&dec.initial), comps(&dec.terminal), trace)
        }
        _ => Err(SolveError::internal(format!(
            "{s} initial and {t} terminal components contradict α ≤ 2"
        ))),
    }?;
    if !outcome.is_valid_for(d) {
        return Err(SolveError::internal(format!("strongify produced an invalid outcome {outcome:?}")));
    }
    trace.note("strongify", format!("{outcome:?}"));
    Ok(outcome)
}

fn mask(d: &Digraph, set: &[Vertex]) -> Vec<bool> {
    let mut m = vec![false; d.n()];
    for &v in set {
        m[v] = true;
    }
    m
}

/// Lexicographically smallest arc from `from` into `to`.
fn first_arc(d: &Digraph, from: &[bool], to: &[bool]) -> Option<(Vertex, Vertex)> {
    (0..d.n())
        .filter(|&u| from[u])
        .find_map(|u| d.out_neighbors(u).find(|&v| to[v]).map(|v| (u, v)))
}

fn split(m: &[bool]) -> (Vec<Vertex>, Vec<Vertex>) {
    let inside = (0..m.len()).filter(|&v| m[v]).collect();
    let outside = (0..m.len()).filter(|&v| !m[v]).collect();
    (inside, outside)
}

fn case_one(d: &Digraph, i1: &[Vertex], t1: &[Vertex]) -> Result<StrongifyOutcome, SolveError> {
    let (mi, mt) = (mask(d, i1), mask(d, t1));
    if let Some(a) = first_arc(d, &mi, &mt) {
        return Ok(StrongifyOutcome::ArcSet(vec![a]));
    }
    // X: I1 plus every vertex outside I1 ∪ T1 without an arc into T1.
    let mx: Vec<bool> = (0..d.n())
        .map(|v| mi[v] || (!mt[v] && !d.out_neighbors(v).any(|w| mt[w])))
        .collect();
    let (x, y) = split(&mx);
    if d.is_semicomplete_on(&y) {
        return Ok(StrongifyOutcome::Partition { v1: x, v2: y });
    }
    let my: Vec<bool> = mx.iter().map(|&b| !b).collect();
    let a_i = first_arc(d, &mi, &my).ok_or_else(|| SolveError::internal("Y not semicomplete yet no (I1,Y)-arc"))?;
    let a_t = d
        .out_neighbors(a_i.1)
        .find(|&w| mt[w])
        .map(|w| (a_i.1, w))
        .ok_or_else(|| SolveError::internal("vertex outside X has no arc into T1"))?;
    Ok(StrongifyOutcome::ArcSet(vec![a_i, a_t]))
}

/// Two initial components `i1`, `i2` and one terminal component `t1`.
fn case_two(d: &Digraph, i1: &[Vertex], i2: &[Vertex], t1: &[Vertex]) -> Result<StrongifyOutcome, SolveError> {
    let mt = mask(d, t1);
    let a1 = first_arc(d, &mask(d, i1), &mt);
    let a2 = first_arc(d, &mask(d, i2), &mt);
    if let (Some(a1), Some(a2)) = (a1, a2) {
        return Ok(StrongifyOutcome::ArcSet(vec![a1, a2]));
    }
    // Name the components so that I2 has no arc into T1.
    let (i1, i2, a_prime) = match (a1, a2) {
        (Some(a), None) => (i1, i2, a),
        (None, Some(a)) => (i2, i1, a),
        _ => return Err(SolveError::internal("neither initial component reaches T1 by an arc")),
    };
    let reach = d.reachable_from(i1);
    if let Some(a_star) = first_arc(d, &mask(d, i2), &reach) {
        return Ok(StrongifyOutcome::ArcSet(vec![a_prime, a_star]));
    }
    let (x, y) = split(&reach);
    Ok(StrongifyOutcome::Partition { v1: x, v2: y })
}

fn case_three(
    d: &Digraph,
    initial: Vec<Vec<Vertex>>,
    terminal: Vec<Vec<Vertex>>,
    trace: &mut SolverTrace,
) -> Result<StrongifyOutcome, SolveError> {
    let (mut i1, mut i2) = (initial[0].clone(), initial[1].clone());
    let (mut t1, mut t2) = (terminal[0].clone(), terminal[1].clone());
    // Claim 3.A: some vertex reached from both initial components reaches T2.
    let r1 = d.reachable_from(&i1);
    let r2 = d.reachable_from(&i2);
    let x = (0..d.n())
        .find(|&v| r1[v] && r2[v])
        .ok_or_else(|| SolveError::internal("initial components reach disjoint sets"))?;
    let from_x = d.reachable_from(&[x]);
    if !t2.iter().any(|&v| from_x[v]) {
        std::mem::swap(&mut t1, &mut t2);
    }
    trace.claim("claim-3.A", format!("vertex {x} reaches T2"));
    // Claim 3.B
    let arc = |a: &[Vertex], b: &[Vertex]| first_arc(d, &mask(d, a), &mask(d, b));
    if arc(&i2, &t2).is_none() {
        if arc(&i1, &t2).is_none() {
            return Err(SolveError::internal("no arc from an initial component into T2"));
        }
        std::mem::swap(&mut i1, &mut i2);
    }
    if arc(&i1, &t1).is_none() {
        std::mem::swap(&mut i1, &mut i2);
    }
    let a1 = arc(&i1, &t1).ok_or_else(|| SolveError::internal("claim 3.B: missing (I1,T1)-arc"))?;
    let a2 = arc(&i2, &t2).ok_or_else(|| SolveError::internal("claim 3.B: missing (I2,T2)-arc"))?;
    trace.claim("claim-3.B", format!("a1={a1:?} a2={a2:?}"));
    let star = d.with_reversed(&[a1, a2]);
    if star.is_strong() {
        return Ok(StrongifyOutcome::ArcSet(vec![a1, a2]));
    }
    // Claim 3.C: exactly two strong components remain.
    let dec = star.strong_decomposition();
    if dec.len() != 2 {
        return Err(SolveError::internal(format!(
            "claim 3.C: D* has {} strong components",
            dec.len()
        )));
    }
    trace.claim("claim-3.C", "D* has two strong components");
    let c1 = dec.components[dec.component_of[i1[0]]].clone();
    let c2 = dec.components[dec.component_of[i2[0]]].clone();
    Ok(StrongifyOutcome::Partition { v1: c1, v2: c2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transitive_triangle_needs_one_arc() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(strongify(&d).unwrap(), StrongifyOutcome::ArcSet(vec![(0, 2)]));
    }

    #[test]
    fn dipath_splits() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            strongify(&d).unwrap(),
            StrongifyOutcome::Partition {
                v1: vec![0],
                v2: vec![1, 2]
            }
        );
    }

    #[test]
    fn strong_input_needs_nothing() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(strongify(&d).unwrap(), StrongifyOutcome::ArcSet(vec![]));
    }
}
