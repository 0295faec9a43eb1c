//! Hamilton orpaths with at most two backward arcs in connected digraphs
//! with independence number at most two.

mod cover;
mod strongify;

pub use cover::gallai_milgram_2paths;
pub(crate) use cover::cover_on;
pub use strongify::{strongify, StrongifyOutcome};

use crate::error::{ensure_internal, SolveError};
use crate::graph::{Digraph, Vertex};
use crate::semicomplete::{check_semicomplete, redei_seq};
use crate::trace::SolverTrace;
use crate::walk::OrPath;

/// Largest order handled by the exact Hamilton-dipath search used when the
/// cheap constructions fail.
pub const DIPATH_SEARCH_CAP: usize = 24;

fn check_alpha(d: &Digraph) -> Result<(), SolveError> {
    match d.independent_triple() {
        Some(t) => Err(SolveError::IndependentTriple(t)),
        None => Ok(()),
    }
}

/// Hamilton dipath of a strong digraph with `α(D) <= 2`.
pub fn strong_alpha2_dipath(d: &Digraph) -> Result<OrPath, SolveError> {
    strong_dipath_traced(d, &mut SolverTrace::new())
}

fn strong_dipath_traced(d: &Digraph, trace: &mut SolverTrace) -> Result<OrPath, SolveError> {
    let n = d.n();
    if n == 0 {
        return Err(SolveError::TooFewVertices { need: 1, got: 0 });
    }
    if !d.is_strong() {
        return Err(SolveError::NotStrong);
    }
    check_alpha(d)?;
    let all: Vec<Vertex> = (0..n).collect();
    let seq = if d.is_semicomplete() {
        trace.note("dipath-insertion", "semicomplete input");
        redei_seq(d, &all)
    } else if let Some(seq) = join_cover(d, &all) {
        trace.note("dipath-cover-join", "two covering dipaths joined end to start");
        seq
    } else {
        if n > DIPATH_SEARCH_CAP {
            return Err(SolveError::TooLarge { n, cap: DIPATH_SEARCH_CAP });
        }
        trace.note("dipath-subset-search", format!("exact search over {n} vertices"));
        hamilton_dipath_search(d).ok_or_else(|| SolveError::internal("strong α≤2 digraph without Hamilton dipath"))?
    };
    let path = OrPath::new(d, seq).map_err(|f| SolveError::internal(format!("dipath invalid: {f}")))?;
    ensure_internal!(path.sigma_minus() == 0, "dipath has a backward step");
    ensure_internal!(path.len() == n, "dipath is not Hamilton");
    Ok(path)
}

/// Covers `vs` with at most two dipaths and concatenates them if an arc
/// joins the end of one to the start of the other.
fn join_cover(d: &Digraph, vs: &[Vertex]) -> Option<Vec<Vertex>> {
    let mut paths = cover_on(d, vs, 1);
    match paths.len() {
        1 => paths.pop(),
        2 => {
            let (p, q) = (&paths[0], &paths[1]);
            if d.has_arc(*p.last().unwrap(), q[0]) {
                Some([p.as_slice(), q].concat())
            } else if d.has_arc(*q.last().unwrap(), p[0]) {
                Some([q.as_slice(), p].concat())
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Hamilton dipath by subset reachability (forward arcs only).
fn hamilton_dipath_search(d: &Digraph) -> Option<Vec<Vertex>> {
    let n = d.n();
    let out: Vec<u32> = (0..n)
        .map(|u| d.out_neighbors(u).fold(0u32, |m, v| m | 1 << v))
        .collect();
    let full = 1usize << n;
    // ends[S]: vertices v such that some dipath covering S ends at v.
    let mut ends = vec![0u32; full];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for s in 1..full {
        let mut e = ends[s];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = out[v] & !(s as u32);
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[s | 1 << u] |= 1 << u;
            }
        }
    }
    let mut s = full - 1;
    if ends[s] == 0 {
        return None;
    }
    let mut v = ends[s].trailing_zeros() as usize;
    let mut rev = vec![v];
    while s.count_ones() > 1 {
        let prev = s ^ (1 << v);
        let u = (0..n).find(|&u| ends[prev] >> u & 1 == 1 && out[u] >> v & 1 == 1)?;
        rev.push(u);
        s = prev;
        v = u;
    }
    rev.reverse();
    Some(rev)
}

/// Hamilton orpath with at most two backward arcs when `V(D)` splits into two
/// semicomplete halves joined by at least one arc.
pub fn two_tournaments_orpath(d: &Digraph, v1: &[Vertex], v2: &[Vertex]) -> Result<OrPath, SolveError> {
    check_semicomplete(d, v1)?;
    check_semicomplete(d, v2)?;
    let mut all: Vec<Vertex> = v1.iter().chain(v2).copied().collect();
    all.sort_unstable();
    if all != (0..d.n()).collect::<Vec<_>>() {
        return Err(SolveError::pre("the two sides must partition the vertex set"));
    }
    if v1.is_empty() || v2.is_empty() {
        let side = if v1.is_empty() { v2 } else { v1 };
        return OrPath::new(d, redei_seq(d, side)).map_err(|f| SolveError::internal(f.to_string()));
    }
    let p = redei_seq(d, v1);
    let q = redei_seq(d, v2);
    let cross = |a: &[Vertex], b: &[Vertex]| {
        a.iter()
            .enumerate()
            .find_map(|(i, &u)| b.iter().position(|&w| d.has_arc(u, w)).map(|j| (i, j)))
    };
    let (first, second, (i, j)) = match cross(&p, &q) {
        Some(ij) => (&p, &q, ij),
        None => match cross(&q, &p) {
            Some(ij) => (&q, &p, ij),
            None => return Err(SolveError::Disconnected),
        },
    };
    // first[i+1..] first[..=i] second[j..] second[..j]
    let mut seq = Vec::with_capacity(d.n());
    seq.extend_from_slice(&first[i + 1..]);
    seq.extend_from_slice(&first[..=i]);
    seq.extend_from_slice(&second[j..]);
    seq.extend_from_slice(&second[..j]);
    let path = OrPath::new(d, seq).map_err(|f| SolveError::internal(format!("rotation invalid: {f}")))?;
    ensure_internal!(path.sigma_minus() <= 2, "rotation has {} backward arcs", path.sigma_minus());
    Ok(path)
}

/// Hamilton orpath with at most two backward arcs of a connected digraph
/// with `α(D) <= 2`.
pub fn hamilton_orpath(d: &Digraph) -> Result<(OrPath, SolverTrace), SolveError> {
    let mut trace = SolverTrace::new();
    hamilton_orpath_inner(d, &mut trace)
        .map(|p| (p, trace.clone()))
        .map_err(|e| e.with_trace(&trace))
}

fn hamilton_orpath_inner(d: &Digraph, trace: &mut SolverTrace) -> Result<OrPath, SolveError> {
    let n = d.n();
    if n == 0 {
        return Err(SolveError::TooFewVertices { need: 1, got: 0 });
    }
    if !d.is_connected() {
        return Err(SolveError::Disconnected);
    }
    check_alpha(d)?;
    let path = if d.is_strong() {
        trace.case("strong", "");
        let p = strong_dipath_traced(d, trace)?;
        trace.terminal("strong-dipath", "");
        p
    } else {
        match strongify::strongify_traced(d, trace)? {
            StrongifyOutcome::ArcSet(arcs) => {
                trace.case("arc-lift", format!("reversing {arcs:?}"));
                let lifted = d.with_reversed(&arcs);
                let dipath = strong_dipath_traced(&lifted, trace)?;
                let p = OrPath::new(d, dipath.into_vertices())
                    .map_err(|f| SolveError::internal(format!("lifted path invalid: {f}")))?;
                let seq = p.vertices();
                for &step in &p.audit().backward_steps {
                    let (a, b) = (seq[step], seq[step + 1]);
                    ensure_internal!(
                        arcs.contains(&(b, a)),
                        "backward step ({a},{b}) is not a reversed arc"
                    );
                }
                trace.terminal("arc-lift", format!("{} backward", p.sigma_minus()));
                p
            }
            StrongifyOutcome::Partition { v1, v2 } => {
                trace.case("two-semicomplete", format!("{v1:?} | {v2:?}"));
                let p = two_tournaments_orpath(d, &v1, &v2)?;
                trace.terminal("two-semicomplete-rotation", "");
                p
            }
        }
    };
    ensure_internal!(path.len() == n, "orpath is not Hamilton");
    ensure_internal!(path.sigma_minus() <= 2, "orpath has {} backward arcs", path.sigma_minus());
    Ok(path)
}
