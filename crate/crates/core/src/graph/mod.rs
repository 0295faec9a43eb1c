//! Dense digraph representation on vertices `0..n`.
//!
//! Adjacency is stored as two bit matrices (out-rows and in-rows), so arc
//! queries are a single word lookup and neighbourhood intersections used by
//! the independence and clique routines run word-parallel.

mod connectivity;
pub mod dot;
pub mod format;

pub use connectivity::{ConnectivityProfile, StrongDecomposition};

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("arc ({u},{v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(Vertex, Vertex),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A digraph without loops or parallel arcs. Digons are allowed.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    words: usize,
    out_rows: Vec<u64>,
    in_rows: Vec<u64>,
    arc_count: usize,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        let words = word_count(n);
        Digraph {
            n,
            words,
            out_rows: vec![0; n * words],
            in_rows: vec![0; n * words],
            arc_count: 0,
        }
    }

    /// Builds a digraph from an arc list. Repeated arcs are merged.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut d = Digraph::empty(n);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Inserts `u -> v`; returns `false` if it was already present.
    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::OutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_arc(u, v) {
            return Ok(false);
        }
        self.out_rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.in_rows[v * self.words + u / 64] |= 1 << (u % 64);
        self.arc_count += 1;
        Ok(true)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    #[inline]
    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out_rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency in the underlying undirected graph.
    #[inline]
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    #[inline]
    pub fn is_digon(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    pub(crate) fn out_row(&self, u: Vertex) -> &[u64] {
        &self.out_rows[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn in_row(&self, u: Vertex) -> &[u64] {
        &self.in_rows[u * self.words..(u + 1) * self.words]
    }

    /// Underlying-graph neighbourhood of `u` as a bit row.
    pub(crate) fn neighbor_row(&self, u: Vertex) -> Vec<u64> {
        self.out_row(u)
            .iter()
            .zip(self.in_row(u))
            .map(|(a, b)| a | b)
            .collect()
    }

    pub fn out_neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        iter_bits(self.out_row(u))
    }

    pub fn in_neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        iter_bits(self.in_row(u))
    }

    /// Neighbours of `u` in the underlying undirected graph, ascending.
    pub fn neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&v| v != u && self.adjacent(u, v))
    }

    /// All arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    pub fn transpose(&self) -> Digraph {
        Digraph {
            n: self.n,
            words: self.words,
            out_rows: self.in_rows.clone(),
            in_rows: self.out_rows.clone(),
            arc_count: self.arc_count,
        }
    }

    /// The digraph in which every adjacency of `self` becomes a digon.
    pub fn symmetric_closure(&self) -> Digraph {
        let rows: Vec<u64> = self
            .out_rows
            .iter()
            .zip(&self.in_rows)
            .map(|(a, b)| a | b)
            .collect();
        let arc_count = rows.iter().map(|w| w.count_ones() as usize).sum();
        Digraph {
            n: self.n,
            words: self.words,
            out_rows: rows.clone(),
            in_rows: rows,
            arc_count,
        }
    }

    pub fn underlying(&self) -> UndirectedView {
        let edges = self
            .arcs()
            .filter_map(|(u, v)| {
                if u < v || !self.has_arc(v, u) {
                    Some((u.min(v), u.max(v)))
                } else {
                    None
                }
            })
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        UndirectedView { n: self.n, edges }
    }

    /// Copy of `self` with the reverse of every listed arc added.
    pub fn with_reversed(&self, arcs: &[(Vertex, Vertex)]) -> Digraph {
        let mut d = self.clone();
        for &(u, v) in arcs {
            d.add_arc(v, u).expect("reversed arc stays in range");
        }
        d
    }

    /// Induced subdigraph on `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced(&self, vertices: &[Vertex]) -> Digraph {
        let mut d = Digraph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j && self.has_arc(u, v) {
                    d.add_arc(i, j).expect("induced indices in range");
                }
            }
        }
        d
    }

    /// First non-adjacent pair inside `vertices`, if any.
    pub fn missing_pair(&self, vertices: &[Vertex]) -> Option<(Vertex, Vertex)> {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if !self.adjacent(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_semicomplete_on(&self, vertices: &[Vertex]) -> bool {
        self.missing_pair(vertices).is_none()
    }

    pub fn is_semicomplete(&self) -> bool {
        let all: Vec<Vertex> = (0..self.n).collect();
        self.is_semicomplete_on(&all)
    }

    /// Three pairwise non-adjacent vertices, smallest in lexicographic order.
    pub fn independent_triple(&self) -> Option<[Vertex; 3]> {
        let nbr: Vec<Vec<u64>> = (0..self.n).map(|u| self.neighbor_row(u)).collect();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adjacent(a, b) {
                    continue;
                }
                // c > b with c adjacent to neither a nor b
                for c in b + 1..self.n {
                    let (w, bit) = (c / 64, 1u64 << (c % 64));
                    if nbr[a][w] & bit == 0 && nbr[b][w] & bit == 0 {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// True iff no three vertices are pairwise non-adjacent.
    pub fn alpha_at_most_two(&self) -> bool {
        self.independent_triple().is_none()
    }

    /// Vertices of `set` adjacent (in the underlying graph) to `v`.
    pub fn neighbors_in(&self, v: Vertex, set: &[Vertex]) -> Vec<Vertex> {
        set.iter().copied().filter(|&x| self.adjacent(v, x)).collect()
    }
}

pub(crate) fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

/// The underlying undirected graph: `{u,v}` is an edge iff some arc joins them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedView {
    pub n: usize,
    /// Edges as `(min, max)` pairs, sorted.
    pub edges: Vec<(Vertex, Vertex)>,
}

impl UndirectedView {
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt3() -> Digraph {
        Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn builds_transitive_triangle() {
        let d = tt3();
        assert_eq!(d.arc_count(), 3);
        assert!(d.has_arc(0, 2) && !d.has_arc(2, 0));
        assert!(d.is_semicomplete());
    }

    #[test]
    fn digon_and_dedup() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert!(d.is_digon(0, 1));
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(
            Digraph::from_arcs(2, [(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert!(matches!(
            Digraph::from_arcs(2, [(0, 2)]),
            Err(GraphError::OutOfRange { .. })
        ));
    }

    #[test]
    fn closure_of_tt3_has_three_digons() {
        let c = tt3().symmetric_closure();
        assert_eq!(c.arc_count(), 6);
        assert_eq!(c.symmetric_closure(), c);
    }

    #[test]
    fn alpha_check() {
        assert!(tt3().alpha_at_most_two());
        let e = Digraph::empty(3);
        assert_eq!(e.independent_triple(), Some([0, 1, 2]));
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let n = 130;
        let d = Digraph::from_arcs(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        assert!(d.has_arc(127, 128));
        assert_eq!(d.out_neighbors(64).collect::<Vec<_>>(), vec![65]);
        assert_eq!(d.in_neighbors(64).collect::<Vec<_>>(), vec![63]);
        assert_eq!(d.transpose().out_neighbors(64).collect::<Vec<_>>(), vec![63]);
    }

    #[test]
    fn induced_relabels_in_given_order() {
        let d = tt3();
        let s = d.induced(&[2, 0]);
        assert!(s.has_arc(1, 0));
        assert_eq!(s.arc_count(), 1);
    }
}
