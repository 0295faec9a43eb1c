use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Digraph, Vertex};

/// Connectivity of the underlying graph plus strong connectivity of the
/// digraph itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityProfile {
    pub connected: bool,
    pub cut_vertices: Vec<Vertex>,
    /// Connected, at least three vertices, no cut vertex.
    pub two_connected: bool,
    pub strong: bool,
}

/// Strong components listed in a topological order of the condensation.
///
/// Among valid orders the one produced is canonical: whenever several
/// components are ready, the one holding the smallest vertex comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongDecomposition {
    pub components: Vec<Vec<Vertex>>,
    pub initial: Vec<usize>,
    pub terminal: Vec<usize>,
    pub component_of: Vec<usize>,
}

impl StrongDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Re-scans every arc and checks the stored order is topological.
    pub fn is_consistent_with(&self, d: &Digraph) -> bool {
        let mut seen = vec![false; d.n()];
        for comp in &self.components {
            for &v in comp {
                if seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        seen.iter().all(|&s| s)
            && d.arcs()
                .all(|(u, v)| self.component_of[u] <= self.component_of[v])
    }
}

impl Digraph {
    pub fn connectivity_profile(&self) -> ConnectivityProfile {
        let connected = self.is_connected();
        let cut_vertices = self.cut_vertices();
        ConnectivityProfile {
            connected,
            two_connected: connected && self.n() >= 3 && cut_vertices.is_empty(),
            cut_vertices,
            strong: self.is_strong(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        let all: Vec<Vertex> = (0..self.n()).collect();
        self.components_on(&all).len() == 1
    }

    pub fn is_two_connected(&self) -> bool {
        self.n() >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// Connected components of the underlying graph restricted to `vertices`,
    /// each sorted, ordered by smallest member.
    pub fn components_on(&self, vertices: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut inside = vec![false; self.n()];
        for &v in vertices {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        let mut out = Vec::new();
        for &s in &sorted {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.out_neighbors(u).chain(self.in_neighbors(u)) {
                    if inside[v] && !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Articulation points of the underlying graph, ascending.
    pub fn cut_vertices(&self) -> Vec<Vertex> {
        let n = self.n();
        let nbrs: Vec<Vec<Vertex>> = (0..n).map(|u| self.neighbors(u).collect()).collect();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(Vertex, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
                if *idx < nbrs[u].len() {
                    let v = nbrs[u][*idx];
                    *idx += 1;
                    if disc[v] == usize::MAX {
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((v, u, 0));
                    } else if v != parent {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Vertices reachable by dipaths from any of `sources` (sources included).
    pub fn reachable_from(&self, sources: &[Vertex]) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut stack = Vec::new();
        for &s in sources {
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(u) = stack.pop() {
            for v in self.out_neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    pub fn is_strong(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        self.reachable_from(&[0]).iter().all(|&s| s)
            && self.transpose().reachable_from(&[0]).iter().all(|&s| s)
    }

    /// Whether the subdigraph induced by `vertices` is strong.
    pub fn is_strong_on(&self, vertices: &[Vertex]) -> bool {
        self.induced(vertices).is_strong()
    }

    pub fn strong_decomposition(&self) -> StrongDecomposition {
        let n = self.n();
        let comp_raw = tarjan(self);
        let count = comp_raw.iter().copied().max().map_or(0, |m| m + 1);
        let mut members: Vec<Vec<Vertex>> = vec![Vec::new(); count];
        for v in 0..n {
            members[comp_raw[v]].push(v);
        }
        // condensation edges and in-degrees
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); count];
        let mut indeg = vec![0usize; count];
        for (u, v) in self.arcs() {
            let (a, b) = (comp_raw[u], comp_raw[v]);
            if a != b && !succ[a].contains(&b) {
                succ[a].push(b);
                indeg[b] += 1;
            }
        }
        let mut has_in = vec![false; count];
        let mut has_out = vec![false; count];
        for a in 0..count {
            if !succ[a].is_empty() {
                has_out[a] = true;
            }
            for &b in &succ[a] {
                has_in[b] = true;
            }
        }
        let mut heap: BinaryHeap<Reverse<(Vertex, usize)>> = (0..count)
            .filter(|&c| indeg[c] == 0)
            .map(|c| Reverse((members[c][0], c)))
            .collect();
        let mut order = Vec::with_capacity(count);
        while let Some(Reverse((_, c))) = heap.pop() {
            order.push(c);
            for &b in &succ[c] {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    heap.push(Reverse((members[b][0], b)));
                }
            }
        }
        let mut position = vec![0usize; count];
        for (i, &c) in order.iter().enumerate() {
            position[c] = i;
        }
        let component_of = (0..n).map(|v| position[comp_raw[v]]).collect();
        let initial = order
            .iter()
            .enumerate()
            .filter(|&(_, &c)| !has_in[c])
            .map(|(i, _)| i)
            .collect();
        let terminal = order
            .iter()
            .enumerate()
            .filter(|&(_, &c)| !has_out[c])
            .map(|(i, _)| i)
            .collect();
        let components = order.into_iter().map(|c| std::mem::take(&mut members[c])).collect();
        StrongDecomposition {
            components,
            initial,
            terminal,
            component_of,
        }
    }
}

/// Iterative Tarjan; returns a component id per vertex.
fn tarjan(d: &Digraph) -> Vec<usize> {
    let n = d.n();
    let succ: Vec<Vec<Vertex>> = (0..n).map(|u| d.out_neighbors(u).collect()).collect();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(Vertex, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (u, ref mut i)) = call.last_mut() {
            if *i < succ[u].len() {
                let v = succ[u][*i];
                *i += 1;
                if index[v] == usize::MAX {
                    index[v] = next_index;
                    low[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    call.push((v, 0));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[u]);
                }
                if low[u] == index[u] {
                    loop {
                        let w = stack.pop().expect("tarjan stack non-empty");
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == u {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dipath_profile() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let p = d.connectivity_profile();
        assert!(p.connected);
        assert_eq!(p.cut_vertices, vec![1]);
        assert!(!p.two_connected);
        assert!(!p.strong);
    }

    #[test]
    fn dicycle_profile() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let p = d.connectivity_profile();
        assert!(p.connected && p.two_connected && p.strong);
        assert!(p.cut_vertices.is_empty());
    }

    #[test]
    fn two_digons_disconnected() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        let p = d.connectivity_profile();
        assert!(!p.connected && !p.two_connected && !p.strong);
    }

    #[test]
    fn tt3_decomposition() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let sd = d.strong_decomposition();
        assert_eq!(sd.components, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(sd.initial, vec![0]);
        assert_eq!(sd.terminal, vec![2]);
        assert!(sd.is_consistent_with(&d));
    }

    #[test]
    fn dicycle_is_one_component() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let sd = d.strong_decomposition();
        assert_eq!(sd.components, vec![vec![0, 1, 2]]);
        assert_eq!(sd.initial, vec![0]);
        assert_eq!(sd.terminal, vec![0]);
    }

    #[test]
    fn cut_vertex_in_bowtie() {
        // two triangles sharing vertex 2
        let d = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(d.cut_vertices(), vec![2]);
        assert!(d.is_strong());
        assert!(!d.is_two_connected());
    }
}
