//! Exact minima by subset dynamic programming, plus a from-scratch
//! certificate checker that shares no code with the solvers.

use thiserror::Error;

use crate::graph::{Digraph, Vertex};

pub const DEFAULT_CAP: usize = 20;
/// Bitmask states are `u32`; tables beyond this size are not attempted.
pub const HARD_CAP: usize = 26;

const INF: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{n} vertices exceed the oracle cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("an orcycle needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("endpoint {0} is out of range")]
    BadEndpoint(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// `None` when no Hamilton orpath/orcycle exists.
    pub minimum: Option<usize>,
    pub witness: Option<Vec<Vertex>>,
    pub states_explored: u64,
}

impl OracleResult {
    pub fn is_feasible(&self) -> bool {
        self.minimum.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

struct Masks {
    n: usize,
    out: Vec<u32>,
    inn: Vec<u32>,
}

impl Masks {
    fn new(d: &Digraph) -> Masks {
        let n = d.n();
        let mut out = vec![0u32; n];
        let mut inn = vec![0u32; n];
        for (u, v) in d.arcs() {
            out[u] |= 1 << v;
            inn[v] |= 1 << u;
        }
        Masks { n, out, inn }
    }

    /// Cost of stepping `u -> v`: 0 forward, 1 backward only, `INF` if absent.
    #[inline]
    fn step(&self, u: usize, v: usize) -> u8 {
        if self.out[u] >> v & 1 == 1 {
            0
        } else if self.inn[u] >> v & 1 == 1 {
            1
        } else {
            INF
        }
    }
}

/// `table[S * n + v]`: fewest backward steps over orpaths covering exactly
/// `S`, starting in `starts` and ending at `v`.
struct Table {
    n: usize,
    cells: Vec<u8>,
    states: u64,
}

impl Table {
    fn build(m: &Masks, starts: u32) -> Table {
        let n = m.n;
        let full = 1usize << n;
        let mut cells = vec![INF; full * n];
        for v in 0..n {
            if starts >> v & 1 == 1 {
                cells[(1 << v) * n + v] = 0;
            }
        }
        let adj: Vec<u32> = (0..n).map(|v| m.out[v] | m.inn[v]).collect();
        let mut states = 0u64;
        for s in 1..full {
            let base = s * n;
            let mut ends = s as u32;
            while ends != 0 {
                let v = ends.trailing_zeros() as usize;
                ends &= ends - 1;
                let c = cells[base + v];
                if c == INF {
                    continue;
                }
                states += 1;
                let mut next = adj[v] & !(s as u32);
                while next != 0 {
                    let u = next.trailing_zeros() as usize;
                    next &= next - 1;
                    let t = (s | 1 << u) * n + u;
                    let cand = c + m.step(v, u);
                    if cand < cells[t] {
                        cells[t] = cand;
                    }
                }
            }
        }
        Table { n, cells, states }
    }

    fn get(&self, s: usize, v: usize) -> u8 {
        self.cells[s * self.n + v]
    }

    /// Walks back from `(full, end)`; smallest predecessor wins ties.
    fn witness(&self, m: &Masks, end: usize) -> Vec<Vertex> {
        let mut s = (1usize << self.n) - 1;
        let mut v = end;
        let mut rev = vec![v];
        while s.count_ones() > 1 {
            let c = self.get(s, v);
            let prev = s ^ (1 << v);
            let u = (0..self.n)
                .find(|&u| {
                    prev >> u & 1 == 1 && {
                        let (pc, st) = (self.get(prev, u), m.step(u, v));
                        pc != INF && st != INF && pc + st == c
                    }
                })
                .expect("consistent table");
            rev.push(u);
            s = prev;
            v = u;
        }
        rev.reverse();
        rev
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap }
    }

    fn check_size(&self, n: usize) -> Result<(), OracleError> {
        let cap = self.cap.min(HARD_CAP);
        if n > cap {
            return Err(OracleError::TooLarge { n, cap });
        }
        Ok(())
    }

    /// Minimum backward steps over Hamilton orpaths, optionally with a fixed
    /// first and/or last vertex.
    pub fn min_backward_orpath(
        &self,
        d: &Digraph,
        start: Option<Vertex>,
        end: Option<Vertex>,
    ) -> Result<OracleResult, OracleError> {
        let n = d.n();
        self.check_size(n)?;
        for v in start.iter().chain(end.iter()) {
            if *v >= n {
                return Err(OracleError::BadEndpoint(*v));
            }
        }
        if n == 0 {
            return Ok(OracleResult {
                minimum: None,
                witness: None,
                states_explored: 0,
            });
        }
        let m = Masks::new(d);
        let starts = match start {
            Some(x) => 1u32 << x,
            None => ((1u64 << n) - 1) as u32,
        };
        let table = Table::build(&m, starts);
        let full = (1usize << n) - 1;
        let best = (0..n)
            .filter(|&v| end.map_or(true, |y| y == v))
            .map(|v| (table.get(full, v), v))
            .filter(|&(c, _)| c != INF)
            .min();
        Ok(match best {
            Some((c, v)) => OracleResult {
                minimum: Some(c as usize),
                witness: Some(table.witness(&m, v)),
                states_explored: table.states,
            },
            None => OracleResult {
                minimum: None,
                witness: None,
                states_explored: table.states,
            },
        })
    }

    /// Minimum backward steps over Hamilton orcycles (closing step included).
    /// The witness starts at vertex 0.
    pub fn min_backward_orcycle(&self, d: &Digraph) -> Result<OracleResult, OracleError> {
        let n = d.n();
        self.check_size(n)?;
        if n < 3 {
            return Err(OracleError::TooFewVertices(n));
        }
        let m = Masks::new(d);
        let table = Table::build(&m, 1);
        let full = (1usize << n) - 1;
        let best = (1..n)
            .filter_map(|v| {
                let (c, close) = (table.get(full, v), m.step(v, 0));
                (c != INF && close != INF).then(|| (c + close, v))
            })
            .min();
        Ok(match best {
            Some((c, v)) => OracleResult {
                minimum: Some(c as usize),
                witness: Some(table.witness(&m, v)),
                states_explored: table.states,
            },
            None => OracleResult {
                minimum: None,
                witness: None,
                states_explored: table.states,
            },
        })
    }

    /// A Hamilton cycle of the underlying graph starting at vertex 0, found by
    /// reachability DP over subsets.
    pub fn underlying_hamilton_cycle(&self, d: &Digraph) -> Result<Option<Vec<Vertex>>, OracleError> {
        let n = d.n();
        self.check_size(n)?;
        if n < 3 {
            return Err(OracleError::TooFewVertices(n));
        }
        let m = Masks::new(d);
        let adj: Vec<u32> = (0..n).map(|v| m.out[v] | m.inn[v]).collect();
        // ends[S]: vertices v such that some path from 0 covers S and ends at v.
        let full = 1usize << n;
        let mut ends = vec![0u32; full];
        ends[1] = 1;
        for s in (1..full).step_by(2) {
            let mut e = ends[s];
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut next = adj[v] & !(s as u32);
                while next != 0 {
                    let u = next.trailing_zeros() as usize;
                    next &= next - 1;
                    ends[s | 1 << u] |= 1 << u;
                }
            }
        }
        let last = full - 1;
        let Some(mut v) = (1..n).find(|&v| ends[last] >> v & 1 == 1 && adj[v] & 1 == 1) else {
            return Ok(None);
        };
        let mut s = last;
        let mut rev = vec![v];
        while s != 1 {
            let prev = s ^ (1 << v);
            let u = (0..n)
                .find(|&u| ends[prev] >> u & 1 == 1 && adj[u] >> v & 1 == 1)
                .expect("consistent reachability table");
            rev.push(u);
            s = prev;
            v = u;
        }
        rev.reverse();
        Ok(Some(rev))
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    /// Backward steps counted by the checker, when every step is an arc.
    pub sigma_minus: Option<usize>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Re-audits `seq` against `d`: range, distinctness, Hamilton coverage, cycle
/// length when `closed`, adjacency of every step and `σ⁻ <= claimed_bound`.
pub fn verify_certificate(d: &Digraph, seq: &[Vertex], closed: bool, claimed_bound: usize) -> VerificationReport {
    let n = d.n();
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| checks.push(Check { name, passed, detail });

    let out_of_range: Vec<Vertex> = seq.iter().copied().filter(|&v| v >= n).collect();
    push(
        "in-range",
        out_of_range.is_empty(),
        if out_of_range.is_empty() {
            String::new()
        } else {
            format!("out of range: {out_of_range:?}")
        },
    );
    let mut count = vec![0usize; n];
    for &v in seq.iter().filter(|&&v| v < n) {
        count[v] += 1;
    }
    let repeated: Vec<Vertex> = (0..n).filter(|&v| count[v] > 1).collect();
    push(
        "distinct",
        repeated.is_empty(),
        if repeated.is_empty() {
            String::new()
        } else {
            format!("repeated: {repeated:?}")
        },
    );
    let missing: Vec<Vertex> = (0..n).filter(|&v| count[v] == 0).collect();
    push(
        "hamilton",
        missing.is_empty() && seq.len() == n,
        if missing.is_empty() {
            String::new()
        } else {
            format!("not Hamilton, missing: {missing:?}")
        },
    );
    if closed {
        push("closed-length", seq.len() >= 3, format!("length {}", seq.len()));
    }

    let mut backward = 0usize;
    let mut broken = Vec::new();
    if out_of_range.is_empty() && !seq.is_empty() {
        let steps = if closed { seq.len() } else { seq.len() - 1 };
        for i in 0..steps {
            let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
            if d.has_arc(a, b) {
                continue;
            }
            if d.has_arc(b, a) {
                backward += 1;
            } else {
                broken.push((a, b));
            }
        }
    }
    let steps_ok = out_of_range.is_empty() && broken.is_empty();
    push(
        "adjacent-steps",
        steps_ok,
        if broken.is_empty() {
            String::new()
        } else {
            format!("non-adjacent steps: {broken:?}")
        },
    );
    let sigma_minus = steps_ok.then_some(backward);
    push(
        "bound",
        sigma_minus.is_some_and(|s| s <= claimed_bound),
        match sigma_minus {
            Some(s) => format!("{s} backward, bound {claimed_bound}"),
            None => "not an oriented walk".to_string(),
        },
    );
    VerificationReport { checks, sigma_minus }
}
