//! Seeded instance families: the lower-bound gadgets and random digraphs
//! with independence number at most two.
//!
//! Every family is described by an [`InstanceSpec`] whose one-line text
//! form `family:key=value,...,seed=S` round-trips through `Display` and
//! `FromStr` and fully determines the arc set.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Digraph, Vertex};

/// Attempts allowed when rejection-sampling for connectivity.
pub const RETRY_BUDGET: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad instance spec: {0}")]
    Spec(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("no instance with the requested connectivity after {attempts} attempts")]
    RetryBudget { attempts: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    None,
    Connected,
    TwoConnected,
}

impl Connectivity {
    fn holds(self, d: &Digraph) -> bool {
        match self {
            Connectivity::None => true,
            Connectivity::Connected => d.is_connected(),
            Connectivity::TwoConnected => d.n() >= 3 && d.is_two_connected(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Connectivity::None => "none",
            Connectivity::Connected => "connected",
            Connectivity::TwoConnected => "two",
        }
    }
}

/// How the underlying graph of a random α≤2 instance is drawn. Its
/// complement must be triangle-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alpha2Mode {
    /// Complement of a random bipartite graph: two cliques plus random cross edges.
    Bipartite,
    /// Complement of a random maximal-ish triangle-free graph.
    TriangleFree,
    /// One of the two, chosen by the seed.
    Mixed,
}

impl Alpha2Mode {
    fn name(self) -> &'static str {
        match self {
            Alpha2Mode::Bipartite => "bipartite",
            Alpha2Mode::TriangleFree => "trianglefree",
            Alpha2Mode::Mixed => "mixed",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Two transitive tournaments `a1..ak`, `b1..bm` and the arc `a1 -> b2`.
    Fig1 { k: usize, m: usize },
    /// The orcycle lower-bound gadget on `6k - 2` vertices. `randomized`
    /// draws the free tournament and its arcs to the last block from the seed.
    Dk { k: usize, randomized: bool },
    RandomAlpha2 {
        n: usize,
        digon_prob: f64,
        connectivity: Connectivity,
        mode: Alpha2Mode,
        /// Density of cross edges (bipartite mode) or of the removed
        /// triangle-free graph (triangle-free mode).
        density: f64,
    },
    RandomTournament { n: usize },
    RandomSemicomplete { n: usize, digon_prob: f64 },
    /// Two random tournaments joined by `bridges` random cross arcs.
    TwoCliquesBridge { k: usize, m: usize, bridges: usize },
    /// A 2-connected α≤2 digraph whose unique lexicographically first largest
    /// semicomplete set is `0..x`, with `y` further vertices. `density` is
    /// the rate of non-adjacent pairs inside the second part.
    Planted {
        x: usize,
        y: usize,
        digon_prob: f64,
        density: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceSpec {
    pub family: Family,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn new(family: Family, seed: u64) -> Self {
        InstanceSpec { family, seed }
    }

    pub fn generate(&self) -> Result<Digraph, GenError> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        match self.family {
            Family::Fig1 { k, m } => gen_fig1(k, m),
            Family::Dk { k, randomized } => dk_with(k, randomized.then_some(&mut rng)),
            Family::RandomAlpha2 {
                n,
                digon_prob,
                connectivity,
                mode,
                density,
            } => random_alpha2(n, digon_prob, connectivity, mode, density, &mut rng),
            Family::RandomTournament { n } => Ok(random_semicomplete(n, 0.0, &mut rng)),
            Family::RandomSemicomplete { n, digon_prob } => {
                check_prob(digon_prob)?;
                Ok(random_semicomplete(n, digon_prob, &mut rng))
            }
            Family::TwoCliquesBridge { k, m, bridges } => two_cliques_bridge(k, m, bridges, &mut rng),
            Family::Planted {
                x,
                y,
                digon_prob,
                density,
            } => planted(x, y, digon_prob, density, &mut rng),
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Fig1 { k, m } => write!(f, "fig1:k={k},m={m}")?,
            Family::Dk { k, randomized } => write!(f, "dk:k={k},randomized={randomized}")?,
            Family::RandomAlpha2 {
                n,
                digon_prob,
                connectivity,
                mode,
                density,
            } => write!(
                f,
                "alpha2:n={n},digon={digon_prob},conn={},mode={},density={density}",
                connectivity.name(),
                mode.name()
            )?,
            Family::RandomTournament { n } => write!(f, "tournament:n={n}")?,
            Family::RandomSemicomplete { n, digon_prob } => write!(f, "semicomplete:n={n},digon={digon_prob}")?,
            Family::TwoCliquesBridge { k, m, bridges } => write!(f, "bridge:k={k},m={m},bridges={bridges}")?,
            Family::Planted {
                x,
                y,
                digon_prob,
                density,
            } => write!(f, "planted:x={x},y={y},digon={digon_prob},density={density}")?,
        }
        write!(f, ",seed={}", self.seed)
    }
}

impl FromStr for InstanceSpec {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut kv = BTreeMap::new();
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| GenError::Spec(format!("expected key=value, got {part:?}")))?;
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
        let mut p = Params { kv };
        let seed = p.take("seed", 0u64)?;
        let family = match name {
            "fig1" => Family::Fig1 {
                k: p.take("k", 3)?,
                m: p.take("m", 3)?,
            },
            "dk" => Family::Dk {
                k: p.take("k", 2)?,
                randomized: p.take("randomized", false)?,
            },
            "alpha2" => Family::RandomAlpha2 {
                n: p.need("n")?,
                digon_prob: p.take("digon", 0.2)?,
                connectivity: match p.take("conn", "connected".to_string())?.as_str() {
                    "none" => Connectivity::None,
                    "connected" => Connectivity::Connected,
                    "two" | "two_connected" | "2" => Connectivity::TwoConnected,
                    other => return Err(GenError::Spec(format!("unknown connectivity {other:?}"))),
                },
                mode: match p.take("mode", "mixed".to_string())?.as_str() {
                    "bipartite" => Alpha2Mode::Bipartite,
                    "trianglefree" => Alpha2Mode::TriangleFree,
                    "mixed" => Alpha2Mode::Mixed,
                    other => return Err(GenError::Spec(format!("unknown mode {other:?}"))),
                },
                density: p.take("density", 0.5)?,
            },
            "tournament" => Family::RandomTournament { n: p.need("n")? },
            "semicomplete" => Family::RandomSemicomplete {
                n: p.need("n")?,
                digon_prob: p.take("digon", 0.3)?,
            },
            "bridge" => Family::TwoCliquesBridge {
                k: p.need("k")?,
                m: p.need("m")?,
                bridges: p.take("bridges", 1)?,
            },
            "planted" => Family::Planted {
                x: p.need("x")?,
                y: p.need("y")?,
                digon_prob: p.take("digon", 0.2)?,
                density: p.take("density", 0.5)?,
            },
            other => return Err(GenError::Spec(format!("unknown family {other:?}"))),
        };
        if let Some(k) = p.kv.keys().next() {
            return Err(GenError::Spec(format!("unknown key {k:?} for {name}")));
        }
        Ok(InstanceSpec { family, seed })
    }
}

struct Params {
    kv: BTreeMap<String, String>,
}

impl Params {
    fn take<T: FromStr>(&mut self, key: &str, default: T) -> Result<T, GenError> {
        match self.kv.remove(key) {
            None => Ok(default),
            Some(v) => v.parse().map_err(|_| GenError::Spec(format!("cannot parse {key}={v}"))),
        }
    }

    fn need<T: FromStr>(&mut self, key: &str) -> Result<T, GenError> {
        let v = self
            .kv
            .remove(key)
            .ok_or_else(|| GenError::Spec(format!("missing key {key}")))?;
        v.parse().map_err(|_| GenError::Spec(format!("cannot parse {key}={v}")))
    }
}

fn check_prob(p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::Parameter(format!("probability {p} outside [0, 1]")))
    }
}

fn build(n: usize, arcs: Vec<(Vertex, Vertex)>) -> Digraph {
    Digraph::from_arcs(n, arcs).expect("generator arcs are in range and loop-free")
}

fn transitive_arcs(vs: &[Vertex]) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    vs.iter()
        .enumerate()
        .flat_map(move |(i, &a)| vs[i + 1..].iter().map(move |&b| (a, b)))
}

/// Two transitive tournaments `0..k` and `k..k+m` plus the arc from the
/// first vertex of one to the second vertex of the other.
pub fn gen_fig1(k: usize, m: usize) -> Result<Digraph, GenError> {
    if k < 3 || m < 3 {
        return Err(GenError::Parameter(format!("fig1 needs k, m >= 3, got {k}, {m}")));
    }
    let a: Vec<Vertex> = (0..k).collect();
    let b: Vec<Vertex> = (k..k + m).collect();
    let mut arcs: Vec<_> = transitive_arcs(&a).chain(transitive_arcs(&b)).collect();
    arcs.push((a[0], b[1]));
    Ok(build(k + m, arcs))
}

/// Vertex roles inside one five-vertex block of the gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DkBlock {
    /// The block's vertices in transitive order.
    pub order: [Vertex; 5],
    pub x: Vertex,
    pub y: Vertex,
}

/// Block layout of the gadget: block `i` (0-based) occupies `5i..5i+5`, and
/// the free tournament occupies `5k..6k-2`.
pub fn dk_blocks(k: usize) -> Vec<DkBlock> {
    (0..k)
        .map(|i| {
            let base = 5 * i;
            let order = [base, base + 1, base + 2, base + 3, base + 4];
            // Blocks in the first half read (u, x, v, y, w); the rest (w, y, v, x, u).
            let (x, y) = if 2 * (i + 1) <= k {
                (base + 1, base + 3)
            } else {
                (base + 3, base + 1)
            };
            DkBlock { order, x, y }
        })
        .collect()
}

/// The orcycle lower-bound gadget with the free parts fixed to transitive
/// completions.
pub fn gen_dk(k: usize) -> Result<Digraph, GenError> {
    dk_with(k, None)
}

fn dk_with(k: usize, mut rng: Option<&mut ChaCha8Rng>) -> Result<Digraph, GenError> {
    if k < 2 {
        return Err(GenError::Parameter(format!("dk needs k >= 2, got {k}")));
    }
    let n = 6 * k - 2;
    let blocks = dk_blocks(k);
    let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();
    for b in &blocks {
        arcs.extend(transitive_arcs(&b.order));
    }
    let t: Vec<Vertex> = (5 * k..n).collect();
    let last = &blocks[k - 1];
    match rng.as_deref_mut() {
        None => {
            arcs.extend(transitive_arcs(&t));
            for &u in &t {
                arcs.extend(last.order.iter().map(|&q| (u, q)));
            }
        }
        Some(rng) => {
            for (i, &a) in t.iter().enumerate() {
                for &b in t[i + 1..].iter().chain(&last.order) {
                    arcs.push(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
                }
            }
        }
    }
    for i in 0..k.saturating_sub(2) {
        arcs.push((blocks[i].y, t[i]));
        arcs.push((blocks[i + 1].x, t[i]));
    }
    arcs.push((blocks[0].x, last.y));
    arcs.push((blocks[k - 2].y, last.x));
    Ok(build(n, arcs))
}

fn orient(edges: &[(Vertex, Vertex)], digon_prob: f64, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let mut arcs = Vec::with_capacity(edges.len() * 2);
    for &(u, v) in edges {
        if rng.gen_bool(digon_prob) {
            arcs.push((u, v));
            arcs.push((v, u));
        } else if rng.gen_bool(0.5) {
            arcs.push((u, v));
        } else {
            arcs.push((v, u));
        }
    }
    arcs
}

fn random_semicomplete(n: usize, digon_prob: f64, rng: &mut ChaCha8Rng) -> Digraph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    build(n, orient(&edges, digon_prob, rng))
}

/// Edges of the complement of a triangle-free graph drawn on `0..n`.
fn complement_of_triangle_free(n: usize, mode: Alpha2Mode, density: f64, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let mut missing = vec![vec![false; n]; n];
    let mode = match mode {
        Alpha2Mode::Mixed if rng.gen_bool(0.5) => Alpha2Mode::Bipartite,
        Alpha2Mode::Mixed => Alpha2Mode::TriangleFree,
        m => m,
    };
    match mode {
        Alpha2Mode::Bipartite => {
            let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
            for u in 0..n {
                for v in u + 1..n {
                    if side[u] != side[v] && !rng.gen_bool(density) {
                        missing[u][v] = true;
                        missing[v][u] = true;
                    }
                }
            }
        }
        _ => {
            let mut pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            pairs.shuffle(rng);
            for (u, v) in pairs {
                let closes_triangle = (0..n).any(|w| missing[u][w] && missing[v][w]);
                if !closes_triangle && rng.gen_bool(density) {
                    missing[u][v] = true;
                    missing[v][u] = true;
                }
            }
        }
    }
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !missing[u][v])
        .collect()
}

/// Random digraph whose underlying graph is the complement of a triangle-free
/// graph, resampled until `connectivity` holds.
pub fn gen_random_alpha2(
    n: usize,
    digon_prob: f64,
    connectivity: Connectivity,
    seed: u64,
) -> Result<Digraph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_alpha2(n, digon_prob, connectivity, Alpha2Mode::Mixed, 0.5, &mut rng)
}

fn random_alpha2(
    n: usize,
    digon_prob: f64,
    connectivity: Connectivity,
    mode: Alpha2Mode,
    density: f64,
    rng: &mut ChaCha8Rng,
) -> Result<Digraph, GenError> {
    if n == 0 {
        return Err(GenError::Parameter("n must be at least 1".into()));
    }
    check_prob(digon_prob)?;
    check_prob(density)?;
    for _ in 0..RETRY_BUDGET {
        let edges = complement_of_triangle_free(n, mode, density, rng);
        let d = build(n, orient(&edges, digon_prob, rng));
        if connectivity.holds(&d) {
            assert!(d.alpha_at_most_two(), "generator produced an independent triple");
            return Ok(d);
        }
    }
    Err(GenError::RetryBudget { attempts: RETRY_BUDGET })
}

pub fn gen_random_tournament(n: usize, seed: u64) -> Digraph {
    random_semicomplete(n, 0.0, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn gen_two_cliques_bridge(k: usize, m: usize, bridges: usize, seed: u64) -> Result<Digraph, GenError> {
    two_cliques_bridge(k, m, bridges, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn two_cliques_bridge(k: usize, m: usize, bridges: usize, rng: &mut ChaCha8Rng) -> Result<Digraph, GenError> {
    if k == 0 || m == 0 || bridges == 0 {
        return Err(GenError::Parameter("bridge needs k, m, bridges >= 1".into()));
    }
    if bridges > k * m {
        return Err(GenError::Parameter(format!("{bridges} bridges exceed the {} cross pairs", k * m)));
    }
    let n = k + m;
    let inside: Vec<_> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .chain((k..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .collect();
    let mut arcs = orient(&inside, 0.0, rng);
    let mut cross: Vec<(Vertex, Vertex)> = (0..k).flat_map(|a| (k..n).map(move |b| (a, b))).collect();
    cross.shuffle(rng);
    for &(a, b) in &cross[..bridges] {
        arcs.push(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
    }
    Ok(build(n, arcs))
}

fn planted(a: usize, m: usize, digon_prob: f64, density: f64, rng: &mut ChaCha8Rng) -> Result<Digraph, GenError> {
    if a < 2 || m < 1 {
        return Err(GenError::Parameter(format!("planted needs x >= 2 and y >= 1, got {a}, {m}")));
    }
    check_prob(digon_prob)?;
    check_prob(density)?;
    let n = a + m;
    let want: Vec<Vertex> = (0..a).collect();
    for _ in 0..RETRY_BUDGET {
        // `missing` is the triangle-free graph of non-adjacent pairs.
        let mut missing = vec![vec![false; n]; n];
        let mut pairs: Vec<(Vertex, Vertex)> = (a..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        pairs.shuffle(rng);
        for (u, v) in pairs {
            if rng.gen_bool(density) && !(a..n).any(|w| missing[u][w] && missing[v][w]) {
                missing[u][v] = true;
                missing[v][u] = true;
            }
        }
        let mut ok = true;
        for v in a..n {
            // Part-one vertices missed by a non-neighbour of `v` must stay
            // adjacent to `v`, or a triangle would appear in `missing`.
            let free: Vec<Vertex> = (0..a).filter(|&x| !(a..n).any(|w| missing[v][w] && missing[w][x])).collect();
            let Some(&forced) = free.choose(rng) else {
                ok = false;
                break;
            };
            for &x in &free {
                if x == forced || rng.gen_bool(0.35) {
                    missing[v][x] = true;
                    missing[x][v] = true;
                }
            }
        }
        if !ok {
            continue;
        }
        let edges: Vec<(Vertex, Vertex)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !missing[u][v])
            .collect();
        let d = build(n, orient(&edges, digon_prob, rng));
        if d.is_two_connected() && crate::orcycle::max_semicomplete_subset(&d) == want {
            assert!(d.alpha_at_most_two(), "generator produced an independent triple");
            return Ok(d);
        }
    }
    Err(GenError::RetryBudget { attempts: RETRY_BUDGET })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_counts() {
        let d = gen_fig1(3, 3).unwrap();
        assert_eq!((d.n(), d.arc_count()), (6, 7));
        assert!(d.has_arc(0, 4));
        assert_eq!(gen_fig1(4, 5).unwrap().arc_count(), 17);
        assert!(gen_fig1(2, 3).is_err());
    }

    #[test]
    fn dk_two_connectors() {
        let d = gen_dk(2).unwrap();
        assert_eq!(d.n(), 10);
        // x1 = 1, y1 = 3 in the first block; x2 = 8, y2 = 6 in the second.
        assert!(d.has_arc(1, 6) && d.has_arc(3, 8));
        assert_eq!(d.arc_count(), 2 * 10 + 2);
        assert!(d.alpha_at_most_two());
        assert_eq!(gen_dk(3).unwrap().n(), 16);
    }

    #[test]
    fn spec_round_trip() {
        for text in [
            "fig1:k=4,m=5,seed=0",
            "dk:k=3,randomized=true,seed=9",
            "alpha2:n=10,digon=0.2,conn=two,mode=bipartite,density=0.5,seed=3",
            "tournament:n=5,seed=1",
            "semicomplete:n=6,digon=0.3,seed=2",
            "bridge:k=3,m=4,bridges=2,seed=7",
            "planted:x=5,y=7,digon=0.2,density=0.5,seed=4",
        ] {
            let spec: InstanceSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
        }
        assert!("alpha2:n=5,colour=red".parse::<InstanceSpec>().is_err());
        assert!("nope:n=5".parse::<InstanceSpec>().is_err());
    }
}
