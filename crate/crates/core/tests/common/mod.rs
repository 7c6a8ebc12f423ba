//! Brute-force oracles that share no code with the enumeration or sampling
//! paths they check.

#![allow(dead_code, clippy::needless_range_loop)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use triadic::sampler::distinct_pair;
use triadic::{DirectedGraph, UndirectedGraph, WedgeDistribution};

pub const FIG1: &str = "1 2\n1 3\n2 4\n3 4\n3 5\n4 5\n4 6\n4 7\n6 7\n";

pub fn fig1() -> UndirectedGraph {
    UndirectedGraph::load(FIG1.as_bytes()).unwrap()
}

/// G(n, p) as an explicit edge list plus its adjacency matrix.
pub struct RandomGraph {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
    pub graph: UndirectedGraph,
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> RandomGraph {
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                adj[u][v] = true;
                adj[v][u] = true;
                edges.push((u, v));
            }
        }
    }
    RandomGraph {
        n,
        adj,
        graph: UndirectedGraph::with_vertices(n, edges),
    }
}

pub struct RandomDigraph {
    pub n: usize,
    /// `arcs[u][v]` iff the directed edge `u -> v` is present.
    pub arcs: Vec<Vec<bool>>,
    pub graph: DirectedGraph,
}

pub fn random_digraph(rng: &mut StdRng, n: usize, p: f64) -> RandomDigraph {
    let mut arcs = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs[u][v] = true;
                edges.push((u, v));
            }
        }
    }
    RandomDigraph {
        n,
        arcs,
        graph: DirectedGraph::with_vertices(n, edges),
    }
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// All triangles as ascending triples, by scanning every vertex triple.
pub fn brute_triangles(adj: &[Vec<bool>]) -> Vec<[usize; 3]> {
    let n = adj.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if adj[a][b] && adj[b][c] && adj[a][c] {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

pub fn degree(adj: &[Vec<bool>], v: usize) -> usize {
    adj[v].iter().filter(|&&x| x).count()
}

/// Every wedge `(center, a, b)` with `a < b`.
pub fn brute_wedges(adj: &[Vec<bool>]) -> Vec<(usize, usize, usize)> {
    let n = adj.len();
    let mut out = Vec::new();
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                if adj[c][a] && adj[c][b] {
                    out.push((c, a, b));
                }
            }
        }
    }
    out
}

/// Brute-force transitivity, local clustering, and per-degree `C_d`, `T_d`,
/// `W_d`.
pub struct BruteStats {
    pub kappa: Option<f64>,
    pub local_cc: f64,
    pub cc: Vec<f64>,
    pub c_d: std::collections::BTreeMap<usize, f64>,
    pub t_d: std::collections::BTreeMap<usize, u64>,
    pub w_d: std::collections::BTreeMap<usize, u64>,
}

pub fn brute_stats(adj: &[Vec<bool>]) -> BruteStats {
    let n = adj.len();
    let wedges = brute_wedges(adj);
    let closed = wedges.iter().filter(|&&(_, a, b)| adj[a][b]).count();
    let kappa = (!wedges.is_empty()).then(|| closed as f64 / wedges.len() as f64);

    let mut cc = vec![0.0; n];
    for v in 0..n {
        let at_v: Vec<_> = wedges.iter().filter(|w| w.0 == v).collect();
        if !at_v.is_empty() {
            cc[v] = at_v.iter().filter(|w| adj[w.1][w.2]).count() as f64 / at_v.len() as f64;
        }
    }
    let local_cc = if n == 0 { 0.0 } else { cc.iter().sum::<f64>() / n as f64 };

    let mut c_d = std::collections::BTreeMap::new();
    let mut w_d = std::collections::BTreeMap::new();
    let mut count_d = std::collections::BTreeMap::new();
    for v in 0..n {
        let d = degree(adj, v);
        *c_d.entry(d).or_insert(0.0) += cc[v];
        *count_d.entry(d).or_insert(0usize) += 1;
        *w_d.entry(d).or_insert(0u64) += (d * d.saturating_sub(1) / 2) as u64;
    }
    for (d, total) in c_d.iter_mut() {
        *total /= count_d[d] as f64;
    }
    let mut t_d = std::collections::BTreeMap::new();
    for &d in count_d.keys() {
        let touching = brute_triangles(adj)
            .iter()
            .filter(|t| t.iter().any(|&v| degree(adj, v) == d))
            .count();
        t_d.insert(d, touching as u64);
    }
    BruteStats {
        kappa,
        local_cc,
        cc,
        c_d,
        t_d,
        w_d,
    }
}

/// Directed triangle type from edge orientations alone: `a` transitive,
/// `b` cyclic; with one reciprocal pair `{x, y}`, `c` when the third vertex
/// points at both, `e` when both point at it, `d` otherwise; `f` with two
/// reciprocal pairs and `g` with three.
pub fn orientation_type(arcs: &[Vec<bool>], tri: [usize; 3]) -> char {
    let pairs = [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])];
    let recip: Vec<(usize, usize)> = pairs
        .iter()
        .copied()
        .filter(|&(u, v)| arcs[u][v] && arcs[v][u])
        .collect();
    match recip.len() {
        0 => {
            let cyclic = tri.iter().all(|&v| {
                let outs = tri.iter().filter(|&&w| w != v && arcs[v][w]).count();
                outs == 1
            });
            if cyclic {
                'b'
            } else {
                'a'
            }
        }
        1 => {
            let (x, y) = recip[0];
            let z = *tri.iter().find(|&&v| v != x && v != y).unwrap();
            match (arcs[z][x], arcs[z][y]) {
                (true, true) => 'c',
                (false, false) => 'e',
                _ => 'd',
            }
        }
        2 => 'f',
        _ => 'g',
    }
}

pub fn connected(arcs: &[Vec<bool>], u: usize, v: usize) -> bool {
    arcs[u][v] || arcs[v][u]
}

/// Triangles of the underlying undirected graph, labelled by
/// [`orientation_type`].
pub fn brute_directed_census(arcs: &[Vec<bool>]) -> [u64; 7] {
    let n = arcs.len();
    let mut counts = [0u64; 7];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if connected(arcs, a, b) && connected(arcs, b, c) && connected(arcs, a, c) {
                    let t = orientation_type(arcs, [a, b, c]);
                    counts[(t as u8 - b'a') as usize] += 1;
                }
            }
        }
    }
    counts
}

/// Edge class index seen from `u`: 0 out, 1 in, 2 reciprocal.
pub fn class(arcs: &[Vec<bool>], u: usize, v: usize) -> Option<u8> {
    match (arcs[u][v], arcs[v][u]) {
        (true, false) => Some(0),
        (false, true) => Some(1),
        (true, true) => Some(2),
        _ => None,
    }
}

/// Wedge type index `0..6` (i..vi) of two center edge classes.
pub fn wedge_type_index(x: u8, y: u8) -> usize {
    match (x.min(y), x.max(y)) {
        (0, 0) => 0,
        (0, 1) => 1,
        (1, 1) => 2,
        (0, 2) => 3,
        (1, 2) => 4,
        (2, 2) => 5,
        _ => unreachable!(),
    }
}

/// Every directed wedge as `(type, center, a, b)` with `a < b`.
pub fn brute_directed_wedges(arcs: &[Vec<bool>]) -> Vec<(usize, usize, usize, usize)> {
    let n = arcs.len();
    let mut out = Vec::new();
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                if let (Some(x), Some(y)) = (class(arcs, c, a), class(arcs, c, b)) {
                    if a != c && b != c {
                        out.push((wedge_type_index(x, y), c, a, b));
                    }
                }
            }
        }
    }
    out
}

/// `P(center = v)` for a weighted draw, by scanning every integer the
/// sampler can draw from `0..total`.
pub fn center_probabilities(dist: &WedgeDistribution, n: usize) -> Vec<f64> {
    let mut p = vec![0.0; n];
    let total = dist.total();
    for r in 0..total {
        p[dist.select(r)] += 1.0 / total as f64;
    }
    p
}

/// Calls `f(end_a, end_b, prob)` for every outcome of the neighbor-pair draw
/// at `v`.
pub fn for_each_pair<F: FnMut(usize, usize, f64)>(g: &UndirectedGraph, v: usize, mut f: F) {
    let nbrs = g.neighbors(v);
    let d = nbrs.len();
    if d < 2 {
        return;
    }
    let p = 1.0 / (d * (d - 1)) as f64;
    for a in 0..d {
        for b in 0..d - 1 {
            let (x, y) = distinct_pair(a, b);
            f(nbrs[x], nbrs[y], p);
        }
    }
}

pub fn closed_fraction_at(g: &UndirectedGraph, v: usize) -> f64 {
    let mut s = 0.0;
    for_each_pair(g, v, |a, b, p| {
        if g.has_edge(a, b) {
            s += p;
        }
    });
    s
}
