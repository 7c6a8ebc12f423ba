//! Exact triangle enumeration and the triadic measures derived from it.
//!
//! Enumeration orients every edge toward the endpoint of higher rank, where
//! rank is `(degree, id)`. Each vertex then owns the edges it points along,
//! and a triangle is reported exactly once, at its lowest-ranked vertex, by
//! intersecting owned-neighbor lists.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::degree::{DegreeBin, DegreeBinning};
use crate::graph::UndirectedGraph;

/// Owned-neighbor lists, each sorted by vertex id.
struct Orientation {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Orientation {
    fn new(g: &UndirectedGraph) -> Self {
        let n = g.vertex_count();
        let rank = |v: usize| (g.degree(v), v);
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for v in 0..n {
            targets.extend(g.neighbors(v).iter().copied().filter(|&u| rank(v) < rank(u)));
            offsets.push(targets.len());
        }
        Orientation { offsets, targets }
    }

    #[inline]
    fn owned(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Calls `emit` once for every triangle whose lowest-ranked vertex is `v`.
    #[inline]
    fn triangles_at<F: FnMut([usize; 3])>(&self, v: usize, mut emit: F) {
        let owned_v = self.owned(v);
        for &u in owned_v {
            let owned_u = self.owned(u);
            let (mut i, mut j) = (0, 0);
            while i < owned_v.len() && j < owned_u.len() {
                let (a, b) = (owned_v[i], owned_u[j]);
                if a < b {
                    i += 1;
                } else if b < a {
                    j += 1;
                } else {
                    let mut tri = [v, u, a];
                    tri.sort_unstable();
                    emit(tri);
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

/// Visits every triangle once, as an ascending vertex triple, on the calling
/// thread. Returns the triangle count.
pub fn enumerate_triangles<F: FnMut([usize; 3])>(g: &UndirectedGraph, mut visitor: F) -> u64 {
    let orientation = Orientation::new(g);
    let mut count = 0u64;
    for v in 0..g.vertex_count() {
        orientation.triangles_at(v, |t| {
            count += 1;
            visitor(t);
        });
    }
    count
}

/// Parallel enumeration over `workers` threads (`0` means rayon's default
/// pool). Visit order is unspecified; the returned count is exact.
pub fn enumerate_triangles_par<F>(g: &UndirectedGraph, workers: usize, visitor: F) -> u64
where
    F: Fn([usize; 3]) + Sync,
{
    let orientation = Orientation::new(g);
    let run = || {
        (0..g.vertex_count())
            .into_par_iter()
            .map(|v| {
                let mut count = 0u64;
                orientation.triangles_at(v, |t| {
                    count += 1;
                    visitor(t);
                });
                count
            })
            .sum()
    };
    crate::parallel::install(workers, run)
}

/// Counts triangles only.
pub fn count_triangles(g: &UndirectedGraph, workers: usize) -> u64 {
    enumerate_triangles_par(g, workers, |_| {})
}

/// How vertices with fewer than two neighbors enter the average `C`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum LowDegreePolicy {
    /// `C_v = 0` and the vertex counts toward the average over all `n`.
    #[default]
    CountAsZero,
    /// Average only over vertices with `d_v >= 2`.
    Exclude,
}

/// Per-degree exact values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeStats {
    /// `n_d`
    pub vertices: usize,
    /// `W_d = n_d * (d choose 2)`
    pub wedges: u64,
    /// Mean `C_v` over `V_d`.
    pub clustering: f64,
    /// Triangles with at least one degree-`d` vertex.
    pub triangles: u64,
}

#[derive(Debug, Clone)]
pub struct ExactStats {
    pub vertices: usize,
    pub edges: usize,
    pub wedges: u64,
    pub triangles: u64,
    /// `3T/W`; `None` when the graph has no wedges.
    pub transitivity: Option<f64>,
    /// Mean local clustering coefficient; `None` when the average is empty.
    pub local_clustering: Option<f64>,
    /// `T_v` for every vertex.
    pub vertex_triangles: Vec<u64>,
    /// `C_v` for every vertex (0 when `d_v < 2`).
    pub vertex_clustering: Vec<f64>,
    pub per_degree: BTreeMap<usize, DegreeStats>,
    pub elapsed: Duration,
}

impl ExactStats {
    /// Fraction of the wedges centered in `bin` that are closed.
    pub fn bin_closure(&self, g: &UndirectedGraph, bin: DegreeBin) -> Option<f64> {
        let (closed, wedges) = (0..g.vertex_count())
            .filter(|&v| bin.contains(g.degree(v)))
            .fold((0u64, 0u64), |(c, w), v| {
                (c + self.vertex_triangles[v], w + g.wedge_count_vertex(v))
            });
        (wedges > 0).then(|| closed as f64 / wedges as f64)
    }
}

/// Exact statistics with the default low-degree convention.
pub fn exact_stats(g: &UndirectedGraph) -> ExactStats {
    exact_stats_with(g, LowDegreePolicy::default())
}

pub fn exact_stats_with(g: &UndirectedGraph, policy: LowDegreePolicy) -> ExactStats {
    let start = Instant::now();
    let n = g.vertex_count();
    let mut vertex_triangles = vec![0u64; n];
    let mut degree_triangles: BTreeMap<usize, u64> = BTreeMap::new();

    let triangles = enumerate_triangles(g, |tri| {
        for &v in &tri {
            vertex_triangles[v] += 1;
        }
        let mut degrees = tri.map(|v| g.degree(v));
        degrees.sort_unstable();
        for (i, &d) in degrees.iter().enumerate() {
            if i == 0 || degrees[i - 1] != d {
                *degree_triangles.entry(d).or_default() += 1;
            }
        }
    });

    let vertex_clustering: Vec<f64> = (0..n)
        .map(|v| {
            let w = g.wedge_count_vertex(v);
            if w == 0 {
                0.0
            } else {
                vertex_triangles[v] as f64 / w as f64
            }
        })
        .collect();

    let wedges = g.wedge_count();
    let transitivity = (wedges > 0).then(|| 3.0 * triangles as f64 / wedges as f64);

    let (sum, members) = match policy {
        LowDegreePolicy::CountAsZero => (vertex_clustering.iter().sum::<f64>(), n),
        LowDegreePolicy::Exclude => (0..n)
            .filter(|&v| g.degree(v) >= 2)
            .fold((0.0, 0), |(s, c), v| (s + vertex_clustering[v], c + 1)),
    };
    let local_clustering = (members > 0).then(|| sum / members as f64);

    let per_degree = g
        .degree_index()
        .iter()
        .map(|(d, vs)| {
            let total: f64 = vs.iter().map(|&v| vertex_clustering[v]).sum();
            let stats = DegreeStats {
                vertices: vs.len(),
                wedges: vs.len() as u64 * crate::graph::wedges_for_degree(d),
                clustering: total / vs.len() as f64,
                triangles: degree_triangles.get(&d).copied().unwrap_or(0),
            };
            (d, stats)
        })
        .collect();

    ExactStats {
        vertices: n,
        edges: g.edge_count(),
        wedges,
        triangles,
        transitivity,
        local_clustering,
        vertex_triangles,
        vertex_clustering,
        per_degree,
        elapsed: start.elapsed(),
    }
}

/// For each bin, the number of triangles with at least one vertex whose
/// degree falls in the bin.
pub fn bin_triangles(g: &UndirectedGraph, binning: &DegreeBinning, workers: usize) -> Vec<u64> {
    let bins = binning.bins();
    let counts: Vec<AtomicU64> = bins.iter().map(|_| AtomicU64::new(0)).collect();
    enumerate_triangles_par(g, workers, |tri| {
        for (i, bin) in bins.iter().enumerate() {
            if tri.iter().any(|&v| bin.contains(g.degree(v))) {
                counts[i].fetch_add(1, Ordering::Relaxed);
            }
        }
    });
    counts.into_iter().map(AtomicU64::into_inner).collect()
}
