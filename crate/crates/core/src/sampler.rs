//! Wedge sampling estimators for undirected graphs.
//!
//! Every estimator draws `k` independent wedges, scores each in `[0, 1]`, and
//! reports the mean together with the Hoeffding half-width for its `delta`.
//! Scores are accumulated as integers so the result does not depend on how
//! samples are split across worker threads.

use rand::Rng;
use serde::Serialize;

use crate::degree::{DegreeBin, DegreeBinning};
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::hoeffding::{error_halfwidth, samples_needed};
use crate::parallel;
use crate::rng::{sample_rng, SampleRng};

/// Default failure probability.
pub const DEFAULT_DELTA: f64 = 0.001;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampleSize {
    /// Fixed number of samples.
    Count(u64),
    /// Enough samples for additive error `epsilon` at the configured `delta`.
    Accuracy { epsilon: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    pub size: SampleSize,
    pub delta: f64,
    pub seed: u64,
    /// Worker threads; `0` uses the global rayon pool.
    pub workers: usize,
}

impl SamplerConfig {
    pub fn with_samples(k: u64) -> Self {
        SamplerConfig {
            size: SampleSize::Count(k),
            delta: DEFAULT_DELTA,
            seed: 0,
            workers: 1,
        }
    }

    pub fn with_accuracy(epsilon: f64, delta: f64) -> Self {
        SamplerConfig {
            size: SampleSize::Accuracy { epsilon },
            delta,
            seed: 0,
            workers: 1,
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn delta(mut self, delta: f64) -> Self {
        self.delta = delta;
        self
    }

    /// Validated sample count `k`.
    pub fn sample_count(&self) -> Result<u64> {
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "delta must lie in (0, 1), got {}",
                self.delta
            )));
        }
        match self.size {
            SampleSize::Count(0) => Err(Error::InvalidArgument("sample count must be at least 1".into())),
            SampleSize::Count(k) => Ok(k),
            SampleSize::Accuracy { epsilon } => samples_needed(epsilon, self.delta),
        }
    }
}

/// Output of a sampling estimator.
///
/// `value` estimates the target; with probability at least `1 - delta` it is
/// within `halfwidth * scale` of the truth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub value: f64,
    pub halfwidth: f64,
    /// 1 for ratio estimators, the wedge normaliser for count estimators.
    pub scale: f64,
    pub samples: u64,
    /// Number of sampled wedges found closed.
    pub closed: u64,
    pub delta: f64,
}

impl Estimate {
    fn new(value: f64, scale: f64, samples: u64, closed: u64, delta: f64) -> Self {
        Estimate {
            value,
            halfwidth: error_halfwidth(samples, delta),
            scale,
            samples,
            closed,
            delta,
        }
    }

    /// Absolute error bound `halfwidth * scale`.
    pub fn error_bound(&self) -> f64 {
        self.halfwidth * self.scale
    }
}

/// Prefix sums of per-vertex weights for `O(log n)` weighted vertex draws.
/// Vertices with zero weight are left out and never drawn.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WedgeDistribution {
    vertices: Vec<usize>,
    /// `cumulative[i]` is the exclusive upper end of `vertices[i]`'s interval.
    cumulative: Vec<u64>,
}

impl WedgeDistribution {
    pub fn from_weights<I: IntoIterator<Item = (usize, u64)>>(weights: I) -> Self {
        let mut vertices = Vec::new();
        let mut cumulative = Vec::new();
        let mut total = 0u64;
        for (v, w) in weights {
            if w > 0 {
                total += w;
                vertices.push(v);
                cumulative.push(total);
            }
        }
        WedgeDistribution { vertices, cumulative }
    }

    /// `p_v = W_v / W` over all vertices.
    pub fn wedges(g: &UndirectedGraph) -> Self {
        Self::from_weights((0..g.vertex_count()).map(|v| (v, g.wedge_count_vertex(v))))
    }

    /// `W_v`-weighted distribution restricted to `vertices`.
    pub fn over_vertices(g: &UndirectedGraph, vertices: &[usize]) -> Self {
        Self::from_weights(vertices.iter().map(|&v| (v, g.wedge_count_vertex(v))))
    }

    pub fn total(&self) -> u64 {
        self.cumulative.last().copied().unwrap_or(0)
    }

    /// Weight of `v`, zero if absent.
    pub fn weight(&self, v: usize) -> u64 {
        match self.vertices.iter().position(|&u| u == v) {
            Some(0) => self.cumulative[0],
            Some(i) => self.cumulative[i] - self.cumulative[i - 1],
            None => 0,
        }
    }

    /// Vertex whose interval contains `r`, for `r < total()`.
    #[inline]
    pub fn select(&self, r: u64) -> usize {
        let i = self.cumulative.partition_point(|&c| c <= r);
        self.vertices[i]
    }

    #[inline]
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<usize> {
        let total = self.total();
        (total > 0).then(|| self.select(rng.gen_range(0..total)))
    }
}

/// A path `ends[0] - center - ends[1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Wedge {
    pub center: usize,
    pub ends: [usize; 2],
}

impl Wedge {
    pub fn is_closed(&self, g: &UndirectedGraph) -> bool {
        g.has_edge(self.ends[0], self.ends[1])
    }
}

/// Maps a first index `a < d` and a second index `b < d - 1` onto two
/// distinct positions; every unordered pair arises from exactly two inputs.
#[inline]
pub fn distinct_pair(a: usize, b: usize) -> (usize, usize) {
    (a, if b >= a { b + 1 } else { b })
}

/// Two distinct uniform positions in `0..d` (`d >= 2`).
#[inline]
pub fn draw_distinct_pair<R: Rng + ?Sized>(d: usize, rng: &mut R) -> (usize, usize) {
    let a = rng.gen_range(0..d);
    let b = rng.gen_range(0..d - 1);
    distinct_pair(a, b)
}

/// Uniform random wedge centered at `v` (`d_v >= 2`).
#[inline]
pub fn wedge_at<R: Rng + ?Sized>(g: &UndirectedGraph, v: usize, rng: &mut R) -> Wedge {
    let nbrs = g.neighbors(v);
    let (a, b) = draw_distinct_pair(nbrs.len(), rng);
    Wedge {
        center: v,
        ends: [nbrs[a], nbrs[b]],
    }
}

/// Draws a wedge whose center follows `dist`; with `dist` built by
/// [`WedgeDistribution::wedges`] the wedge is uniform over all wedges.
pub fn sample_uniform_wedge<R: Rng + ?Sized>(
    g: &UndirectedGraph,
    dist: &WedgeDistribution,
    rng: &mut R,
) -> Result<Wedge> {
    let v = dist.sample(rng).ok_or(Error::NoWedges)?;
    Ok(wedge_at(g, v, rng))
}

// Stream domains keep estimators that share a seed statistically independent.
const DOMAIN_TRANSITIVITY: u64 = 1;
const DOMAIN_LOCAL: u64 = 2;
const DOMAIN_DEGREE: u64 = 3 << 40;
const DOMAIN_BIN: u64 = 4 << 40;
const DOMAIN_TRI_DEGREE: u64 = 5 << 40;
const DOMAIN_TRI_BIN: u64 = 6 << 40;
pub(crate) const DOMAIN_DIRECTED: u64 = 7 << 40;

/// Evaluates `score` on samples `0..k` and reduces with `combine`. Sample `i`
/// always sees `sample_rng(seed, domain, i)`, so the result is independent
/// of `workers` whenever `combine` is associative and commutative.
pub(crate) fn reduce_samples<T, F, C>(cfg: &SamplerConfig, k: u64, domain: u64, score: F, combine: C) -> T
where
    T: Send + Default,
    F: Fn(&mut SampleRng) -> T + Sync + Send,
    C: Fn(T, T) -> T + Sync + Send,
{
    let seed = cfg.seed;
    let eval = |i: u64| score(&mut sample_rng(seed, domain, i));
    if cfg.workers == 1 {
        return (0..k).map(eval).fold(T::default(), &combine);
    }
    use rayon::prelude::*;
    parallel::install(cfg.workers, || {
        (0..k).into_par_iter().map(eval).reduce(T::default, &combine)
    })
}

fn count_samples<F>(cfg: &SamplerConfig, k: u64, domain: u64, score: F) -> u64
where
    F: Fn(&mut SampleRng) -> u64 + Sync + Send,
{
    reduce_samples(cfg, k, domain, score, |a, b| a + b)
}

/// Transitivity estimate plus the implied triangle count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransitivityEstimate {
    /// Fraction of closed wedges; estimates `kappa`.
    pub transitivity: Estimate,
    /// `transitivity * W / 3`; estimates `T` with scale `W / 3`.
    pub triangles: Estimate,
}

/// Uniform wedge sampling estimate of `kappa = 3T/W`.
pub fn estimate_transitivity(g: &UndirectedGraph, cfg: &SamplerConfig) -> Result<TransitivityEstimate> {
    let k = cfg.sample_count()?;
    let dist = WedgeDistribution::wedges(g);
    let wedges = dist.total();
    if wedges == 0 {
        return Err(Error::NoWedges);
    }
    let closed = count_samples(cfg, k, DOMAIN_TRANSITIVITY, |rng| {
        let v = dist.select(rng.gen_range(0..wedges));
        wedge_at(g, v, rng).is_closed(g) as u64
    });
    let kappa = closed as f64 / k as f64;
    let scale = wedges as f64 / 3.0;
    Ok(TransitivityEstimate {
        transitivity: Estimate::new(kappa, 1.0, k, closed, cfg.delta),
        triangles: Estimate::new(kappa * scale, scale, k, closed, cfg.delta),
    })
}

/// Estimate of the mean local clustering coefficient `C`.
///
/// Centers are uniform over all `n` vertices; a center with fewer than two
/// neighbors is an open sample, matching `C_v = 0`.
pub fn estimate_local_cc(g: &UndirectedGraph, cfg: &SamplerConfig) -> Result<Estimate> {
    let k = cfg.sample_count()?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let closed = count_samples(cfg, k, DOMAIN_LOCAL, |rng| {
        let v = rng.gen_range(0..n);
        if g.degree(v) < 2 {
            0
        } else {
            wedge_at(g, v, rng).is_closed(g) as u64
        }
    });
    Ok(Estimate::new(closed as f64 / k as f64, 1.0, k, closed, cfg.delta))
}

fn degree_class(g: &UndirectedGraph, d: usize) -> Result<Vec<usize>> {
    if d < 2 {
        return Err(Error::DegenerateDegree(d));
    }
    let members: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) == d).collect();
    if members.is_empty() {
        return Err(Error::NoSuchDegree(d));
    }
    Ok(members)
}

/// Estimate of `C_d`, the mean clustering coefficient of degree-`d` vertices.
pub fn estimate_degree_cc(g: &UndirectedGraph, d: usize, cfg: &SamplerConfig) -> Result<Estimate> {
    let k = cfg.sample_count()?;
    let members = degree_class(g, d)?;
    let closed = count_samples(cfg, k, DOMAIN_DEGREE | d as u64, |rng| {
        let v = members[rng.gen_range(0..members.len())];
        wedge_at(g, v, rng).is_closed(g) as u64
    });
    Ok(Estimate::new(closed as f64 / k as f64, 1.0, k, closed, cfg.delta))
}

/// Y-scores in sixths: a closed wedge with `j` vertices in the target class
/// scores `1/j`.
const SIXTHS: [u64; 4] = [0, 6, 3, 2];

fn triangle_score<P: Fn(usize) -> bool>(g: &UndirectedGraph, w: &Wedge, in_class: P) -> u64 {
    if !w.is_closed(g) {
        return 0;
    }
    let j = 1 + w.ends.iter().filter(|&&u| in_class(g.degree(u))).count();
    SIXTHS[j]
}

/// Estimate of `T_d`, the number of triangles with at least one degree-`d`
/// vertex. The value is `W_d * mean(Y)` with `scale = W_d`.
pub fn estimate_tri_per_degree(g: &UndirectedGraph, d: usize, cfg: &SamplerConfig) -> Result<Estimate> {
    let k = cfg.sample_count()?;
    let members = degree_class(g, d)?;
    let wedges_d = members.len() as u64 * crate::graph::wedges_for_degree(d);
    let (sixths, closed) = reduce_samples(
        cfg,
        k,
        DOMAIN_TRI_DEGREE | d as u64,
        |rng| {
            let v = members[rng.gen_range(0..members.len())];
            let s = triangle_score(g, &wedge_at(g, v, rng), |du| du == d);
            (s, (s > 0) as u64)
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    );
    let scale = wedges_d as f64;
    let mean = sixths as f64 / (6.0 * k as f64);
    Ok(Estimate::new(mean * scale, scale, k, closed, cfg.delta))
}

/// One row of a binned estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BinEstimate {
    pub bin: DegreeBin,
    /// Vertices with degree in the bin.
    pub vertices: usize,
    /// Wedges centered in the bin.
    pub wedges: u64,
    /// `None` when the bin holds no wedges.
    pub estimate: Option<Estimate>,
}

fn for_each_bin<F>(g: &UndirectedGraph, binning: &DegreeBinning, mut run: F) -> Result<Vec<BinEstimate>>
where
    F: FnMut(usize, &WedgeDistribution) -> Result<Estimate>,
{
    let index = g.degree_index();
    binning
        .bins()
        .iter()
        .enumerate()
        .map(|(i, &bin)| {
            let members = DegreeBinning::members(bin, &index);
            let dist = WedgeDistribution::over_vertices(g, &members);
            let estimate = if dist.total() == 0 { None } else { Some(run(i, &dist)?) };
            Ok(BinEstimate {
                bin,
                vertices: members.len(),
                wedges: dist.total(),
                estimate,
            })
        })
        .collect()
}

/// Per-bin closed-wedge fraction. Within a bin, centers are weighted by
/// `W_v`, so every wedge of the bin is equally likely; the target is the
/// bin's wedge-weighted closure ratio.
pub fn estimate_binned_cc(
    g: &UndirectedGraph,
    binning: &DegreeBinning,
    cfg: &SamplerConfig,
) -> Result<Vec<BinEstimate>> {
    let k = cfg.sample_count()?;
    for_each_bin(g, binning, |i, dist| {
        let closed = count_samples(cfg, k, DOMAIN_BIN | i as u64, |rng| {
            let v = dist.sample(rng).expect("bin has wedges");
            wedge_at(g, v, rng).is_closed(g) as u64
        });
        Ok(Estimate::new(closed as f64 / k as f64, 1.0, k, closed, cfg.delta))
    })
}

/// Per-bin triangle counts: triangles with at least one vertex in the bin,
/// estimated as `W_bin * mean(Y)` with `Y = 1/j` for a closed wedge having
/// `j` vertices in the bin. A single-degree bin reduces to
/// [`estimate_tri_per_degree`].
pub fn estimate_binned_triangles(
    g: &UndirectedGraph,
    binning: &DegreeBinning,
    cfg: &SamplerConfig,
) -> Result<Vec<BinEstimate>> {
    let k = cfg.sample_count()?;
    for_each_bin(g, binning, |i, dist| {
        let bin = binning.bins()[i];
        let (sixths, closed) = reduce_samples(
            cfg,
            k,
            DOMAIN_TRI_BIN | i as u64,
            |rng| {
                let v = dist.sample(rng).expect("bin has wedges");
                let s = triangle_score(g, &wedge_at(g, v, rng), |d| bin.contains(d));
                (s, (s > 0) as u64)
            },
            |a, b| (a.0 + b.0, a.1 + b.1),
        );
        let scale = dist.total() as f64;
        let mean = sixths as f64 / (6.0 * k as f64);
        Ok(Estimate::new(mean * scale, scale, k, closed, cfg.delta))
    })
}
