//! Directed wedge and triangle taxonomy, exact census, and per-type wedge
//! sampling.
//!
//! Seen from its center, a directed wedge joins two edges, each one-way out,
//! one-way in, or reciprocal. The six unordered combinations are the wedge
//! types:
//!
//! | type | center edges     | wedges at `v`         |
//! |------|------------------|-----------------------|
//! | i    | out, out         | `dout choose 2`       |
//! | ii   | in, out          | `din * dout`          |
//! | iii  | in, in           | `din choose 2`        |
//! | iv   | out, reciprocal  | `dout * drec`         |
//! | v    | in, reciprocal   | `din * drec`          |
//! | vi   | recip, recip     | `drec choose 2`       |
//!
//! A directed triangle contains three wedges, one per corner, and the
//! multiset of their types identifies the triangle type `a..g` uniquely.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Serialize, Serializer};

use crate::digraph::{Arc, DirectedGraph};
use crate::error::{Error, Result};
use crate::exact::enumerate_triangles;
use crate::graph::wedges_for_degree;
use crate::sampler::{draw_distinct_pair, reduce_samples, Estimate, SamplerConfig, WedgeDistribution, DOMAIN_DIRECTED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WedgeType {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl WedgeType {
    pub const ALL: [WedgeType; 6] = [
        WedgeType::I,
        WedgeType::II,
        WedgeType::III,
        WedgeType::IV,
        WedgeType::V,
        WedgeType::VI,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi"][self.index()]
    }

    /// Edge classes at the center, in a fixed order.
    pub fn arcs(self) -> (Arc, Arc) {
        match self {
            WedgeType::I => (Arc::Out, Arc::Out),
            WedgeType::II => (Arc::In, Arc::Out),
            WedgeType::III => (Arc::In, Arc::In),
            WedgeType::IV => (Arc::Out, Arc::Reciprocal),
            WedgeType::V => (Arc::In, Arc::Reciprocal),
            WedgeType::VI => (Arc::Reciprocal, Arc::Reciprocal),
        }
    }

    pub fn from_arcs(a: Arc, b: Arc) -> WedgeType {
        use Arc::*;
        match (a, b) {
            (Out, Out) => WedgeType::I,
            (In, Out) | (Out, In) => WedgeType::II,
            (In, In) => WedgeType::III,
            (Out, Reciprocal) | (Reciprocal, Out) => WedgeType::IV,
            (In, Reciprocal) | (Reciprocal, In) => WedgeType::V,
            (Reciprocal, Reciprocal) => WedgeType::VI,
        }
    }

    /// `W_{v,psi}` from the three degrees of `v`.
    pub fn count_at(self, dout: usize, din: usize, drec: usize) -> u64 {
        let (dout, din, drec) = (dout as u64, din as u64, drec as u64);
        match self {
            WedgeType::I => wedges_for_degree(dout as usize),
            WedgeType::II => din * dout,
            WedgeType::III => wedges_for_degree(din as usize),
            WedgeType::IV => dout * drec,
            WedgeType::V => din * drec,
            WedgeType::VI => wedges_for_degree(drec as usize),
        }
    }

    pub fn count_at_vertex(self, g: &DirectedGraph, v: usize) -> u64 {
        self.count_at(g.out_degree(v), g.in_degree(v), g.recip_degree(v))
    }
}

impl fmt::Display for WedgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for WedgeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WedgeType::ALL
            .into_iter()
            .find(|t| t.label() == s.trim())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown wedge type `{s}`")))
    }
}

impl Serialize for WedgeType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriangleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TriangleType {
    pub const ALL: [TriangleType; 7] = [
        TriangleType::A,
        TriangleType::B,
        TriangleType::C,
        TriangleType::D,
        TriangleType::E,
        TriangleType::F,
        TriangleType::G,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        ["a", "b", "c", "d", "e", "f", "g"][self.index()]
    }

    /// Sorted wedge types at the three corners.
    pub fn wedges(self) -> [WedgeType; 3] {
        use WedgeType::*;
        match self {
            TriangleType::A => [I, II, III],
            TriangleType::B => [II, II, II],
            TriangleType::C => [I, V, V],
            TriangleType::D => [II, IV, V],
            TriangleType::E => [III, IV, IV],
            TriangleType::F => [IV, V, VI],
            TriangleType::G => [VI, VI, VI],
        }
    }

    /// Triangle type with the given corner wedge types, in any order.
    pub fn from_wedges(mut wedges: [WedgeType; 3]) -> Option<TriangleType> {
        wedges.sort_unstable();
        TriangleType::ALL.into_iter().find(|t| t.wedges() == wedges)
    }

    /// `chi(psi, rho)`: number of `psi`-wedges in one triangle of this type.
    pub fn chi(self, psi: WedgeType) -> u32 {
        self.wedges().iter().filter(|&&w| w == psi).count() as u32
    }
}

impl fmt::Display for TriangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TriangleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TriangleType::ALL
            .into_iter()
            .find(|t| t.label() == s.trim())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown triangle type `{s}`")))
    }
}

impl Serialize for TriangleType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Which wedge type is sampled to estimate each triangle type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WedgeAssignment {
    by_triangle: [WedgeType; 7],
}

impl Default for WedgeAssignment {
    /// ii for a and b, iv for d and e, v for c and f, vi for g.
    fn default() -> Self {
        use WedgeType::*;
        WedgeAssignment {
            by_triangle: [II, II, V, IV, IV, V, VI],
        }
    }
}

impl WedgeAssignment {
    pub fn wedge_for(&self, rho: TriangleType) -> WedgeType {
        self.by_triangle[rho.index()]
    }

    /// Reassigns `rho`; fails when `psi` never occurs in a `rho` triangle.
    pub fn set(&mut self, rho: TriangleType, psi: WedgeType) -> Result<()> {
        if rho.chi(psi) == 0 {
            return Err(Error::InvalidArgument(format!(
                "type-({psi}) wedges never occur in type-({rho}) triangles"
            )));
        }
        self.by_triangle[rho.index()] = psi;
        Ok(())
    }

    /// Triangle types served by `psi`.
    pub fn triangles_for(&self, psi: WedgeType) -> impl Iterator<Item = TriangleType> + '_ {
        TriangleType::ALL
            .into_iter()
            .filter(move |&rho| self.wedge_for(rho) == psi)
    }

    /// Wedge types in use, ascending.
    pub fn wedge_types(&self) -> Vec<WedgeType> {
        let mut used: Vec<WedgeType> = self.by_triangle.to_vec();
        used.sort_unstable();
        used.dedup();
        used
    }
}

impl FromStr for WedgeAssignment {
    type Err = Error;

    /// `default`, or comma-separated `rho=psi` overrides of the default,
    /// e.g. `a=i,c=i`.
    fn from_str(s: &str) -> Result<Self> {
        let mut assignment = WedgeAssignment::default();
        let s = s.trim();
        if s.is_empty() || s == "default" {
            return Ok(assignment);
        }
        for item in s.split(',') {
            let (rho, psi) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("expected `triangle=wedge`, got `{item}`")))?;
            assignment.set(rho.parse()?, psi.parse()?)?;
        }
        Ok(assignment)
    }
}

/// `W_psi` for all six wedge types.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct WedgeTotals {
    counts: [u64; 6],
}

impl WedgeTotals {
    pub fn get(&self, psi: WedgeType) -> u64 {
        self.counts[psi.index()]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

pub fn directed_wedge_totals(g: &DirectedGraph) -> WedgeTotals {
    let mut counts = [0u64; 6];
    for v in 0..g.vertex_count() {
        for psi in WedgeType::ALL {
            counts[psi.index()] += psi.count_at_vertex(g, v);
        }
    }
    WedgeTotals { counts }
}

/// Exact triangle counts `T_rho` per type.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DirectedCensus {
    counts: [u64; 7],
}

impl DirectedCensus {
    pub fn get(&self, rho: TriangleType) -> u64 {
        self.counts[rho.index()]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Type of the triangle on `tri`. Panics if `tri` is not a triangle.
pub fn triangle_type(g: &DirectedGraph, tri: [usize; 3]) -> TriangleType {
    let corner = |p: usize, q: usize, r: usize| {
        let arc = |x: usize, y: usize| {
            g.arc(x, y)
                .unwrap_or_else(|| panic!("vertices {x} and {y} are not adjacent in triangle {tri:?}"))
        };
        WedgeType::from_arcs(arc(p, q), arc(p, r))
    };
    let wedges = [
        corner(tri[0], tri[1], tri[2]),
        corner(tri[1], tri[0], tri[2]),
        corner(tri[2], tri[0], tri[1]),
    ];
    TriangleType::from_wedges(wedges)
        .unwrap_or_else(|| panic!("wedge multiset {wedges:?} of triangle {tri:?} matches no triangle type"))
}

/// Exact census by enumerating the triangles of the underlying undirected
/// graph and classifying each one.
pub fn exact_directed_census(g: &DirectedGraph) -> DirectedCensus {
    let undirected = g.underlying_undirected();
    let mut counts = [0u64; 7];
    enumerate_triangles(&undirected, |tri| {
        counts[triangle_type(g, tri).index()] += 1;
    });
    DirectedCensus { counts }
}

/// `kappa_{psi,rho} = chi(psi, rho) * T_rho / W_psi`; `None` when `W_psi = 0`.
pub fn closure_ratio(census: &DirectedCensus, totals: &WedgeTotals, psi: WedgeType, rho: TriangleType) -> Option<f64> {
    let w = totals.get(psi);
    (w > 0).then(|| rho.chi(psi) as f64 * census.get(rho) as f64 / w as f64)
}

/// A directed wedge `ends[0] - center - ends[1]` of a known type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DirectedWedge {
    pub center: usize,
    pub ends: [usize; 2],
    pub kind: WedgeType,
}

/// Center weights `W_{v,psi}`.
pub fn wedge_type_distribution(g: &DirectedGraph, psi: WedgeType) -> WedgeDistribution {
    WedgeDistribution::from_weights((0..g.vertex_count()).map(|v| (v, psi.count_at_vertex(g, v))))
}

/// Uniform `psi`-wedge centered at `v` (`W_{v,psi} > 0`). Same-class pairs
/// are drawn without replacement, mixed pairs independently.
pub fn directed_wedge_at<R: Rng + ?Sized>(g: &DirectedGraph, psi: WedgeType, v: usize, rng: &mut R) -> DirectedWedge {
    let (first, second) = psi.arcs();
    let ends = if first == second {
        let nbrs = g.neighbors(v, first);
        let (a, b) = draw_distinct_pair(nbrs.len(), rng);
        [nbrs[a], nbrs[b]]
    } else {
        let xs = g.neighbors(v, first);
        let ys = g.neighbors(v, second);
        [xs[rng.gen_range(0..xs.len())], ys[rng.gen_range(0..ys.len())]]
    };
    DirectedWedge {
        center: v,
        ends,
        kind: psi,
    }
}

/// Uniform random `psi`-wedge; `dist` must come from
/// [`wedge_type_distribution`] for the same `psi`.
pub fn sample_directed_wedge<R: Rng + ?Sized>(
    g: &DirectedGraph,
    psi: WedgeType,
    dist: &WedgeDistribution,
    rng: &mut R,
) -> Result<DirectedWedge> {
    let v = dist.sample(rng).ok_or(Error::NoWedgesOfType(psi))?;
    Ok(directed_wedge_at(g, psi, v, rng))
}

/// Triangle type the wedge closes into, or `None` if its ends are not
/// adjacent.
pub fn classify_closure(g: &DirectedGraph, wedge: &DirectedWedge) -> Option<TriangleType> {
    let [u, w] = wedge.ends;
    g.arc(u, w)?;
    Some(triangle_type(g, [wedge.center, u, w]))
}

/// Estimate of one triangle type.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TypeEstimate {
    pub triangle: TriangleType,
    pub wedge: WedgeType,
    /// `W_psi`
    pub wedges: u64,
    pub chi: u32,
    /// `None` when `W_psi = 0`, in which case `T_rho` is exactly 0.
    pub estimate: Option<Estimate>,
}

impl TypeEstimate {
    pub fn value(&self) -> f64 {
        self.estimate.map_or(0.0, |e| e.value)
    }
}

#[derive(Clone, Copy, Default)]
struct Tally([u64; 7]);

/// Estimates `T_rho` for all seven types. Each wedge type in the assignment
/// is sampled `k` times and its closures are tallied for every triangle type
/// it serves; `T_rho = (k'_rho / k) * W_psi / chi(psi, rho)`.
pub fn estimate_directed_triangles(
    g: &DirectedGraph,
    cfg: &SamplerConfig,
    assignment: &WedgeAssignment,
) -> Result<Vec<TypeEstimate>> {
    let k = cfg.sample_count()?;
    for rho in TriangleType::ALL {
        if rho.chi(assignment.wedge_for(rho)) == 0 {
            return Err(Error::InvalidArgument(format!(
                "type-({}) wedges cannot count type-({rho}) triangles",
                assignment.wedge_for(rho)
            )));
        }
    }

    let mut out: Vec<TypeEstimate> = Vec::with_capacity(7);
    for psi in assignment.wedge_types() {
        let dist = wedge_type_distribution(g, psi);
        let wedges = dist.total();
        let tally = if wedges == 0 {
            None
        } else {
            Some(reduce_samples(
                cfg,
                k,
                DOMAIN_DIRECTED | psi.index() as u64,
                |rng| {
                    let v = dist.select(rng.gen_range(0..wedges));
                    let wedge = directed_wedge_at(g, psi, v, rng);
                    let mut t = Tally::default();
                    if let Some(rho) = classify_closure(g, &wedge) {
                        t.0[rho.index()] = 1;
                    }
                    t
                },
                |mut a, b| {
                    for (x, y) in a.0.iter_mut().zip(b.0) {
                        *x += y;
                    }
                    a
                },
            ))
        };
        for rho in assignment.triangles_for(psi) {
            let chi = rho.chi(psi);
            let estimate = tally.map(|t| {
                let closed = t.0[rho.index()];
                let scale = wedges as f64 / chi as f64;
                let value = closed as f64 / k as f64 * scale;
                Estimate {
                    value,
                    halfwidth: crate::hoeffding::error_halfwidth(k, cfg.delta),
                    scale,
                    samples: k,
                    closed,
                    delta: cfg.delta,
                }
            });
            out.push(TypeEstimate {
                triangle: rho,
                wedge: psi,
                wedges,
                chi,
                estimate,
            });
        }
    }
    out.sort_by_key(|e| e.triangle);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;

    fn digraph(edges: &str) -> DirectedGraph {
        DirectedGraph::load(edges.as_bytes()).unwrap()
    }

    // chi(psi, rho) as published: rows a..g, columns i..vi
    const CHI: [[u32; 6]; 7] = [
        [1, 1, 1, 0, 0, 0],
        [0, 3, 0, 0, 0, 0],
        [1, 0, 0, 0, 2, 0],
        [0, 1, 0, 1, 1, 0],
        [0, 0, 1, 2, 0, 0],
        [0, 0, 0, 1, 1, 1],
        [0, 0, 0, 0, 0, 3],
    ];

    #[test]
    fn chi_matches_published_table() {
        for rho in TriangleType::ALL {
            for psi in WedgeType::ALL {
                assert_eq!(rho.chi(psi), CHI[rho.index()][psi.index()], "chi({psi}, {rho})");
            }
            assert_eq!(WedgeType::ALL.iter().map(|&p| rho.chi(p)).sum::<u32>(), 3);
        }
        let nonzero = CHI.iter().flatten().filter(|&&c| c > 0).count();
        assert_eq!(nonzero, 15);
    }

    #[test]
    fn triangle_multisets_distinct() {
        for a in TriangleType::ALL {
            for b in TriangleType::ALL {
                assert_eq!(a == b, a.wedges() == b.wedges());
            }
            assert_eq!(TriangleType::from_wedges(a.wedges()), Some(a));
        }
        assert_eq!(
            TriangleType::from_wedges([WedgeType::I, WedgeType::I, WedgeType::I]),
            None
        );
    }

    #[test]
    fn wedge_counts_sum_to_undirected() {
        for (dout, din, drec) in [(0, 0, 0), (3, 0, 0), (2, 5, 1), (4, 4, 4), (0, 1, 7)] {
            let total: u64 = WedgeType::ALL.iter().map(|p| p.count_at(dout, din, drec)).sum();
            assert_eq!(total, wedges_for_degree(dout + din + drec));
        }
    }

    #[test]
    fn default_assignment_is_valid() {
        let a = WedgeAssignment::default();
        for rho in TriangleType::ALL {
            assert!(rho.chi(a.wedge_for(rho)) > 0);
        }
        assert_eq!(
            a.wedge_types(),
            vec![WedgeType::II, WedgeType::IV, WedgeType::V, WedgeType::VI]
        );
    }

    #[test]
    fn assignment_parsing() {
        let a: WedgeAssignment = "a=i, c=i".parse().unwrap();
        assert_eq!(a.wedge_for(TriangleType::A), WedgeType::I);
        assert_eq!(a.wedge_for(TriangleType::C), WedgeType::I);
        assert_eq!(a.wedge_for(TriangleType::B), WedgeType::II);
        assert!("b=i".parse::<WedgeAssignment>().is_err());
        assert!("a=vii".parse::<WedgeAssignment>().is_err());
        assert!("a".parse::<WedgeAssignment>().is_err());
        assert_eq!(
            "default".parse::<WedgeAssignment>().unwrap(),
            WedgeAssignment::default()
        );
    }

    #[test]
    fn totals_on_fixtures() {
        let cycle = directed_wedge_totals(&digraph("0 1\n1 2\n2 0\n"));
        assert_eq!(cycle.get(WedgeType::II), 3);
        assert_eq!(cycle.total(), 3);

        let recip = directed_wedge_totals(&digraph("0 1\n1 0\n1 2\n2 1\n0 2\n2 0\n"));
        assert_eq!(recip.get(WedgeType::VI), 3);
        assert_eq!(recip.total(), 3);

        let star = directed_wedge_totals(&digraph("0 1\n0 2\n0 3\n0 4\n"));
        // pairs of the four out-neighbors, listed
        let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        assert_eq!(star.get(WedgeType::I), pairs.len() as u64);
        assert_eq!(star.total(), 6);
    }

    #[test]
    fn census_fixtures() {
        let cycle = exact_directed_census(&digraph("0 1\n1 2\n2 0\n"));
        assert_eq!(cycle.get(TriangleType::B), 1);
        assert_eq!(cycle.total(), 1);
        let recip = exact_directed_census(&digraph("0 1\n1 0\n1 2\n2 1\n0 2\n2 0\n"));
        assert_eq!(recip.get(TriangleType::G), 1);
        assert_eq!(recip.total(), 1);
        let transitive = exact_directed_census(&digraph("0 1\n0 2\n1 2\n"));
        assert_eq!(transitive.get(TriangleType::A), 1);
        assert_eq!(transitive.total(), 1);
    }

    #[test]
    fn out_wedge_closed_by_reciprocal_is_c() {
        let g = digraph("0 1\n0 2\n1 2\n2 1\n");
        let w = DirectedWedge {
            center: 0,
            ends: [1, 2],
            kind: WedgeType::I,
        };
        assert_eq!(classify_closure(&g, &w), Some(TriangleType::C));
    }

    #[test]
    fn out_wedge_closed_one_way_is_a() {
        let g = digraph("0 1\n0 2\n1 2\n");
        let w = DirectedWedge {
            center: 0,
            ends: [1, 2],
            kind: WedgeType::I,
        };
        assert_eq!(classify_closure(&g, &w), Some(TriangleType::A));
    }

    #[test]
    fn open_wedge_is_open() {
        let g = digraph("0 1\n0 2\n");
        let w = DirectedWedge {
            center: 0,
            ends: [1, 2],
            kind: WedgeType::I,
        };
        assert_eq!(classify_closure(&g, &w), None);
    }

    #[test]
    fn sampled_wedges_have_requested_type() {
        let g = digraph("0 1\n1 0\n0 2\n3 0\n0 4\n4 0\n5 0\n0 6\n2 3\n");
        let mut rng = stream_rng(4, 4);
        for psi in WedgeType::ALL {
            let dist = wedge_type_distribution(&g, psi);
            if dist.total() == 0 {
                assert!(matches!(
                    sample_directed_wedge(&g, psi, &dist, &mut rng),
                    Err(Error::NoWedgesOfType(p)) if p == psi
                ));
                continue;
            }
            for _ in 0..50 {
                let w = sample_directed_wedge(&g, psi, &dist, &mut rng).unwrap();
                let a = g.arc(w.center, w.ends[0]).unwrap();
                let b = g.arc(w.center, w.ends[1]).unwrap();
                assert_eq!(WedgeType::from_arcs(a, b), psi);
                assert_ne!(w.ends[0], w.ends[1]);
            }
        }
    }

    #[test]
    fn single_center_always_chosen() {
        let g = digraph("0 1\n0 2\n0 3\n4 5\n");
        let dist = wedge_type_distribution(&g, WedgeType::I);
        let mut rng = stream_rng(8, 0);
        for _ in 0..50 {
            assert_eq!(
                sample_directed_wedge(&g, WedgeType::I, &dist, &mut rng).unwrap().center,
                0
            );
        }
    }

    #[test]
    fn cycle_estimate_is_exact() {
        let g = digraph("0 1\n1 2\n2 0\n");
        for k in [1, 5, 1000] {
            let est =
                estimate_directed_triangles(&g, &SamplerConfig::with_samples(k).seed(k), &WedgeAssignment::default())
                    .unwrap();
            assert_eq!(est.len(), 7);
            for e in &est {
                if e.triangle == TriangleType::B {
                    assert_eq!(e.value(), 1.0);
                    assert_eq!(e.estimate.unwrap().scale, 1.0);
                } else {
                    assert_eq!(e.value(), 0.0);
                }
            }
        }
    }

    #[test]
    fn missing_wedge_type_reports_exact_zero() {
        let g = digraph("0 1\n1 2\n2 0\n");
        let est =
            estimate_directed_triangles(&g, &SamplerConfig::with_samples(10), &WedgeAssignment::default()).unwrap();
        let g_row = est.iter().find(|e| e.triangle == TriangleType::G).unwrap();
        assert!(g_row.estimate.is_none());
        assert_eq!(g_row.wedges, 0);
    }

    #[test]
    fn closure_ratio_cases() {
        let g = digraph("0 1\n1 2\n2 0\n");
        let census = exact_directed_census(&g);
        let totals = directed_wedge_totals(&g);
        assert_eq!(
            closure_ratio(&census, &totals, WedgeType::II, TriangleType::B),
            Some(1.0)
        );
        assert_eq!(
            closure_ratio(&census, &totals, WedgeType::II, TriangleType::C),
            Some(0.0)
        );
        assert_eq!(closure_ratio(&census, &totals, WedgeType::I, TriangleType::A), None);
    }

    #[test]
    fn reciprocity_bounds() {
        let g = digraph("0 1\n1 0\n1 2\n2 3\n3 2\n");
        let r = g.reciprocity();
        assert!((r - 4.0 / 5.0).abs() < 1e-12);
    }
}
