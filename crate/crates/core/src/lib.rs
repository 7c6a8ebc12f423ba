//! Triadic graph analysis: exact triangle enumeration and wedge-sampling
//! estimators for transitivity, local and degree-wise clustering
//! coefficients, triangles per degree, and directed triangle types, each with
//! a Hoeffding error bound.

pub mod degree;
pub mod digraph;
pub mod directed;
pub mod error;
pub mod exact;
pub mod graph;
pub mod hoeffding;
pub mod io;
mod parallel;
pub mod rng;
pub mod sampler;

pub use degree::{BinSpec, DegreeBin, DegreeBinning, DegreeIndex};
pub use digraph::{Arc, DirectedGraph};
pub use directed::{
    classify_closure, closure_ratio, directed_wedge_totals, estimate_directed_triangles, exact_directed_census,
    sample_directed_wedge, DirectedCensus, DirectedWedge, TriangleType, TypeEstimate, WedgeAssignment, WedgeTotals,
    WedgeType,
};
pub use error::{Error, Result};
pub use exact::{
    enumerate_triangles, enumerate_triangles_par, exact_stats, exact_stats_with, ExactStats, LowDegreePolicy,
};
pub use graph::UndirectedGraph;
pub use hoeffding::{error_halfwidth, samples_needed};
pub use sampler::{
    estimate_binned_cc, estimate_binned_triangles, estimate_degree_cc, estimate_local_cc, estimate_transitivity,
    estimate_tri_per_degree, sample_uniform_wedge, BinEstimate, Estimate, SampleSize, SamplerConfig,
    TransitivityEstimate, Wedge, WedgeDistribution,
};
