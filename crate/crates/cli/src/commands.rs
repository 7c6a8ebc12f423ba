use std::collections::BTreeMap;
use std::path::Path;
use std::time::{Duration, Instant};

use triadic::{
    directed_wedge_totals, estimate_binned_cc, estimate_binned_triangles, estimate_directed_triangles,
    estimate_local_cc, estimate_transitivity, exact_directed_census, exact_stats_with, BinEstimate, BinSpec,
    DegreeBinning, DirectedGraph, Error, LowDegreePolicy, SampleSize, SamplerConfig, TriangleType, UndirectedGraph,
    WedgeAssignment, WedgeType,
};

use crate::report::{ConfigEcho, GraphSummary, Report, Row, Timing, STATUS_EMPTY_BIN, STATUS_NO_WEDGES, STATUS_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Metric {
    Transitivity,
    LocalCc,
    DegreeCc,
    TriPerDegree,
    Directed,
}

impl Metric {
    fn name(self) -> &'static str {
        match self {
            Metric::Transitivity => "transitivity",
            Metric::LocalCc => "local-cc",
            Metric::DegreeCc => "degree-cc",
            Metric::TriPerDegree => "tri-per-degree",
            Metric::Directed => "directed",
        }
    }
}

fn path_string(path: &Path) -> String {
    path.display().to_string()
}

fn undirected_summary(path: &Path, g: &UndirectedGraph) -> GraphSummary {
    GraphSummary {
        path: path_string(path),
        directed: false,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        wedges: g.wedge_count(),
        ..GraphSummary::default()
    }
}

fn directed_summary(path: &Path, g: &DirectedGraph, undirected: &UndirectedGraph) -> GraphSummary {
    let totals = directed_wedge_totals(g);
    GraphSummary {
        path: path_string(path),
        directed: true,
        vertices: g.vertex_count(),
        edges: undirected.edge_count(),
        wedges: undirected.wedge_count(),
        directed_edges: Some(g.directed_edge_count()),
        reciprocal_pairs: Some(g.reciprocal_pair_count()),
        reciprocity: Some(g.reciprocity()),
        wedges_by_type: Some(
            WedgeType::ALL
                .iter()
                .map(|&psi| (psi.label().to_string(), totals.get(psi)))
                .collect::<BTreeMap<_, _>>(),
        ),
    }
}

pub struct StatsArgs<'a> {
    pub path: &'a Path,
    pub directed: bool,
    pub per_vertex: bool,
    pub exclude_low_degree: bool,
}

pub fn stats(args: StatsArgs<'_>) -> Result<Report, Error> {
    let load_start = Instant::now();
    let (summary, undirected, digraph) = if args.directed {
        let g = DirectedGraph::load_file(args.path)?;
        let u = g.underlying_undirected();
        (directed_summary(args.path, &g, &u), u, Some(g))
    } else {
        let g = UndirectedGraph::load_file(args.path)?;
        (undirected_summary(args.path, &g), g, None)
    };
    let load = load_start.elapsed();

    let policy = if args.exclude_low_degree {
        LowDegreePolicy::Exclude
    } else {
        LowDegreePolicy::CountAsZero
    };
    let analysis_start = Instant::now();
    let s = exact_stats_with(&undirected, policy);
    let census = digraph.as_ref().map(exact_directed_census);
    let analysis = analysis_start.elapsed();

    let mut rows = vec![
        Row::count("exact", "triangles", s.triangles),
        Row::exact("exact", "transitivity", s.transitivity),
        Row::exact("exact", "local_clustering", s.local_clustering),
    ];
    for (&d, ds) in &s.per_degree {
        let mut c = Row::exact("per-degree", "C_d", Some(ds.clustering)).bin(d - 1, d);
        c.vertices = Some(ds.vertices as u64);
        c.wedges = Some(ds.wedges);
        rows.push(c);
        let mut t = Row::count("per-degree", "T_d", ds.triangles).bin(d - 1, d);
        t.vertices = Some(ds.vertices as u64);
        t.wedges = Some(ds.wedges);
        rows.push(t);
    }
    if let Some(census) = census {
        for rho in TriangleType::ALL {
            rows.push(Row::count("directed", format!("T_{rho}"), census.get(rho)));
        }
    }
    if args.per_vertex {
        for (v, c) in s.vertex_clustering.iter().enumerate() {
            rows.push(Row::exact("vertex", undirected.original_id(v).to_string(), Some(*c)));
        }
    }

    Ok(Report {
        command: "stats".into(),
        graph: summary,
        config: ConfigEcho::default(),
        timing: timing(load, analysis),
        rows,
    })
}

pub struct EstimateArgs<'a> {
    pub path: &'a Path,
    pub metric: Metric,
    pub size: SampleSize,
    pub delta: f64,
    pub seed: u64,
    pub workers: usize,
    pub bins: &'a str,
    pub assignment: &'a str,
}

pub fn estimate(args: EstimateArgs<'_>) -> Result<Report, Error> {
    let cfg = SamplerConfig {
        size: args.size,
        delta: args.delta,
        seed: args.seed,
        workers: args.workers,
    };
    let k = cfg.sample_count()?;
    let bin_spec: BinSpec = args.bins.parse()?;
    let assignment: WedgeAssignment = args.assignment.parse()?;

    let mut config = ConfigEcho {
        metric: Some(args.metric.name().into()),
        samples: Some(k),
        epsilon: match args.size {
            SampleSize::Accuracy { epsilon } => Some(epsilon),
            SampleSize::Count(_) => None,
        },
        delta: Some(args.delta),
        seed: Some(args.seed),
        workers: args.workers,
        ..ConfigEcho::default()
    };

    let load_start = Instant::now();
    if args.metric == Metric::Directed {
        config.wedge_assignment = Some(assignment_string(&assignment));
        let g = DirectedGraph::load_file(args.path)?;
        let u = g.underlying_undirected();
        let summary = directed_summary(args.path, &g, &u);
        let load = load_start.elapsed();
        let start = Instant::now();
        let estimates = estimate_directed_triangles(&g, &cfg, &assignment)?;
        let analysis = start.elapsed();
        let rows = estimates
            .iter()
            .map(|e| {
                let name = format!("T_{}", e.triangle);
                let mut row = match &e.estimate {
                    Some(est) => Row::sampled("directed", name, est),
                    // no wedges of the sampled type means no triangles of this type
                    None => Row::exact("directed", name, Some(0.0)),
                };
                row.wedge_type = Some(e.wedge.label().to_string());
                row.wedges = Some(e.wedges);
                row
            })
            .collect();
        return Ok(Report {
            command: "estimate".into(),
            graph: summary,
            config,
            timing: timing(load, analysis),
            rows,
        });
    }

    let g = UndirectedGraph::load_file(args.path)?;
    let summary = undirected_summary(args.path, &g);
    let load = load_start.elapsed();
    let start = Instant::now();
    let rows = match args.metric {
        Metric::Transitivity => match estimate_transitivity(&g, &cfg) {
            Ok(est) => {
                let mut tri = Row::sampled("estimate", "triangles", &est.triangles);
                tri.wedges = Some(g.wedge_count());
                vec![Row::sampled("estimate", "transitivity", &est.transitivity), tri]
            }
            Err(Error::NoWedges) => vec![
                Row::missing("estimate", "transitivity", STATUS_NO_WEDGES),
                Row::missing("estimate", "triangles", STATUS_NO_WEDGES),
            ],
            Err(e) => return Err(e),
        },
        Metric::LocalCc => match estimate_local_cc(&g, &cfg) {
            Ok(est) => vec![Row::sampled("estimate", "local_clustering", &est)],
            Err(Error::EmptyGraph) => vec![Row::missing("estimate", "local_clustering", STATUS_NO_WEDGES)],
            Err(e) => return Err(e),
        },
        Metric::DegreeCc | Metric::TriPerDegree => {
            config.bins = Some(args.bins.trim().to_string());
            let binning = DegreeBinning::new(&bin_spec, &g.degree_index());
            let (section, name, bins) = if args.metric == Metric::DegreeCc {
                ("degree-cc", "C_bin", estimate_binned_cc(&g, &binning, &cfg)?)
            } else {
                (
                    "tri-per-degree",
                    "T_bin",
                    estimate_binned_triangles(&g, &binning, &cfg)?,
                )
            };
            bins.iter().map(|b| bin_row(section, name, b)).collect()
        }
        Metric::Directed => unreachable!("handled above"),
    };
    let analysis = start.elapsed();
    Ok(Report {
        command: "estimate".into(),
        graph: summary,
        config,
        timing: timing(load, analysis),
        rows,
    })
}

fn bin_row(section: &str, name: &str, b: &BinEstimate) -> Row {
    let mut row = match &b.estimate {
        Some(est) => Row::sampled(section, name, est),
        None => Row::missing(section, name, STATUS_EMPTY_BIN),
    };
    row.lo = Some(b.bin.lo);
    row.hi = Some(b.bin.hi);
    row.vertices = Some(b.vertices as u64);
    row.wedges = Some(b.wedges);
    row
}

fn assignment_string(a: &WedgeAssignment) -> String {
    TriangleType::ALL
        .iter()
        .map(|&rho| format!("{rho}={}", a.wedge_for(rho)))
        .collect::<Vec<_>>()
        .join(",")
}

pub struct CompareArgs<'a> {
    pub path: &'a Path,
    pub metric: Metric,
    pub ladder: &'a [u64],
    pub trials: u32,
    pub delta: f64,
    pub seed: u64,
    pub workers: usize,
}

pub fn compare(args: CompareArgs<'_>) -> Result<Report, Error> {
    if args.trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if args.ladder.is_empty() || args.ladder.contains(&0) {
        return Err(Error::InvalidArgument("ladder entries must be positive".into()));
    }
    let load_start = Instant::now();
    let g = UndirectedGraph::load_file(args.path)?;
    let summary = undirected_summary(args.path, &g);
    let load = load_start.elapsed();

    let exact_start = Instant::now();
    let s = exact_stats_with(&g, LowDegreePolicy::CountAsZero);
    let exact_time = exact_start.elapsed();
    let truth = match args.metric {
        Metric::Transitivity => s.transitivity,
        Metric::LocalCc => s.local_clustering,
        _ => {
            return Err(Error::InvalidArgument(
                "compare supports the transitivity and local-cc metrics".into(),
            ))
        }
    };

    let mut rows = vec![Row::exact("exact", args.metric.name(), truth)];
    let mut sampling_total = Duration::ZERO;
    for &k in args.ladder {
        let mut errors = Vec::with_capacity(args.trials as usize);
        let mut elapsed = Duration::ZERO;
        let mut status = STATUS_OK;
        for trial in 0..args.trials {
            let cfg = SamplerConfig {
                size: SampleSize::Count(k),
                delta: args.delta,
                seed: args.seed.wrapping_add(trial as u64),
                workers: args.workers,
            };
            let start = Instant::now();
            let result = match args.metric {
                Metric::Transitivity => estimate_transitivity(&g, &cfg).map(|e| e.transitivity),
                _ => estimate_local_cc(&g, &cfg),
            };
            elapsed += start.elapsed();
            match (result, truth) {
                (Ok(est), Some(t)) => errors.push((est.value - t).abs()),
                (Err(Error::NoWedges | Error::EmptyGraph), _) | (_, None) => {
                    status = STATUS_NO_WEDGES;
                    break;
                }
                (Err(e), _) => return Err(e),
            }
        }
        sampling_total += elapsed;
        let bound = triadic::error_halfwidth(k, args.delta);
        let per_trial = elapsed.as_secs_f64() / args.trials as f64;
        let speedup = (per_trial > 0.0).then(|| exact_time.as_secs_f64() / per_trial);
        let stat = |name: &str, value: Option<f64>| Row {
            value,
            halfwidth: Some(bound),
            delta: Some(args.delta),
            samples: Some(k),
            speedup,
            ..Row::missing("compare", name, status)
        };
        if status == STATUS_OK {
            let mean = errors.iter().sum::<f64>() / errors.len() as f64;
            let max = errors.iter().copied().fold(0.0, f64::max);
            rows.push(stat("mean_abs_error", Some(mean)));
            rows.push(stat("max_abs_error", Some(max)));
        } else {
            rows.push(stat("mean_abs_error", None));
            rows.push(stat("max_abs_error", None));
        }
    }

    Ok(Report {
        command: "compare".into(),
        graph: summary,
        config: ConfigEcho {
            metric: Some(args.metric.name().into()),
            delta: Some(args.delta),
            seed: Some(args.seed),
            workers: args.workers,
            ladder: Some(args.ladder.to_vec()),
            trials: Some(args.trials),
            ..ConfigEcho::default()
        },
        timing: timing(load, exact_time + sampling_total),
        rows,
    })
}

fn timing(load: Duration, analysis: Duration) -> Timing {
    Timing {
        load_seconds: load.as_secs_f64(),
        analysis_seconds: analysis.as_secs_f64(),
    }
}
