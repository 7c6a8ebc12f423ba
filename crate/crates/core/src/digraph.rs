//! Immutable directed graph with one-way and reciprocal edges split apart.

use std::io::BufRead;
use std::path::Path;

use crate::error::Result;
use crate::graph::UndirectedGraph;
use crate::io::{self, IdMap};

/// Class of the edge between a vertex and one of its neighbors, seen from
/// that vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arc {
    /// One-way edge leaving the vertex.
    Out,
    /// One-way edge entering the vertex.
    In,
    /// Both directions present.
    Reciprocal,
}

/// Per-vertex sorted `out_only`, `in_only` and `recip` neighbor lists, stored
/// as three CSR arrays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    out_only: Csr,
    in_only: Csr,
    recip: Csr,
    ids: IdMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Csr {
    /// `pairs` must be sorted and deduplicated.
    fn from_sorted(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        Csr {
            offsets,
            targets: pairs.iter().map(|&(_, v)| v).collect(),
        }
    }

    #[inline]
    fn row(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

impl DirectedGraph {
    /// Parses an edge list as directed edges `source -> target`.
    pub fn load<R: BufRead>(reader: R) -> Result<Self> {
        Ok(Self::from_external_edges(io::read_edge_list(reader)?))
    }

    pub fn load_file<P: AsRef<Path>>(path: P) -> Result<Self> {
        Ok(Self::from_external_edges(io::read_edge_list_file(path)?))
    }

    pub fn from_external_edges<I>(edges: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let edges: Vec<(u64, u64)> = edges.into_iter().filter(|(u, v)| u != v).collect();
        let ids = IdMap::from_ids(edges.iter().flat_map(|&(u, v)| [u, v]).collect());
        let dense = edges
            .iter()
            .map(|&(u, v)| (ids.dense(u).unwrap(), ids.dense(v).unwrap()))
            .collect::<Vec<_>>();
        Self::build(ids, dense)
    }

    /// Builds a digraph on exactly `n` vertices with ids `0..n`.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn with_vertices<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        for &(u, v) in &edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
        }
        Self::build(IdMap::identity(n), edges)
    }

    fn build<I>(ids: IdMap, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = ids.len();
        let mut arcs: Vec<(usize, usize)> = edges.into_iter().filter(|(u, v)| u != v).collect();
        arcs.sort_unstable();
        arcs.dedup();

        let mut out_pairs = Vec::new();
        let mut in_pairs = Vec::new();
        let mut recip_pairs = Vec::new();
        for &(u, v) in &arcs {
            if arcs.binary_search(&(v, u)).is_ok() {
                recip_pairs.push((u, v));
            } else {
                out_pairs.push((u, v));
                in_pairs.push((v, u));
            }
        }
        in_pairs.sort_unstable();

        DirectedGraph {
            out_only: Csr::from_sorted(n, &out_pairs),
            in_only: Csr::from_sorted(n, &in_pairs),
            recip: Csr::from_sorted(n, &recip_pairs),
            ids,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn out_only(&self, v: usize) -> &[usize] {
        self.out_only.row(v)
    }

    pub fn in_only(&self, v: usize) -> &[usize] {
        self.in_only.row(v)
    }

    pub fn recip(&self, v: usize) -> &[usize] {
        self.recip.row(v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_only(v).len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_only(v).len()
    }

    pub fn recip_degree(&self, v: usize) -> usize {
        self.recip(v).len()
    }

    /// Neighbors of `v` joined by an edge of class `arc`.
    pub fn neighbors(&self, v: usize, arc: Arc) -> &[usize] {
        match arc {
            Arc::Out => self.out_only(v),
            Arc::In => self.in_only(v),
            Arc::Reciprocal => self.recip(v),
        }
    }

    /// Class of the edge between `u` and `w` as seen from `u`.
    pub fn arc(&self, u: usize, w: usize) -> Option<Arc> {
        [Arc::Out, Arc::In, Arc::Reciprocal]
            .into_iter()
            .find(|&arc| self.neighbors(u, arc).binary_search(&w).is_ok())
    }

    /// Number of one-way edges.
    pub fn one_way_edge_count(&self) -> usize {
        self.out_only.targets.len()
    }

    /// Number of reciprocal pairs (each pair counted once).
    pub fn reciprocal_pair_count(&self) -> usize {
        self.recip.targets.len() / 2
    }

    /// Number of distinct directed edges `(i, j)`; a reciprocal pair counts
    /// twice.
    pub fn directed_edge_count(&self) -> usize {
        self.one_way_edge_count() + 2 * self.reciprocal_pair_count()
    }

    /// Fraction of directed edges whose reverse is also present:
    /// `2 * reciprocal pairs / directed edges`. Zero for an edgeless graph.
    pub fn reciprocity(&self) -> f64 {
        let total = self.directed_edge_count();
        if total == 0 {
            0.0
        } else {
            (2 * self.reciprocal_pair_count()) as f64 / total as f64
        }
    }

    pub fn original_id(&self, v: usize) -> u64 {
        self.ids.external(v)
    }

    /// Undirected graph with one edge per connected vertex pair. Vertex ids
    /// are shared with `self`.
    pub fn underlying_undirected(&self) -> UndirectedGraph {
        let n = self.vertex_count();
        let edges = (0..n).flat_map(|u| self.out_only(u).iter().chain(self.recip(u)).map(move |&v| (u, v)));
        UndirectedGraph::build(self.ids.clone(), edges)
    }
}
