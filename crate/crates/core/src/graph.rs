//! Immutable undirected graph in compressed sparse row layout.

use std::io::{BufRead, Write};
use std::path::Path;

use crate::degree::DegreeIndex;
use crate::error::Result;
use crate::io::{self, IdMap};

/// Number of wedges centered at a vertex of degree `d`, i.e. `d choose 2`.
#[inline]
pub fn wedges_for_degree(d: usize) -> u64 {
    let d = d as u64;
    d * d.saturating_sub(1) / 2
}

/// Simple undirected graph: no self-loops, no parallel edges, and every
/// adjacency list strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    edge_count: usize,
    ids: IdMap,
}

impl UndirectedGraph {
    /// Parses an edge list, ignoring direction, self-loops and repeats.
    pub fn load<R: BufRead>(reader: R) -> Result<Self> {
        Ok(Self::from_external_edges(io::read_edge_list(reader)?))
    }

    pub fn load_file<P: AsRef<Path>>(path: P) -> Result<Self> {
        Ok(Self::from_external_edges(io::read_edge_list_file(path)?))
    }

    /// Builds a graph from arbitrary external ids. Only vertices incident to
    /// at least one non-loop edge are kept; they are renumbered `0..n` in
    /// ascending external-id order.
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

    /// Builds a graph on exactly `n` vertices with ids `0..n`; isolated
    /// vertices are retained.
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

    pub(crate) fn build<I>(ids: IdMap, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = ids.len();
        let mut pairs: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|(u, v)| u != v)
            .flat_map(|(u, v)| [(u, v), (v, u)])
            .collect();
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let neighbors: Vec<usize> = pairs.iter().map(|&(_, v)| v).collect();
        let edge_count = neighbors.len() / 2;
        UndirectedGraph {
            offsets,
            neighbors,
            edge_count,
            ids,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Adjacency test by binary search in the shorter of the two lists.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (short, target) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(short).binary_search(&target).is_ok()
    }

    /// `W_v = d_v choose 2`.
    #[inline]
    pub fn wedge_count_vertex(&self, v: usize) -> u64 {
        wedges_for_degree(self.degree(v))
    }

    /// Total wedge count `W`.
    pub fn wedge_count(&self) -> u64 {
        (0..self.vertex_count()).map(|v| self.wedge_count_vertex(v)).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_index(&self) -> DegreeIndex {
        DegreeIndex::new((0..self.vertex_count()).map(|v| self.degree(v)))
    }

    /// External id of dense vertex `v`.
    pub fn original_id(&self, v: usize) -> u64 {
        self.ids.external(v)
    }

    pub fn id_map(&self) -> &IdMap {
        &self.ids
    }

    /// Each undirected edge once as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Writes the canonical edge list using external ids.
    pub fn write_edge_list<W: Write>(&self, writer: W) -> Result<()> {
        io::write_edge_list(
            writer,
            self.edges().map(|(u, v)| (self.original_id(u), self.original_id(v))),
        )
    }
}
