//! Immutable simple undirected graph.

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    min_degree: usize,
    max_degree: usize,
}

/// A freshly built graph together with the number of duplicate edges that
/// were collapsed while building it.
#[derive(Clone, Debug)]
pub struct BuiltGraph {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

/// Builds the canonical graph on `n` vertices from an edge list.
///
/// Repeated edges (in either orientation) are kept once and counted in
/// [`BuiltGraph::duplicate_edges`]. Self-loops and out-of-range endpoints are
/// rejected.
pub fn build_graph<I>(n: usize, edges: I) -> Result<BuiltGraph>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut adj = vec![Vec::new(); n];
    for (u, v) in edges {
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut duplicates = 0;
    for list in &mut adj {
        list.sort_unstable();
        let before = list.len();
        list.dedup();
        duplicates += before - list.len();
    }
    // every duplicate was removed from both endpoint lists
    let duplicate_edges = duplicates / 2;
    Ok(BuiltGraph {
        graph: Graph::from_sorted_adjacency(adj),
        duplicate_edges,
    })
}

impl Graph {
    /// Convenience wrapper around [`build_graph`] that drops the duplicate count.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        build_graph(n, edges).map(|b| b.graph)
    }

    fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Graph {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let min_degree = adj.iter().map(Vec::len).min().unwrap_or(0);
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Graph {
            adj,
            m,
            min_degree,
            max_degree,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted open neighbourhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    #[inline]
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_edgeless(&self) -> bool {
        self.m == 0
    }
}
