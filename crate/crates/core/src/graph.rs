//! Simple undirected graphs, BFS distances and the graphs derived from them
//! (exact distance-p graphs, powers, unions).

use std::borrow::Cow;
use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::Vertex;

/// Distance between two vertices; `None` when they lie in different components.
pub type Distance = Option<u32>;

/// Immutable simple undirected graph on the vertices `0..n`.
///
/// Neighbour lists are sorted ascending, symmetric and free of loops and
/// duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge; loops are rejected.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Sorts and deduplicates raw symmetric adjacency lists.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Graph { adj, m: twice_m / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// True when every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        self.non_adjacent_pair(set).is_none()
    }

    /// First non-adjacent pair in `set`, if any.
    pub fn non_adjacent_pair(&self, set: &[Vertex]) -> Option<(Vertex, Vertex)> {
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                if a != b && !self.has_edge(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Subgraph induced by `vertices`. Local vertex `i` corresponds to
    /// `vertices[i]`; the returned vector is that mapping.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                    .collect()
            })
            .collect();
        (Self::from_adjacency(adj), vertices.to_vec())
    }

    /// Adds `extra` isolated vertices and the given edges; used by the
    /// face-fill gadgets.
    pub fn with_added(&self, extra: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let n = self.n() + extra;
        Graph::from_edge_list(n, self.edges().chain(edges.iter().copied()))
    }
}

/// Distances from `source` to every vertex, by breadth-first search.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<Distance> {
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Default vertex count up to which [`DistanceOracle`] stores every row.
pub const DEFAULT_MATERIALIZE_LIMIT: usize = 4096;

/// All-pairs distance lookup. Rows are computed up front for graphs no
/// larger than the materialization limit and on demand otherwise.
#[derive(Debug, Clone)]
pub struct DistanceOracle<'g> {
    graph: &'g Graph,
    rows: Option<Vec<Vec<Distance>>>,
}

impl<'g> DistanceOracle<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_limit(graph, DEFAULT_MATERIALIZE_LIMIT)
    }

    pub fn with_limit(graph: &'g Graph, limit: usize) -> Self {
        let rows = (graph.n() <= limit).then(|| {
            (0..graph.n())
                .into_par_iter()
                .map(|s| bfs_distances(graph, s))
                .collect()
        });
        DistanceOracle { graph, rows }
    }

    /// Wraps precomputed rows (one per source vertex).
    pub fn from_rows(graph: &'g Graph, rows: Vec<Vec<Distance>>) -> Self {
        assert_eq!(rows.len(), graph.n());
        DistanceOracle {
            graph,
            rows: Some(rows),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn is_materialized(&self) -> bool {
        self.rows.is_some()
    }

    pub fn row(&self, source: Vertex) -> Cow<'_, [Distance]> {
        match &self.rows {
            Some(rows) => Cow::Borrowed(&rows[source]),
            None => Cow::Owned(bfs_distances(self.graph, source)),
        }
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> Distance {
        match &self.rows {
            Some(rows) => rows[u][v],
            None => bfs_distances(self.graph, u)[v],
        }
    }
}

fn distance_filtered_graph<F>(g: &Graph, keep: F) -> Graph
where
    F: Fn(u32) -> bool + Sync,
{
    let adj = (0..g.n())
        .into_par_iter()
        .map(|s| {
            bfs_distances(g, s)
                .into_iter()
                .enumerate()
                .filter_map(|(v, d)| match d {
                    Some(d) if d > 0 && keep(d) => Some(v),
                    _ => None,
                })
                .collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// The exact distance-`p` graph: `uv` is an edge iff `d(u, v) = p`.
pub fn exact_distance_graph(g: &Graph, p: u32) -> Result<Graph> {
    if p == 0 {
        return Err(Error::ZeroDistance);
    }
    Ok(distance_filtered_graph(g, |d| d == p))
}

/// The `p`-th power: `uv` is an edge iff `1 <= d(u, v) <= p`.
pub fn power_graph(g: &Graph, p: u32) -> Result<Graph> {
    if p == 0 {
        return Err(Error::ZeroDistance);
    }
    Ok(distance_filtered_graph(g, |d| d <= p))
}

/// Edge union of graphs on a common vertex set.
pub fn union_graphs(graphs: &[Graph]) -> Result<Graph> {
    let Some(first) = graphs.first() else {
        return Ok(Graph::empty(0));
    };
    let n = first.n();
    let mut adj = vec![Vec::new(); n];
    for g in graphs {
        if g.n() != n {
            return Err(Error::VertexCountMismatch {
                expected: n,
                found: g.n(),
            });
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.extend_from_slice(g.neighbors(v));
        }
    }
    Ok(Graph::from_adjacency(adj))
}

pub fn max_degree(g: &Graph) -> usize {
    g.vertices().map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Connected components, each sorted ascending, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut components = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}
