//! Coloring cliques of a chordal graph so that adjacent cliques (disjoint,
//! joined by an edge) get different colors.
//!
//! Each vertex receives a color distinct from its predecessors and from the
//! predecessors of its predecessors along a perfect elimination ordering. A
//! clique is then colored by its earliest vertex. With clique number `t` the
//! palette has at most `t(t+1)/2` colors.

use crate::chordal::{is_perfect_elimination, peo_violation, smallest_missing, EliminationOrder};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredecessorColoring {
    colors: Vec<u32>,
    order: EliminationOrder,
    palette_size: usize,
}

impl PredecessorColoring {
    pub fn color(&self, v: Vertex) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn order(&self) -> &EliminationOrder {
        &self.order
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }
}

pub fn predecessor_coloring(g: &Graph, l: &EliminationOrder) -> Result<PredecessorColoring> {
    if !is_perfect_elimination(g, l) {
        return Err(match peo_violation(g, l) {
            Some((vertex, a, b)) => Error::NotPerfectElimination { vertex, a, b },
            None => Error::NotAPermutation,
        });
    }
    let mut colors = vec![0u32; g.n()];
    let mut taken = Vec::new();
    for &v in l.order() {
        taken.clear();
        for u in l.predecessors(g, v) {
            taken.push(colors[u]);
            taken.extend(l.predecessors(g, u).map(|w| colors[w]));
        }
        colors[v] = smallest_missing(&mut taken);
    }
    let palette_size = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    Ok(PredecessorColoring {
        colors,
        order: l.clone(),
        palette_size,
    })
}

/// A nonempty vertex set verified to be a clique of some graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliqueRef {
    vertices: Vec<Vertex>,
}

impl CliqueRef {
    pub fn new(g: &Graph, vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut vertices: Vec<Vertex> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.is_empty() {
            return Err(Error::EmptyClique);
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if let Some((a, b)) = g.non_adjacent_pair(&vertices) {
            return Err(Error::NotAClique(a, b));
        }
        Ok(CliqueRef { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn intersects(&self, other: &CliqueRef) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.vertices.len() && j < other.vertices.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

/// `μ(K)`: the earliest vertex of `k` in `l`.
pub fn mu_of_clique(k: &CliqueRef, l: &EliminationOrder) -> Vertex {
    *k.vertices
        .iter()
        .min_by_key(|&&v| l.position(v))
        .expect("cliques are nonempty")
}

/// `c(K) = a(μ(K))`.
pub fn clique_color(a: &PredecessorColoring, k: &CliqueRef) -> u32 {
    a.color(mu_of_clique(k, &a.order))
}

/// Disjoint and joined by at least one edge.
pub fn cliques_adjacent(g: &Graph, k: &CliqueRef, other: &CliqueRef) -> bool {
    !k.intersects(other)
        && k.vertices
            .iter()
            .any(|&u| other.vertices.iter().any(|&v| g.has_edge(u, v)))
}

/// The adjacent-cliques graph restricted to `family`: vertex `i` stands for
/// `family[i]`.
pub fn ac_graph(g: &Graph, family: &[CliqueRef]) -> Graph {
    let mut edges = Vec::new();
    for (i, k) in family.iter().enumerate() {
        for (j, other) in family.iter().enumerate().skip(i + 1) {
            if cliques_adjacent(g, k, other) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(family.len(), edges).expect("indices are in range")
}

/// Every clique with at most `max_size` vertices, by size then
/// lexicographically.
pub fn small_cliques(g: &Graph, max_size: usize) -> Vec<CliqueRef> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<Vertex>> = if max_size == 0 {
        Vec::new()
    } else {
        g.vertices().map(|v| vec![v]).collect()
    };
    while !current.is_empty() {
        let mut next = Vec::new();
        if current[0].len() < max_size {
            for c in &current {
                let last = *c.last().unwrap();
                for &w in g.neighbors(last).iter().filter(|&&w| w > last) {
                    if c.iter().all(|&u| g.has_edge(u, w)) {
                        let mut bigger = c.clone();
                        bigger.push(w);
                        next.push(bigger);
                    }
                }
            }
        }
        out.extend(current.into_iter().map(|vertices| CliqueRef { vertices }));
        current = next;
    }
    out
}
