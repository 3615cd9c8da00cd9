//! Chordality via maximum cardinality search.
//!
//! Orders here follow the "earlier neighbours form a clique" convention: in a
//! perfect elimination ordering every vertex's neighbours that precede it
//! induce a complete graph. The MCS visit order has this property on chordal
//! inputs without reversal.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::Coloring;
use crate::Vertex;

/// A linear order on the vertices together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    order: Vec<Vertex>,
    pos: Vec<usize>,
}

impl EliminationOrder {
    pub fn from_order(order: Vec<Vertex>) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::NotAPermutation);
            }
            pos[v] = i;
        }
        Ok(EliminationOrder { order, pos })
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `u <_L v`.
    pub fn precedes(&self, u: Vertex, v: Vertex) -> bool {
        self.pos[u] < self.pos[v]
    }

    /// Neighbours of `v` that come before it (its predecessors).
    pub fn predecessors<'a>(
        &'a self,
        g: &'a Graph,
        v: Vertex,
    ) -> impl Iterator<Item = Vertex> + 'a {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.precedes(u, v))
    }
}

/// Maximum cardinality search. Ties are broken towards the smallest id, so
/// the result is a function of the graph alone.
pub fn mcs_order(g: &Graph) -> EliminationOrder {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n + 1];
    buckets[0].extend(g.vertices());
    let mut top = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        while buckets[top].is_empty() {
            top -= 1;
        }
        let v = buckets[top].pop_first().unwrap();
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                buckets[weight[w]].remove(&w);
                weight[w] += 1;
                buckets[weight[w]].insert(w);
                top = top.max(weight[w]);
            }
        }
    }
    EliminationOrder::from_order(order).expect("MCS visits every vertex once")
}

/// First vertex whose earlier neighbours fail to form a clique, with a
/// non-adjacent pair among them.
pub fn peo_violation(g: &Graph, l: &EliminationOrder) -> Option<(Vertex, Vertex, Vertex)> {
    // Checking each predecessor against the latest predecessor suffices by
    // induction along the order.
    for &v in l.order() {
        let Some(parent) = l.predecessors(g, v).max_by_key(|&u| l.position(u)) else {
            continue;
        };
        if let Some(w) = l
            .predecessors(g, v)
            .find(|&w| w != parent && !g.has_edge(w, parent))
        {
            return Some((v, w, parent));
        }
    }
    None
}

pub fn is_perfect_elimination(g: &Graph, l: &EliminationOrder) -> bool {
    l.len() == g.n() && peo_violation(g, l).is_none()
}

fn require_peo(g: &Graph, l: &EliminationOrder) -> Result<()> {
    if l.len() != g.n() {
        return Err(Error::NotAPermutation);
    }
    match peo_violation(g, l) {
        None => Ok(()),
        Some((vertex, a, b)) => Err(Error::NotPerfectElimination { vertex, a, b }),
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    is_perfect_elimination(g, &mcs_order(g))
}

/// MCS order of a chordal graph, or the graph's shortest-found chordless
/// cycle as the error witness.
pub fn chordal_order(g: &Graph) -> Result<EliminationOrder> {
    let l = mcs_order(g);
    if is_perfect_elimination(g, &l) {
        Ok(l)
    } else {
        Err(Error::NotChordal(find_chordless_cycle(g).unwrap_or_default()))
    }
}

/// An induced cycle of length at least four, if one exists.
///
/// Every such cycle has a vertex `v` with non-adjacent cycle neighbours `a`,
/// `b`, and the rest of the cycle avoids `N[v]`. So for each `v` and each
/// non-adjacent pair of its neighbours we look for a shortest `a`-`b` path
/// outside `N[v]`; a shortest path is induced, which closes a chordless cycle.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        blocked[v] = true;
        for &w in nbrs {
            blocked[w] = true;
        }
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                parent.iter_mut().for_each(|p| *p = usize::MAX);
                parent[a] = a;
                let mut queue = VecDeque::from([a]);
                while let Some(u) = queue.pop_front() {
                    for &w in g.neighbors(u) {
                        if parent[w] != usize::MAX {
                            continue;
                        }
                        if w == b {
                            parent[b] = u;
                            let mut cycle = vec![v, b];
                            let mut cur = u;
                            while cur != a {
                                cycle.push(cur);
                                cur = parent[cur];
                            }
                            cycle.push(a);
                            return Some(cycle);
                        }
                        if !blocked[w] {
                            parent[w] = u;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        blocked[v] = false;
        for &w in nbrs {
            blocked[w] = false;
        }
    }
    None
}

/// Clique number read off a perfect elimination ordering: one more than the
/// largest number of predecessors. Zero for the empty graph.
pub fn clique_number_chordal(g: &Graph, l: &EliminationOrder) -> Result<usize> {
    require_peo(g, l)?;
    Ok(g
        .vertices()
        .map(|v| 1 + l.predecessors(g, v).count())
        .max()
        .unwrap_or(0))
}

/// Clique number of a chordal graph, using its MCS order.
pub fn clique_number(g: &Graph) -> Result<usize> {
    clique_number_chordal(g, &chordal_order(g)?)
}

/// Greedy smallest-available coloring along `l`. On a perfect elimination
/// ordering this uses exactly `ω(G)` colors.
pub fn greedy_proper_coloring(g: &Graph, l: &EliminationOrder) -> Result<Coloring> {
    require_peo(g, l)?;
    let mut colors = vec![0u32; g.n()];
    let mut taken = Vec::new();
    for &v in l.order() {
        taken.clear();
        taken.extend(l.predecessors(g, v).map(|u| colors[u]));
        colors[v] = smallest_missing(&mut taken);
    }
    Ok(Coloring::from_colors(colors))
}

/// Smallest non-negative integer absent from `taken` (which gets sorted).
pub(crate) fn smallest_missing(taken: &mut [u32]) -> u32 {
    taken.sort_unstable();
    let mut c = 0;
    for &t in taken.iter() {
        if t == c {
            c += 1;
        } else if t > c {
            break;
        }
    }
    c
}
