//! Filling a face bounded by `C_k` with a concentric `C_{k-1}` while keeping
//! outer distances, and patching cut vertices with 2-paths.

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph};
use crate::Vertex;

/// Outer cycle `z_0..z_{k-1}` on ids `0..k`, inner cycle `w_0..w_{k-2}` on
/// ids `k..2k-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceFillGadget {
    pub k: usize,
    pub graph: Graph,
    pub outer: Vec<Vertex>,
}

impl FaceFillGadget {
    pub fn inner(&self) -> Vec<Vertex> {
        (self.k..2 * self.k - 1).collect()
    }
}

/// Edge `e_i` of the inner cycle joins `w_{i-1}` and `w_i` (mod `k-1`);
/// `z_i` sees both ends of `e_i`, and `z_0` sees `w_0`.
pub fn face_fill_gadget(k: usize) -> Result<FaceFillGadget> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!(
            "face fill needs k >= 4, got {k}"
        )));
    }
    let m = k - 1;
    let w = |i: usize| k + i % m;
    let mut edges = Vec::with_capacity(4 * k);
    for i in 0..k {
        edges.push((i, (i + 1) % k));
    }
    for i in 0..m {
        edges.push((w(i), w(i + 1)));
    }
    for i in 1..k {
        edges.push((i, w(i - 1)));
        edges.push((i, w(i)));
    }
    edges.push((0, w(0)));
    Ok(FaceFillGadget {
        k,
        graph: Graph::from_edge_list(k + m, edges)?,
        outer: (0..k).collect(),
    })
}

fn cycle_distance(k: usize, i: usize, j: usize) -> u32 {
    let d = i.abs_diff(j);
    d.min(k - d) as u32
}

/// True iff every pair of outer vertices is as far apart in the gadget as on `C_k`.
pub fn verify_distance_preservation(g: &FaceFillGadget) -> bool {
    g.outer.iter().enumerate().all(|(i, &zi)| {
        let dist = bfs_distances(&g.graph, zi);
        g.outer
            .iter()
            .enumerate()
            .all(|(j, &zj)| dist[zj] == Some(cycle_distance(g.k, i, j)))
    })
}

/// Joins consecutive neighbours of `y` (cyclically, in the given order) by a
/// path of length 2 through a new vertex whenever they are not adjacent.
/// New vertices get ids `n, n+1, ...` in the order the pairs are visited.
pub fn patch_cut_vertex(g: &Graph, y: Vertex, cyclic_order: &[Vertex]) -> Result<Graph> {
    if y >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: y, n: g.n() });
    }
    let nbrs = g.neighbors(y);
    if nbrs.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "vertex {y} has degree {}, need at least 2",
            nbrs.len()
        )));
    }
    let mut sorted = cyclic_order.to_vec();
    sorted.sort_unstable();
    if sorted != nbrs {
        return Err(Error::NotAPermutation);
    }
    let d = cyclic_order.len();
    let pairs = if d == 2 { 1 } else { d };
    let mut extra = Vec::new();
    let mut next = g.n();
    for i in 0..pairs {
        let (a, b) = (cyclic_order[i], cyclic_order[(i + 1) % d]);
        if !g.has_edge(a, b) {
            extra.push((a, next));
            extra.push((next, b));
            next += 1;
        }
    }
    g.with_added(next - g.n(), &extra)
}

/// True iff deleting `v` increases the number of components.
pub fn is_cut_vertex(g: &Graph, v: Vertex) -> bool {
    let rest: Vec<Vertex> = g.vertices().filter(|&u| u != v).collect();
    let (without, _) = g.induced_subgraph(&rest);
    let before = crate::graph::connected_components(g).len();
    crate::graph::connected_components(&without).len() > before
}
