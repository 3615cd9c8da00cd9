//! Level partitions around a root vertex, shadows of upper components and
//! ancestor sets.

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};
use crate::Vertex;

/// BFS layers `N^0(x), N^1(x), ...` of the component containing the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelPartition {
    root: Vertex,
    level: Vec<Option<u32>>,
    layers: Vec<Vec<Vertex>>,
}

impl LevelPartition {
    pub fn root(&self) -> Vertex {
        self.root
    }

    /// Level of `v`, or `None` outside the root's component.
    pub fn level(&self, v: Vertex) -> Option<u32> {
        self.level[v]
    }

    /// Vertices of level `l`, ascending.
    pub fn layer(&self, l: usize) -> &[Vertex] {
        self.layers.get(l).map_or(&[], Vec::as_slice)
    }

    pub fn layers(&self) -> &[Vec<Vertex>] {
        &self.layers
    }

    /// Index of the deepest non-empty level.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    fn at(&self, v: Vertex, l: usize) -> bool {
        self.level[v] == Some(l as u32)
    }
}

pub fn level_partition(g: &Graph, x: Vertex) -> LevelPartition {
    let level = crate::graph::bfs_distances(g, x);
    let depth = level.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut layers = vec![Vec::new(); depth + 1];
    for (v, d) in level.iter().enumerate() {
        if let Some(d) = d {
            layers[*d as usize].push(v);
        }
    }
    LevelPartition {
        root: x,
        level,
        layers,
    }
}

/// Induced subgraph `G_l` on one level, with the map back to `G`.
#[derive(Debug, Clone)]
pub struct LevelSubgraph {
    pub graph: Graph,
    /// `to_global[i]` is the vertex of `G` behind local vertex `i`; ascending.
    pub to_global: Vec<Vertex>,
}

impl LevelSubgraph {
    pub fn local(&self, v: Vertex) -> Option<usize> {
        self.to_global.binary_search(&v).ok()
    }
}

pub fn level_subgraph(g: &Graph, p: &LevelPartition, l: usize) -> Result<LevelSubgraph> {
    if l > p.depth() {
        return Err(Error::LevelOutOfRange {
            level: l,
            max: p.depth(),
        });
    }
    let (graph, to_global) = g.induced_subgraph(p.layer(l));
    Ok(LevelSubgraph { graph, to_global })
}

/// Connected components of `G_{>l}`, each ascending.
pub fn upper_components(g: &Graph, p: &LevelPartition, l: usize) -> Vec<Vec<Vertex>> {
    let mut upper: Vec<Vertex> = p.layers.iter().skip(l + 1).flatten().copied().collect();
    upper.sort_unstable();
    let (sub, map) = g.induced_subgraph(&upper);
    connected_components(&sub)
        .into_iter()
        .map(|c| c.into_iter().map(|i| map[i]).collect())
        .collect()
}

/// The `l`-shadow of a vertex set: vertices of level `l` with a neighbour in it.
pub fn shadow(g: &Graph, p: &LevelPartition, component: &[Vertex], l: usize) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = component
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().copied())
        .filter(|&w| p.at(w, l))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowViolation {
    pub level: usize,
    pub component: Vec<Vertex>,
    /// Two non-adjacent vertices of the component's shadow.
    pub pair: (Vertex, Vertex),
}

/// Checks that for every level `l` the `l`-shadow of every component of
/// `G_{>l}` is a clique. Reports the first failure.
pub fn check_shadow_complete(g: &Graph, p: &LevelPartition) -> Result<(), ShadowViolation> {
    for l in 0..p.depth() {
        for component in upper_components(g, p, l) {
            let sh = shadow(g, p, &component, l);
            if let Some(pair) = g.non_adjacent_pair(&sh) {
                return Err(ShadowViolation {
                    level: l,
                    component,
                    pair,
                });
            }
        }
    }
    Ok(())
}

/// Ancestors of `y` on level `target`: the level-`target` vertices joined to
/// `y` by a path of length `level(y) - target`. Built one level at a time
/// from `{y}` downwards.
pub fn ancestor_clique(
    g: &Graph,
    p: &LevelPartition,
    y: Vertex,
    target: usize,
) -> Result<Vec<Vertex>> {
    let ly = p.level(y).ok_or(Error::Unreachable(y))? as usize;
    if target > ly {
        return Err(Error::LevelOutOfRange {
            level: target,
            max: ly,
        });
    }
    let mut set = vec![y];
    for j in (target..ly).rev() {
        let mut next: Vec<Vertex> = set
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|&w| p.at(w, j))
            .collect();
        next.sort_unstable();
        next.dedup();
        set = next;
    }
    Ok(set)
}
