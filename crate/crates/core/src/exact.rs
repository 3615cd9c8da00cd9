//! Colorings of exact distance graphs of chordal graphs.
//!
//! Vertices are grouped into BFS levels around a root. Two vertices at
//! distance `d ≤ p` lie at most `p` levels apart, so the level index modulo
//! `p + 1` separates every such pair on different levels. Within one level,
//! a pair at distance `d` is separated through the ancestor cliques
//! `K_y` on level `ℓ - ⌊d/2⌋`:
//!
//! * odd `d`: `K_u` and `K_v` are adjacent cliques of `G_{ℓ-k}`, so the
//!   clique coloring of that level subgraph tells them apart;
//! * even `d`: either the clique colors differ, or both cliques share their
//!   earliest vertex `μ` and the pair is split by which neighbour of `μ`
//!   leads towards each vertex.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::accolor::{clique_color, mu_of_clique, predecessor_coloring, CliqueRef, PredecessorColoring};
use crate::bounds::{bound_main1, bound_main2, even_count, validate_distance_set};
use crate::chordal::{chordal_order, clique_number_chordal, greedy_proper_coloring, mcs_order};
use crate::error::{Error, Result};
use crate::graph::{connected_components, exact_distance_graph, max_degree, union_graphs, Graph};
use crate::leveling::{ancestor_clique, level_partition, level_subgraph, LevelPartition, LevelSubgraph};
use crate::oracle::{verify_proper, Coloring};
use crate::Vertex;

/// Per-level data shared by every member of `S`: the level subgraph, its
/// clique coloring and its greedy proper coloring.
#[derive(Debug)]
struct LevelContext {
    sub: LevelSubgraph,
    cliques: PredecessorColoring,
    greedy: Coloring,
}

/// Colors the levels of one partition, building each level's context once.
pub struct LevelColorer<'a> {
    g: &'a Graph,
    part: &'a LevelPartition,
    cache: Vec<OnceLock<Result<LevelContext>>>,
}

impl<'a> LevelColorer<'a> {
    pub fn new(g: &'a Graph, part: &'a LevelPartition) -> Self {
        let cache = (0..=part.depth()).map(|_| OnceLock::new()).collect();
        LevelColorer { g, part, cache }
    }

    fn context(&self, l: usize) -> Result<&LevelContext> {
        let slot = self.cache.get(l).ok_or(Error::LevelOutOfRange {
            level: l,
            max: self.part.depth(),
        })?;
        slot.get_or_init(|| {
            let sub = level_subgraph(self.g, self.part, l)?;
            let order = mcs_order(&sub.graph);
            let cliques = predecessor_coloring(&sub.graph, &order)?;
            let greedy = greedy_proper_coloring(&sub.graph, &order)?;
            Ok(LevelContext {
                sub,
                cliques,
                greedy,
            })
        })
        .as_ref()
        .map_err(Clone::clone)
    }

    /// Clique color of `K_y` on level `target` and its earliest vertex `μ`
    /// (as a vertex of `G`).
    fn ancestor_color(&self, y: Vertex, target: usize) -> Result<(u32, Vertex)> {
        let ctx = self.context(target)?;
        let ancestors = ancestor_clique(self.g, self.part, y, target)?;
        let local = ancestors.iter().map(|&v| ctx.sub.local(v).expect("ancestor lies on target level"));
        let k = CliqueRef::new(&ctx.sub.graph, local)?;
        let mu = mu_of_clique(&k, ctx.cliques.order());
        Ok((clique_color(&ctx.cliques, &k), ctx.sub.to_global[mu]))
    }

    fn check_level(&self, l: usize) -> Result<()> {
        if l > self.part.depth() {
            return Err(Error::LevelOutOfRange {
                level: l,
                max: self.part.depth(),
            });
        }
        Ok(())
    }

    /// `h` on level `l` for odd `p ≥ 3`, aligned with `part.layer(l)`.
    pub fn odd(&self, l: usize, p: u32) -> Result<Vec<u32>> {
        if p.is_multiple_of(2) || p < 3 {
            return Err(Error::InvalidParameter(format!(
                "odd level coloring needs odd p >= 3, got {p}"
            )));
        }
        self.check_level(l)?;
        let k = (p / 2) as usize;
        let layer = self.part.layer(l);
        if l < k {
            return Ok(vec![0; layer.len()]);
        }
        layer
            .iter()
            .map(|&y| self.ancestor_color(y, l - k).map(|(c, _)| c))
            .collect()
    }

    /// `h'` on level `l` for even `p ≥ 2`: pairs (clique color of `K_y`,
    /// port of `σ(y)` at `μ(K_y)`), aligned with `part.layer(l)`.
    pub fn even(&self, l: usize, p: u32) -> Result<Vec<(u32, u32)>> {
        if p % 2 == 1 || p < 2 {
            return Err(Error::InvalidParameter(format!(
                "even level coloring needs even p >= 2, got {p}"
            )));
        }
        self.check_level(l)?;
        let k = (p / 2) as usize;
        let layer = self.part.layer(l);
        if l < k {
            return Ok(vec![(0, 0); layer.len()]);
        }
        layer
            .iter()
            .map(|&y| {
                let (c, mu) = self.ancestor_color(y, l - k)?;
                let s = sigma_vertex(self.g, self.part, y, mu, k)?;
                let port = port_label(self.g, mu, s).ok_or(Error::NoSigma(y))?;
                Ok((c, port))
            })
            .collect()
    }

    /// Proper coloring of `G_l`, aligned with `part.layer(l)`.
    pub fn greedy(&self, l: usize) -> Result<Vec<u32>> {
        self.check_level(l)?;
        Ok(self.context(l)?.greedy.colors().to_vec())
    }
}

pub fn level_coloring_odd(g: &Graph, part: &LevelPartition, l: usize, p: u32) -> Result<Vec<u32>> {
    LevelColorer::new(g, part).odd(l, p)
}

pub fn level_coloring_even(
    g: &Graph,
    part: &LevelPartition,
    l: usize,
    p: u32,
) -> Result<Vec<(u32, u32)>> {
    LevelColorer::new(g, part).even(l, p)
}

/// `σ(y)`: the smallest-id vertex at distance `k - 1` from `y` adjacent to
/// `mu`, where `mu` is an ancestor of `y` exactly `k` levels down.
///
/// Such a vertex sits one level above `mu` on a shortest `y`-`mu` path, so
/// it is searched among the ancestors of `y` on that level.
pub fn sigma_vertex(g: &Graph, part: &LevelPartition, y: Vertex, mu: Vertex, k: usize) -> Result<Vertex> {
    if k == 0 {
        return Err(Error::InvalidParameter("sigma needs k >= 1".into()));
    }
    if k == 1 {
        return Ok(y);
    }
    let ly = part.level(y).ok_or(Error::Unreachable(y))? as usize;
    if ly + 1 < k {
        return Err(Error::NoSigma(y));
    }
    ancestor_clique(g, part, y, ly + 1 - k)?
        .into_iter()
        .find(|&w| g.has_edge(w, mu))
        .ok_or(Error::NoSigma(y))
}

/// `b_w`: neighbours of `w` numbered `1..=deg(w)` by ascending id.
pub fn injective_port_label(g: &Graph, w: Vertex) -> BTreeMap<Vertex, u32> {
    g.neighbors(w)
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32 + 1))
        .collect()
}

fn port_label(g: &Graph, w: Vertex, v: Vertex) -> Option<u32> {
    g.neighbors(w).binary_search(&v).ok().map(|i| i as u32 + 1)
}

/// Renumbers values densely by first appearance.
fn densify<T: Clone + Eq + std::hash::Hash>(values: &[T]) -> Vec<u32> {
    let mut ids: HashMap<T, u32> = HashMap::new();
    values
        .iter()
        .map(|v| {
            let next = ids.len() as u32;
            *ids.entry(v.clone()).or_insert(next)
        })
        .collect()
}

/// Per-vertex color tuples `(f, g_1, ..., g_s)` and their dense renumbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleColoring {
    p: u32,
    s: Vec<u32>,
    tuples: Vec<Vec<u32>>,
    dense: Vec<u32>,
    colors_used: usize,
}

impl TupleColoring {
    fn from_tuples(p: u32, s: Vec<u32>, tuples: Vec<Vec<u32>>) -> Self {
        let dense = densify(&tuples);
        let colors_used = dense.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        TupleColoring {
            p,
            s,
            tuples,
            dense,
            colors_used,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn distance_set(&self) -> &[u32] {
        &self.s
    }

    pub fn tuple(&self, v: Vertex) -> &[u32] {
        &self.tuples[v]
    }

    pub fn tuples(&self) -> &[Vec<u32>] {
        &self.tuples
    }

    /// Colors `0..colors_used`, numbered by first appearance in vertex order.
    pub fn dense(&self) -> &[u32] {
        &self.dense
    }

    pub fn colors_used(&self) -> usize {
        self.colors_used
    }
}

impl AsRef<[u32]> for TupleColoring {
    fn as_ref(&self) -> &[u32] {
        &self.dense
    }
}

/// Colors `G` so that, for every `d` in `S`, vertices at distance exactly `d`
/// get different colors. Each component is rooted at its smallest vertex and
/// colored independently with the same palette.
pub fn combined_coloring(g: &Graph, s: &[u32], p: u32) -> Result<TupleColoring> {
    let s = validate_distance_set(s, p)?;
    let order = chordal_order(g)?;

    if s == [1] {
        // The union is G itself; a chordal graph is colored with ω colors.
        let c = greedy_proper_coloring(g, &order)?;
        let tuples = c.colors().iter().map(|&x| vec![0, x]).collect();
        return Ok(TupleColoring::from_tuples(p, s, tuples));
    }

    let mut tuples = vec![Vec::new(); g.n()];
    for component in connected_components(g) {
        let part = level_partition(g, component[0]);
        let colorer = LevelColorer::new(g, &part);
        let levels: Vec<Vec<Vec<u32>>> = (0..=part.depth())
            .into_par_iter()
            .map(|l| {
                s.iter()
                    .map(|&d| match d {
                        1 => colorer.greedy(l),
                        d if d % 2 == 1 => colorer.odd(l, d).map(|c| densify(&c)),
                        d => colorer.even(l, d).map(|c| densify(&c)),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        for (l, per_distance) in levels.into_iter().enumerate() {
            let f = (l % (p as usize + 1)) as u32;
            for (i, &v) in part.layer(l).iter().enumerate() {
                let mut t = Vec::with_capacity(s.len() + 1);
                t.push(f);
                t.extend(per_distance.iter().map(|colors| colors[i]));
                tuples[v] = t;
            }
        }
    }
    Ok(TupleColoring::from_tuples(p, s, tuples))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub t: usize,
    pub delta: usize,
    pub p: u32,
    #[serde(rename = "S")]
    pub s: Vec<u32>,
    pub q: usize,
    pub bound: u64,
    pub colors_used: usize,
    pub proper: bool,
}

impl BoundReport {
    pub fn within_bound(&self) -> bool {
        self.proper && self.colors_used as u64 <= self.bound
    }
}

// Graphs with ω < 2 have no edges; any t ≥ ω is a valid parameter for the
// formulas, and Δ is raised to 1 alongside.
fn effective_t_delta(t: usize, delta: usize) -> (u64, u64) {
    ((t as u64).max(2), (delta as u64).max(1))
}

/// Coloring of `G^[♮p]` together with its bound report.
pub fn exact_color(g: &Graph, p: u32) -> Result<(TupleColoring, BoundReport)> {
    if p == 0 {
        return Err(Error::ZeroDistance);
    }
    let order = chordal_order(g)?;
    let t = clique_number_chordal(g, &order)?;
    let delta = max_degree(g);
    let coloring = combined_coloring(g, &[p], p)?;
    let target = exact_distance_graph(g, p)?;
    let proper = verify_proper(&target, &coloring)?.is_ok();
    let (te, de) = effective_t_delta(t, delta);
    let report = BoundReport {
        t,
        delta,
        p,
        s: vec![p],
        q: even_count(&[p]),
        bound: bound_main1(te, p.into(), de)?,
        colors_used: coloring.colors_used(),
        proper,
    };
    Ok((coloring, report))
}

/// Coloring of `⋃_{d ∈ S} G^[♮d]` together with its bound report.
pub fn color_distance_set(g: &Graph, s: &[u32], p: u32) -> Result<(TupleColoring, BoundReport)> {
    let s = validate_distance_set(s, p)?;
    let order = chordal_order(g)?;
    let t = clique_number_chordal(g, &order)?;
    let delta = max_degree(g);
    let coloring = combined_coloring(g, &s, p)?;
    let parts = s
        .iter()
        .map(|&d| exact_distance_graph(g, d))
        .collect::<Result<Vec<_>>>()?;
    let target = union_graphs(&parts)?;
    let proper = verify_proper(&target, &coloring)?.is_ok();
    let (te, de) = effective_t_delta(t, delta);
    let report = BoundReport {
        t,
        delta,
        p,
        q: even_count(&s),
        bound: bound_main2(te, p, &s, de)?,
        s,
        colors_used: coloring.colors_used(),
        proper,
    };
    Ok((coloring, report))
}

/// Machine-readable coloring report; field order is part of the format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    pub n: usize,
    pub p: u32,
    #[serde(rename = "S")]
    pub s: Vec<u32>,
    pub t: usize,
    pub delta: usize,
    pub bound: u64,
    pub colors_used: usize,
    pub proper: bool,
    pub colors: Vec<u32>,
}

impl ColoringReport {
    pub fn new(coloring: &TupleColoring, report: &BoundReport) -> Self {
        ColoringReport {
            n: coloring.dense().len(),
            p: report.p,
            s: report.s.clone(),
            t: report.t,
            delta: report.delta,
            bound: report.bound,
            colors_used: report.colors_used,
            proper: report.proper,
            colors: coloring.dense().to_vec(),
        }
    }
}
