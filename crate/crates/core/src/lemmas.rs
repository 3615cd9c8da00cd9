//! Executable checks of the structural facts the colorings rely on. Each
//! check runs over every root vertex and reports the first counterexample.

use serde::Serialize;

use crate::accolor::{cliques_adjacent, mu_of_clique, predecessor_coloring, small_cliques, CliqueRef};
use crate::bounds::binomial;
use crate::chordal::{chordal_order, clique_number_chordal, find_chordless_cycle, mcs_order};
use crate::error::Error;
use crate::graph::{DistanceOracle, Graph};
use crate::leveling::{check_shadow_complete, level_partition, level_subgraph, LevelPartition};
use crate::oracle::verify_proper;
use crate::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Shadow completeness, plus chordal level subgraphs of smaller clique number.
    Shadow,
    /// Ancestors of a common descendant on one level are pairwise adjacent.
    Desce,
    /// Ancestor cliques of same-level pairs at distance `d ≥ 2`.
    Path,
    /// Adjacent cliques receive different clique colors.
    Adj,
    /// Intersecting cliques with equal colors share their earliest vertex.
    Aic,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Shadow, Suite::Desce, Suite::Path, Suite::Adj, Suite::Aic];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Shadow => "shadow",
            Suite::Desce => "desce",
            Suite::Path => "path",
            Suite::Adj => "adj",
            Suite::Aic => "aic",
        }
    }

    pub fn parse(name: &str) -> Option<Vec<Suite>> {
        if name == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .map(|s| vec![s])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    pub vertices: Vec<Vertex>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub pass: bool,
    pub checks: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

type Check = Result<u64, Witness>;

fn finish(suite: Suite, outcome: Check) -> SuiteResult {
    match outcome {
        Ok(checks) => SuiteResult {
            suite,
            pass: true,
            checks,
            witness: None,
        },
        Err(w) => SuiteResult {
            suite,
            pass: false,
            checks: 0,
            witness: Some(w),
        },
    }
}

fn not_chordal(g: &Graph) -> Witness {
    Witness {
        root: None,
        level: None,
        vertices: find_chordless_cycle(g).unwrap_or_default(),
        detail: "graph is not chordal; vertices form an induced cycle".into(),
    }
}

pub fn run_suite(g: &Graph, suite: Suite) -> SuiteResult {
    let outcome = match suite {
        Suite::Shadow => check_shadow(g),
        Suite::Desce => check_desce(g),
        Suite::Path => check_path(g),
        Suite::Adj => check_adj(g),
        Suite::Aic => check_aic(g),
    };
    finish(suite, outcome)
}

pub fn run_suites(g: &Graph, suites: &[Suite]) -> Vec<SuiteResult> {
    suites.iter().map(|&s| run_suite(g, s)).collect()
}

fn component_clique_number(g: &Graph, part: &LevelPartition) -> Result<usize, Witness> {
    let mut vertices: Vec<Vertex> = part.layers().iter().flatten().copied().collect();
    vertices.sort_unstable();
    let (sub, _) = g.induced_subgraph(&vertices);
    chordal_order(&sub)
        .and_then(|l| clique_number_chordal(&sub, &l))
        .map_err(|_| not_chordal(g))
}

fn check_shadow(g: &Graph) -> Check {
    let mut checks = 0;
    for x in g.vertices() {
        let part = level_partition(g, x);
        check_shadow_complete(g, &part).map_err(|v| Witness {
            root: Some(x),
            level: Some(v.level),
            vertices: vec![v.pair.0, v.pair.1],
            detail: format!(
                "shadow of component {:?} contains non-adjacent vertices",
                v.component
            ),
        })?;
        checks += 1;
        let t = component_clique_number(g, &part)?;
        if t < 2 {
            continue;
        }
        for l in 0..=part.depth() {
            let sub = level_subgraph(g, &part, l).expect("level in range");
            let order = mcs_order(&sub.graph);
            let fail = |detail: String| Witness {
                root: Some(x),
                level: Some(l),
                vertices: sub.to_global.clone(),
                detail,
            };
            let omega = clique_number_chordal(&sub.graph, &order)
                .map_err(|_| fail("level subgraph is not chordal".into()))?;
            if omega >= t {
                return Err(fail(format!(
                    "level subgraph has clique number {omega}, component has {t}"
                )));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

/// Ancestor sets of `y` on every level `0..=level(y)`, indexed by level.
fn ancestor_chain(g: &Graph, part: &LevelPartition, y: Vertex) -> Vec<Vec<Vertex>> {
    let ly = part.level(y).expect("y reachable") as usize;
    let mut chain = vec![Vec::new(); ly + 1];
    chain[ly] = vec![y];
    for j in (0..ly).rev() {
        let mut next: Vec<Vertex> = chain[j + 1]
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|&w| part.level(w) == Some(j as u32))
            .collect();
        next.sort_unstable();
        next.dedup();
        chain[j] = next;
    }
    chain
}

fn check_desce(g: &Graph) -> Check {
    let mut checks = 0;
    for x in g.vertices() {
        let part = level_partition(g, x);
        for y in part.layers().iter().flatten().copied() {
            let chain = ancestor_chain(g, &part, y);
            for (l, set) in chain.iter().enumerate().take(chain.len() - 1) {
                if let Some((a, b)) = g.non_adjacent_pair(set) {
                    return Err(Witness {
                        root: Some(x),
                        level: Some(l),
                        vertices: vec![y, a, b],
                        detail: format!("ancestors {a} and {b} of {y} are not adjacent"),
                    });
                }
                checks += 1;
            }
        }
    }
    Ok(checks)
}

fn sets_intersect(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().any(|v| b.binary_search(v).is_ok())
}

fn sets_adjacent(g: &Graph, a: &[Vertex], b: &[Vertex]) -> bool {
    !sets_intersect(a, b) && a.iter().any(|&u| b.iter().any(|&v| g.has_edge(u, v)))
}

fn check_path(g: &Graph) -> Check {
    let dist = DistanceOracle::new(g);
    let mut checks = 0;
    for x in g.vertices() {
        let part = level_partition(g, x);
        let chains: Vec<Option<Vec<Vec<Vertex>>>> = g
            .vertices()
            .map(|y| part.level(y).map(|_| ancestor_chain(g, &part, y)))
            .collect();
        for (l, layer) in part.layers().iter().enumerate() {
            for (i, &u) in layer.iter().enumerate() {
                for &v in &layer[i + 1..] {
                    let d = dist.dist(u, v).expect("same component") as usize;
                    if d < 2 {
                        continue;
                    }
                    let k = d / 2;
                    if k > l {
                        return Err(Witness {
                            root: Some(x),
                            level: Some(l),
                            vertices: vec![u, v],
                            detail: format!("distance {d} exceeds twice the level"),
                        });
                    }
                    let ku = &chains[u].as_ref().unwrap()[l - k];
                    let kv = &chains[v].as_ref().unwrap()[l - k];
                    let ok = if d % 2 == 1 {
                        sets_adjacent(g, ku, kv)
                    } else {
                        sets_adjacent(g, ku, kv) || sets_intersect(ku, kv)
                    };
                    if !ok {
                        return Err(Witness {
                            root: Some(x),
                            level: Some(l - k),
                            vertices: vec![u, v],
                            detail: format!(
                                "d = {d}: ancestor cliques {ku:?} and {kv:?} are neither adjacent{}",
                                if d.is_multiple_of(2) { " nor intersecting" } else { " (disjoint)" }
                            ),
                        });
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(checks)
}

struct CliqueColors {
    family: Vec<CliqueRef>,
    color: Vec<u32>,
    mu: Vec<Vertex>,
}

fn colored_family(g: &Graph) -> Result<CliqueColors, Witness> {
    let order = chordal_order(g).map_err(|_| not_chordal(g))?;
    let a = predecessor_coloring(g, &order).map_err(|e| Witness {
        root: None,
        level: None,
        vertices: Vec::new(),
        detail: e.to_string(),
    })?;
    let omega = clique_number_chordal(g, &order).expect("order is perfect") as u64;
    let limit = binomial(omega + 1, 2).unwrap_or(u64::MAX);
    if a.palette_size() as u64 > limit {
        return Err(Witness {
            root: None,
            level: None,
            vertices: Vec::new(),
            detail: format!("predecessor coloring uses {} > {limit} colors", a.palette_size()),
        });
    }
    if let Ok(crate::oracle::Verdict::Conflict(u, v)) = verify_proper(g, a.colors()) {
        return Err(Witness {
            root: None,
            level: None,
            vertices: vec![u, v],
            detail: "predecessor coloring is not proper".into(),
        });
    }
    let family = small_cliques(g, 3);
    let mu: Vec<Vertex> = family.iter().map(|k| mu_of_clique(k, &order)).collect();
    let color = mu.iter().map(|&m| a.color(m)).collect();
    Ok(CliqueColors { family, color, mu })
}

fn check_adj(g: &Graph) -> Check {
    let cc = colored_family(g)?;
    let mut checks = 0;
    for i in 0..cc.family.len() {
        for j in i + 1..cc.family.len() {
            if cc.color[i] == cc.color[j] && cliques_adjacent(g, &cc.family[i], &cc.family[j]) {
                return Err(Witness {
                    root: None,
                    level: None,
                    vertices: [cc.family[i].vertices(), cc.family[j].vertices()].concat(),
                    detail: format!(
                        "adjacent cliques {:?} and {:?} share color {}",
                        cc.family[i].vertices(),
                        cc.family[j].vertices(),
                        cc.color[i]
                    ),
                });
            }
            checks += 1;
        }
    }
    Ok(checks)
}

fn check_aic(g: &Graph) -> Check {
    let cc = colored_family(g)?;
    let mut checks = 0;
    for i in 0..cc.family.len() {
        for j in i + 1..cc.family.len() {
            if cc.color[i] != cc.color[j] || !cc.family[i].intersects(&cc.family[j]) {
                continue;
            }
            if cc.mu[i] != cc.mu[j] {
                return Err(Witness {
                    root: None,
                    level: None,
                    vertices: [cc.family[i].vertices(), cc.family[j].vertices()].concat(),
                    detail: format!(
                        "intersecting cliques with color {} have earliest vertices {} and {}",
                        cc.color[i], cc.mu[i], cc.mu[j]
                    ),
                });
            }
            checks += 1;
        }
    }
    Ok(checks)
}

impl From<Witness> for Error {
    fn from(w: Witness) -> Self {
        Error::InvalidParameter(w.detail)
    }
}
