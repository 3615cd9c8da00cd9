//! Seeded graph families. Randomness comes from ChaCha8 seeded with a `u64`,
//! so a given seed produces the same graph on every platform.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Vertex;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// Random `k`-tree on `n` vertices: start from `K_{k+1}` and attach each new
/// vertex to a uniformly chosen existing `k`-clique.
pub fn random_ktree(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("k-tree needs k >= 1"));
    }
    if n <= k {
        return Err(invalid(format!("k-tree needs n > k (n = {n}, k = {k})")));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    let mut cliques: Vec<Vec<Vertex>> = (0..=k)
        .map(|skip| (0..=k).filter(|&v| v != skip).collect())
        .collect();
    for v in k + 1..n {
        let base = cliques.choose(&mut rng).unwrap().clone();
        edges.extend(base.iter().map(|&u| (u, v)));
        for drop in 0..k {
            let mut c = base.clone();
            c[drop] = v;
            cliques.push(c);
        }
    }
    Graph::from_edge_list(n, edges)
}

/// Intersection graph of closed integer intervals.
pub fn interval_graph(intervals: &[(i64, i64)]) -> Result<Graph> {
    if let Some(&(a, b)) = intervals.iter().find(|(a, b)| a > b) {
        return Err(invalid(format!("empty interval [{a}, {b}]")));
    }
    let mut edges = Vec::new();
    for (i, &(a, b)) in intervals.iter().enumerate() {
        for (j, &(c, d)) in intervals.iter().enumerate().skip(i + 1) {
            if a <= d && c <= b {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(intervals.len(), edges)
}

/// `n` random intervals with starts in `[0, 2n)` and lengths in
/// `[0, max(2, n / 3)]`.
pub fn random_interval_graph(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("interval graph needs n >= 1"));
    }
    let mut rng = rng(seed);
    let span = 2 * n as i64;
    let max_len = (n as i64 / 3).max(2);
    let intervals: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let start = rng.random_range(0..span);
            (start, start + rng.random_range(0..=max_len))
        })
        .collect();
    interval_graph(&intervals)
}

/// Rooted tree whose root has `delta` children, every other internal vertex
/// `delta - 1` children, and whose leaves sit at depth `radius`.
pub fn complete_dary_tree(delta: usize, radius: usize) -> Result<Graph> {
    if delta == 0 {
        return Err(invalid("d-ary tree needs delta >= 1"));
    }
    let mut edges = Vec::new();
    let mut frontier = vec![0];
    let mut next_id = 1;
    for depth in 0..radius {
        let children = if depth == 0 { delta } else { delta - 1 };
        let mut next = Vec::new();
        for &parent in &frontier {
            for _ in 0..children {
                edges.push((parent, next_id));
                next.push(next_id);
                next_id += 1;
            }
        }
        frontier = next;
    }
    Graph::from_edge_list(next_id, edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star on `n` vertices: centre 0 and `n - 1` leaves.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("star needs n >= 1"));
    }
    Graph::from_edge_list(n, (1..n).map(|i| (0, i)))
}

/// Path `0..n` plus the chords `(i, i + 2)`: an outerplanar chordal strip of
/// triangles.
pub fn triangle_strip(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("triangle strip needs n >= 3"));
    }
    let edges = (1..n)
        .map(|i| (i - 1, i))
        .chain((2..n).map(|i| (i - 2, i)));
    Graph::from_edge_list(n, edges)
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edge_list(n, edges).expect("valid complete graph")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Ktree { n: usize, k: usize },
    Interval { n: usize },
    Dary { delta: usize, radius: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    TriangleStrip { n: usize },
    Complete { n: usize },
}

/// A generator call with its seed; deterministic models ignore the seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub model: Model,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(model: Model, seed: u64) -> Self {
        GenSpec { model, seed }
    }

    pub fn generate(&self) -> Result<Graph> {
        match self.model {
            Model::Ktree { n, k } => random_ktree(n, k, self.seed),
            Model::Interval { n } => random_interval_graph(n, self.seed),
            Model::Dary { delta, radius } => complete_dary_tree(delta, radius),
            Model::Path { n } => path(n),
            Model::Cycle { n } => cycle(n),
            Model::Star { n } => star(n),
            Model::TriangleStrip { n } => triangle_strip(n),
            Model::Complete { n } => Ok(complete(n)),
        }
    }
}
