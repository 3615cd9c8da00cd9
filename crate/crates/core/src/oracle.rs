//! Brute-force ground truth, kept independent of the constructive code:
//! proper-coloring checks, exact chromatic numbers, chordality by induced
//! cycle enumeration and all-pairs distances by simultaneous set expansion.

use crate::error::{Error, Result};
use crate::graph::{DistanceOracle, Distance, Graph};
use crate::Vertex;

/// A vertex coloring with colors drawn from `0..palette`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
    palette: usize,
}

impl Coloring {
    pub fn from_colors(colors: Vec<u32>) -> Self {
        let palette = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        Coloring { colors, palette }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> u32 {
        self.colors[v]
    }

    /// Size of the palette `0..palette`.
    pub fn palette(&self) -> usize {
        self.palette
    }

    /// Number of distinct colors actually used.
    pub fn distinct(&self) -> usize {
        let mut seen = vec![false; self.palette];
        self.colors.iter().for_each(|&c| seen[c as usize] = true);
        seen.into_iter().filter(|&b| b).count()
    }
}

impl AsRef<[u32]> for Coloring {
    fn as_ref(&self) -> &[u32] {
        &self.colors
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Proper,
    /// First monochromatic edge in lexicographic order.
    Conflict(Vertex, Vertex),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Proper)
    }
}

pub fn verify_proper<C: AsRef<[u32]> + ?Sized>(h: &Graph, coloring: &C) -> Result<Verdict> {
    let colors = coloring.as_ref();
    if colors.len() != h.n() {
        return Err(Error::ColoringSize {
            n: h.n(),
            found: colors.len(),
        });
    }
    Ok(h.edges()
        .find(|&(u, v)| colors[u] == colors[v])
        .map_or(Verdict::Proper, |(u, v)| Verdict::Conflict(u, v)))
}

pub const DEFAULT_CHROMATIC_LIMIT: usize = 16;

/// Exact chromatic number by branch and bound.
///
/// Vertices are processed by descending degree. The search starts at a greedy
/// clique size and stops at the first feasible palette below the greedy
/// coloring's size.
pub fn brute_chromatic_number(h: &Graph, max_n: usize) -> Result<usize> {
    let n = h.n();
    if n > max_n || n > 64 {
        return Err(Error::TooLarge {
            n,
            limit: max_n.min(64),
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<Vertex> = h.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let adj: Vec<u64> = h
        .vertices()
        .map(|v| h.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect();

    let lower = order
        .iter()
        .map(|&start| {
            let mut clique = 1u64 << start;
            for &v in &order {
                if clique & !adj[v] & !(1 << v) == 0 {
                    clique |= 1 << v;
                }
            }
            clique.count_ones() as usize
        })
        .max()
        .unwrap();

    let mut greedy = vec![u32::MAX; n];
    for &v in &order {
        let mut used: Vec<u32> = h
            .neighbors(v)
            .iter()
            .map(|&w| greedy[w])
            .filter(|&c| c != u32::MAX)
            .collect();
        greedy[v] = crate::chordal::smallest_missing(&mut used);
    }
    let upper = greedy.iter().map(|&c| c as usize + 1).max().unwrap();

    for k in lower..upper {
        let mut class = vec![0u64; k];
        if colorable(&order, &adj, &mut class, 0, 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn colorable(order: &[Vertex], adj: &[u64], class: &mut [u64], idx: usize, used: usize) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    // New colors are interchangeable, so only the first unused one is tried.
    let limit = (used + 1).min(class.len());
    for c in 0..limit {
        if class[c] & adj[v] == 0 {
            class[c] |= 1 << v;
            if colorable(order, adj, class, idx + 1, used.max(c + 1)) {
                return true;
            }
            class[c] &= !(1 << v);
        }
    }
    false
}

pub const BRUTE_CHORDAL_LIMIT: usize = 12;

/// Chordality by enumerating every vertex subset of size at least four and
/// testing whether it induces a cycle.
pub fn brute_is_chordal(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > BRUTE_CHORDAL_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_CHORDAL_LIMIT,
        });
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() >= 4 && induces_cycle(&adj, mask) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn induces_cycle(adj: &[u32], mask: u32) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (adj[v] & mask).count_ones() != 2 {
            return false;
        }
    }
    // 2-regular: a cycle iff connected.
    let start = mask.trailing_zeros();
    let mut reached = 1u32 << start;
    loop {
        let mut next = reached;
        let mut r = reached;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            next |= adj[v] & mask;
        }
        if next == reached {
            return reached == mask;
        }
        reached = next;
    }
}

pub const BRUTE_ALL_PAIRS_LIMIT: usize = 512;

/// All-pairs distances without per-source BFS: every vertex keeps the bitset
/// of vertices within radius `r`, and each round sets
/// `R_{r+1}(u) = R_r(u) ∪ ⋃_{w ∈ N(u)} R_r(w)` for all `u` at once.
pub fn brute_all_pairs(g: &Graph) -> Result<DistanceOracle<'_>> {
    let n = g.n();
    if n > BRUTE_ALL_PAIRS_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_ALL_PAIRS_LIMIT,
        });
    }
    let words = n.div_ceil(64);
    let mut reach: Vec<Vec<u64>> = (0..n)
        .map(|u| {
            let mut row = vec![0u64; words];
            row[u / 64] |= 1 << (u % 64);
            row
        })
        .collect();
    let mut dist: Vec<Vec<Distance>> = (0..n)
        .map(|u| {
            let mut row = vec![None; n];
            row[u] = Some(0);
            row
        })
        .collect();
    let mut radius = 0u32;
    loop {
        radius += 1;
        let next: Vec<Vec<u64>> = (0..n)
            .map(|u| {
                let mut row = reach[u].clone();
                for &w in g.neighbors(u) {
                    for (a, b) in row.iter_mut().zip(&reach[w]) {
                        *a |= b;
                    }
                }
                row
            })
            .collect();
        let mut changed = false;
        for u in 0..n {
            for (word, (new, old)) in next[u].iter().zip(&reach[u]).enumerate() {
                let mut fresh = new & !old;
                while fresh != 0 {
                    let v = word * 64 + fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    dist[u][v] = Some(radius);
                    changed = true;
                }
            }
        }
        reach = next;
        if !changed {
            break;
        }
    }
    Ok(DistanceOracle::from_rows(g, dist))
}

/// Every labelled graph on `n` vertices (`2^(n choose 2)` of them).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 64, "too many vertices for exhaustive enumeration");
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edge_list(n, edges).unwrap()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};
    use crate::graph::{bfs_distances, exact_distance_graph};

    #[test]
    fn proper_checks() {
        let k3 = complete(3);
        assert_eq!(verify_proper(&k3, &[0, 1, 2]).unwrap(), Verdict::Proper);
        assert_eq!(
            verify_proper(&k3, &[0, 0, 1]).unwrap(),
            Verdict::Conflict(0, 1)
        );
        assert!(verify_proper(&Graph::empty(4), &[0; 4]).unwrap().is_ok());
        assert!(matches!(
            verify_proper(&k3, &[0, 1]),
            Err(Error::ColoringSize { n: 3, found: 2 })
        ));
    }

    #[test]
    fn chromatic_numbers() {
        let lim = DEFAULT_CHROMATIC_LIMIT;
        assert_eq!(brute_chromatic_number(&cycle(5).unwrap(), lim).unwrap(), 3);
        assert_eq!(brute_chromatic_number(&complete(4), lim).unwrap(), 4);
        let leaves = exact_distance_graph(&star(7).unwrap(), 2).unwrap();
        assert_eq!(brute_chromatic_number(&leaves, lim).unwrap(), 6);
        assert_eq!(brute_chromatic_number(&Graph::empty(0), lim).unwrap(), 0);
        assert!(matches!(
            brute_chromatic_number(&path(17).unwrap(), lim),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn petersen_needs_three() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edge_list(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(brute_chromatic_number(&g, 16).unwrap(), 3);
    }

    #[test]
    fn brute_chordality() {
        assert!(!brute_is_chordal(&cycle(4).unwrap()).unwrap());
        let k4_minus = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        assert!(brute_is_chordal(&k4_minus).unwrap());
        let c6_chord = Graph::from_edge_list(
            6,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)],
        )
        .unwrap();
        assert!(!brute_is_chordal(&c6_chord).unwrap());
        assert!(brute_is_chordal(&path(13).unwrap()).is_err());
    }

    #[test]
    fn all_pairs_matches_bfs() {
        let p5 = path(5).unwrap();
        let ap = brute_all_pairs(&p5).unwrap();
        for u in p5.vertices() {
            assert_eq!(&*ap.row(u), &bfs_distances(&p5, u)[..]);
        }
        let two = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        let ap = brute_all_pairs(&two).unwrap();
        assert_eq!(ap.dist(0, 3), None);
        let k5 = complete(5);
        let ap = brute_all_pairs(&k5).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(ap.dist(u, v), Some(u32::from(u != v)));
            }
        }
    }

    #[test]
    fn enumerates_all_small_graphs() {
        assert_eq!(all_graphs(0).count(), 1);
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_graphs(4).filter(|g| g.m() == 6).count(), 1);
    }
}
