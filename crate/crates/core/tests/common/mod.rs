//! Brute-force oracles shared by the integration tests. None of them touch
//! the solvers under test.
#![allow(dead_code)]

use annihilator::Graph;

pub fn neighbor_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
        .collect()
}

/// Independence number by checking every vertex subset.
pub fn brute_alpha(g: &Graph) -> usize {
    assert!(g.n() <= 20);
    let nbrs = neighbor_masks(g);
    (0u32..1 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || nbrs[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Matching number by exhaustive branching on the lowest free vertex.
pub fn brute_matching(g: &Graph) -> usize {
    fn go(nbrs: &[u32], used: u32) -> usize {
        let Some(v) = (0..nbrs.len()).find(|&v| used >> v & 1 == 0) else {
            return 0;
        };
        let used = used | 1 << v;
        let mut best = go(nbrs, used);
        let mut free = nbrs[v] & !used;
        while free != 0 {
            let u = free.trailing_zeros();
            free &= free - 1;
            best = best.max(1 + go(nbrs, used | 1 << u));
        }
        best
    }
    go(&neighbor_masks(g), 0)
}

/// Annihilation number straight from the definition: the largest `k` whose
/// `k` smallest degrees sum to at most `m`.
pub fn brute_annihilation(g: &Graph) -> usize {
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    (0..=g.n())
        .rev()
        .find(|&k| degrees[..k].iter().sum::<usize>() <= g.m())
        .unwrap()
}

/// `(d, α')` by checking every independent vertex subset.
pub fn brute_critical(g: &Graph) -> (usize, usize) {
    assert!(g.n() <= 20);
    let nbrs = neighbor_masks(g);
    let mut best = (0isize, 0usize);
    for s in 0u32..1 << g.n() {
        let members = (0..g.n()).filter(|&v| s >> v & 1 == 1);
        if members.clone().any(|v| nbrs[v] & s != 0) {
            continue;
        }
        let covered = members.fold(0u32, |m, v| m | nbrs[v]);
        let key = (
            s.count_ones() as isize - covered.count_ones() as isize,
            s.count_ones() as usize,
        );
        best = best.max(key);
    }
    (best.0 as usize, best.1)
}

/// Triangle plus one isolated vertex.
pub fn c3_plus_k1() -> Graph {
    Graph::cycle(3).disjoint_union(&Graph::empty(1))
}
