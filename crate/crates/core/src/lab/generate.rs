use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

use super::LabError;

/// Largest order for exhaustive labeled enumeration (2^28 graphs at n = 8
/// is already out of reach for a test run).
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Vertex pairs in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), ...`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// The labeled graph on `n` vertices whose edge set is `mask`, with bit `i`
/// standing for the `i`-th pair in graph6 order.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, by edge mask.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn len(&self) -> u64 {
        self.end - self.next
    }

    pub fn is_empty(&self) -> bool {
        self.next == self.end
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::from_edges(self.n, edges).expect("pairs are in range"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.len() as usize;
        (len, Some(len))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs, LabError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(LabError::EnumerationTooLarge(n));
    }
    let pairs = pairs(n);
    Ok(LabeledGraphs {
        n,
        end: 1 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// Erdős–Rényi `G(n, p)`, reproducible from `seed`.
pub fn sample_random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, LabError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(LabError::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .filter(|_| rng.random_bool(p))
        .collect();
    Ok(Graph::from_edges(n, edges).expect("pairs are in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::encode_graph6;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_labeled_graphs(n).unwrap().count())
            .collect();
        assert_eq!(counts, [1, 1, 2, 8, 64]);
        assert!(enumerate_labeled_graphs(8).is_err());
    }

    #[test]
    fn mask_matches_graph6_bits() {
        // graph6 for n = 3 stores pairs (0,1), (0,2), (1,2) in that order
        assert_eq!(encode_graph6(&labeled_graph(3, 0b001)), "B_");
        assert_eq!(encode_graph6(&labeled_graph(3, 0b111)), "Bw");
        let all: Vec<Graph> = enumerate_labeled_graphs(3).unwrap().collect();
        assert_eq!(all[5], labeled_graph(3, 5));
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a = sample_random_graph(12, 0.4, 7).unwrap();
        assert_eq!(a, sample_random_graph(12, 0.4, 7).unwrap());
        assert_eq!(sample_random_graph(6, 0.0, 1).unwrap().m(), 0);
        assert_eq!(sample_random_graph(6, 1.0, 1).unwrap().m(), 15);
        assert!(sample_random_graph(6, 1.5, 1).is_err());
        assert!(sample_random_graph(6, f64::NAN, 1).is_err());
    }
}
