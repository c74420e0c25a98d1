//! Exact maximum independent sets by branch and bound.
//!
//! Branching picks a vertex of maximum degree inside the candidate set;
//! candidates of degree 0 or 1 are taken without branching. The bound is a
//! greedy clique cover of the candidates, since an independent set meets each
//! clique at most once.

use crate::bits::Bits;
use crate::graph::{Graph, VertexSet};

use super::SolverError;

pub(crate) fn neighbor_bits(g: &Graph) -> Vec<Bits> {
    (0..g.n())
        .map(|v| {
            let mut b = Bits::empty(g.n());
            for &u in g.neighbors(v) {
                b.insert(u);
            }
            b
        })
        .collect()
}

fn clique_cover_bound(cand: &Bits, nbrs: &[Bits]) -> usize {
    let mut rest = cand.clone();
    let mut cliques = 0;
    while let Some(v) = rest.first() {
        rest.remove(v);
        let mut common = rest.clone();
        common.intersect_with(&nbrs[v]);
        while let Some(u) = common.first() {
            rest.remove(u);
            common.remove(u);
            common.intersect_with(&nbrs[u]);
        }
        cliques += 1;
    }
    cliques
}

struct MaxSearch<'a> {
    nbrs: &'a [Bits],
    current: Vec<usize>,
    best: Vec<usize>,
}

impl MaxSearch<'_> {
    fn take(&mut self, cand: &mut Bits, v: usize) {
        self.current.push(v);
        cand.remove(v);
        cand.difference_with(&self.nbrs[v]);
    }

    fn run(&mut self, mut cand: Bits) {
        let depth = self.current.len();
        loop {
            let Some(v) = cand
                .iter()
                .find(|&v| cand.intersection_count(&self.nbrs[v]) <= 1)
            else {
                break;
            };
            self.take(&mut cand, v);
        }

        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
        } else if self.current.len() + clique_cover_bound(&cand, self.nbrs) > self.best.len() {
            let pivot = cand
                .iter()
                .max_by_key(|&v| (cand.intersection_count(&self.nbrs[v]), std::cmp::Reverse(v)))
                .expect("candidate set is non-empty");

            let mut with = cand.clone();
            self.take(&mut with, pivot);
            self.run(with);
            self.current.pop();

            cand.remove(pivot);
            self.run(cand);
        }
        self.current.truncate(depth);
    }
}

/// `α(G)` with a maximum independent set as witness.
pub fn independence_number_exact(
    g: &Graph,
    limit: usize,
) -> Result<(usize, VertexSet), SolverError> {
    SolverError::check("exact independence number", g.n(), limit)?;
    let nbrs = neighbor_bits(g);
    let mut search = MaxSearch {
        nbrs: &nbrs,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.run(Bits::full(g.n()));
    let alpha = search.best.len();
    Ok((alpha, search.best.into()))
}

fn enumerate_sized(
    nbrs: &[Bits],
    cand: Bits,
    target: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<VertexSet>,
) {
    if current.len() == target {
        out.push(current.iter().copied().collect());
        return;
    }
    if current.len() + clique_cover_bound(&cand, nbrs) < target {
        return;
    }
    let Some(v) = cand.first() else { return };
    let mut with = cand.clone();
    with.remove(v);
    with.difference_with(&nbrs[v]);
    current.push(v);
    enumerate_sized(nbrs, with, target, current, out);
    current.pop();

    let mut without = cand;
    without.remove(v);
    enumerate_sized(nbrs, without, target, current, out);
}

/// Every maximum independent set, in lexicographic order.
pub fn maximum_independent_sets(g: &Graph, limit: usize) -> Result<Vec<VertexSet>, SolverError> {
    SolverError::check("maximum independent set enumeration", g.n(), limit)?;
    let (alpha, _) = independence_number_exact(g, limit)?;
    let nbrs = neighbor_bits(g);
    let mut out = Vec::new();
    enumerate_sized(&nbrs, Bits::full(g.n()), alpha, &mut Vec::new(), &mut out);
    Ok(out)
}
