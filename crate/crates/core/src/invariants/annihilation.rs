use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, VertexSet};

/// The annihilation number and a witness.
///
/// `a(G)` is the largest `k` such that the `k` smallest degrees sum to at
/// most `m`. The witness takes vertices by increasing `(degree, index)`, so
/// ties go to the lowest index.
pub fn annihilation_number(g: &Graph) -> (usize, VertexSet) {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut budget = g.m();
    let mut taken = Vec::new();
    for v in order {
        match budget.checked_sub(g.degree(v)) {
            Some(rest) => {
                budget = rest;
                taken.push(v);
            }
            None => break,
        }
    }
    (taken.len(), taken.into())
}

/// True iff the degrees of `s` sum to at most `m`.
pub fn is_annihilating_set(g: &Graph, s: &VertexSet) -> Result<bool, GraphError> {
    Ok(g.degree_sum(s)? <= g.m())
}

/// Which annihilating-set labels apply to a vertex set.
///
/// `maximal` and `maximum` are evaluated independently: a set can be
/// maximum-cardinality without being inclusion-maximal, and the reverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatingStatus {
    pub annihilating: bool,
    /// No single outside vertex can be added keeping the degree sum `<= m`.
    pub maximal: bool,
    /// Annihilating with `|s| = a(G)`.
    pub maximum: bool,
}

impl AnnihilatingStatus {
    /// The strongest label, with maximum ranked above maximal.
    pub fn label(&self) -> &'static str {
        match (self.annihilating, self.maximum, self.maximal) {
            (false, _, _) => "NotAnnihilating",
            (true, true, _) => "MaximumAnnihilating",
            (true, false, true) => "MaximalAnnihilating",
            (true, false, false) => "Annihilating",
        }
    }
}

pub fn annihilating_set_status(g: &Graph, s: &VertexSet) -> Result<AnnihilatingStatus, GraphError> {
    let sum = g.degree_sum(s)?;
    let annihilating = sum <= g.m();
    let min_outside = (0..g.n())
        .filter(|&v| !s.contains(v))
        .map(|v| g.degree(v))
        .min();
    let maximal = annihilating && min_outside.is_none_or(|d| sum + d > g.m());
    let maximum = annihilating && s.len() == annihilation_number(g).0;
    Ok(AnnihilatingStatus {
        annihilating,
        maximal,
        maximum,
    })
}
