//! Critical independent sets.
//!
//! For a vertex set `A` write `f(A) = |A| - |N(A)|`. The critical difference
//! `d(G)` is the maximum of `f` over independent sets, and the critical
//! independence number `α'(G)` is the largest size of an independent set
//! attaining it.
//!
//! Over arbitrary sets, `max f` is the deficiency of the bipartite graph
//! joining a left and a right copy of `V` along the edges of `G` (the
//! bipartite double cover), i.e. `n - ν`. Removing `A ∩ N(A)` from any set
//! never lowers `f`, so the maximum over independent sets is the same number.
//!
//! `α'` is built by committing vertices in index order. The running state is
//! a committed independent set `F` and a rejected set `X`; a vertex is kept
//! when some critical independent set still contains `F + v` and avoids `X`.
//! That test is again a deficiency: with `W` the undecided vertices outside
//! `N(F)`, the best `f` over `F ⊆ A ⊆ F ∪ W` equals
//! `|F| - |N(F)| + deficiency(W → V \ N(F))`. Because every critical
//! independent set extends to a maximum one, the greedy result has maximum
//! cardinality.

use crate::graph::{Graph, VertexSet};

use super::matching::DeficiencyMatcher;
use super::SolverError;

/// `d(G)` with an independent witness attaining it.
pub fn critical_difference(g: &Graph) -> (usize, VertexSet) {
    let matcher = DeficiencyMatcher::new(g);
    let d = matcher.deficiency();
    let deficient: VertexSet = matcher.deficient_set().into();
    // drop members with a neighbor inside the set; f does not decrease
    let witness: VertexSet = deficient
        .iter()
        .filter(|&v| g.neighbors(v).iter().all(|&u| !deficient.contains(u)))
        .collect();
    (d, witness)
}

#[derive(Clone)]
struct Commitment<'g> {
    g: &'g Graph,
    matcher: DeficiencyMatcher<'g>,
    committed: Vec<bool>,
    committed_count: usize,
    /// `|N(F)|`
    closed_off: usize,
}

impl<'g> Commitment<'g> {
    fn new(g: &'g Graph) -> Self {
        Self {
            g,
            matcher: DeficiencyMatcher::new(g),
            committed: vec![false; g.n()],
            committed_count: 0,
            closed_off: 0,
        }
    }

    /// Best `f` reachable from the current state.
    fn value(&self) -> isize {
        self.committed_count as isize - self.closed_off as isize
            + self.matcher.deficiency() as isize
    }

    fn is_undecided(&self, v: usize) -> bool {
        self.matcher.is_left_active(v)
    }

    /// Moves `v` into `F`; its neighbors leave both the undecided pool and
    /// the right side.
    fn commit(&mut self, v: usize) {
        self.matcher.deactivate_left(v);
        for &u in self.g.neighbors(v) {
            self.matcher.deactivate_left(u);
            if self.matcher.is_right_active(u) {
                self.matcher.deactivate_right(u);
                self.closed_off += 1;
            }
        }
        self.matcher.augment();
        self.committed[v] = true;
        self.committed_count += 1;
    }

    fn reject(&mut self, v: usize) {
        self.matcher.deactivate_left(v);
        self.matcher.augment();
    }
}

/// `α'(G)` with a maximum critical independent set as witness. Ties are
/// resolved toward lower vertex indices.
pub fn critical_independence_number(g: &Graph) -> (usize, VertexSet) {
    let mut state = Commitment::new(g);
    let target = state.value();
    for v in 0..g.n() {
        if !state.is_undecided(v) {
            continue;
        }
        let mut trial = state.clone();
        trial.commit(v);
        if trial.value() == target {
            state = trial;
        } else {
            state.reject(v);
            debug_assert_eq!(state.value(), target);
        }
    }
    let witness: VertexSet = (0..g.n()).filter(|&v| state.committed[v]).collect();
    (witness.len(), witness)
}

/// Result of the exhaustive search over independent sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalOracle {
    pub difference: usize,
    pub alpha_crit: usize,
    /// Lexicographically first independent set attaining both values.
    pub witness: VertexSet,
}

struct OracleSearch {
    nbr_masks: Vec<u32>,
    best: (isize, usize),
    best_set: u32,
}

impl OracleSearch {
    fn visit(&mut self, next: usize, chosen: u32, blocked: u32, covered: u32) {
        let key = (
            chosen.count_ones() as isize - covered.count_ones() as isize,
            chosen.count_ones() as usize,
        );
        if key > self.best {
            self.best = key;
            self.best_set = chosen;
        }
        for v in next..self.nbr_masks.len() {
            if blocked & (1 << v) == 0 {
                let nbrs = self.nbr_masks[v];
                self.visit(v + 1, chosen | 1 << v, blocked | nbrs, covered | nbrs);
            }
        }
    }
}

/// Exhaustive `d(G)` and `α'(G)` over all independent sets. Independent of
/// the matching machinery, for cross-checking.
pub fn critical_oracle(g: &Graph, limit: usize) -> Result<CriticalOracle, SolverError> {
    SolverError::check(
        "critical independence oracle",
        g.n(),
        limit.min(ORACLE_HARD_LIMIT),
    )?;
    let nbr_masks = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let mut search = OracleSearch {
        nbr_masks,
        best: (0, 0),
        best_set: 0,
    };
    search.visit(0, 0, 0, 0);
    let witness = (0..g.n())
        .filter(|&v| search.best_set & (1 << v) != 0)
        .collect();
    Ok(CriticalOracle {
        difference: search.best.0 as usize,
        alpha_crit: search.best.1,
        witness,
    })
}

/// The oracle uses 32-bit masks.
const ORACLE_HARD_LIMIT: usize = 32;

/// Brute-force `α'(G)`.
pub fn critical_independence_number_oracle(g: &Graph, limit: usize) -> Result<usize, SolverError> {
    critical_oracle(g, limit).map(|o| o.alpha_crit)
}
