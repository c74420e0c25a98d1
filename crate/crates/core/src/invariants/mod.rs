//! The invariants: independence number `α`, annihilation number `a`,
//! critical difference `d`, critical independence number `α'` and matching
//! number `μ`, each returned together with a certifying witness.
//!
//! `a`, `d`, `α'` and `μ` are polynomial. `α` uses an exact exponential
//! solver that refuses graphs above a vertex cap (see [`SolverLimits`]).

mod annihilation;
mod critical;
mod independence;
mod matching;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use annihilation::{
    annihilating_set_status, annihilation_number, is_annihilating_set, AnnihilatingStatus,
};
pub use critical::{
    critical_difference, critical_independence_number, critical_independence_number_oracle,
    critical_oracle, CriticalOracle,
};
pub use independence::{independence_number_exact, maximum_independent_sets};
pub use matching::{maximum_matching, Matching};

/// Environment variable that overrides [`SolverLimits::exact`].
pub const SOLVER_LIMIT_ENV: &str = "ANNIHILATOR_SOLVER_LIMIT";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("{what} is limited to {limit} vertices, graph has {n}")]
    LimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
}

impl SolverError {
    pub(crate) fn check(what: &'static str, n: usize, limit: usize) -> Result<(), SolverError> {
        if n > limit {
            Err(SolverError::LimitExceeded { what, n, limit })
        } else {
            Ok(())
        }
    }
}

/// Vertex caps for the exponential routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverLimits {
    /// Exact independence number.
    pub exact: usize,
    /// Brute-force critical independence oracle.
    pub oracle: usize,
    /// Listing every maximum independent set.
    pub enumeration: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        Self {
            exact: 64,
            oracle: 20,
            enumeration: 14,
        }
    }
}

impl SolverLimits {
    /// Defaults, with `exact` taken from `ANNIHILATOR_SOLVER_LIMIT` when it
    /// holds a number.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(exact) = std::env::var(SOLVER_LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.exact = exact;
        }
        limits
    }
}

/// `α(G) + μ(G) = n`.
pub fn is_koenig_egervary(g: &Graph, limits: &SolverLimits) -> Result<bool, SolverError> {
    let (alpha, _) = independence_number_exact(g, limits.exact)?;
    Ok(alpha + maximum_matching(g).len() == g.n())
}

/// Certificates for the values in an [`InvariantReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub alpha: Option<VertexSet>,
    pub annihilation: VertexSet,
    pub alpha_crit: Option<VertexSet>,
    pub crit_diff: Option<VertexSet>,
    pub matching: Vec<(usize, usize)>,
}

/// Every invariant of one graph. Fields that needed an exponential routine
/// beyond its cap are `None`, with the reason in `diagnostics`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub alpha: Option<usize>,
    pub annihilation: usize,
    pub alpha_crit: Option<usize>,
    pub mu: usize,
    pub crit_diff: Option<usize>,
    pub koenig_egervary: Option<bool>,
    pub degree_sequence: Vec<usize>,
    pub witnesses: Witnesses,
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub limits: SolverLimits,
    /// Take `d` and `α'` from the exhaustive oracle instead of matchings.
    pub oracle: bool,
}

pub fn full_report(g: &Graph) -> InvariantReport {
    full_report_with(g, &ReportOptions::default())
}

pub fn full_report_with(g: &Graph, options: &ReportOptions) -> InvariantReport {
    let mut diagnostics = Vec::new();
    let (annihilation, annihilation_witness) = annihilation_number(g);
    let matching = maximum_matching(g);
    let mu = matching.len();

    let (alpha, alpha_witness) = match independence_number_exact(g, options.limits.exact) {
        Ok((alpha, witness)) => (Some(alpha), Some(witness)),
        Err(e) => {
            diagnostics.push(e.to_string());
            (None, None)
        }
    };

    let (crit_diff, crit_witness, alpha_crit, alpha_crit_witness) = if options.oracle {
        match critical_oracle(g, options.limits.oracle) {
            Ok(o) => (
                Some(o.difference),
                Some(o.witness.clone()),
                Some(o.alpha_crit),
                Some(o.witness),
            ),
            Err(e) => {
                diagnostics.push(e.to_string());
                (None, None, None, None)
            }
        }
    } else {
        let (d, d_witness) = critical_difference(g);
        let (alpha_crit, witness) = critical_independence_number(g);
        (Some(d), Some(d_witness), Some(alpha_crit), Some(witness))
    };

    if let (Some(alpha), Some(alpha_crit)) = (alpha, alpha_crit) {
        debug_assert!(alpha_crit <= alpha && alpha <= annihilation);
    }

    InvariantReport {
        n: g.n(),
        m: g.m(),
        alpha,
        annihilation,
        alpha_crit,
        mu,
        crit_diff,
        koenig_egervary: alpha.map(|a| a + mu == g.n()),
        degree_sequence: g.degree_sequence(),
        witnesses: Witnesses {
            alpha: alpha_witness,
            annihilation: annihilation_witness,
            alpha_crit: alpha_crit_witness,
            crit_diff: crit_witness,
            matching: matching.edges(),
        },
        diagnostics,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koenig_egervary_examples() {
        let limits = SolverLimits::default();
        assert!(is_koenig_egervary(&Graph::path(4), &limits).unwrap());
        assert!(!is_koenig_egervary(&Graph::cycle(3), &limits).unwrap());
        assert!(is_koenig_egervary(&Graph::empty(0), &limits).unwrap());
    }

    #[test]
    fn degenerate_graphs() {
        let r = full_report(&Graph::empty(0));
        assert_eq!(
            (r.alpha, r.annihilation, r.alpha_crit, r.mu, r.crit_diff),
            (Some(0), 0, Some(0), 0, Some(0))
        );
        let r = full_report(&Graph::empty(1));
        assert_eq!(
            (r.alpha, r.annihilation, r.alpha_crit, r.mu, r.crit_diff),
            (Some(1), 1, Some(1), 0, Some(1))
        );
    }

    #[test]
    fn limits_mark_fields_absent() {
        let g = Graph::cycle(70);
        let r = full_report(&g);
        assert_eq!(r.alpha, None);
        assert_eq!(r.koenig_egervary, None);
        assert_eq!(r.mu, 35);
        assert_eq!(r.alpha_crit, Some(35));
        assert_eq!(r.diagnostics.len(), 1);

        let oracle = ReportOptions {
            oracle: true,
            ..Default::default()
        };
        let r = full_report_with(&Graph::cycle(21), &oracle);
        assert_eq!((r.alpha, r.alpha_crit, r.crit_diff), (Some(10), None, None));
        let r = full_report_with(&Graph::cycle(6), &oracle);
        assert_eq!((r.alpha_crit, r.crit_diff), (Some(3), Some(0)));
    }

    #[test]
    fn limits_from_env_default() {
        // the variable is not set in the test environment
        if std::env::var(SOLVER_LIMIT_ENV).is_err() {
            assert_eq!(SolverLimits::from_env(), SolverLimits::default());
        }
    }
}
