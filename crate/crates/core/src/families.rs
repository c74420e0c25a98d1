//! Graph families with `α = a` whose critical independence number falls
//! short of `a`, each shipped with the invariant values it is known to have.
//!
//! Labeling convention for cycle-based families: the cycle vertices
//! `v_1, ..., v_{2k+1}` come first (`v_i` is index `i - 1`), followed by any
//! attached vertices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::invariants::InvariantReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter {name} = {value} is below the minimum {min}")]
    ParameterTooSmall {
        name: &'static str,
        value: usize,
        min: usize,
    },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} takes parameters {expected:?}, got {found} values")]
    WrongArity {
        family: &'static str,
        expected: &'static [&'static str],
        found: usize,
    },
}

fn at_least(name: &'static str, value: usize, min: usize) -> Result<(), FamilyError> {
    if value < min {
        Err(FamilyError::ParameterTooSmall { name, value, min })
    } else {
        Ok(())
    }
}

/// Invariant values that are known for a family member. Values not known in
/// closed form stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedInvariants {
    pub n: Option<usize>,
    pub alpha: Option<usize>,
    pub annihilation: Option<usize>,
    pub alpha_crit: Option<usize>,
    pub mu: Option<usize>,
    pub koenig_egervary: Option<bool>,
    pub degree_sequence: Option<Vec<usize>>,
}

/// One predicted value that disagrees with a computed report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub field: &'static str,
    pub predicted: String,
    pub computed: String,
}

impl PredictedInvariants {
    /// Compares every predicted field with `report`. A field the report could
    /// not compute counts as a mismatch.
    pub fn compare(&self, report: &InvariantReport) -> Vec<Mismatch> {
        fn check<T: PartialEq + std::fmt::Debug>(
            out: &mut Vec<Mismatch>,
            field: &'static str,
            predicted: &Option<T>,
            computed: Option<&T>,
        ) {
            if let Some(p) = predicted {
                if computed != Some(p) {
                    out.push(Mismatch {
                        field,
                        predicted: format!("{p:?}"),
                        computed: computed.map_or("unavailable".into(), |c| format!("{c:?}")),
                    });
                }
            }
        }
        let mut out = Vec::new();
        check(&mut out, "n", &self.n, Some(&report.n));
        check(&mut out, "alpha", &self.alpha, report.alpha.as_ref());
        check(
            &mut out,
            "annihilation",
            &self.annihilation,
            Some(&report.annihilation),
        );
        check(
            &mut out,
            "alpha_crit",
            &self.alpha_crit,
            report.alpha_crit.as_ref(),
        );
        check(&mut out, "mu", &self.mu, Some(&report.mu));
        check(
            &mut out,
            "koenig_egervary",
            &self.koenig_egervary,
            report.koenig_egervary.as_ref(),
        );
        check(
            &mut out,
            "degree_sequence",
            &self.degree_sequence,
            Some(&report.degree_sequence),
        );
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub graph: Graph,
    pub name: &'static str,
    pub parameters: Vec<(&'static str, usize)>,
    pub predicted: PredictedInvariants,
    pub description: &'static str,
}

impl FamilyInstance {
    fn new(
        graph: Graph,
        name: &'static str,
        parameters: Vec<(&'static str, usize)>,
        predicted: PredictedInvariants,
        description: &'static str,
    ) -> Self {
        Self {
            graph,
            name,
            parameters,
            predicted,
            description,
        }
    }
}

/// A triangle plus `t` isolated vertices (indices `3..t+3`).
pub fn c3_plus_singletons(t: usize) -> Result<FamilyInstance, FamilyError> {
    at_least("t", t, 1)?;
    let graph = Graph::cycle(3).disjoint_union(&Graph::empty(t));
    Ok(FamilyInstance::new(
        graph,
        "c3-singletons",
        vec![("t", t)],
        PredictedInvariants {
            n: Some(t + 3),
            alpha: Some(t + 1),
            annihilation: Some(t + 1),
            alpha_crit: Some(t),
            ..Default::default()
        },
        "triangle with t isolated vertices",
    ))
}

/// A 5-cycle `u_1..u_5` (indices 0..5) with the disjoint chords `u_1u_3` and
/// `u_2u_4`, plus an isolated vertex 5.
pub fn c5_two_chords_plus_singleton() -> FamilyInstance {
    let graph = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)])
        .expect("fixed edge list is valid");
    let degree_sequence = vec![3, 3, 3, 3, 2, 0];
    assert_eq!(graph.degree_sequence(), degree_sequence);
    FamilyInstance::new(
        graph,
        "c5-chords-singleton",
        Vec::new(),
        PredictedInvariants {
            n: Some(6),
            alpha: Some(3),
            annihilation: Some(3),
            alpha_crit: Some(1),
            degree_sequence: Some(degree_sequence),
            ..Default::default()
        },
        "5-cycle with two disjoint chords and an isolated vertex",
    )
}

/// Index of the hub `c` attached to `v_{2k+1}` in [`chorded_cycle_star`];
/// the leaves `x_1`, `x_2` follow it.
pub fn chorded_cycle_star_hub(k: usize) -> usize {
    2 * k + 1
}

/// The odd cycle `v_1..v_{2k+1}` with chords `v_i v_{i+k}` for `i = 1..=k`,
/// and a path `x_1 - c - x_2` whose middle vertex `c` is joined to
/// `v_{2k+1}`. Every vertex has degree 3 except `x_1` and `x_2`.
pub fn chorded_cycle_star(k: usize) -> Result<FamilyInstance, FamilyError> {
    at_least("k", k, 2)?;
    let cycle_len = 2 * k + 1;
    let hub = chorded_cycle_star_hub(k);
    let (x1, x2) = (hub + 1, hub + 2);
    let edges = (0..cycle_len)
        .map(|i| (i, (i + 1) % cycle_len))
        .chain((0..k).map(|i| (i, i + k)))
        .chain([(cycle_len - 1, hub), (hub, x1), (hub, x2)]);
    let graph = Graph::from_edges(2 * k + 4, edges).expect("construction stays in range");

    let mut degree_sequence = vec![3; 2 * k + 2];
    degree_sequence.extend([1, 1]);
    Ok(FamilyInstance::new(
        graph,
        "chorded-cycle-star",
        vec![("k", k)],
        PredictedInvariants {
            n: Some(2 * k + 4),
            alpha: Some(k + 2),
            annihilation: Some(k + 2),
            alpha_crit: Some(2),
            mu: Some(k + 1),
            koenig_egervary: Some(false),
            degree_sequence: Some(degree_sequence),
        },
        "odd cycle with half-length chords and a pendant three-vertex path attached by its center",
    ))
}

/// The explicit independent set of size `k + 2` in [`chorded_cycle_star`].
///
/// Even `k`: `{x_1, x_2, v_{2k+1}, v_2, v_4, ..., v_k, v_{k+3}, v_{k+5}, ..., v_{2k-1}}`.
/// Odd `k`: `{x_1, x_2, v_{2k+1}, v_2, v_4, ..., v_{k-1}, v_{k+1}, v_{k+3}, ..., v_{2k-2}}`.
pub fn chorded_cycle_star_witness(k: usize) -> Result<VertexSet, FamilyError> {
    at_least("k", k, 2)?;
    let v = |i: usize| i - 1;
    let hub = chorded_cycle_star_hub(k);
    let mut members = vec![hub + 1, hub + 2, v(2 * k + 1)];
    if k.is_multiple_of(2) {
        members.extend((2..=k).step_by(2).map(v));
        members.extend((k + 3..=2 * k - 1).step_by(2).map(v));
    } else {
        members.extend((2..=k - 1).step_by(2).map(v));
        members.extend((k + 1..=2 * k - 2).step_by(2).map(v));
    }
    Ok(members.into())
}

/// The disjoint union of `C_{2k+1}` and a path on `2l + 1` vertices.
///
/// Only `α' = l + 1` is recorded; the remaining values are computed.
pub fn odd_cycle_plus_odd_path(k: usize, l: usize) -> Result<FamilyInstance, FamilyError> {
    at_least("k", k, 1)?;
    at_least("l", l, 1)?;
    let graph = Graph::cycle(2 * k + 1).disjoint_union(&Graph::path(2 * l + 1));
    Ok(FamilyInstance::new(
        graph,
        "odd-cycle-odd-path",
        vec![("k", k), ("l", l)],
        PredictedInvariants {
            alpha_crit: Some(l + 1),
            ..Default::default()
        },
        "odd cycle disjoint from a path on an odd number of vertices",
    ))
}

/// Names accepted by [`build_family`], with their parameter names.
pub const FAMILIES: &[(&str, &[&str])] = &[
    ("c3-singletons", &["t"]),
    ("c5-chords-singleton", &[]),
    ("chorded-cycle-star", &["k"]),
    ("odd-cycle-odd-path", &["k", "l"]),
];

/// Builds a family member by name, with parameters in declaration order.
pub fn build_family(name: &str, params: &[usize]) -> Result<FamilyInstance, FamilyError> {
    let (family, expected) = FAMILIES
        .iter()
        .find(|(f, _)| *f == name)
        .ok_or_else(|| FamilyError::UnknownFamily(name.to_string()))?;
    if params.len() != expected.len() {
        return Err(FamilyError::WrongArity {
            family,
            expected,
            found: params.len(),
        });
    }
    match *family {
        "c3-singletons" => c3_plus_singletons(params[0]),
        "c5-chords-singleton" => Ok(c5_two_chords_plus_singleton()),
        "chorded-cycle-star" => chorded_cycle_star(params[0]),
        _ => odd_cycle_plus_odd_path(params[0], params[1]),
    }
}
