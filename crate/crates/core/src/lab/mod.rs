//! Mechanical checks of the statements relating `α`, `a` and `α'`, plus the
//! graph generators and the search driver that runs them over many graphs.
//!
//! Every check evaluates one statement on one graph and answers `Holds`,
//! `NotApplicable` (hypothesis or antecedent not met) or `Violated`.
//! A `Violated` verdict carries [`Evidence`] with every value needed to
//! re-verify it by hand.
//!
//! The recurring right-hand side is the *critical condition*:
//!
//! * if `a ≥ n/2`: `α'(G) = a(G)`;
//! * if `a = (n-1)/2`: `α'(G - v) = a(G)` for some vertex `v`.
//!
//! Since `a ≥ ⌊n/2⌋` always, exactly one case applies to every graph.

mod generate;
mod search;

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Claw, Graph, VertexSet};
use crate::invariants::{
    annihilating_set_status, annihilation_number, critical_independence_number,
    independence_number_exact, maximum_independent_sets, maximum_matching, SolverError,
    SolverLimits,
};

pub use generate::{
    enumerate_labeled_graphs, labeled_graph, sample_random_graph, LabeledGraphs,
    MAX_ENUMERATION_ORDER,
};
pub use search::{
    graph6_lines, run_search, GraphClass, GraphSource, InputError, RandomSpec, SearchOptions,
    SearchReport, Tally, Violation,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LabError {
    #[error("labeled enumeration is limited to n <= {MAX_ENUMERATION_ORDER}, requested {0}")]
    EnumerationTooLarge(usize),
    #[error("edge probability {0} is not in [0, 1]")]
    InvalidProbability(f64),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("could not start worker pool: {0}")]
    WorkerPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// If the critical condition holds then `α = a`.
    #[serde(rename = "LEMMA_IF")]
    LemmaIf,
    /// If `α = a` then the critical condition holds (false in general).
    #[serde(rename = "THM1_ONLY_IF")]
    Thm1OnlyIf,
    /// Bipartite graphs: `α = a` iff `α' = a`.
    #[serde(rename = "THM4_BIPARTITE")]
    Thm4Bipartite,
    /// Connected claw-free graphs with `a = (n-1)/2` have a vertex `v`
    /// missed by some maximum independent set with `G - v` connected.
    #[serde(rename = "LEMMA5_REMOVABLE")]
    Lemma5Removable,
    /// Connected claw-free graphs: `α = a` iff the critical condition holds.
    #[serde(rename = "THM6_CLAWFREE")]
    Thm6Clawfree,
    /// `a ≥ n/2` and `α = a` imply König–Egerváry and every maximum
    /// independent set is a maximum annihilating set.
    #[serde(rename = "COR3_FORWARD")]
    Cor3Forward,
    /// The converse of [`TheoremId::Cor3Forward`].
    #[serde(rename = "COR3_BACKWARD")]
    Cor3Backward,
    /// `a ≥ n/2` and `α = a` imply König–Egerváry and every maximum
    /// independent set is a maximal annihilating set.
    #[serde(rename = "CONJ34_ONLY_IF")]
    Conj34OnlyIf,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::LemmaIf,
        TheoremId::Thm1OnlyIf,
        TheoremId::Thm4Bipartite,
        TheoremId::Lemma5Removable,
        TheoremId::Thm6Clawfree,
        TheoremId::Cor3Forward,
        TheoremId::Cor3Backward,
        TheoremId::Conj34OnlyIf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::LemmaIf => "LEMMA_IF",
            TheoremId::Thm1OnlyIf => "THM1_ONLY_IF",
            TheoremId::Thm4Bipartite => "THM4_BIPARTITE",
            TheoremId::Lemma5Removable => "LEMMA5_REMOVABLE",
            TheoremId::Thm6Clawfree => "THM6_CLAWFREE",
            TheoremId::Cor3Forward => "COR3_FORWARD",
            TheoremId::Cor3Backward => "COR3_BACKWARD",
            TheoremId::Conj34OnlyIf => "CONJ34_ONLY_IF",
        }
    }

    /// Statements that are proven, so any violation is a bug.
    pub fn expected_to_hold(self) -> bool {
        matches!(
            self,
            TheoremId::LemmaIf
                | TheoremId::Thm4Bipartite
                | TheoremId::Thm6Clawfree
                | TheoremId::Lemma5Removable
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| LabError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Holds,
    NotApplicable,
    Violated,
}

/// Values backing a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub n: usize,
    pub m: usize,
    pub alpha: Option<usize>,
    pub annihilation: usize,
    pub alpha_crit: usize,
    pub mu: Option<usize>,
    pub koenig_egervary: Option<bool>,
    /// A vertex the verdict refers to, e.g. the removed vertex.
    pub vertex: Option<usize>,
    /// Named witness sets.
    pub sets: Vec<(String, VertexSet)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub status: Status,
    pub detail: String,
    pub evidence: Option<Evidence>,
}

/// Which case of the critical condition applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConditionCase {
    /// `2a ≥ n`
    AtLeastHalf,
    /// `2a = n - 1`
    BelowHalf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalCondition {
    pub case: ConditionCase,
    pub holds: bool,
    /// The first `v` with `α'(G - v) = a`, in the second case.
    pub vertex: Option<usize>,
}

/// Right-hand side of the König–Egerváry checks.
#[derive(Debug, Clone, PartialEq, Eq)]
struct KoenigAnnihilating {
    koenig_egervary: bool,
    /// First maximum independent set that is not a maximum (resp. maximal)
    /// annihilating set.
    offender: Option<VertexSet>,
}

impl KoenigAnnihilating {
    fn holds(&self) -> bool {
        self.koenig_egervary && self.offender.is_none()
    }
}

/// Lazily computed invariants of one graph, shared between checks.
pub struct GraphFacts<'g> {
    g: &'g Graph,
    limits: SolverLimits,
    annihilation: OnceCell<(usize, VertexSet)>,
    alpha: OnceCell<Result<(usize, VertexSet), SolverError>>,
    alpha_crit: OnceCell<(usize, VertexSet)>,
    mu: OnceCell<usize>,
    claw: OnceCell<Option<Claw>>,
    connected: OnceCell<bool>,
    bipartite: OnceCell<bool>,
    condition: OnceCell<CriticalCondition>,
    max_sets: OnceCell<Result<Vec<VertexSet>, SolverError>>,
}

impl<'g> GraphFacts<'g> {
    pub fn new(g: &'g Graph, limits: SolverLimits) -> Self {
        Self {
            g,
            limits,
            annihilation: OnceCell::new(),
            alpha: OnceCell::new(),
            alpha_crit: OnceCell::new(),
            mu: OnceCell::new(),
            claw: OnceCell::new(),
            connected: OnceCell::new(),
            bipartite: OnceCell::new(),
            condition: OnceCell::new(),
            max_sets: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn annihilation(&self) -> usize {
        self.annihilation
            .get_or_init(|| annihilation_number(self.g))
            .0
    }

    pub fn alpha(&self) -> Result<usize, SolverError> {
        self.alpha
            .get_or_init(|| independence_number_exact(self.g, self.limits.exact))
            .as_ref()
            .map(|(alpha, _)| *alpha)
            .map_err(Clone::clone)
    }

    pub fn alpha_crit(&self) -> usize {
        self.alpha_crit
            .get_or_init(|| critical_independence_number(self.g))
            .0
    }

    pub fn mu(&self) -> usize {
        *self.mu.get_or_init(|| maximum_matching(self.g).len())
    }

    pub fn claw(&self) -> Option<Claw> {
        *self.claw.get_or_init(|| self.g.find_claw())
    }

    pub fn is_connected(&self) -> bool {
        *self.connected.get_or_init(|| self.g.is_connected())
    }

    pub fn is_bipartite(&self) -> bool {
        *self.bipartite.get_or_init(|| self.g.is_bipartite())
    }

    fn alpha_equals_annihilation(&self) -> Result<bool, SolverError> {
        Ok(self.alpha()? == self.annihilation())
    }

    /// `2a ≥ n`.
    fn annihilation_at_least_half(&self) -> bool {
        2 * self.annihilation() >= self.g.n()
    }

    pub fn critical_condition(&self) -> CriticalCondition {
        *self.condition.get_or_init(|| {
            let a = self.annihilation();
            if self.annihilation_at_least_half() {
                return CriticalCondition {
                    case: ConditionCase::AtLeastHalf,
                    holds: self.alpha_crit() == a,
                    vertex: None,
                };
            }
            debug_assert_eq!(2 * a + 1, self.g.n());
            let vertex = (0..self.g.n()).find(|&v| {
                let reduced = self.g.remove_vertex(v).expect("v is a vertex");
                critical_independence_number(&reduced).0 == a
            });
            CriticalCondition {
                case: ConditionCase::BelowHalf,
                holds: vertex.is_some(),
                vertex,
            }
        })
    }

    fn koenig_egervary(&self) -> Result<bool, SolverError> {
        Ok(self.alpha()? + self.mu() == self.g.n())
    }

    fn maximum_sets(&self) -> Result<&[VertexSet], SolverError> {
        self.max_sets
            .get_or_init(|| maximum_independent_sets(self.g, self.limits.enumeration))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// König–Egerváry, and every maximum independent set is a maximum
    /// (`maximal == false`) or maximal (`maximal == true`) annihilating set.
    /// The enumeration is skipped when the graph is not König–Egerváry.
    fn koenig_annihilating(&self, maximal: bool) -> Result<KoenigAnnihilating, SolverError> {
        if !self.koenig_egervary()? {
            return Ok(KoenigAnnihilating {
                koenig_egervary: false,
                offender: None,
            });
        }
        let mut offender = None;
        for set in self.maximum_sets()? {
            let status = annihilating_set_status(self.g, set).expect("sets come from this graph");
            let ok = if maximal {
                status.maximal
            } else {
                status.maximum
            };
            if !ok {
                offender = Some(set.clone());
                break;
            }
        }
        Ok(KoenigAnnihilating {
            koenig_egervary: true,
            offender,
        })
    }

    /// Everything needed to re-check a verdict by hand.
    pub fn evidence(&self) -> Evidence {
        let n = self.g.n();
        let (annihilation, annihilation_set) = self
            .annihilation
            .get_or_init(|| annihilation_number(self.g))
            .clone();
        let alpha = self.alpha();
        let (alpha_crit, alpha_crit_set) = self
            .alpha_crit
            .get_or_init(|| critical_independence_number(self.g))
            .clone();
        let mu = self.mu();
        let mut sets = vec![
            ("annihilating".to_string(), annihilation_set),
            ("max_critical_independent".to_string(), alpha_crit_set),
        ];
        if let Some(Ok((_, witness))) = self.alpha.get() {
            sets.insert(0, ("max_independent".to_string(), witness.clone()));
        }
        Evidence {
            n,
            m: self.g.m(),
            alpha: alpha.as_ref().ok().copied(),
            annihilation,
            alpha_crit,
            mu: Some(mu),
            koenig_egervary: alpha.ok().map(|a| a + mu == n),
            vertex: self.critical_condition().vertex,
            sets,
        }
    }

    /// Evaluates one statement on this graph.
    pub fn verdict(&self, theorem: TheoremId) -> Result<TheoremVerdict, SolverError> {
        let outcome = match theorem {
            TheoremId::LemmaIf => self.lemma_if()?,
            TheoremId::Thm1OnlyIf => self.thm1_only_if()?,
            TheoremId::Thm4Bipartite => self.thm4_bipartite()?,
            TheoremId::Lemma5Removable => self.lemma5_removable()?,
            TheoremId::Thm6Clawfree => self.thm6_clawfree()?,
            TheoremId::Cor3Forward => self.cor3_forward()?,
            TheoremId::Cor3Backward => self.cor3_backward()?,
            TheoremId::Conj34OnlyIf => self.conj34_only_if()?,
        };
        let (status, detail, extra) = outcome;
        let evidence = (status == Status::Violated).then(|| {
            let mut evidence = self.evidence();
            if let Some((name, set)) = extra {
                evidence.sets.push((name.to_string(), set));
            }
            evidence
        });
        Ok(TheoremVerdict {
            theorem,
            status,
            detail,
            evidence,
        })
    }

    fn lemma_if(&self) -> Result<Outcome, SolverError> {
        let condition = self.critical_condition();
        if !condition.holds {
            return Ok(not_applicable("critical condition fails"));
        }
        Ok(if self.alpha_equals_annihilation()? {
            holds("critical condition holds and alpha = a")
        } else {
            violated("critical condition holds but alpha < a", None)
        })
    }

    fn thm1_only_if(&self) -> Result<Outcome, SolverError> {
        if !self.alpha_equals_annihilation()? {
            return Ok(not_applicable("alpha < a"));
        }
        Ok(if self.critical_condition().holds {
            holds("alpha = a and the critical condition holds")
        } else {
            violated("alpha = a but the critical condition fails", None)
        })
    }

    fn thm4_bipartite(&self) -> Result<Outcome, SolverError> {
        if !self.is_bipartite() {
            return Ok(not_applicable("not bipartite"));
        }
        let a = self.annihilation();
        let left = self.alpha()? == a;
        let right = self.alpha_crit() == a;
        Ok(if left == right {
            holds("alpha = a and alpha' = a agree")
        } else {
            violated(
                "alpha = a and alpha' = a disagree on a bipartite graph",
                None,
            )
        })
    }

    fn lemma5_removable(&self) -> Result<Outcome, SolverError> {
        if !self.is_connected()
            || self.claw().is_some()
            || 2 * self.annihilation() + 1 != self.g.n()
        {
            return Ok(not_applicable("requires connected, claw-free, a = (n-1)/2"));
        }
        let alpha = self.alpha()?;
        for v in 0..self.g.n() {
            let reduced = self.g.remove_vertex(v).expect("v is a vertex");
            if reduced.is_connected()
                && independence_number_exact(&reduced, self.limits.exact)?.0 == alpha
            {
                return Ok(holds(&format!(
                    "vertex {v} is missed by a maximum independent set and G - {v} is connected"
                )));
            }
        }
        Ok(violated("no removable vertex", None))
    }

    fn thm6_clawfree(&self) -> Result<Outcome, SolverError> {
        if !self.is_connected() || self.claw().is_some() {
            return Ok(not_applicable("requires connected and claw-free"));
        }
        let left = self.alpha_equals_annihilation()?;
        let right = self.critical_condition().holds;
        Ok(if left == right {
            holds("alpha = a iff critical condition")
        } else {
            violated("alpha = a and the critical condition disagree", None)
        })
    }

    fn cor3_forward(&self) -> Result<Outcome, SolverError> {
        if !self.annihilation_at_least_half() {
            return Ok(not_applicable("a < n/2"));
        }
        if !self.alpha_equals_annihilation()? {
            return Ok(not_applicable("alpha < a"));
        }
        let rhs = self.koenig_annihilating(false)?;
        Ok(if rhs.holds() {
            holds("alpha = a, Koenig-Egervary, every maximum independent set is a maximum annihilating set")
        } else if !rhs.koenig_egervary {
            violated("alpha = a but alpha + mu < n", None)
        } else {
            violated(
                "alpha = a but a maximum independent set is not a maximum annihilating set",
                rhs.offender.map(|s| ("offending_max_independent", s)),
            )
        })
    }

    fn cor3_backward(&self) -> Result<Outcome, SolverError> {
        if !self.annihilation_at_least_half() {
            return Ok(not_applicable("a < n/2"));
        }
        if !self.koenig_annihilating(false)?.holds() {
            return Ok(not_applicable("right-hand side fails"));
        }
        Ok(if self.alpha_equals_annihilation()? {
            holds("right-hand side holds and alpha = a")
        } else {
            violated("right-hand side holds but alpha < a", None)
        })
    }

    fn conj34_only_if(&self) -> Result<Outcome, SolverError> {
        if !self.annihilation_at_least_half() {
            return Ok(not_applicable("a < n/2"));
        }
        if !self.alpha_equals_annihilation()? {
            return Ok(not_applicable("alpha < a"));
        }
        let rhs = self.koenig_annihilating(true)?;
        Ok(if rhs.holds() {
            holds("alpha = a, Koenig-Egervary, every maximum independent set is a maximal annihilating set")
        } else if !rhs.koenig_egervary {
            violated("alpha = a but alpha + mu < n", None)
        } else {
            violated(
                "alpha = a but a maximum independent set is not a maximal annihilating set",
                rhs.offender.map(|s| ("offending_max_independent", s)),
            )
        })
    }
}

type Outcome = (Status, String, Option<(&'static str, VertexSet)>);

fn holds(detail: &str) -> Outcome {
    (Status::Holds, detail.to_string(), None)
}

fn not_applicable(detail: &str) -> Outcome {
    (Status::NotApplicable, detail.to_string(), None)
}

fn violated(detail: &str, extra: Option<(&'static str, VertexSet)>) -> Outcome {
    (Status::Violated, detail.to_string(), extra)
}

fn check(g: &Graph, theorem: TheoremId) -> Result<TheoremVerdict, SolverError> {
    GraphFacts::new(g, SolverLimits::default()).verdict(theorem)
}

/// The "if" direction: the critical condition implies `α = a`.
pub fn check_if_direction(g: &Graph) -> Result<TheoremVerdict, SolverError> {
    check(g, TheoremId::LemmaIf)
}

/// The "only if" direction: `α = a` implies the critical condition.
pub fn check_only_if(g: &Graph) -> Result<TheoremVerdict, SolverError> {
    check(g, TheoremId::Thm1OnlyIf)
}

pub fn check_bipartite_theorem(g: &Graph) -> Result<TheoremVerdict, SolverError> {
    check(g, TheoremId::Thm4Bipartite)
}

pub fn check_removable_vertex_lemma(g: &Graph) -> Result<TheoremVerdict, SolverError> {
    check(g, TheoremId::Lemma5Removable)
}

pub fn check_clawfree_theorem(g: &Graph) -> Result<TheoremVerdict, SolverError> {
    check(g, TheoremId::Thm6Clawfree)
}

/// Both directions of the König–Egerváry characterization, `(forward, backward)`.
pub fn check_corollary3(g: &Graph) -> Result<(TheoremVerdict, TheoremVerdict), SolverError> {
    let facts = GraphFacts::new(g, SolverLimits::default());
    Ok((
        facts.verdict(TheoremId::Cor3Forward)?,
        facts.verdict(TheoremId::Cor3Backward)?,
    ))
}

pub fn check_conjecture34(g: &Graph) -> Result<TheoremVerdict, SolverError> {
    check(g, TheoremId::Conj34OnlyIf)
}
