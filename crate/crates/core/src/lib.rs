//! Independence number, annihilation number and critical independence.
//!
//! The crate computes `α` (exact, branch and bound), the annihilation number
//! `a`, the critical independence number `α'`, the critical difference and
//! the matching number `μ` of simple graphs, each with a witness. On top of
//! that it generates the graph families that separate `α = a` from
//! `α' = a`, and checks the statements relating them over enumerated,
//! random or streamed graphs.
//!
//! ```
//! use annihilator::{full_report, parse_graph6};
//!
//! // a triangle with an isolated vertex
//! let g = parse_graph6("Cw").unwrap();
//! let report = full_report(&g);
//! assert_eq!((report.alpha, report.annihilation, report.alpha_crit), (Some(2), 2, Some(1)));
//! ```
//!
//! The guide in `book/` walks through each part; its Rust snippets are
//! compiled and run as doctests of this crate.

pub mod families;
pub mod graph;
pub mod invariants;
pub mod lab;

mod bits;

pub use families::{build_family, FamilyError, FamilyInstance, PredictedInvariants};
pub use graph::{
    encode_graph6, parse_edge_list, parse_graph6, Graph, GraphError, ParseError, VertexSet,
};
pub use invariants::{
    full_report, full_report_with, InvariantReport, ReportOptions, SolverError, SolverLimits,
};
pub use lab::{
    run_search, GraphSource, SearchOptions, SearchReport, Status, TheoremId, TheoremVerdict,
};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/critical.md")]
    mod critical {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/theorem-lab.md")]
    mod theorem_lab {}
}
