//! Simple undirected graphs and the structural queries the invariant code
//! builds on.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`, neighbor lists
//! are kept sorted, and every operation that "changes" a graph returns a new
//! one.

mod edge_list;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use edge_list::{encode_edge_list, parse_edge_list};
pub use graph6::{encode_graph6, parse_graph6, MAX_GRAPH6_ORDER};

/// Errors raised while reading a graph from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6 byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    Graph6Byte { offset: usize, byte: u8 },
    #[error("graph6 size header at offset {offset} is malformed: {reason}")]
    Graph6Header { offset: usize, reason: &'static str },
    #[error("graph6 body at offset {offset} has {found} bytes, expected {expected}")]
    Graph6Length {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6 padding bits in the final byte (offset {offset}) are not zero")]
    Graph6Padding { offset: usize },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

/// Errors raised by structural operations on a valid graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
}

/// A set of vertex indices, kept sorted and free of duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Checks that every member is a vertex of a graph on `n` vertices.
    pub fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&vertex) if vertex >= n => Err(GraphError::VertexOutOfRange { vertex, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self(members)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// An induced `K_{1,3}`: `center` is adjacent to all three leaves, and the
/// leaves are pairwise non-adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// A simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and deduplicates neighbor lists. Callers guarantee symmetry and
    /// the absence of loops.
    fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Self {
            adj,
            m: twice_m / 2,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Self::from_raw_adjacency(adj)
    }

    /// The path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
    }

    /// The cycle on `n >= 3` vertices; smaller `n` gives the path.
    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return Self::path(n);
        }
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are in range")
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are in range")
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&u| u + shift).collect::<Vec<_>>()),
        );
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        let (short, other) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[short].binary_search(&other).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Degrees sorted non-increasingly.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|u| self.adj[u].iter().all(|&v| v == u || !s.contains(v)))
    }

    /// Sum of the degrees of the members of `s`.
    pub fn degree_sum(&self, s: &VertexSet) -> Result<usize, GraphError> {
        s.check_range(self.n())?;
        Ok(s.iter().map(|v| self.degree(v)).sum())
    }

    /// `N(S)`: vertices outside `s` with at least one neighbor in `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet, GraphError> {
        s.check_range(self.n())?;
        Ok(s.iter()
            .flat_map(|u| self.adj[u].iter().copied())
            .filter(|&v| !s.contains(v))
            .collect())
    }

    /// Connected components, each listed by increasing vertex index and
    /// ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            components.push(VertexSet::from(members));
        }
        components
    }

    /// True for graphs with exactly one component; the null graph is not
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n()
    }

    /// A proper 2-coloring if one exists. `false` marks the side containing
    /// the smallest vertex of each component.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let side = color[u].expect("queued vertices are colored");
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!side);
                            queue.push_back(v);
                        }
                        Some(other) if other == side => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// The claw with the smallest center, then lexicographically smallest
    /// leaves, or `None` if the graph is claw-free.
    pub fn find_claw(&self) -> Option<Claw> {
        for center in 0..self.n() {
            let nbrs = &self.adj[center];
            if nbrs.len() < 3 {
                continue;
            }
            for (i, &a) in nbrs.iter().enumerate() {
                for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                    if self.is_adjacent(a, b) {
                        continue;
                    }
                    for &d in &nbrs[j + 1..] {
                        if !self.is_adjacent(a, d) && !self.is_adjacent(b, d) {
                            return Some(Claw {
                                center,
                                leaves: [a, b, d],
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// The bipartite double cover: vertex `v` has copies `v` and `v + n`, and
    /// each edge `uv` becomes `u ~ v+n` and `u+n ~ v`.
    pub fn bipartite_double_cover(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); 2 * n];
        for (u, list) in self.adj.iter().enumerate() {
            adj[u] = list.iter().map(|&v| v + n).collect();
            adj[u + n] = list.clone();
        }
        Graph { adj, m: 2 * self.m }
    }

    /// The subgraph induced by the complement of `s`; surviving vertices
    /// keep their relative order.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        s.check_range(self.n())?;
        Ok(self.induced_subgraph(|v| !s.contains(v)))
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(self.induced_subgraph(|u| u != v))
    }

    fn induced_subgraph(&self, keep: impl Fn(usize) -> bool) -> Graph {
        const GONE: usize = usize::MAX;
        let mut index = vec![GONE; self.n()];
        let mut next = 0;
        for (v, slot) in index.iter_mut().enumerate() {
            if keep(v) {
                *slot = next;
                next += 1;
            }
        }
        let mut adj = Vec::with_capacity(next);
        let mut twice_m = 0;
        for (v, list) in self.adj.iter().enumerate() {
            if index[v] == GONE {
                continue;
            }
            let kept: Vec<usize> = list
                .iter()
                .filter(|&&u| index[u] != GONE)
                .map(|&u| index[u])
                .collect();
            twice_m += kept.len();
            adj.push(kept);
        }
        Graph {
            adj,
            m: twice_m / 2,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
