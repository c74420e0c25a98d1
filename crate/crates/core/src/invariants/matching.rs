//! Maximum matchings.
//!
//! General graphs use Edmonds' blossom algorithm: grow an alternating forest
//! from one free root at a time, contract odd cycles onto their base, and
//! augment as soon as a free vertex is reached. A search that dies out proves
//! no augmenting path starts at that root, and since augmenting never frees a
//! matched vertex, one pass over the roots leaves a maximum matching.
//!
//! [`DeficiencyMatcher`] is a separate bipartite matcher between two copies of
//! the vertex set; the critical-independence code uses it to measure
//! `max |A| - |N(A)|` under vertex deletions.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A matching given by its partner table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn len(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Matched pairs `(u, v)` with `u < v`, by increasing `u`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let mut mate = vec![NONE; n];
        for u in 0..n {
            if mate[u] == NONE {
                if let Some(&v) = g.neighbors(u).iter().find(|&&v| mate[v] == NONE) {
                    mate[u] = v;
                    mate[v] = u;
                }
            }
        }
        Self {
            g,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, base: usize, mut child: usize) {
        while self.base[v] != base {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from `root`; returns its free end.
    fn search(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.parent.fill(NONE);
        self.in_tree.fill(false);
        for (v, b) in self.base.iter_mut().enumerate() {
            *b = v;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let base = self.lowest_common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, base, to);
                    self.mark_path(to, base, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = base;
                            if !self.in_tree[u] {
                                self.in_tree[u] = true;
                                self.queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_tree[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Matching {
        for root in 0..self.g.n() {
            if self.mate[root] == NONE {
                if let Some(end) = self.search(root) {
                    self.augment(end);
                }
            }
        }
        Matching {
            mate: self
                .mate
                .into_iter()
                .map(|m| (m != NONE).then_some(m))
                .collect(),
        }
    }
}

/// A maximum matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

/// Maximum bipartite matching between a "left" and a "right" copy of the
/// vertices of `g`, where left `u` is joined to right `v` iff `uv` is an edge.
/// Vertices on either side can be switched off; the matching is repaired by
/// [`DeficiencyMatcher::augment`].
#[derive(Clone)]
pub(crate) struct DeficiencyMatcher<'g> {
    g: &'g Graph,
    left_active: Vec<bool>,
    right_active: Vec<bool>,
    mate_left: Vec<usize>,
    mate_right: Vec<usize>,
    active_left: usize,
    matched: usize,
}

impl<'g> DeficiencyMatcher<'g> {
    /// All vertices active, matching already maximum.
    pub fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let mut matcher = Self {
            g,
            left_active: vec![true; n],
            right_active: vec![true; n],
            mate_left: vec![NONE; n],
            mate_right: vec![NONE; n],
            active_left: n,
            matched: 0,
        };
        for u in 0..n {
            if let Some(&v) = g
                .neighbors(u)
                .iter()
                .find(|&&v| matcher.mate_right[v] == NONE)
            {
                matcher.mate_left[u] = v;
                matcher.mate_right[v] = u;
                matcher.matched += 1;
            }
        }
        matcher.augment();
        matcher
    }

    pub fn is_left_active(&self, v: usize) -> bool {
        self.left_active[v]
    }

    pub fn is_right_active(&self, v: usize) -> bool {
        self.right_active[v]
    }

    /// `max over A ⊆ active left of |A| - |N(A) ∩ active right|`, valid after
    /// [`augment`](Self::augment).
    pub fn deficiency(&self) -> usize {
        self.active_left - self.matched
    }

    pub fn deactivate_left(&mut self, u: usize) {
        if !self.left_active[u] {
            return;
        }
        self.left_active[u] = false;
        self.active_left -= 1;
        let v = std::mem::replace(&mut self.mate_left[u], NONE);
        if v != NONE {
            self.mate_right[v] = NONE;
            self.matched -= 1;
        }
    }

    pub fn deactivate_right(&mut self, v: usize) {
        if !self.right_active[v] {
            return;
        }
        self.right_active[v] = false;
        let u = std::mem::replace(&mut self.mate_right[v], NONE);
        if u != NONE {
            self.mate_left[u] = NONE;
            self.matched -= 1;
        }
    }

    /// Restores maximality. Each pass shares one visited table; a pass that
    /// finds nothing certifies that no augmenting path exists.
    pub fn augment(&mut self) {
        let n = self.g.n();
        let mut visited = vec![false; n];
        let mut stack: Vec<(usize, usize)> = Vec::new();
        let mut via: Vec<usize> = Vec::new();
        loop {
            visited.fill(false);
            let mut progressed = false;
            for root in 0..n {
                if !self.left_active[root] || self.mate_left[root] != NONE {
                    continue;
                }
                if self.augment_from(root, &mut visited, &mut stack, &mut via) {
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
    }

    fn augment_from(
        &mut self,
        root: usize,
        visited: &mut [bool],
        stack: &mut Vec<(usize, usize)>,
        via: &mut Vec<usize>,
    ) -> bool {
        let g = self.g;
        stack.clear();
        via.clear();
        stack.push((root, 0));
        while let Some(top) = stack.last_mut() {
            let (u, next) = *top;
            let nbrs = g.neighbors(u);
            if next == nbrs.len() {
                stack.pop();
                via.pop();
                continue;
            }
            top.1 += 1;
            let v = nbrs[next];
            if !self.right_active[v] || visited[v] {
                continue;
            }
            visited[v] = true;
            via.push(v);
            let owner = self.mate_right[v];
            if owner == NONE {
                for (&(lu, _), &rv) in stack.iter().zip(via.iter()) {
                    self.mate_left[lu] = rv;
                    self.mate_right[rv] = lu;
                }
                self.matched += 1;
                return true;
            }
            stack.push((owner, 0));
        }
        false
    }

    /// Left vertices reachable from free active left vertices along
    /// alternating paths. Their neighborhood is exactly the reached right
    /// vertices, so this set attains [`deficiency`](Self::deficiency).
    pub fn deficient_set(&self) -> Vec<usize> {
        let n = self.g.n();
        let mut reached_left = vec![false; n];
        let mut reached_right = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n)
            .filter(|&u| self.left_active[u] && self.mate_left[u] == NONE)
            .collect();
        for &u in &queue {
            reached_left[u] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &v in self.g.neighbors(u) {
                if !self.right_active[v] || reached_right[v] {
                    continue;
                }
                reached_right[v] = true;
                let owner = self.mate_right[v];
                debug_assert!(
                    owner != NONE,
                    "free right vertex means the matching was not maximum"
                );
                if owner != NONE && !reached_left[owner] {
                    reached_left[owner] = true;
                    queue.push_back(owner);
                }
            }
        }
        (0..n).filter(|&u| reached_left[u]).collect()
    }
}
