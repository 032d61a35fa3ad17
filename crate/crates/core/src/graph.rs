//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertex sets are single machine words, so neighbourhoods, independence
//! checks and subset enumeration reduce to a handful of bit operations.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A subset of `0..64` stored as a bit mask.
///
/// Ordering is the ordering of the underlying integer, which is the
/// tie-break used for every deterministic witness in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < 64 {
            self.0 &= !(1u64 << v);
        }
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest vertex index plus one (0 for the empty set).
    pub fn bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Every subset of `self`, in ascending integer order, starting with ∅.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }

    /// The first `k` members in ascending order.
    pub fn take_lowest(self, k: usize) -> VertexSet {
        self.iter().take(k).collect()
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

macro_rules! bit_op {
    ($trait:ident, $method:ident, $assign:ident, $assign_method:ident, $op:tt) => {
        impl $trait for VertexSet {
            type Output = VertexSet;
            fn $method(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
        impl $assign for VertexSet {
            fn $assign_method(&mut self, rhs: VertexSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

bit_op!(BitOr, bitor, BitOrAssign, bitor_assign, |);
bit_op!(BitAnd, bitand, BitAndAssign, bitand_assign, &);

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

/// Iterator over the members of a [`VertexSet`] in ascending order.
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Iterator over all submasks of a mask in ascending order.
#[derive(Clone, Debug)]
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let current = self.next?;
        // Increment restricted to the bits of `universe`.
        let succ = (current | !self.universe).wrapping_add(1) & self.universe;
        self.next = (succ != 0).then_some(succ);
        Some(VertexSet(current))
    }
}

/// Length of a shortest cycle, or [`Girth::Acyclic`] for forests.
///
/// `Finite` sorts before `Acyclic`, so the derived ordering treats an
/// acyclic graph as having infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from per-vertex neighbour masks, validating symmetry.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (v, &nbrs) in adj.iter().enumerate() {
            if !nbrs.is_subset(all) {
                let vertex = (nbrs - all).first().unwrap_or(n);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if nbrs.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            for u in nbrs {
                if !adj[u].contains(v) {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency not symmetric between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, &nbrs)| {
            (nbrs - VertexSet::full(u + 1)).iter().map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Fails unless every member of `x` is a vertex.
    pub fn check_set(&self, x: VertexSet) -> Result<()> {
        let extra = x - self.vertices();
        match extra.first() {
            None => Ok(()),
            Some(vertex) => Err(Error::VertexOutOfRange { vertex, n: self.n() }),
        }
    }

    /// `N(X)`: union of the neighbourhoods of the members of `x`.
    ///
    /// `x` must be a subset of the vertices; use [`Graph::neighbors_in`] for
    /// checked access.
    pub fn open_neighborhood(&self, x: VertexSet) -> VertexSet {
        x.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// `N_S(X) = N(X) ∩ S`.
    pub fn neighbors_in(&self, x: VertexSet, s: VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        self.check_set(s)?;
        Ok(self.open_neighborhood(x) & s)
    }

    /// Unchecked independence test.
    pub fn independent(&self, x: VertexSet) -> bool {
        x.iter().all(|v| self.adj[v].is_disjoint(x))
    }

    pub fn is_independent(&self, x: VertexSet) -> Result<bool> {
        self.check_set(x)?;
        Ok(self.independent(x))
    }

    /// Whether every edge has an end in `x`.
    pub fn is_vertex_cover(&self, x: VertexSet) -> bool {
        self.independent(self.vertices() - x)
    }

    /// Lowest edge `(u, v)`, `u < v`, with both ends in `x`.
    pub fn first_edge_within(&self, x: VertexSet) -> Option<(usize, usize)> {
        x.iter().find_map(|u| {
            ((self.adj[u] & x) - VertexSet::full(u + 1))
                .first()
                .map(|v| (u, v))
        })
    }

    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        for root in 0..n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for w in self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Finite(best)
        }
    }

    /// No vertex has three pairwise non-adjacent neighbours.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n()).all(|v| {
            let nbrs = self.adj[v];
            !nbrs.iter().any(|a| {
                let rest = nbrs - self.adj[a] - VertexSet::full(a + 1);
                rest.iter()
                    .any(|b| !(rest - self.adj[b] - VertexSet::full(b + 1)).is_empty())
            })
        })
    }

    /// The common degree if the graph is regular; `None` for `n = 0`.
    pub fn is_regular(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|s| s.len() == first).then_some(first)
    }

    /// A two-colouring `(A, B)`; the lowest vertex of each component is in `A`.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side_a = VertexSet::EMPTY;
        let mut side_b = VertexSet::EMPTY;
        let mut queue = VecDeque::new();
        for start in 0..self.n() {
            if side_a.contains(start) || side_b.contains(start) {
                continue;
            }
            side_a.insert(start);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let (own, other) = if side_a.contains(u) {
                    (side_a, side_b)
                } else {
                    (side_b, side_a)
                };
                if !self.adj[u].is_disjoint(own) {
                    return None;
                }
                for w in self.adj[u] - other {
                    if side_a.contains(u) {
                        side_b.insert(w);
                    } else {
                        side_a.insert(w);
                    }
                    queue.push_back(w);
                }
            }
        }
        Some((side_a, side_b))
    }

    /// Cartesian product; vertex `(u, v)` gets index `u * |V(h)| + v`.
    pub fn cartesian_product(&self, h: &Graph) -> Result<Graph> {
        let (gn, hn) = (self.n(), h.n());
        let n = gn
            .checked_mul(hn)
            .filter(|&n| n <= MAX_VERTICES)
            .ok_or(Error::TooManyVertices {
                n: gn.saturating_mul(hn),
                max: MAX_VERTICES,
            })?;
        let mut edges = Vec::new();
        for u in 0..gn {
            for (a, b) in h.edges() {
                edges.push((u * hn + a, u * hn + b));
            }
        }
        for (x, y) in self.edges() {
            for v in 0..hn {
                edges.push((x * hn + v, y * hn + v));
            }
        }
        Graph::from_edges(n, edges)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen.insert(p);
        }
        if perm.len() != n {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}
