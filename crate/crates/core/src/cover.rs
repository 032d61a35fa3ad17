//! Independence number, minimum vertex covers and the strict Hall test.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Maximum number of independent subsets materialised by one call to
/// [`independent_subsets`].
pub const DEFAULT_SUBSET_LIMIT: usize = 1 << 22;

/// Size of a maximum independent set.
///
/// Branch and bound: pick the lowest-index vertex of maximum degree among the
/// remaining candidates, then either take it (dropping its closed
/// neighbourhood) or discard it.
pub fn alpha(g: &Graph) -> usize {
    let mut best = 0;
    max_independent(g, g.vertices(), 0, &mut best);
    best
}

fn max_independent(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
    if size + cand.len() <= *best {
        return;
    }
    let mut pivot = None;
    let mut pivot_deg = 0;
    for v in cand {
        let d = (g.neighbors(v) & cand).len();
        if pivot.is_none() || d > pivot_deg {
            pivot = Some(v);
            pivot_deg = d;
        }
    }
    let Some(v) = pivot else {
        *best = size;
        return;
    };
    if pivot_deg == 0 {
        *best = (*best).max(size + cand.len());
        return;
    }
    let rest = cand - VertexSet::singleton(v);
    max_independent(g, rest - g.neighbors(v), size + 1, best);
    max_independent(g, rest, size, best);
}

/// Vertex cover number `β = n − α`.
pub fn beta(g: &Graph) -> usize {
    g.n() - alpha(g)
}

/// Limits for [`min_covers_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverBudget {
    /// Graphs up to this order get every minimum cover listed; larger graphs
    /// stop after the second cover, which still settles uniqueness.
    pub full_enumeration_max_n: usize,
    /// Hard cap on listed covers.
    pub max_covers: usize,
}

impl Default for CoverBudget {
    fn default() -> Self {
        CoverBudget {
            full_enumeration_max_n: 16,
            max_covers: 1 << 16,
        }
    }
}

/// All minimum vertex covers of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub beta: usize,
    /// Ascending by mask.
    pub covers: Vec<VertexSet>,
    pub unique: bool,
    /// Set when enumeration stopped at the budget; `covers` is then a prefix
    /// of the full list (and holds at least two covers, so `unique` is false).
    pub truncated: bool,
}

impl CoverReport {
    /// The least minimum cover.
    pub fn first(&self) -> VertexSet {
        self.covers[0]
    }
}

pub fn min_covers(g: &Graph) -> CoverReport {
    min_covers_with(g, &CoverBudget::default())
}

pub fn min_covers_with(g: &Graph, budget: &CoverBudget) -> CoverReport {
    let beta = beta(g);
    let cap = if g.n() > budget.full_enumeration_max_n {
        budget.max_covers.min(2)
    } else {
        budget.max_covers
    }
    .max(2);
    let mut search = CoverSearch {
        g,
        beta,
        cap,
        covers: Vec::new(),
        truncated: false,
    };
    search.descend(VertexSet::EMPTY, VertexSet::EMPTY);
    let truncated = search.truncated;
    let covers = search.covers;
    debug_assert!(!covers.is_empty());
    CoverReport {
        beta,
        unique: covers.len() == 1 && !truncated,
        covers,
        truncated,
    }
}

/// Depth-first search deciding vertices from the highest index down,
/// "out of the cover" before "in the cover", so covers surface in ascending
/// integer order.
struct CoverSearch<'a> {
    g: &'a Graph,
    beta: usize,
    cap: usize,
    covers: Vec<VertexSet>,
    truncated: bool,
}

impl CoverSearch<'_> {
    // Invariant: every neighbour of an excluded vertex is included.
    fn descend(&mut self, inside: VertexSet, outside: VertexSet) {
        if self.truncated || inside.len() > self.beta {
            return;
        }
        let undecided = self.g.vertices() - inside - outside;
        if inside.len() + self.matching_bound(undecided) > self.beta {
            return;
        }
        if undecided.is_empty() {
            if self.covers.len() == self.cap {
                self.truncated = true;
            } else {
                self.covers.push(inside);
            }
            return;
        }
        let w = undecided.bound() - 1;
        self.descend(inside | self.g.neighbors(w), outside | VertexSet::singleton(w));
        self.descend(inside | VertexSet::singleton(w), outside);
    }

    /// Size of a greedy maximal matching inside `within`.
    fn matching_bound(&self, within: VertexSet) -> usize {
        let mut free = within;
        let mut size = 0;
        for u in within {
            if !free.contains(u) {
                continue;
            }
            if let Some(v) = (self.g.neighbors(u) & free).first() {
                free -= VertexSet::from([u, v]);
                size += 1;
            }
        }
        size
    }
}

/// Fails unless `c` is a vertex cover of size `β(G)`.
pub fn check_minimum_cover(g: &Graph, c: VertexSet) -> Result<()> {
    g.check_set(c)?;
    if !g.is_vertex_cover(c) {
        return Err(Error::NotACover);
    }
    let beta = beta(g);
    if c.len() != beta {
        return Err(Error::NotMinimumCover {
            size: c.len(),
            beta,
        });
    }
    Ok(())
}

/// Nonempty independent subsets of `within`, ascending by mask.
pub fn independent_subsets(g: &Graph, within: VertexSet, limit: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    let members = within.to_vec();
    collect_independent(g, &members, VertexSet::EMPTY, VertexSet::EMPTY, limit, &mut out)?;
    out.sort_unstable();
    Ok(out)
}

fn collect_independent(
    g: &Graph,
    members: &[usize],
    chosen: VertexSet,
    blocked: VertexSet,
    limit: usize,
    out: &mut Vec<VertexSet>,
) -> Result<()> {
    let Some((&v, rest)) = members.split_first() else {
        if !chosen.is_empty() {
            if out.len() == limit {
                return Err(Error::BudgetExceeded {
                    what: "independent subset enumeration",
                    expanded: limit as u64,
                });
            }
            out.push(chosen);
        }
        return Ok(());
    };
    collect_independent(g, rest, chosen, blocked, limit, out)?;
    if !blocked.contains(v) {
        collect_independent(
            g,
            rest,
            chosen | VertexSet::singleton(v),
            blocked | g.neighbors(v),
            limit,
            out,
        )?;
    }
    Ok(())
}

/// For a minimum cover `c`: every nonempty independent `A ⊆ c` has
/// `|N_{V−c}(A)| > |A|`. Holds exactly when `c` is the only minimum cover.
pub fn hall_strict(g: &Graph, c: VertexSet) -> Result<bool> {
    check_minimum_cover(g, c)?;
    let outside = g.vertices() - c;
    Ok(independent_subsets(g, c, DEFAULT_SUBSET_LIMIT)?
        .into_iter()
        .all(|a| (g.open_neighborhood(a) & outside).len() > a.len()))
}
