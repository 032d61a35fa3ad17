//! Breadth-first search over bank states: the brute-force ground truth.
//!
//! A state is the set of vertices on the right bank plus the side the boat
//! is on. From a state the ferryman may take any cargo of at most `b`
//! vertices from his bank, provided what stays behind is independent.
//! Nothing here depends on the cover or classification code.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::schedule::{verify_schedule, Schedule};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_states: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 12,
            max_states: 1 << 24,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub feasible: bool,
    pub min_crossings: Option<usize>,
    /// A shortest schedule; present iff `feasible`.
    pub schedule: Option<Schedule>,
    pub states_expanded: u64,
}

pub fn feasible(g: &Graph, capacity: usize) -> Result<SearchResult> {
    feasible_with(g, capacity, &OracleBudget::default())
}

const UNSEEN: u32 = u32::MAX;

/// Shortest feasible schedule at capacity `capacity`, if any.
///
/// Cargo is tried in order of size, then mask, and the first path to reach
/// a state is kept, so the returned schedule is deterministic.
pub fn feasible_with(g: &Graph, capacity: usize, budget: &OracleBudget) -> Result<SearchResult> {
    let n = g.n();
    if n > budget.max_vertices || n > 24 {
        return Err(Error::BudgetExceeded {
            what: "state-space search",
            expanded: 0,
        });
    }
    let all = g.vertices();
    // state index = right_mask * 2 + boat_on_right
    let mut parent = vec![UNSEEN; 1usize << (n + 1)];
    let mut cargo_of = vec![0u32; 1usize << (n + 1)];
    let start = 0usize;
    parent[start] = start as u32;
    let mut queue = VecDeque::from([start]);
    let mut expanded = 0u64;
    let mut goal = None;

    if all.is_empty() {
        goal = Some(start);
    }
    while goal.is_none() {
        let Some(state) = queue.pop_front() else { break };
        expanded += 1;
        if expanded > budget.max_states {
            return Err(Error::BudgetExceeded {
                what: "state-space search",
                expanded,
            });
        }
        let right = VertexSet::from_bits((state >> 1) as u64);
        let on_right = state & 1 == 1;
        let bank = if on_right { right } else { all - right };
        for cargo in cargo_choices(bank, capacity) {
            if !g.independent(bank - cargo) {
                continue;
            }
            let next_right = if on_right { right - cargo } else { right | cargo };
            let next = ((next_right.bits() as usize) << 1) | usize::from(!on_right);
            if parent[next] != UNSEEN {
                continue;
            }
            parent[next] = state as u32;
            cargo_of[next] = cargo.bits() as u32;
            if next_right == all {
                goal = Some(next);
                break;
            }
            queue.push_back(next);
        }
    }

    let Some(goal) = goal else {
        return Ok(SearchResult {
            feasible: false,
            min_crossings: None,
            schedule: None,
            states_expanded: expanded,
        });
    };
    let mut path = Vec::new();
    let mut state = goal;
    while state != start {
        path.push(VertexSet::from_bits(cargo_of[state] as u64));
        state = parent[state] as usize;
    }
    let mut schedule = Schedule::new(capacity);
    for cargo in path.into_iter().rev() {
        schedule.push(cargo);
    }
    verify_schedule(g, &schedule).map_err(Error::InternalVerification)?;
    Ok(SearchResult {
        feasible: true,
        min_crossings: Some(schedule.crossings()),
        schedule: Some(schedule),
        states_expanded: expanded,
    })
}

/// Subsets of `bank` with at most `capacity` members, by size then mask.
fn cargo_choices(bank: VertexSet, capacity: usize) -> Vec<VertexSet> {
    let members = bank.to_vec();
    let mut out = Vec::new();
    for k in 0..=capacity.min(members.len()) {
        let start = out.len();
        combinations(&members, k, 0, VertexSet::EMPTY, &mut out);
        out[start..].sort_unstable();
    }
    out
}

fn combinations(members: &[usize], k: usize, from: usize, acc: VertexSet, out: &mut Vec<VertexSet>) {
    if k == 0 {
        out.push(acc);
        return;
    }
    for i in from..=members.len() - k {
        combinations(members, k - 1, i + 1, acc | VertexSet::singleton(members[i]), out);
    }
}

/// Minimum cover size by scanning every vertex subset.
pub fn brute_force_beta(g: &Graph) -> usize {
    g.vertices()
        .subsets()
        .filter(|&s| g.is_vertex_cover(s))
        .map(VertexSet::len)
        .min()
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactAlcuin {
    pub c: usize,
    pub beta: usize,
    /// Shortest schedule at capacity `c`.
    pub schedule: Schedule,
}

pub fn alcuin_exact(g: &Graph) -> Result<ExactAlcuin> {
    alcuin_exact_with(g, &OracleBudget::default())
}

/// The least feasible capacity. Searches at `max(β, 1)` and, failing that,
/// at one more, which must succeed.
pub fn alcuin_exact_with(g: &Graph, budget: &OracleBudget) -> Result<ExactAlcuin> {
    if g.n() > budget.max_vertices {
        return Err(Error::BudgetExceeded {
            what: "state-space search",
            expanded: 0,
        });
    }
    let beta = brute_force_beta(g);
    if g.n() == 0 {
        return Ok(ExactAlcuin {
            c: 0,
            beta,
            schedule: Schedule::new(0),
        });
    }
    let low = beta.max(1);
    for capacity in [low, low + 1] {
        let found = feasible_with(g, capacity, budget)?;
        if let Some(schedule) = found.schedule {
            return Ok(ExactAlcuin {
                c: capacity,
                beta,
                schedule,
            });
        }
    }
    Err(Error::BoundViolated {
        capacity: low + 1,
        beta,
    })
}
