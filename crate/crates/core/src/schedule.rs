//! Ferry schedules: verification, constructive synthesis and the five-set
//! structure certificate.
//!
//! The ferryman is always aboard, so crossings alternate strictly, starting
//! from the left bank. Whatever rides in the boat is attended; only the bank
//! the boat departs from must be conflict-free once the cargo is loaded. The
//! bank the boat arrives at was conflict-free when it was last left and has
//! not changed since, so checking departures is enough.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{self, Condition, Reason, Verdict};
use crate::cover::check_minimum_cover;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "LR")]
    LeftToRight,
    #[serde(rename = "RL")]
    RightToLeft,
}

impl Direction {
    fn for_step(step: usize) -> Direction {
        if step.is_multiple_of(2) {
            Direction::LeftToRight
        } else {
            Direction::RightToLeft
        }
    }
}

/// One crossing: everything in `cargo` rides with the ferryman.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub direction: Direction,
    pub cargo: VertexSet,
}

impl Move {
    pub fn new(direction: Direction, cargo: VertexSet) -> Self {
        Move { direction, cargo }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Schedule {
    pub capacity: usize,
    pub moves: Vec<Move>,
}

impl Schedule {
    pub fn new(capacity: usize) -> Self {
        Schedule {
            capacity,
            moves: Vec::new(),
        }
    }

    /// Appends a crossing in the next direction of the alternation.
    pub fn push(&mut self, cargo: VertexSet) {
        let direction = Direction::for_step(self.moves.len());
        self.moves.push(Move { direction, cargo });
    }

    pub fn crossings(&self) -> usize {
        self.moves.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    CargoTooBig { size: usize },
    CargoNotOnBank { vertex: usize },
    /// Adjacent pair left unattended on the departure bank.
    BankConflict(usize, usize),
    NotAllTransported,
    WrongDirection,
}

/// First failure found while simulating a schedule. `step` indexes `moves`;
/// terminal failures use `step == moves.len()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub step: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let step = self.step + 1;
        match self.kind {
            ViolationKind::CargoTooBig { size } => {
                write!(f, "crossing {step}: cargo of {size} exceeds the boat")
            }
            ViolationKind::CargoNotOnBank { vertex } => {
                write!(f, "crossing {step}: vertex {vertex} is not on the departure bank")
            }
            ViolationKind::BankConflict(u, v) => {
                write!(f, "crossing {step}: {u} and {v} left together unattended")
            }
            ViolationKind::NotAllTransported => {
                write!(f, "after {} crossings some vertices are still on the left bank", self.step)
            }
            ViolationKind::WrongDirection => {
                write!(f, "crossing {step}: boat is not on that bank")
            }
        }
    }
}

/// Simulates `sched` from the all-left start and returns the first violation.
pub fn verify_schedule(g: &Graph, sched: &Schedule) -> Result<(), Violation> {
    let all = g.vertices();
    let mut left = all;
    for (step, mv) in sched.moves.iter().enumerate() {
        let fail = |kind| Err(Violation { step, kind });
        if mv.direction != Direction::for_step(step) {
            return fail(ViolationKind::WrongDirection);
        }
        let bank = match mv.direction {
            Direction::LeftToRight => left,
            Direction::RightToLeft => all - left,
        };
        if let Some(vertex) = (mv.cargo - bank).first() {
            return fail(ViolationKind::CargoNotOnBank { vertex });
        }
        if mv.cargo.len() > sched.capacity {
            return fail(ViolationKind::CargoTooBig {
                size: mv.cargo.len(),
            });
        }
        if let Some((u, v)) = g.first_edge_within(bank - mv.cargo) {
            return fail(ViolationKind::BankConflict(u, v));
        }
        match mv.direction {
            Direction::LeftToRight => left -= mv.cargo,
            Direction::RightToLeft => left |= mv.cargo,
        }
    }
    if !left.is_empty() {
        return Err(Violation {
            step: sched.moves.len(),
            kind: ViolationKind::NotAllTransported,
        });
    }
    Ok(())
}

/// Capacity `|c| + 1`: the cover rides every crossing and the free seat
/// shuttles the remaining vertices over one at a time.
pub fn schedule_generic(g: &Graph, c: VertexSet) -> Result<Schedule> {
    check_minimum_cover(g, c)?;
    let mut sched = Schedule::new(c.len() + 1);
    let items = g.vertices() - c;
    if g.n() == 0 {
        return Ok(sched);
    }
    if items.is_empty() {
        sched.push(c);
    }
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            sched.push(c);
        }
        sched.push(c | VertexSet::singleton(v));
    }
    Ok(sched)
}

/// Capacity-`|c|` schedule from a pair of nonempty independent `s, t ⊆ c`
/// whose common neighbourhood outside `c` has at most `|s| + |t|` vertices.
///
/// 1. Carry `c` over, leave `s`, come back.
/// 2. Using the `|s|` free seats, ferry everything outside `c` that is not
///    adjacent to `s`.
/// 3. Carry up to `|s|` common neighbours over, drop them, pick up `s`, come back.
/// 4. Leave `t` on the left, carry the remaining (at most `|t|`) common neighbours over.
/// 5. Using the `|t|` free seats, ferry the rest of `N(s)`, then fetch `t`.
///
/// The result is checked with [`verify_schedule`] before it is returned.
pub fn schedule_from_witness(g: &Graph, c: VertexSet, s: VertexSet, t: VertexSet) -> Result<Schedule> {
    check_minimum_cover(g, c)?;
    for (name, x) in [("S", s), ("T", t)] {
        if x.is_empty() || !x.is_subset(c) || !g.independent(x) {
            return Err(Error::InvalidWitness(format!(
                "{name} must be a nonempty independent subset of the cover"
            )));
        }
    }
    let rest = g.vertices() - c;
    let ns = g.open_neighborhood(s) & rest;
    let nt = g.open_neighborhood(t) & rest;
    let common = ns & nt;
    if common.len() > s.len() + t.len() {
        return Err(Error::InvalidWitness(format!(
            "{} common neighbours exceed |S| + |T| = {}",
            common.len(),
            s.len() + t.len()
        )));
    }

    let mut sched = Schedule::new(c.len());
    sched.push(c);
    sched.push(c - s);
    for batch in chunks(rest - ns, s.len()) {
        sched.push((c - s) | batch);
        sched.push(c - s);
    }
    let early = common.take_lowest(s.len());
    sched.push((c - s) | early);
    sched.push(c);
    sched.push((c - t) | (common - early));
    for batch in chunks(ns - nt, t.len()) {
        sched.push(c - t);
        sched.push((c - t) | batch);
    }
    sched.push(c - t);
    sched.push(c);

    verify_schedule(g, &sched).map_err(Error::InternalVerification)?;
    Ok(sched)
}

fn chunks(set: VertexSet, size: usize) -> Vec<VertexSet> {
    let members = set.to_vec();
    members
        .chunks(size.max(1))
        .map(|ch| ch.iter().copied().collect())
        .collect()
}

/// A schedule whose capacity is the Alcuin number of `g`.
pub fn synthesize(g: &Graph) -> Result<Schedule> {
    if g.n() == 0 {
        return Ok(Schedule::new(0));
    }
    let class = classify::classify(g)?;
    let sched = match class.reason {
        Reason::ConditionHolds { cover } => schedule_generic(g, cover)?,
        Reason::PairWitness { cover, s, t } => schedule_from_witness(g, cover, s, t)?,
        Reason::SetWitness { cover, a } => schedule_from_witness(g, cover, a, a)?,
        Reason::MultipleCovers { first, .. } => match classify::classification_condition(g, first)? {
            Condition::Violated { s, t } => schedule_from_witness(g, first, s, t)?,
            Condition::Holds => {
                // Cannot happen: holding on one cover forces that cover to be unique.
                return Err(Error::InvalidWitness(
                    "no violating pair on a non-unique minimum cover".into(),
                ));
            }
        },
        Reason::Degenerate => Schedule::new(0),
    };
    debug_assert_eq!(sched.capacity, class.c);
    debug_assert_eq!(class.verdict == Verdict::Two, sched.capacity == class.beta + 1);
    verify_schedule(g, &sched).map_err(Error::InternalVerification)?;
    Ok(sched)
}

/// Five sets certifying a feasible schedule at capacity `capacity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StructureWitness {
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub x3: VertexSet,
    pub y1: VertexSet,
    pub y2: VertexSet,
    pub capacity: usize,
}

impl StructureWitness {
    pub fn x(&self) -> VertexSet {
        self.x1 | self.x2 | self.x3
    }
}

/// Checks the four structural conditions:
///
/// 1. `x1`, `x2`, `x3` pairwise disjoint with independent union `X`;
/// 2. `y1`, `y2` nonempty subsets of `Y = V − X`, and `|Y| ≤ capacity`;
/// 3. `x1 ∪ y1` and `x2 ∪ y2` independent;
/// 4. `|y1| + |y2| ≥ |x3|`.
pub fn structure_check(g: &Graph, w: &StructureWitness) -> bool {
    let sets = [w.x1, w.x2, w.x3, w.y1, w.y2];
    if sets.iter().any(|&s| g.check_set(s).is_err()) {
        return false;
    }
    let x = w.x();
    let y = g.vertices() - x;
    let disjoint = w.x1.is_disjoint(w.x2) && w.x1.is_disjoint(w.x3) && w.x2.is_disjoint(w.x3);
    disjoint
        && g.independent(x)
        && !w.y1.is_empty()
        && !w.y2.is_empty()
        && w.y1.is_subset(y)
        && w.y2.is_subset(y)
        && y.len() <= w.capacity
        && g.independent(w.x1 | w.y1)
        && g.independent(w.x2 | w.y2)
        && w.y1.len() + w.y2.len() >= w.x3.len()
}

/// Default order limit for [`structure_search`].
pub const STRUCTURE_SEARCH_MAX_N: usize = 10;

pub fn structure_search(g: &Graph, capacity: usize) -> Result<Option<StructureWitness>> {
    structure_search_with(g, capacity, STRUCTURE_SEARCH_MAX_N)
}

/// Exhaustive search for a [`StructureWitness`].
///
/// `Y` runs over vertex covers with `1 ≤ |Y| ≤ capacity` in ascending mask
/// order, then `y1` and `y2` over nonempty independent subsets of `Y`. For
/// fixed `(Y, y1, y2)` a 3-partition of `X = V − Y` exists iff the vertices of
/// `X` adjacent to both `y1` and `y2` number at most `|y1| + |y2|`: those must
/// go to `x3`, the rest of `N(y1)` to `x2`, everything else to `x1`. That
/// partition is the one returned.
pub fn structure_search_with(g: &Graph, capacity: usize, max_n: usize) -> Result<Option<StructureWitness>> {
    if capacity == 0 {
        return Err(Error::InvalidParameter("capacity must be at least 1".into()));
    }
    if g.n() > max_n {
        return Err(Error::BudgetExceeded {
            what: "structure search",
            expanded: 0,
        });
    }
    let all = g.vertices();
    for y in all.subsets() {
        if y.is_empty() || y.len() > capacity {
            continue;
        }
        let x = all - y;
        if !g.independent(x) {
            continue;
        }
        let parts: Vec<(VertexSet, VertexSet)> = y
            .subsets()
            .filter(|&p| !p.is_empty() && g.independent(p))
            .map(|p| (p, g.open_neighborhood(p) & x))
            .collect();
        for &(y1, n1) in &parts {
            for &(y2, n2) in &parts {
                let x3 = n1 & n2;
                if x3.len() <= y1.len() + y2.len() {
                    let x1 = x - n1;
                    return Ok(Some(StructureWitness {
                        x1,
                        x2: x - x1 - x3,
                        x3,
                        y1,
                        y2,
                        capacity,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Renders a valid schedule one crossing per line:
/// `left bank | cargo → | right bank` or `left bank | ← cargo | right bank`,
/// with banks shown while the boat is on the water. Empty sets print as `∅`.
pub fn render_trace(g: &Graph, sched: &Schedule, labels: Option<&[String]>) -> Result<String> {
    verify_schedule(g, sched).map_err(|v| Error::InvalidWitness(v.to_string()))?;
    if let Some(labels) = labels {
        if labels.len() < g.n() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                g.n()
            )));
        }
    }
    let name = |v: usize| labels.map_or_else(|| v.to_string(), |l| l[v].clone());
    let show = |s: VertexSet| {
        if s.is_empty() {
            "∅".to_string()
        } else {
            s.iter().map(name).collect::<Vec<_>>().join(", ")
        }
    };
    let all = g.vertices();
    let mut left = all;
    let mut out = String::new();
    for mv in &sched.moves {
        let line = match mv.direction {
            Direction::LeftToRight => {
                left -= mv.cargo;
                format!("{} | {} → | {}", show(left), show(mv.cargo), show(all - left - mv.cargo))
            }
            Direction::RightToLeft => {
                let right = all - left - mv.cargo;
                left |= mv.cargo;
                format!("{} | ← {} | {}", show(left - mv.cargo), show(mv.cargo), show(right))
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}
