//! Class one / class two decision.
//!
//! For a minimum cover `C`, a graph is class two exactly when every pair of
//! nonempty independent sets `S, T ⊆ C` has more than `|S| + |T|` common
//! neighbours outside `C`. When `C` is not the only minimum cover the graph is
//! class one outright, so the pair search only runs on graphs with a unique
//! minimum cover.

use crate::cover::{self, check_minimum_cover, independent_subsets, CoverReport};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default cap on `(S, T)` pairs examined by [`classification_condition`].
pub const DEFAULT_PAIR_LIMIT: u64 = 1 << 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    One,
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    /// Two distinct minimum covers (the two smallest by mask).
    MultipleCovers { first: VertexSet, second: VertexSet },
    /// Distinct `S`, `T` with `|N(S) ∩ N(T)| ≤ |S| + |T|` outside `cover`.
    PairWitness {
        cover: VertexSet,
        s: VertexSet,
        t: VertexSet,
    },
    /// A single `A` with `|N(A)| ≤ 2|A|` outside `cover` (the pair `S = T = A`).
    SetWitness { cover: VertexSet, a: VertexSet },
    /// No violating pair exists for the unique minimum cover.
    ConditionHolds { cover: VertexSet },
    /// The graph with no vertices.
    Degenerate,
}

impl Reason {
    pub fn kind(&self) -> &'static str {
        match self {
            Reason::MultipleCovers { .. } => "multiple-covers",
            Reason::PairWitness { .. } => "pair-witness",
            Reason::SetWitness { .. } => "set-witness",
            Reason::ConditionHolds { .. } => "condition-holds",
            Reason::Degenerate => "degenerate",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub verdict: Verdict,
    pub beta: usize,
    /// The Alcuin number: `beta` for class one, `beta + 1` for class two.
    pub c: usize,
    pub reason: Reason,
}

/// Outcome of the pair search for one minimum cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    Holds,
    /// First violating pair: least `|S| + |T|`, then least masks, `S ≤ T`.
    Violated { s: VertexSet, t: VertexSet },
}

#[derive(Clone)]
struct Candidate {
    set: VertexSet,
    outside: VertexSet,
}

pub fn classification_condition(g: &Graph, c: VertexSet) -> Result<Condition> {
    classification_condition_with(g, c, DEFAULT_PAIR_LIMIT)
}

pub fn classification_condition_with(g: &Graph, c: VertexSet, pair_limit: u64) -> Result<Condition> {
    check_minimum_cover(g, c)?;
    Ok(violating_pair(g, c, pair_limit)?
        .map_or(Condition::Holds, |(s, t)| Condition::Violated { s, t }))
}

fn violating_pair(g: &Graph, c: VertexSet, pair_limit: u64) -> Result<Option<(VertexSet, VertexSet)>> {
    let rest = g.vertices() - c;
    let mut by_size: Vec<Vec<Candidate>> = vec![Vec::new(); c.len() + 1];
    for set in independent_subsets(g, c, cover::DEFAULT_SUBSET_LIMIT)? {
        by_size[set.len()].push(Candidate {
            set,
            outside: g.open_neighborhood(set) & rest,
        });
    }
    let max = (1..by_size.len()).rev().find(|&k| !by_size[k].is_empty()).unwrap_or(0);
    let mut checked = 0u64;
    for total in 2..=2 * max {
        let mut best: Option<(VertexSet, VertexSet)> = None;
        for a in 1..=total / 2 {
            let b = total - a;
            if b > max {
                continue;
            }
            for (i, s) in by_size[a].iter().enumerate() {
                let ts = if a == b { &by_size[b][i..] } else { &by_size[b][..] };
                for t in ts {
                    checked += 1;
                    if checked > pair_limit {
                        return Err(Error::BudgetExceeded {
                            what: "classification pair search",
                            expanded: checked,
                        });
                    }
                    if (s.outside & t.outside).len() <= total {
                        let pair = if s.set <= t.set { (s.set, t.set) } else { (t.set, s.set) };
                        best = Some(best.map_or(pair, |b| b.min(pair)));
                    }
                }
            }
        }
        if best.is_some() {
            return Ok(best);
        }
    }
    Ok(None)
}

/// First nonempty independent `A ⊆ c` (by size, then mask) with
/// `|N_{V−c}(A)| ≤ 2|A|`.
pub fn exists_2x_witness(g: &Graph, c: VertexSet) -> Result<Option<VertexSet>> {
    check_minimum_cover(g, c)?;
    let rest = g.vertices() - c;
    let mut sets = independent_subsets(g, c, cover::DEFAULT_SUBSET_LIMIT)?;
    sets.sort_by_key(|a| (a.len(), *a));
    Ok(sets
        .into_iter()
        .find(|&a| (g.open_neighborhood(a) & rest).len() <= 2 * a.len()))
}

/// Cheap sufficient conditions for class one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FastPath {
    ClawFree,
    /// `u, v ∈ C` (possibly equal) with at most two common neighbours outside `C`.
    FewCommonNeighbors { u: usize, v: usize },
}

pub fn fast_paths(g: &Graph, c: VertexSet) -> Result<Option<FastPath>> {
    check_minimum_cover(g, c)?;
    if !c.is_empty() && g.is_claw_free() {
        return Ok(Some(FastPath::ClawFree));
    }
    let rest = g.vertices() - c;
    for u in c {
        for v in c - VertexSet::full(u) {
            if (g.neighbors(u) & g.neighbors(v) & rest).len() <= 2 {
                return Ok(Some(FastPath::FewCommonNeighbors { u, v }));
            }
        }
    }
    Ok(None)
}

pub fn classify(g: &Graph) -> Result<Classification> {
    classify_with(g, DEFAULT_PAIR_LIMIT)
}

pub fn classify_with(g: &Graph, pair_limit: u64) -> Result<Classification> {
    let report = cover::min_covers(g);
    classify_from_report(g, &report, pair_limit)
}

/// Classification reusing an existing cover enumeration.
pub fn classify_from_report(g: &Graph, report: &CoverReport, pair_limit: u64) -> Result<Classification> {
    let beta = report.beta;
    let one = |reason| Classification {
        verdict: Verdict::One,
        beta,
        c: beta,
        reason,
    };
    if g.n() == 0 {
        return Ok(one(Reason::Degenerate));
    }
    if report.covers.len() >= 2 {
        return Ok(one(Reason::MultipleCovers {
            first: report.covers[0],
            second: report.covers[1],
        }));
    }
    let cover = report.first();
    Ok(match violating_pair(g, cover, pair_limit)? {
        Some((s, t)) if s == t => one(Reason::SetWitness { cover, a: s }),
        Some((s, t)) => one(Reason::PairWitness { cover, s, t }),
        None => Classification {
            verdict: Verdict::Two,
            beta,
            c: beta + 1,
            reason: Reason::ConditionHolds { cover },
        },
    })
}

/// Runs the pair search on every minimum cover and reports whether the
/// verdicts agree with [`classify`]: each cover must yield a violating pair
/// when the graph is class one and none when it is class two.
pub fn condition_on_every_cover(g: &Graph) -> Result<bool> {
    let report = cover::min_covers(g);
    let class = classify_from_report(g, &report, DEFAULT_PAIR_LIMIT)?;
    if g.n() == 0 {
        return Ok(true);
    }
    for &c in &report.covers {
        let violated = violating_pair(g, c, DEFAULT_PAIR_LIMIT)?.is_some();
        if violated != (class.verdict == Verdict::One) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn set<const N: usize>(v: [usize; N]) -> VertexSet {
        v.into()
    }

    #[test]
    fn condition_examples() {
        assert_eq!(
            classification_condition(&star(3).unwrap(), set([0])).unwrap(),
            Condition::Holds
        );
        assert_eq!(
            classification_condition(&star(2).unwrap(), set([0])).unwrap(),
            Condition::Violated { s: set([0]), t: set([0]) }
        );
        // The smallest violating pair is S = T = {v1}: |{u1, u2}| = 2 ≤ 2.
        let fam = two_star_family(1).unwrap();
        assert_eq!(
            classification_condition(&fam, set([0, 1])).unwrap(),
            Condition::Violated { s: set([0]), t: set([0]) }
        );
        // From k = 2 on only the mixed pair ({v1}, {v2}) violates: one common leaf.
        let fam = two_star_family(2).unwrap();
        assert_eq!(
            classification_condition(&fam, set([0, 1])).unwrap(),
            Condition::Violated { s: set([0]), t: set([1]) }
        );
        assert_eq!(
            classification_condition(&star(3).unwrap(), set([1])),
            Err(Error::NotACover)
        );
    }

    #[test]
    fn classify_examples() {
        let claw = classify(&star(3).unwrap()).unwrap();
        assert_eq!((claw.verdict, claw.c), (Verdict::Two, 2));
        assert_eq!(claw.reason, Reason::ConditionHolds { cover: set([0]) });

        let c4 = classify(&cycle(4).unwrap()).unwrap();
        assert_eq!((c4.verdict, c4.c), (Verdict::One, 2));
        assert_eq!(
            c4.reason,
            Reason::MultipleCovers { first: set([0, 2]), second: set([1, 3]) }
        );

        let k1 = classify(&complete(1).unwrap()).unwrap();
        assert_eq!((k1.verdict, k1.beta, k1.c), (Verdict::Two, 0, 1));

        let e = classify(&Graph::empty(0).unwrap()).unwrap();
        assert_eq!((e.verdict, e.c, e.reason), (Verdict::One, 0, Reason::Degenerate));

        let p3 = classify(&path(3).unwrap()).unwrap();
        assert_eq!(p3.c, 1);
        assert_eq!(p3.reason, Reason::SetWitness { cover: set([1]), a: set([1]) });

        let fam = classify(&two_star_family(3).unwrap()).unwrap();
        assert_eq!(fam.verdict, Verdict::One);
        assert!(matches!(fam.reason, Reason::PairWitness { .. }));
    }

    #[test]
    fn doubled_neighbourhood_witness() {
        assert_eq!(exists_2x_witness(&star(2).unwrap(), set([0])).unwrap(), Some(set([0])));
        assert_eq!(exists_2x_witness(&star(3).unwrap(), set([0])).unwrap(), None);
        assert_eq!(
            exists_2x_witness(&cycle(6).unwrap(), set([0, 2, 4])).unwrap(),
            Some(set([0]))
        );
    }

    #[test]
    fn fast_path_examples() {
        let k3 = complete(3).unwrap();
        assert_eq!(fast_paths(&k3, set([0, 1])).unwrap(), Some(FastPath::ClawFree));
        // C4 is claw-free, so probe the pair branch on K_{2,2} plus a pendant claw-maker.
        let c4 = cycle(4).unwrap();
        assert_eq!(fast_paths(&c4, set([0, 2])).unwrap(), Some(FastPath::ClawFree));
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(
            fast_paths(&k23, set([0, 1])).unwrap(),
            None,
            "K_{{2,3}}: every pair shares all three leaves"
        );
        let k22 = complete_bipartite(2, 4).unwrap();
        assert_eq!(fast_paths(&k22, set([0, 1])).unwrap(), None);
        let spider = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (4, 5)]).unwrap();
        let cover = crate::cover::min_covers(&spider).first();
        assert!(matches!(
            fast_paths(&spider, cover).unwrap(),
            Some(FastPath::FewCommonNeighbors { .. })
        ));
        assert_eq!(fast_paths(&star(3).unwrap(), set([0])).unwrap(), None);
    }

    #[test]
    fn pair_budget() {
        let g = star(3).unwrap();
        assert!(matches!(
            classify_with(&g, 0),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn every_cover_agrees_small() {
        for n in 0..=5 {
            for g in all_labeled_graphs(n).unwrap() {
                assert!(condition_on_every_cover(&g).unwrap(), "{g:?}");
            }
        }
    }
}
