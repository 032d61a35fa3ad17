use std::collections::BTreeMap;
use std::io::BufRead;

use alcuin::classify::{exists_2x_witness, fast_paths, Verdict};
use alcuin::cover::{hall_strict, min_covers};
use alcuin::generators::all_labeled_graphs;
use alcuin::io::{parse_graph6, serialize_graph6};
use alcuin::oracle::alcuin_exact;
use alcuin::{classify, synthesize, verify_schedule, Girth, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::Failure;

const CHECKS: [&str; 8] = [
    "c_outside_beta_bounds",
    "class_two_with_non_strict_hall",
    "class_two_with_small_neighbourhood",
    "claw_free_class_two",
    "fast_path_on_class_two",
    "class_two_girth_above_four",
    "regular_class_two_without_triangle",
    "schedule_rejected",
];

#[derive(Default)]
struct Tally {
    graphs: u64,
    class_two: u64,
    disagreements: u64,
    violations: BTreeMap<&'static str, u64>,
    offenders: Vec<(String, String)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.graphs += other.graphs;
        self.class_two += other.class_two;
        self.disagreements += other.disagreements;
        for (k, v) in other.violations {
            *self.violations.entry(k).or_default() += v;
        }
        self.offenders.extend(other.offenders);
        self
    }

    fn flag(&mut self, what: &'static str, g: &Graph) {
        *self.violations.entry(what).or_default() += 1;
        let code = serialize_graph6(g).unwrap_or_else(|_| format!("{g:?}"));
        self.offenders.push((code, what.to_string()));
    }
}

#[derive(Serialize)]
struct Row {
    n: usize,
    graphs: u64,
    class_two: u64,
    disagreements: Option<u64>,
    violations: BTreeMap<&'static str, u64>,
}

#[derive(Serialize)]
struct Summary {
    source: &'static str,
    oracle: bool,
    sizes: Vec<Row>,
}

fn examine(g: &Graph, with_oracle: bool) -> Result<Tally, Failure> {
    let mut t = Tally {
        graphs: 1,
        ..Tally::default()
    };
    let class = classify(g)?;
    let two = class.verdict == Verdict::Two;
    t.class_two = u64::from(two);
    let beta = class.beta;
    if with_oracle {
        let exact = alcuin_exact(g)?;
        if exact.c != class.c {
            t.disagreements = 1;
            let code = serialize_graph6(g).unwrap_or_default();
            t.offenders
                .push((code, format!("classifier c={} search c={}", class.c, exact.c)));
        }
    }
    if class.c < beta || class.c > beta + 1 {
        t.flag(CHECKS[0], g);
    }
    let covers = min_covers(g);
    for &c in &covers.covers {
        if two && !hall_strict(g, c)? {
            t.flag(CHECKS[1], g);
        }
        if two && exists_2x_witness(g, c)?.is_some() {
            t.flag(CHECKS[2], g);
        }
        if two && fast_paths(g, c)?.is_some() {
            t.flag(CHECKS[4], g);
        }
    }
    let has_edge = g.edge_count() > 0;
    if two && has_edge && g.is_claw_free() {
        t.flag(CHECKS[3], g);
    }
    if two && beta >= 2 && g.girth() > Girth::Finite(4) {
        t.flag(CHECKS[5], g);
    }
    if two && has_edge && g.is_regular().is_some() && g.girth() != Girth::Finite(3) {
        t.flag(CHECKS[6], g);
    }
    match synthesize(g) {
        Ok(s) if s.capacity == class.c && verify_schedule(g, &s).is_ok() => {}
        _ => t.flag(CHECKS[7], g),
    }
    Ok(t)
}

fn row(n: usize, t: &Tally, with_oracle: bool) -> Row {
    let mut violations: BTreeMap<&'static str, u64> = CHECKS.iter().map(|&k| (k, 0)).collect();
    for (k, v) in &t.violations {
        *violations.entry(k).or_default() += v;
    }
    Row {
        n,
        graphs: t.graphs,
        class_two: t.class_two,
        disagreements: with_oracle.then_some(t.disagreements),
        violations,
    }
}

pub(crate) fn run(max_n: usize, stdin_graph6: bool, jobs: usize) -> Result<(), Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::new(1, e.to_string()))?;
    let (summary, tallies) = pool.install(|| {
        if stdin_graph6 {
            from_stdin()
        } else {
            exhaustive(max_n)
        }
    })?;
    crate::emit(&(serde_json::to_string_pretty(&summary).expect("summary serialises") + "\n"));
    let mut offenders: Vec<&(String, String)> = tallies.iter().flat_map(|t| &t.offenders).collect();
    offenders.sort();
    offenders.dedup();
    for (code, what) in &offenders {
        eprintln!("{code}\t{what}");
    }
    if offenders.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(
            1,
            format!("{} offending graphs", offenders.len()),
        ))
    }
}

fn exhaustive(max_n: usize) -> Result<(Summary, Vec<Tally>), Failure> {
    if max_n > 6 {
        return Err(Failure::new(2, format!("--max-n is at most 6, got {max_n}")));
    }
    let mut rows = Vec::new();
    let mut tallies = Vec::new();
    for n in 0..=max_n {
        let stream = all_labeled_graphs(n)?;
        let t = (0..stream.total())
            .into_par_iter()
            .map(|mask| examine(&stream.graph(mask), true))
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
        rows.push(row(n, &t, true));
        tallies.push(t);
    }
    let summary = Summary {
        source: "all labelled graphs",
        oracle: true,
        sizes: rows,
    };
    Ok((summary, tallies))
}

fn from_stdin() -> Result<(Summary, Vec<Tally>), Failure> {
    let mut graphs = Vec::new();
    for (i, line) in std::io::stdin().lock().lines().enumerate() {
        let line = line.map_err(|e| Failure::new(2, e.to_string()))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| Failure::new(2, format!("line {}: {e}", i + 1)))?;
        graphs.push(g);
    }
    let mut by_n: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    for g in graphs {
        by_n.entry(g.n()).or_default().push(g);
    }
    let mut rows = Vec::new();
    let mut tallies = Vec::new();
    for (n, gs) in by_n {
        let t = gs
            .par_iter()
            .map(|g| examine(g, false))
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
        rows.push(row(n, &t, false));
        tallies.push(t);
    }
    let summary = Summary {
        source: "standard input",
        oracle: false,
        sizes: rows,
    };
    Ok((summary, tallies))
}
