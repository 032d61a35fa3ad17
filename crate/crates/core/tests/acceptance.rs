//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p alcuin --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use alcuin::classify::{self, exists_2x_witness, fast_paths, Verdict};
use alcuin::cover::{self, hall_strict};
use alcuin::generators::{self, all_labeled_graphs, all_pruefer_sequences};
use alcuin::io::{parse_graph6, serialize_graph6};
use alcuin::oracle::{self, alcuin_exact};
use alcuin::schedule::{
    render_trace, schedule_generic, structure_check, structure_search, synthesize, verify_schedule,
};
use alcuin::{Girth, Graph, VertexSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn g6(g: &Graph) -> String {
    serialize_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

fn universe(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(|n| all_labeled_graphs(n).unwrap())
}

fn classic_puzzle() -> Outcome {
    let start = Instant::now();
    let p3 = parse_graph6("Bg").map_err(|e| e.to_string())?;
    let exact = alcuin_exact(&p3).map_err(|e| e.to_string())?;
    ensure!(exact.c == 1, "c = {}", exact.c);
    let search = oracle::feasible(&p3, 1).map_err(|e| e.to_string())?;
    ensure!(search.min_crossings == Some(7), "min crossings {:?}", search.min_crossings);
    let labels: Vec<String> = ["w", "g", "c"].iter().map(|s| s.to_string()).collect();
    let trace = render_trace(&p3, search.schedule.as_ref().unwrap(), Some(&labels))
        .map_err(|e| e.to_string())?;
    let rows: Vec<&str> = trace.lines().collect();
    ensure!(rows.len() == 7, "{} rows", rows.len());
    ensure!(rows[0] == "w, c | g → | ∅", "row 1 = {:?}", rows[0]);
    ensure!(rows[6] == "∅ | g → | w, c", "row 7 = {:?}", rows[6]);
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("c=1, 7 crossings, rows match, {elapsed:?}"))
}

fn oracle_agreement() -> Outcome {
    let start = Instant::now();
    let mut count = 0u64;
    for g in universe(6) {
        let class = classify::classify(&g).map_err(|e| e.to_string())?;
        let exact = alcuin_exact(&g).map_err(|e| format!("{}: {e}", g6(&g)))?;
        ensure!(class.c == exact.c, "{}: classifier c={} oracle c={}", g6(&g), class.c, exact.c);
        ensure!(class.beta == exact.beta, "{}: beta mismatch", g6(&g));
        ensure!(
            class.beta <= exact.c && exact.c <= class.beta + 1,
            "{}: c={} outside [beta, beta+1]",
            g6(&g),
            exact.c
        );
        count += 1;
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    Ok(format!("{count} graphs, 0 disagreements, {elapsed:?}"))
}

fn schedule_soundness() -> Outcome {
    let mut count = 0u64;
    for g in universe(6) {
        let class = classify::classify(&g).map_err(|e| e.to_string())?;
        let sched = synthesize(&g).map_err(|e| format!("{}: {e}", g6(&g)))?;
        ensure!(verify_schedule(&g, &sched).is_ok(), "{}: synthesized schedule invalid", g6(&g));
        ensure!(sched.capacity == class.c, "{}: capacity {} != c {}", g6(&g), sched.capacity, class.c);
        let cover = cover::min_covers(&g).first();
        let generic = schedule_generic(&g, cover).map_err(|e| e.to_string())?;
        ensure!(generic.capacity == class.beta + 1, "{}: generic capacity", g6(&g));
        ensure!(verify_schedule(&g, &generic).is_ok(), "{}: generic schedule invalid", g6(&g));
        count += 1;
    }
    Ok(format!("{count} graphs, every schedule verified"))
}

fn hall_uniqueness() -> Outcome {
    let mut checks = 0u64;
    for g in universe(6) {
        let report = cover::min_covers(&g);
        for &c in &report.covers {
            let hall = hall_strict(&g, c).map_err(|e| e.to_string())?;
            ensure!(hall == report.unique, "{}: cover {c:?} hall={hall} unique={}", g6(&g), report.unique);
            checks += 1;
        }
    }
    Ok(format!("{checks} (graph, cover) pairs"))
}

fn structure_matches_search() -> Outcome {
    let mut checks = 0u64;
    for n in 1..=5 {
        for g in all_labeled_graphs(n).unwrap() {
            for b in 1..=n {
                let witness = structure_search(&g, b).map_err(|e| e.to_string())?;
                let feasible = oracle::feasible(&g, b).map_err(|e| e.to_string())?.feasible;
                ensure!(
                    witness.is_some() == feasible,
                    "{} b={b}: certificate {} vs search {feasible}",
                    g6(&g),
                    witness.is_some()
                );
                if let Some(w) = witness {
                    ensure!(structure_check(&g, &w), "{} b={b}: certificate fails its own check", g6(&g));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (graph, capacity) pairs"))
}

fn trees() -> Outcome {
    let mut count = 0u64;
    for n in 4..=7 {
        for seq in all_pruefer_sequences(n) {
            let t = generators::tree_from_pruefer(&seq).map_err(|e| e.to_string())?;
            let class = classify::classify(&t).map_err(|e| e.to_string())?;
            let is_star = (0..n).any(|v| t.degree(v) == n - 1);
            ensure!(
                (class.verdict == Verdict::Two) == is_star,
                "tree {seq:?}: verdict {:?}, star={is_star}",
                class.verdict
            );
            let expected_c = if is_star { 2 } else { class.beta };
            ensure!(class.c == expected_c, "tree {seq:?}: c={}", class.c);
            count += 1;
        }
    }
    Ok(format!("{count} labelled trees"))
}

fn corollaries() -> Outcome {
    let mut two = 0u64;
    let mut total = 0u64;
    for g in universe(6) {
        total += 1;
        let class = classify::classify(&g).map_err(|e| e.to_string())?;
        let report = cover::min_covers(&g);
        let is_two = class.verdict == Verdict::Two;
        two += u64::from(is_two);
        if g.edge_count() > 0 && g.is_claw_free() {
            ensure!(!is_two, "{}: claw-free but class two", g6(&g));
        }
        for &c in &report.covers {
            if is_two {
                ensure!(hall_strict(&g, c).unwrap(), "{}: class two without strict Hall", g6(&g));
                ensure!(
                    exists_2x_witness(&g, c).unwrap().is_none(),
                    "{}: class two with |N(A)| <= 2|A|",
                    g6(&g)
                );
            }
            if fast_paths(&g, c).unwrap().is_some() {
                ensure!(!is_two, "{}: fast path fired on a class-two graph", g6(&g));
            }
        }
        if is_two && class.beta >= 2 {
            ensure!(g.girth() <= Girth::Finite(4), "{}: class two, beta >= 2, girth {}", g6(&g), g.girth());
        }
        if is_two && g.edge_count() > 0 && g.is_regular().is_some() {
            ensure!(g.girth() == Girth::Finite(3), "{}: regular class two with girth {}", g6(&g), g.girth());
        }
    }
    Ok(format!("{total} graphs ({two} class two), 0 counterexamples"))
}

fn regular_catalog() -> Outcome {
    let mut catalog: Vec<(String, Graph)> = Vec::new();
    for n in 3..=12 {
        catalog.push((format!("C{n}"), generators::cycle(n).unwrap()));
    }
    catalog.push(("K4".into(), generators::complete(4).unwrap()));
    catalog.push(("K5".into(), generators::complete(5).unwrap()));
    catalog.push(("K3,3".into(), generators::complete_bipartite(3, 3).unwrap()));
    catalog.push(("K4,4".into(), generators::complete_bipartite(4, 4).unwrap()));
    catalog.push(("Q3".into(), generators::hypercube(3).unwrap()));
    catalog.push(("Q4".into(), generators::hypercube(4).unwrap()));
    catalog.push(("Petersen".into(), generators::petersen()));
    for n in 5..=10 {
        catalog.push((format!("C{n}(1,2)"), generators::circulant(n, &[1, 2]).unwrap()));
    }
    let mut oracle_checked = 0;
    for (name, g) in &catalog {
        let r = g.is_regular().ok_or(format!("{name} is not regular"))?;
        ensure!((2..=5).contains(&r), "{name}: degree {r}");
        let class = classify::classify(g).map_err(|e| e.to_string())?;
        ensure!(class.verdict == Verdict::One, "{name}: class two");
        let n = g.n();
        ensure!(class.beta >= n.div_ceil(2).max(r), "{name}: beta {} below bound", class.beta);
        if n <= 10 {
            let exact = alcuin_exact(g).map_err(|e| e.to_string())?;
            ensure!(exact.c == class.c, "{name}: oracle c={} classifier c={}", exact.c, class.c);
            oracle_checked += 1;
        }
    }
    Ok(format!("{} graphs class one, {oracle_checked} oracle-confirmed", catalog.len()))
}

fn products() -> Outcome {
    let factors: Vec<(&str, Graph)> = vec![
        ("K1", generators::complete(1).unwrap()),
        ("K2", generators::complete(2).unwrap()),
        ("P3", generators::path(3).unwrap()),
        ("K1,3", generators::star(3).unwrap()),
        ("K1,4", generators::star(4).unwrap()),
        ("C4", generators::cycle(4).unwrap()),
        ("C5", generators::cycle(5).unwrap()),
    ];
    let is_two = |g: &Graph| classify::classify(g).map(|c| c.verdict == Verdict::Two);
    let mut pairs = 0;
    let mut oracle_checked = 0;
    for (gn, g) in &factors {
        for (hn, h) in &factors {
            if g.n() * h.n() > 12 {
                continue;
            }
            let prod = g.cartesian_product(h).map_err(|e| e.to_string())?;
            let class = classify::classify(&prod).map_err(|e| e.to_string())?;
            let k1 = |x: &Graph| x.n() == 1;
            let predicted = (k1(g) && is_two(h).unwrap()) || (k1(h) && is_two(g).unwrap());
            ensure!(
                (class.verdict == Verdict::Two) == predicted,
                "{gn} x {hn}: verdict {:?}, predicted two={predicted}",
                class.verdict
            );
            if prod.n() <= 10 {
                let exact = alcuin_exact(&prod).map_err(|e| e.to_string())?;
                ensure!(exact.c == class.c, "{gn} x {hn}: oracle disagrees");
                oracle_checked += 1;
            }
            pairs += 1;
        }
    }
    let claw = generators::star(3).unwrap();
    let k1 = generators::complete(1).unwrap();
    let k2 = generators::complete(2).unwrap();
    ensure!(is_two(&k1.cartesian_product(&claw).unwrap()).unwrap(), "K1 x K1,3 not class two");
    ensure!(!is_two(&k2.cartesian_product(&claw).unwrap()).unwrap(), "K2 x K1,3 not class one");
    Ok(format!("{pairs} ordered factor pairs, {oracle_checked} oracle-confirmed"))
}

fn hypercubes() -> Outcome {
    for (d, beta) in [(1, 1), (2, 2), (3, 4)] {
        let q = generators::hypercube(d).unwrap();
        let class = classify::classify(&q).map_err(|e| e.to_string())?;
        let exact = alcuin_exact(&q).map_err(|e| e.to_string())?;
        ensure!(class.verdict == Verdict::One, "Q{d} class two");
        ensure!(exact.c == beta && class.c == beta, "Q{d}: c={} expected {beta}", exact.c);
    }
    let q4 = generators::hypercube(4).unwrap();
    let class = classify::classify(&q4).map_err(|e| e.to_string())?;
    ensure!(class.verdict == Verdict::One && class.c == 8, "Q4: {class:?}");
    Ok("Q1..Q3 oracle-confirmed, Q4 classified (16 vertices exceed the search budget)".into())
}

fn counterexample_family() -> Outcome {
    for k in 1..=3 {
        let g = generators::two_star_family(k).unwrap();
        let class = classify::classify(&g).map_err(|e| e.to_string())?;
        ensure!(class.verdict == Verdict::One, "k={k}: class two");
        let exact = alcuin_exact(&g).map_err(|e| e.to_string())?;
        ensure!(exact.c == class.c && exact.c == 2, "k={k}: oracle c={}", exact.c);
        let report = cover::min_covers(&g);
        let c = VertexSet::from([0, 1]);
        ensure!(report.unique && report.first() == c, "k={k}: covers {:?}", report.covers);
        let rest = g.vertices() - c;
        for a in cover::independent_subsets(&g, c, 16).unwrap() {
            let reach = (g.open_neighborhood(a) & rest).len();
            ensure!(reach > k * a.len(), "k={k}: |N({a:?})| = {reach} <= {}", k * a.len());
        }
    }
    Ok("k = 1, 2, 3 class one with unique cover {v1, v2}".into())
}

fn graph6_roundtrips() -> Outcome {
    let mut count = 0;
    for g in universe(5) {
        let text = serialize_graph6(&g).map_err(|e| e.to_string())?;
        let back = parse_graph6(&text).map_err(|e| e.to_string())?;
        ensure!(back == g, "{text}: parse(serialize(g)) != g");
        ensure!(serialize_graph6(&back).unwrap() == text, "{text}: serialize(parse(s)) != s");
        count += 1;
    }
    ensure!(parse_graph6("Bw").unwrap() == generators::complete(3).unwrap(), "Bw");
    ensure!(parse_graph6("Bg").unwrap() == generators::path(3).unwrap(), "Bg");
    ensure!(serialize_graph6(&generators::complete(3).unwrap()).unwrap() == "Bw", "K3");
    ensure!(serialize_graph6(&generators::path(3).unwrap()).unwrap() == "Bg", "P3");
    Ok(format!("{count} graphs round-trip"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("wolf-goat-cabbage schedule reproduced", classic_puzzle),
        ("classifier equals state-space search, n <= 6", oracle_agreement),
        ("synthesized schedules verify at capacity c", schedule_soundness),
        ("strict Hall condition iff unique minimum cover", hall_uniqueness),
        ("five-set certificate iff feasible, n <= 5", structure_matches_search),
        ("trees are class two iff large stars", trees),
        ("necessary conditions for class two", corollaries),
        ("regular catalog is class one", regular_catalog),
        ("cartesian products", products),
        ("hypercubes are class one", hypercubes),
        ("two-star family is class one", counterexample_family),
        ("graph6 round trips", graph6_roundtrips),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:2} PASS [{secs:7.2}s] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} FAIL [{secs:7.2}s] {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
