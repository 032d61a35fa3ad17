//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes and returns strings; results are JSON objects that
//! carry either the payload or an `"error"` field.

use alcuin::io::{self, Report};
use alcuin::schedule::{render_trace, Direction};
use alcuin::{generators, oracle, Graph, Schedule};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

#[derive(Serialize)]
struct Failure {
    error: String,
}

fn respond<T: Serialize>(result: Result<T, String>) -> String {
    match result {
        Ok(v) => serde_json::to_string(&v).expect("serialises"),
        Err(error) => serde_json::to_string(&Failure { error }).expect("serialises"),
    }
}

/// Accepts graph6 or a family spec (`star:3`, `petersen`, `random:8,0.3,1`, ...).
fn load(input: &str) -> Result<Graph, String> {
    let input = input.trim();
    io::parse_graph6(input).or_else(|g6_err| {
        generators::from_spec(input).map_err(|spec_err| {
            if input.contains(':') || input.chars().all(|c| c.is_ascii_lowercase()) {
                spec_err.to_string()
            } else {
                g6_err.to_string()
            }
        })
    })
}

#[derive(Serialize)]
struct Analysis {
    graph6: String,
    report: Report,
}

pub fn analyze_json(input: &str) -> String {
    respond(load(input).and_then(|g| {
        let report = io::analyze(&g).map_err(|e| e.to_string())?;
        let graph6 = io::serialize_graph6(&g).map_err(|e| e.to_string())?;
        Ok(Analysis { graph6, report })
    }))
}

/// Bank contents while the boat is on the water.
#[derive(Serialize)]
struct Step {
    dir: &'static str,
    left: Vec<usize>,
    boat: Vec<usize>,
    right: Vec<usize>,
}

#[derive(Serialize)]
struct Plan {
    n: usize,
    capacity: usize,
    crossings: usize,
    steps: Vec<Step>,
    trace: String,
}

fn plan(g: &Graph, sched: &Schedule) -> Result<Plan, String> {
    let trace = render_trace(g, sched, None).map_err(|e| e.to_string())?;
    let mut left = g.vertices();
    let mut right = alcuin::VertexSet::EMPTY;
    let mut steps = Vec::with_capacity(sched.moves.len());
    for m in &sched.moves {
        match m.direction {
            Direction::LeftToRight => left -= m.cargo,
            Direction::RightToLeft => right -= m.cargo,
        }
        steps.push(Step {
            dir: match m.direction {
                Direction::LeftToRight => "LR",
                Direction::RightToLeft => "RL",
            },
            left: left.to_vec(),
            boat: m.cargo.to_vec(),
            right: right.to_vec(),
        });
        match m.direction {
            Direction::LeftToRight => right |= m.cargo,
            Direction::RightToLeft => left |= m.cargo,
        }
    }
    Ok(Plan {
        n: g.n(),
        capacity: sched.capacity,
        crossings: sched.crossings(),
        steps,
        trace,
    })
}

/// `capacity == 0` means the Alcuin number. `shortest` switches to the
/// exhaustive search (small graphs only).
pub fn schedule_json(input: &str, capacity: usize, shortest: bool) -> String {
    respond(load(input).and_then(|g| {
        let sched = if shortest {
            let b = if capacity == 0 {
                alcuin::classify(&g).map_err(|e| e.to_string())?.c
            } else {
                capacity
            };
            let found = oracle::feasible(&g, b).map_err(|e| e.to_string())?;
            found
                .schedule
                .ok_or_else(|| format!("no schedule with capacity {b}"))?
        } else {
            let mut s = alcuin::synthesize(&g).map_err(|e| e.to_string())?;
            if capacity != 0 {
                if capacity < s.capacity {
                    return Err(format!(
                        "no schedule with capacity {capacity}; the Alcuin number is {}",
                        s.capacity
                    ));
                }
                s.capacity = capacity;
            }
            s
        };
        plan(&g, &sched)
    }))
}

#[derive(Serialize)]
struct Generated {
    graph6: String,
}

pub fn random_json(n: usize, p: f64, seed: u64) -> String {
    respond(
        generators::random_graph(n, p, seed)
            .and_then(|g| io::serialize_graph6(&g))
            .map(|graph6| Generated { graph6 })
            .map_err(|e| e.to_string()),
    )
}

#[wasm_bindgen]
pub fn analyze(input: &str) -> String {
    analyze_json(input)
}

#[wasm_bindgen]
pub fn schedule(input: &str, capacity: u32, shortest: bool) -> String {
    schedule_json(input, capacity as usize, shortest)
}

#[wasm_bindgen]
pub fn random(n: u32, p: f64, seed: u32) -> String {
    random_json(n as usize, p, u64::from(seed))
}
