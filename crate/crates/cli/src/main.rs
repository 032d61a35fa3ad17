//! `alcuin`: analyze graphs, build and check ferry schedules, run surveys.

mod survey;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use alcuin::io::{self, Report};
use alcuin::oracle;
use alcuin::{classify, synthesize, verify_schedule, Error, Graph};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "alcuin", version, about = "Alcuin numbers of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full report for one graph.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        /// Aligned text instead of JSON.
        #[arg(long)]
        human: bool,
    },
    /// Build a feasible schedule.
    Schedule {
        #[command(flatten)]
        input: GraphInput,
        /// Boat capacity: `auto` (the Alcuin number) or an integer.
        #[arg(long, default_value = "auto")]
        capacity: String,
        /// Use breadth-first search for a schedule with the fewest crossings.
        #[arg(long)]
        shortest: bool,
        /// Print a bank-by-bank table instead of JSON.
        #[arg(long)]
        trace: bool,
        /// Comma-separated vertex names for the trace.
        #[arg(long)]
        labels: Option<String>,
    },
    /// Check a schedule document against a graph.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        schedule: PathBuf,
    },
    /// Classify every labelled graph up to a size and compare with the search.
    Survey {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Read graph6 lines from standard input (classification only).
        #[arg(long)]
        stdin_graph6: bool,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print the graph6 encoding of a named family member.
    Generate { spec: String },
}

#[derive(Args)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(conflicts_with_all = ["edge_list", "gen"])]
    graph6: Option<String>,
    /// Read an edge-list file.
    #[arg(long, value_name = "PATH", conflicts_with = "gen")]
    edge_list: Option<PathBuf>,
    /// Build a graph from a family spec such as `star:3`.
    #[arg(long, value_name = "SPEC")]
    gen: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, Failure> {
        if let Some(text) = &self.graph6 {
            Ok(io::parse_graph6(text)?)
        } else if let Some(path) = &self.edge_list {
            Ok(io::parse_edge_list(&read(path)?)?)
        } else if let Some(spec) = &self.gen {
            Ok(alcuin::generators::from_spec(spec)?)
        } else {
            Err(Failure::new(2, "no graph given (graph6, --edge-list or --gen)"))
        }
    }
}

/// An error message together with the process exit code it maps to.
#[derive(Debug)]
pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub(crate) fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            e if e.is_parse_error() => 2,
            Error::BudgetExceeded { .. } => 3,
            Error::InvalidWitness(_) | Error::NotACover | Error::NotMinimumCover { .. } => 2,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

/// Writes to standard output, treating a closed pipe as success.
pub(crate) fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { input, human } => analyze(&input, human),
        Command::Schedule {
            input,
            capacity,
            shortest,
            trace,
            labels,
        } => schedule(&input, &capacity, shortest, trace, labels.as_deref()),
        Command::Verify { input, schedule } => verify(&input, &schedule),
        Command::Survey {
            max_n,
            stdin_graph6,
            jobs,
        } => survey::run(max_n, stdin_graph6, jobs),
        Command::Generate { spec } => generate(&spec),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn analyze(input: &GraphInput, human: bool) -> Result<(), Failure> {
    let g = input.load()?;
    let report = io::analyze(&g)?;
    if human {
        emit(&human_report(&report));
    } else {
        emit(&(io::report_json(&report) + "\n"));
    }
    Ok(())
}

fn set(xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn human_report(r: &Report) -> String {
    let yes = |b: bool| if b { "yes" } else { "no" };
    let edges: Vec<String> = r.edges.iter().map(|[u, v]| format!("{u}-{v}")).collect();
    let covers: Vec<String> = r.covers.iter().map(|c| set(c)).collect();
    let girth = match &r.girth {
        io::GirthDoc::Finite(x) => x.to_string(),
        io::GirthDoc::Acyclic(s) => s.to_string(),
    };
    let witness: Vec<String> = r.witness.iter().map(|(k, v)| format!("{k}={}", set(v))).collect();
    let rows = [
        ("vertices", r.n.to_string()),
        ("edges", edges.join(" ")),
        ("alpha", r.alpha.to_string()),
        ("beta", r.beta.to_string()),
        (
            "min covers",
            format!("{}{}", covers.join(" "), if r.covers_truncated { " ..." } else { "" }),
        ),
        ("unique cover", yes(r.unique_cover).into()),
        ("girth", girth),
        ("regular", r.regular.map_or("no".into(), |d| format!("degree {d}"))),
        ("claw-free", yes(r.claw_free).into()),
        ("class", r.class.into()),
        ("alcuin number", r.c.to_string()),
        ("reason", format!("{} {}", r.reason, witness.join(" ")).trim_end().into()),
    ];
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<14} {v}");
    }
    out
}

fn schedule(
    input: &GraphInput,
    capacity: &str,
    shortest: bool,
    trace: bool,
    labels: Option<&str>,
) -> Result<(), Failure> {
    let g = input.load()?;
    let c = classify(&g)?.c;
    let requested = match capacity {
        "auto" => c,
        other => other
            .parse::<usize>()
            .map_err(|_| Failure::new(2, format!("capacity must be `auto` or an integer, got `{other}`")))?,
    };
    let sched = if shortest {
        let search = oracle::feasible(&g, requested)?;
        search.schedule.ok_or_else(|| infeasible(requested, c))?
    } else {
        if requested < c {
            return Err(infeasible(requested, c));
        }
        let mut s = synthesize(&g)?;
        s.capacity = requested;
        s
    };
    if trace {
        let labels: Option<Vec<String>> = labels.map(|l| l.split(',').map(|s| s.trim().to_string()).collect());
        emit(&alcuin::schedule::render_trace(&g, &sched, labels.as_deref())?);
    } else {
        emit(&(io::schedule_json(&sched) + "\n"));
    }
    Ok(())
}

fn infeasible(capacity: usize, c: usize) -> Failure {
    Failure::new(4, format!("no schedule with capacity {capacity}; the Alcuin number is {c}"))
}

fn verify(input: &GraphInput, path: &PathBuf) -> Result<(), Failure> {
    let g = input.load()?;
    let sched = io::parse_schedule_json(&read(path)?)?;
    match verify_schedule(&g, &sched) {
        Ok(()) => {
            emit(&format!("valid: {} crossings at capacity {}\n", sched.crossings(), sched.capacity));
            Ok(())
        }
        Err(v) => Err(Failure::new(5, format!("invalid: {v}"))),
    }
}

fn generate(spec: &str) -> Result<(), Failure> {
    let g = alcuin::generators::from_spec(spec)?;
    emit(&(io::serialize_graph6(&g)? + "\n"));
    Ok(())
}
