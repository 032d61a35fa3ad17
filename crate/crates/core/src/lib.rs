//! Exact solver for the Alcuin number of small conflict graphs.
//!
//! A ferryman must move every vertex of a graph across a river in a boat of
//! bounded capacity, never leaving two adjacent vertices alone on a bank. The
//! least capacity that admits such a schedule is the Alcuin number `c(G)`,
//! and it is always either the vertex cover number `β(G)` (class one) or
//! `β(G) + 1` (class two).
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bitset graphs with at most 64 vertices and their invariants.
//! * [`generators`]: the named families, Prüfer trees, exhaustive and random streams.
//! * [`cover`]: independence number, enumeration of minimum vertex covers, and
//!   the strict Hall test for cover uniqueness.
//! * [`classify`]: the common-neighbourhood criterion deciding class one vs. two.
//! * [`schedule`]: explicit ferry schedules, a schedule verifier and the
//!   five-set structure certificate.
//! * [`oracle`]: breadth-first search over bank states, the independent ground truth.
//! * [`io`]: graph6, edge lists and JSON documents.

pub mod classify;
pub mod cover;
mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod schedule;

pub use classify::{classify, Classification, Reason, Verdict};
pub use cover::{alpha, min_covers, CoverReport};
pub use error::{Error, Result};
pub use graph::{Girth, Graph, VertexSet, MAX_VERTICES};
pub use oracle::{alcuin_exact, feasible, ExactAlcuin, SearchResult};
pub use schedule::{synthesize, verify_schedule, Direction, Move, Schedule, Violation};
