//! Text interchange formats.
//!
//! * graph6 (short form only, `n ≤ 62`).
//! * Edge lists: a `n <count>` header, then one `u v` pair per line; `#`
//!   starts a comment.
//! * JSON schedule and analysis documents with a fixed key order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::{self, Reason, Verdict};
use crate::cover;
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph, VertexSet};
use crate::schedule::{Direction, Move, Schedule};

/// Largest order expressible with a one-byte graph6 header.
pub const GRAPH6_MAX_N: usize = 62;

fn upper_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!("bad header byte {head}")));
    }
    let n = (head - 63) as usize;
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6("extended size headers are not supported".into()));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "n = {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    if let Some(&bad) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("bad data byte {bad}")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let edges = upper_pairs(n).enumerate().filter(|&(k, _)| bit(k)).map(|(_, e)| e);
    Graph::from_edges(n, edges)
}

pub fn serialize_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::TooManyVertices {
            n,
            max: GRAPH6_MAX_N,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    for (k, (i, j)) in upper_pairs(n).enumerate() {
        if g.has_edge(i, j) {
            data[k / 6] |= 1 << (5 - k % 6);
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((63 + n as u8) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(order) = n else {
            match fields.as_slice() {
                ["n", count] => {
                    let count: usize = count
                        .parse()
                        .map_err(|_| err(format!("bad vertex count `{count}`")))?;
                    if count > crate::MAX_VERTICES {
                        return Err(err(format!("{count} vertices exceed the limit")));
                    }
                    n = Some(count);
                    continue;
                }
                _ => return Err(err("expected header `n <count>`".into())),
            }
        };
        let [u, v] = fields.as_slice() else {
            return Err(err(format!("expected `u v`, found `{line}`")));
        };
        let parse = |s: &str| -> Result<usize> {
            let x: usize = s.parse().map_err(|_| err(format!("bad vertex `{s}`")))?;
            if x >= order {
                return Err(err(format!("vertex {x} out of range 0..{order}")));
            }
            Ok(x)
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing header `n <count>`".into(),
    })?;
    Graph::from_edges(n, edges)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct MoveDoc {
    dir: Direction,
    cargo: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScheduleDoc {
    capacity: usize,
    moves: Vec<MoveDoc>,
}

/// `{"capacity": b, "moves": [{"dir": "LR"|"RL", "cargo": [..]}, ..]}`.
pub fn schedule_json(sched: &Schedule) -> String {
    let doc = ScheduleDoc {
        capacity: sched.capacity,
        moves: sched
            .moves
            .iter()
            .map(|m| MoveDoc {
                dir: m.direction,
                cargo: m.cargo.to_vec(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("schedule serialises")
}

pub fn parse_schedule_json(text: &str) -> Result<Schedule> {
    let doc: ScheduleDoc =
        serde_json::from_str(text).map_err(|e| Error::ScheduleFormat(e.to_string()))?;
    let mut moves = Vec::with_capacity(doc.moves.len());
    for m in doc.moves {
        if let Some(&v) = m.cargo.iter().find(|&&v| v >= crate::MAX_VERTICES) {
            return Err(Error::ScheduleFormat(format!("vertex {v} out of range")));
        }
        moves.push(Move::new(m.dir, m.cargo.into_iter().collect()));
    }
    Ok(Schedule {
        capacity: doc.capacity,
        moves,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum GirthDoc {
    Finite(usize),
    Acyclic(&'static str),
}

impl From<Girth> for GirthDoc {
    fn from(g: Girth) -> Self {
        match g {
            Girth::Finite(x) => GirthDoc::Finite(x),
            Girth::Acyclic => GirthDoc::Acyclic("acyclic"),
        }
    }
}

/// Everything known about one graph; serialises to the analysis document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub alpha: usize,
    pub beta: usize,
    pub covers: Vec<Vec<usize>>,
    pub covers_truncated: bool,
    pub unique_cover: bool,
    pub girth: GirthDoc,
    pub regular: Option<usize>,
    pub claw_free: bool,
    pub class: &'static str,
    pub c: usize,
    pub reason: &'static str,
    pub witness: BTreeMap<&'static str, Vec<usize>>,
}

pub fn analyze(g: &Graph) -> Result<Report> {
    let covers = cover::min_covers(g);
    let class = classify::classify_from_report(g, &covers, classify::DEFAULT_PAIR_LIMIT)?;
    let mut witness = BTreeMap::new();
    let mut put = |k, s: VertexSet| {
        witness.insert(k, s.to_vec());
    };
    match class.reason {
        Reason::MultipleCovers { first, second } => {
            put("first", first);
            put("second", second);
        }
        Reason::PairWitness { cover, s, t } => {
            put("cover", cover);
            put("s", s);
            put("t", t);
        }
        Reason::SetWitness { cover, a } => {
            put("cover", cover);
            put("a", a);
        }
        Reason::ConditionHolds { cover } => put("cover", cover),
        Reason::Degenerate => {}
    }
    Ok(Report {
        n: g.n(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        alpha: g.n() - covers.beta,
        beta: covers.beta,
        covers: covers.covers.iter().map(|c| c.to_vec()).collect(),
        covers_truncated: covers.truncated,
        unique_cover: covers.unique,
        girth: g.girth().into(),
        regular: g.is_regular(),
        claw_free: g.is_claw_free(),
        class: match class.verdict {
            Verdict::One => "one",
            Verdict::Two => "two",
        },
        c: class.c,
        reason: class.reason.kind(),
        witness,
    })
}

pub fn report_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serialises")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn graph6_golden() {
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3).unwrap());
        assert_eq!(parse_graph6("Bg").unwrap(), path(3).unwrap());
        assert_eq!(serialize_graph6(&complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(serialize_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(serialize_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        // Reference encoding of the 5-vertex graph 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(serialize_graph6(&g).unwrap(), "DQc");
        assert_eq!(serialize_graph6(&petersen()).unwrap().len(), 1 + 8);
    }

    #[test]
    fn graph6_rejections() {
        // n = 5 needs exactly two payload bytes.
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("D???"), Err(Error::Graph6(_))));
        assert_eq!(parse_graph6("D??").unwrap(), Graph::empty(5).unwrap());
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("Bw ").is_err());
        assert!(parse_graph6("Bw\n").is_err());
        assert!(parse_graph6("B\x7f").is_err());
        assert!(parse_graph6("~").is_err());
        // 'x' = 111001: last bit is padding for n = 3.
        assert!(parse_graph6("Bx").is_err());
        assert!(serialize_graph6(&Graph::empty(63).unwrap()).is_err());
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("# puzzle\nn 3\n0 1\n1 2 # goat\n\n1 0\n").unwrap();
        assert_eq!(g, path(3).unwrap());
        assert_eq!(serialize_edge_list(&g), "n 3\n0 1\n1 2\n");
        assert_eq!(
            parse_edge_list("n 2\n0 0"),
            Err(Error::Parse {
                line: 2,
                message: "self-loop at vertex 0".into()
            })
        );
        assert!(matches!(parse_edge_list("n 2\n0 5"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("n 3\n0 1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_edge_list("").is_err());
        assert_eq!(parse_edge_list("n 0").unwrap().n(), 0);
    }

    #[test]
    fn schedule_documents() {
        let mut s = Schedule::new(1);
        let cargo: [&[usize]; 7] = [&[1], &[], &[2], &[1], &[0], &[], &[1]];
        for c in cargo {
            s.push(c.iter().copied().collect());
        }
        let text = schedule_json(&s);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["moves"].as_array().unwrap().len(), 7);
        assert_eq!(v["moves"][0]["cargo"], serde_json::json!([1]));
        assert_eq!(v["moves"][1]["dir"], "RL");
        assert!(text.find("capacity").unwrap() < text.find("moves").unwrap());
        assert_eq!(parse_schedule_json(&text).unwrap(), s);
        assert!(parse_schedule_json("{\"capacity\": 1}").is_err());
        assert!(parse_schedule_json("{\"capacity\": 1, \"moves\": [{\"dir\": \"UP\", \"cargo\": []}]}").is_err());
    }

    #[test]
    fn reports() {
        let r = analyze(&star(3).unwrap()).unwrap();
        assert_eq!((r.class, r.c, r.reason), ("two", 2, "condition-holds"));
        let v: serde_json::Value = serde_json::from_str(&report_json(&r)).unwrap();
        assert_eq!(v["class"], "two");
        assert_eq!(v["c"], 2);
        assert_eq!(v["girth"], "acyclic");
        assert_eq!(v["regular"], serde_json::Value::Null);

        let e = analyze(&Graph::empty(0).unwrap()).unwrap();
        assert_eq!(e.c, 0);
        let k3 = analyze(&complete(3).unwrap()).unwrap();
        assert_eq!((k3.c, k3.reason, k3.covers.len()), (2, "multiple-covers", 3));
        let text = report_json(&k3);
        assert_eq!(text, report_json(&analyze(&complete(3).unwrap()).unwrap()));
        let keys: Vec<usize> = ["\"n\"", "\"edges\"", "\"alpha\"", "\"beta\"", "\"covers\"", "\"girth\"", "\"class\"", "\"c\"", "\"witness\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }
}
