//! Deterministic constructors for the graph families used throughout the
//! crate, plus exhaustive and pseudo-random graph streams.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::io;

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Result<Graph> {
    Graph::from_edges(k + 1, (1..=k).map(|v| (0, v)))
}

/// `P_n`: 0 – 1 – … – (n-1).
pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// `C_n` for `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}`: parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i – i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("petersen is well formed")
}

/// Circulant graph: `i ~ i ± j (mod n)` for every jump `j`.
pub fn circulant(n: usize, jumps: &[usize]) -> Result<Graph> {
    let mut edges = Vec::new();
    for &j in jumps {
        if j == 0 || j % n.max(1) == 0 {
            return Err(Error::InvalidParameter(format!("bad circulant jump {j}")));
        }
        for i in 0..n {
            edges.push((i, (i + j) % n));
        }
    }
    Graph::from_edges(n, edges)
}

/// `Q_0 = K_1`, `Q_d = Q_{d-1} × K_2`.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 6 {
        return Err(Error::TooManyVertices {
            n: 1usize.checked_shl(d as u32).unwrap_or(usize::MAX),
            max: MAX_VERTICES,
        });
    }
    let k2 = complete(2)?;
    let mut cube = complete(1)?;
    for _ in 0..d {
        cube = cube.cartesian_product(&k2)?;
    }
    Ok(cube)
}

/// Two stars sharing one leaf: `v1 = 0`, `v2 = 1`, `u_i = 1 + i` for
/// `i = 1..=2k+1`; `v1` sees `u_1..u_{k+1}` and `v2` sees `u_{k+1}..u_{2k+1}`.
///
/// Class one for every `k ≥ 1`, yet `{v1, v2}` is the unique minimum cover
/// and every independent `A ⊆ {v1, v2}` has more than `k·|A|` outside
/// neighbours.
pub fn two_star_family(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("family index must be >= 1".into()));
    }
    let n = 2 * k + 3;
    let u = |i: usize| 1 + i;
    let left = (1..=k + 1).map(|i| (0, u(i)));
    let right = (k + 1..=2 * k + 1).map(|i| (1, u(i)));
    Graph::from_edges(n, left.chain(right))
}

/// Decodes a Prüfer sequence into a labelled tree on `len + 2` vertices.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    Graph::from_edges(n, edges)
}

/// Every Prüfer sequence of length `n - 2`, i.e. every labelled tree on `n ≥ 2` vertices.
pub fn all_pruefer_sequences(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let len = n.saturating_sub(2);
    let count = (n as u64).pow(len as u32);
    (0..count).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        seq
    })
}

/// Every labelled graph on `n ≤ 7` vertices.
///
/// Graph `m` contains the `i`-th vertex pair (in the order
/// `(0,1), (0,2), (1,2), (0,3), …`) iff bit `i` of `m` is set, so the
/// stream starts with the edgeless graph.
pub fn all_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > 7 {
        return Err(Error::TooManyVertices { n, max: 7 });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Ok(LabeledGraphs {
        n,
        total: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// Stream returned by [`all_labeled_graphs`].
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl LabeledGraphs {
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Graph number `mask` of the stream.
    pub fn graph(&self, mask: u64) -> Graph {
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(self.n, edges).expect("pairs are in range")
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.total {
            return None;
        }
        let g = self.graph(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

/// SplitMix64: state advances by `0x9E3779B97F4A7C15`, output mixed with
/// multipliers `0xBF58476D1CE4E5B9`, `0x94D049BB133111EB` and shifts 30/27/31.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// `G(n, p)` driven by [`SplitMix64`] seeded with `seed`.
///
/// Pairs are visited in the order `(0,1), (0,2), …, (0,n-1), (1,2), …`; each
/// consumes one draw and is kept iff the draw is `< p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Parses a family description such as `star:3`, `hypercube:2`,
/// `two-star:1`, `pruefer:0,0`, `circulant:8:1,2`, `random:8,0.5,42`
/// or `product:<graph6>,<graph6>`.
pub fn from_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let bad = || Error::UnknownFamily(spec.to_string());
    let ints = |s: &str| -> Result<Vec<usize>> {
        if s.is_empty() {
            return Ok(Vec::new());
        }
        s.split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    };
    let one = |s: &str| -> Result<usize> {
        match ints(s)?.as_slice() {
            [x] => Ok(*x),
            _ => Err(bad()),
        }
    };
    match name {
        "star" => star(one(args)?),
        "path" => path(one(args)?),
        "cycle" => cycle(one(args)?),
        "complete" => complete(one(args)?),
        "empty" => Graph::empty(one(args)?),
        "complete-bipartite" => match ints(args)?.as_slice() {
            [a, b] => complete_bipartite(*a, *b),
            _ => Err(bad()),
        },
        "petersen" if args.is_empty() => Ok(petersen()),
        "hypercube" => hypercube(one(args)?),
        "two-star" | "paper-family" => two_star_family(one(args)?),
        "pruefer" => tree_from_pruefer(&ints(args)?),
        "circulant" => {
            let (n, jumps) = args.split_once(':').ok_or_else(bad)?;
            circulant(one(n)?, &ints(jumps)?)
        }
        "random" => {
            let parts: Vec<&str> = args.split(',').collect();
            let [n, p, seed] = parts.as_slice() else {
                return Err(bad());
            };
            let n = n.trim().parse().map_err(|_| bad())?;
            let p = p.trim().parse().map_err(|_| bad())?;
            let seed = seed.trim().parse().map_err(|_| bad())?;
            random_graph(n, p, seed)
        }
        "product" => {
            let (a, b) = args.split_once(',').ok_or_else(bad)?;
            io::parse_graph6(a.trim())?.cartesian_product(&io::parse_graph6(b.trim())?)
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Girth, VertexSet};

    fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn stars() {
        let claw = star(3).unwrap();
        assert_eq!((claw.n(), claw.edge_count(), claw.degree(0)), (4, 3, 3));
        assert_eq!(star(0).unwrap().n(), 1);
        let p3 = star(2).unwrap();
        assert_eq!(edge_set(&p3), vec![(0, 1), (0, 2)]);
        assert!(star(64).is_err());
    }

    #[test]
    fn named_families() {
        assert_eq!(edge_set(&cycle(4).unwrap()), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        let p = petersen();
        assert_eq!((p.n(), p.edge_count(), p.is_regular()), (10, 15, Some(3)));
        assert_eq!(complete_bipartite(3, 3).unwrap().is_regular(), Some(3));
        assert!(cycle(2).is_err());
        assert_eq!(circulant(8, &[1, 2]).unwrap().is_regular(), Some(4));
        assert_eq!(circulant(4, &[1]).unwrap(), cycle(4).unwrap());
    }

    #[test]
    fn hypercubes() {
        assert_eq!(hypercube(0).unwrap(), complete(1).unwrap());
        assert_eq!(hypercube(1).unwrap(), complete(2).unwrap());
        for d in 0..=6 {
            let q = hypercube(d).unwrap();
            assert_eq!(q.n(), 1 << d);
            assert_eq!(q.edge_count(), d * (1 << d) / 2);
            if d >= 1 {
                assert_eq!(q.is_regular(), Some(d));
            }
            assert!(q.is_bipartite().is_some());
        }
        assert!(hypercube(7).is_err());
    }

    #[test]
    fn family_shape() {
        let g = two_star_family(1).unwrap();
        assert_eq!(edge_set(&g), vec![(0, 2), (0, 3), (1, 3), (1, 4)]);
        assert_eq!(two_star_family(2).unwrap().edge_count(), 6);
        for k in 1..=5 {
            let g = two_star_family(k).unwrap();
            assert_eq!(g.n(), 2 * k + 3);
            assert_eq!(g.degree(0), k + 1);
            assert_eq!(g.degree(1), k + 1);
            for i in 1..=2 * k + 1 {
                let expected = if i == k + 1 { 2 } else { 1 };
                assert_eq!(g.degree(1 + i), expected);
            }
        }
        assert!(two_star_family(0).is_err());
    }

    #[test]
    fn pruefer_decode() {
        assert_eq!(tree_from_pruefer(&[0, 0]).unwrap(), star(3).unwrap());
        assert_eq!(tree_from_pruefer(&[]).unwrap(), complete(2).unwrap());
        assert!(tree_from_pruefer(&[4, 0]).is_err());
        for n in 4..=5 {
            let seqs: Vec<_> = all_pruefer_sequences(n).collect();
            assert_eq!(seqs.len(), n.pow(n as u32 - 2));
            for seq in seqs {
                let t = tree_from_pruefer(&seq).unwrap();
                assert_eq!(t.edge_count(), n - 1);
                assert_eq!(t.girth(), Girth::Acyclic);
                // connected: BFS two-colouring puts everything reachable from 0
                let (a, b) = t.is_bipartite().unwrap();
                assert_eq!((a | b).len(), n);
                assert_eq!(components(&t), 1);
            }
        }
    }

    fn components(g: &Graph) -> usize {
        let mut seen = VertexSet::EMPTY;
        let mut count = 0;
        for v in 0..g.n() {
            if seen.contains(v) {
                continue;
            }
            count += 1;
            let mut frontier = VertexSet::singleton(v);
            while !frontier.is_empty() {
                seen |= frontier;
                frontier = g.open_neighborhood(frontier) - seen;
            }
        }
        count
    }

    #[test]
    fn labeled_streams() {
        assert_eq!(all_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(all_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(all_labeled_graphs(0).unwrap().count(), 1);
        let mut s = all_labeled_graphs(4).unwrap();
        assert_eq!(s.next().unwrap().edge_count(), 0);
        let all: std::collections::HashSet<_> = all_labeled_graphs(4).unwrap().collect();
        assert_eq!(all.len(), 64);
        assert!(all_labeled_graphs(8).is_err());
    }

    #[test]
    fn random_streams() {
        assert_eq!(random_graph(8, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(random_graph(8, 1.0, 1).unwrap(), complete(8).unwrap());
        assert_eq!(random_graph(8, 0.5, 42).unwrap(), random_graph(8, 0.5, 42).unwrap());
        assert_ne!(random_graph(12, 0.5, 1).unwrap(), random_graph(12, 0.5, 2).unwrap());
        assert!(random_graph(4, 1.5, 0).is_err());
    }

    #[test]
    fn splitmix_reference_values() {
        // Reference outputs of SplitMix64 seeded with 0.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn family_specs() {
        assert_eq!(from_spec("star:3").unwrap(), star(3).unwrap());
        assert_eq!(from_spec("hypercube:0").unwrap(), complete(1).unwrap());
        assert_eq!(from_spec("paper-family:1").unwrap().n(), 5);
        assert_eq!(from_spec("two-star:1").unwrap(), from_spec("paper-family:1").unwrap());
        assert_eq!(from_spec("pruefer:0,0").unwrap(), star(3).unwrap());
        assert_eq!(from_spec("complete-bipartite:2,3").unwrap().edge_count(), 6);
        assert_eq!(from_spec("circulant:7:1,2").unwrap().is_regular(), Some(4));
        assert_eq!(from_spec("product:A_,Bg").unwrap().n(), 6);
        assert_eq!(from_spec("petersen").unwrap(), petersen());
        assert!(matches!(from_spec("blob:3"), Err(Error::UnknownFamily(_))));
        assert!(from_spec("star:x").is_err());
        assert!(from_spec("star").is_err());
    }
}
