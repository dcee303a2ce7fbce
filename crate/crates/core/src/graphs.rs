//! Weighted graphs over exact rationals: shortest-path metrics, induced
//! betweenness structures and adjacency graph extraction.
//!
//! Every metric decision is made with arbitrary-precision rational
//! arithmetic; equality tests are exact.

use num::{BigRational, Zero};

use crate::error::{Error, Result};
use crate::structure::{binom2, BetweennessStructure, Point, MAX_ORDER};

/// Rank of the unordered pair `i < j` among all pairs.
pub fn pair_rank(i: Point, j: Point) -> usize {
    debug_assert!(i < j);
    binom2(j) + i
}

/// Inverse of [`pair_rank`].
pub fn pair_unrank(rank: usize) -> (Point, Point) {
    let mut j = 1;
    while binom2(j + 1) <= rank {
        j += 1;
    }
    (rank - binom2(j), j)
}

/// A connected simple graph with positive rational edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<(Point, Point, BigRational)>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<(Point, Point, BigRational)>) -> Result<Self> {
        if n < 1 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                n,
                min: 1,
                max: MAX_ORDER,
            });
        }
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen = vec![false; binom2(n)];
        for (u, v, w) in edges {
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop".into(),
                });
            }
            if u >= n || v >= n {
                return Err(Error::PointOutOfRange { p: u.max(v), n });
            }
            if w <= BigRational::zero() {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: format!("non-positive weight {w}"),
                });
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            let r = pair_rank(a, b);
            if seen[r] {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "duplicate edge".into(),
                });
            }
            seen[r] = true;
            normalized.push((a, b, w));
        }
        normalized.sort_by_key(|&(a, b, _)| pair_rank(a, b));
        let g = WeightedGraph {
            n,
            edges: normalized,
        };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Unit-weight graph from an edge list.
    pub fn unit(n: usize, edges: &[(Point, Point)]) -> Result<Self> {
        Self::new(
            n,
            edges
                .iter()
                .map(|&(u, v)| (u, v, BigRational::from_integer(1.into())))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Point, Point, BigRational)] {
        &self.edges
    }

    fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.n];
        for (u, v, _) in &self.edges {
            adj[*u].push(*v);
            adj[*v].push(*u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Rescale every edge weight by a positive factor.
    pub fn scaled(&self, factor: &BigRational) -> Result<Self> {
        Self::new(
            self.n,
            self.edges
                .iter()
                .map(|(u, v, w)| (*u, *v, w * factor))
                .collect(),
        )
    }

    /// Serialize in the `.wg` text format.
    pub fn to_wg(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v, w) in &self.edges {
            if w.is_integer() {
                out.push_str(&format!("e {} {} {}\n", u, v, w.numer()));
            } else {
                out.push_str(&format!("e {} {} {}/{}\n", u, v, w.numer(), w.denom()));
            }
        }
        out
    }

    /// Parse the `.wg` text format: `n <count>` then `e u v p/q` lines
    /// (`/q` optional for integer weights). `#` starts a comment.
    pub fn from_wg(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse {
                line: lineno + 1,
                msg,
            };
            let mut parts = line.split_whitespace();
            match parts.next().unwrap() {
                "n" => {
                    let v = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err("malformed n line".into()))?;
                    n = Some(v);
                }
                "e" => {
                    let u: usize = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err("malformed edge".into()))?;
                    let v: usize = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err("malformed edge".into()))?;
                    let wtext = parts.next().ok_or_else(|| err("missing weight".into()))?;
                    let w = parse_rational(wtext)
                        .ok_or_else(|| err(format!("malformed weight {wtext}")))?;
                    edges.push((u, v, w));
                }
                tag => return Err(err(format!("unknown record tag: {tag}"))),
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "missing n line".into(),
        })?;
        Self::new(n, edges)
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: num::BigInt = num.parse().ok()?;
    let q: num::BigInt = den.parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(BigRational::new(p, q))
}

/// A simple unweighted graph, not necessarily connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    pub n: usize,
    pub edges: Vec<(Point, Point)>,
}

impl SimpleGraph {
    pub fn new(n: usize, mut edges: Vec<(Point, Point)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        SimpleGraph { n, edges }
    }

    pub fn degree(&self, p: Point) -> usize {
        self.edges.iter().filter(|(u, v)| *u == p || *v == p).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Interpret as a weighted graph with unit weights (must be connected).
    pub fn with_unit_weights(&self) -> Result<WeightedGraph> {
        WeightedGraph::unit(self.n, &self.edges)
    }
}

/// An exact symmetric distance matrix with positive off-diagonal entries
/// satisfying the triangle inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMetric {
    n: usize,
    // upper triangle indexed by pair rank
    d: Vec<BigRational>,
}

impl RationalMetric {
    /// Wrap a distance vector (indexed by pair rank) after checking all
    /// metric invariants.
    pub fn new(n: usize, d: Vec<BigRational>) -> Result<Self> {
        assert_eq!(d.len(), binom2(n), "distance vector length mismatch");
        let m = RationalMetric { n, d };
        m.validate()?;
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: Point, y: Point) -> BigRational {
        if x == y {
            return BigRational::zero();
        }
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        self.d[pair_rank(a, b)].clone()
    }

    /// Check positivity and all triangle inequalities.
    pub fn validate(&self) -> Result<()> {
        for (r, v) in self.d.iter().enumerate() {
            if *v <= BigRational::zero() {
                let (x, y) = pair_unrank(r);
                return Err(Error::InvalidEdge {
                    u: x,
                    v: y,
                    reason: format!("non-positive distance {v}"),
                });
            }
        }
        for z in 0..self.n {
            for y in 0..z {
                for x in 0..y {
                    let xy = self.get(x, y);
                    let yz = self.get(y, z);
                    let xz = self.get(x, z);
                    if xz > &xy + &yz || xy > &xz + &yz || yz > &xy + &xz {
                        return Err(Error::InvalidEdge {
                            u: x,
                            v: z,
                            reason: format!("triangle inequality fails on {{{x},{y},{z}}}"),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn scaled(&self, factor: &BigRational) -> Result<Self> {
        Self::new(self.n, self.d.iter().map(|v| v * factor).collect())
    }

    /// Serialize in the `.metric` text format: `n <count>` then one line per
    /// row with the distances to all larger-indexed points.
    pub fn to_metric_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for i in 0..self.n.saturating_sub(1) {
            let row: Vec<String> = ((i + 1)..self.n)
                .map(|j| {
                    let v = self.get(i, j);
                    if v.is_integer() {
                        v.numer().to_string()
                    } else {
                        format!("{}/{}", v.numer(), v.denom())
                    }
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_metric_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let first = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "empty metric file".into(),
        })?;
        let n: usize = first
            .strip_prefix("n ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or(Error::Parse {
                line: 1,
                msg: "missing n line".into(),
            })?;
        let mut d = vec![BigRational::zero(); binom2(n)];
        for i in 0..n.saturating_sub(1) {
            let row = lines.next().ok_or(Error::Parse {
                line: i + 2,
                msg: "missing metric row".into(),
            })?;
            let vals: Vec<&str> = row.split_whitespace().collect();
            if vals.len() != n - i - 1 {
                return Err(Error::Parse {
                    line: i + 2,
                    msg: format!("expected {} entries", n - i - 1),
                });
            }
            for (off, v) in vals.iter().enumerate() {
                let j = i + 1 + off;
                d[pair_rank(i, j)] = parse_rational(v).ok_or(Error::Parse {
                    line: i + 2,
                    msg: format!("malformed rational {v}"),
                })?;
            }
        }
        Self::new(n, d)
    }
}

/// Exact all-pairs shortest paths (Floyd-Warshall over rationals).
///
/// Connectivity is enforced when the graph is constructed, so every distance
/// is finite; the result satisfies all metric invariants.
pub fn apsp(g: &WeightedGraph) -> RationalMetric {
    let n = g.order();
    let mut dist: Vec<Option<BigRational>> = vec![None; binom2(n)];
    for (u, v, w) in g.edges() {
        dist[pair_rank(*u, *v)] = Some(w.clone());
    }
    let idx = |x: Point, y: Point| pair_rank(x.min(y), x.max(y));
    for k in 0..n {
        for i in 0..n {
            if i == k {
                continue;
            }
            let dik = match &dist[idx(i, k)] {
                Some(v) => v.clone(),
                None => continue,
            };
            for j in (i + 1)..n {
                if j == k {
                    continue;
                }
                let dkj = match &dist[idx(k, j)] {
                    Some(v) => v.clone(),
                    None => continue,
                };
                let via = &dik + &dkj;
                let slot = &mut dist[idx(i, j)];
                match slot {
                    Some(cur) if *cur <= via => {}
                    _ => *slot = Some(via),
                }
            }
        }
    }
    let d: Vec<BigRational> = dist
        .into_iter()
        .map(|v| v.expect("graph is connected"))
        .collect();
    RationalMetric::new(n, d).expect("shortest-path distances form a metric")
}

/// Betweenness structure induced by a metric: `{x, y, z}` is collinear with
/// middle `y` exactly when `d(x, z) = d(x, y) + d(y, z)`.
pub fn induce(m: &RationalMetric) -> BetweennessStructure {
    let n = m.order();
    let mut collinear = Vec::new();
    for z in 0..n {
        for y in 0..z {
            for x in 0..y {
                let xy = m.get(x, y);
                let yz = m.get(y, z);
                let xz = m.get(x, z);
                if xz == &xy + &yz {
                    collinear.push((x, y, z, y));
                } else if xy == &xz + &yz {
                    collinear.push((x, y, z, z));
                } else if yz == &xy + &xz {
                    collinear.push((x, y, z, x));
                }
            }
        }
    }
    BetweennessStructure::from_collinear(n, &collinear).expect("metric order is in range")
}

/// Betweenness structure induced by a weighted graph.
pub fn induce_graph(g: &WeightedGraph) -> BetweennessStructure {
    induce(&apsp(g))
}

/// The adjacency graph: edges are pairs with no third point between them.
pub fn adjacency_graph(b: &BetweennessStructure) -> SimpleGraph {
    SimpleGraph::new(b.order(), b.adjacency_pairs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, One};

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn path_graph(n: usize) -> WeightedGraph {
        WeightedGraph::unit(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle_graph(n: usize) -> WeightedGraph {
        let mut e: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((n - 1, 0));
        WeightedGraph::unit(n, &e).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> WeightedGraph {
        let mut e = Vec::new();
        for i in 0..a {
            for j in 0..b {
                e.push((i, a + j));
            }
        }
        WeightedGraph::unit(a + b, &e).unwrap()
    }

    #[test]
    fn apsp_on_path() {
        let m = apsp(&path_graph(3));
        assert_eq!(m.get(0, 2), rat(2, 1));
        assert_eq!(m.get(0, 1), rat(1, 1));
    }

    #[test]
    fn apsp_k23_distances() {
        let m = apsp(&complete_bipartite(2, 3));
        // cross-part distance 1, within-part distance 2
        for i in 0..2 {
            for j in 2..5 {
                assert_eq!(m.get(i, j), rat(1, 1));
            }
        }
        assert_eq!(m.get(0, 1), rat(2, 1));
        assert_eq!(m.get(2, 3), rat(2, 1));
        assert_eq!(m.get(3, 4), rat(2, 1));
    }

    #[test]
    fn disconnected_rejected() {
        assert!(matches!(
            WeightedGraph::unit(4, &[(0, 1), (2, 3)]),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn bad_edges_rejected() {
        assert!(WeightedGraph::unit(3, &[(0, 0), (0, 1), (1, 2)]).is_err());
        assert!(WeightedGraph::new(
            2,
            vec![(0, 1, rat(0, 1))],
        )
        .is_err());
        assert!(WeightedGraph::unit(3, &[(0, 1), (1, 0), (1, 2)]).is_err());
    }

    #[test]
    fn induce_cycle4_is_the_cyclic_line() {
        let b = induce_graph(&cycle_graph(4));
        assert!(b.is_linear());
        assert!(b.is_ordered().is_none());
        assert_eq!(b.find_cyclic_lines().len(), 1);
    }

    #[test]
    fn induce_triangle_has_cosize_one() {
        let b = induce_graph(&cycle_graph(3));
        assert_eq!(b.cosize(), 1);
    }

    #[test]
    fn adjacency_graph_round_trips() {
        for n in 2..=6 {
            let g = path_graph(n);
            let b = induce_graph(&g);
            let adj = adjacency_graph(&b);
            let expect: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            assert_eq!(adj.edges, expect);
        }
        let c4 = adjacency_graph(&induce_graph(&cycle_graph(4)));
        assert_eq!(c4.edges, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let k23 = adjacency_graph(&induce_graph(&complete_bipartite(2, 3)));
        let mut expect = Vec::new();
        for i in 0..2 {
            for j in 2..5 {
                expect.push((i, j));
            }
        }
        expect.sort_unstable();
        assert_eq!(k23.edges, expect);
    }

    #[test]
    fn induction_invariant_under_scaling() {
        let g = complete_bipartite(2, 3);
        let scaled = g.scaled(&rat(3, 7)).unwrap();
        assert_eq!(induce_graph(&g), induce_graph(&scaled));
        let m = apsp(&g);
        let ms = apsp(&scaled);
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(ms.get(x, y), m.get(x, y) * rat(3, 7));
            }
        }
    }

    #[test]
    fn metric_validation_rejects_violations() {
        // d(0,2) too large: 0-1 = 1, 1-2 = 1, 0-2 = 3
        assert!(RationalMetric::new(3, vec![rat(1, 1), rat(3, 1), rat(1, 1)]).is_err());
        assert!(RationalMetric::new(2, vec![rat(0, 1)]).is_err());
    }

    #[test]
    fn wg_round_trip() {
        let g = WeightedGraph::new(
            3,
            vec![(0, 1, rat(1, 2)), (1, 2, BigRational::one()), (0, 2, rat(7, 3))],
        )
        .unwrap();
        let text = g.to_wg();
        assert_eq!(WeightedGraph::from_wg(&text).unwrap(), g);
        assert!(text.contains("e 0 1 1/2"));
        assert!(text.contains("e 1 2 1"));
    }

    #[test]
    fn metric_text_round_trip() {
        let m = apsp(&complete_bipartite(2, 3));
        let text = m.to_metric_text();
        assert_eq!(RationalMetric::from_metric_text(&text).unwrap(), m);
    }
}
