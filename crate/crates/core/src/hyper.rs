//! Triangle hypergraphs and their structural predicates: common-kernel
//! stars, tight stars, k-fold tight-star covers and link graphs.

use crate::error::{Error, Result};
use crate::graphs::SimpleGraph;
use crate::structure::{sort3, BetweennessStructure, Point, MAX_ORDER};

/// A 3-uniform hypergraph on points `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleHypergraph {
    n: usize,
    edges: Vec<[Point; 3]>,
}

impl TriangleHypergraph {
    pub fn new(n: usize, edges: Vec<[Point; 3]>) -> Result<Self> {
        if n < 1 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                n,
                min: 1,
                max: MAX_ORDER,
            });
        }
        let mut sorted: Vec<[Point; 3]> = Vec::with_capacity(edges.len());
        for e in edges {
            let t = sort3(e[0], e[1], e[2]);
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::InvalidEdge {
                    u: t[0],
                    v: t[2],
                    reason: "hyperedge has repeated points".into(),
                });
            }
            if t[2] >= n {
                return Err(Error::PointOutOfRange { p: t[2], n });
            }
            sorted.push(t);
        }
        sorted.sort_unstable();
        sorted.dedup();
        Ok(TriangleHypergraph { n, edges: sorted })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[Point; 3]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, x: Point, y: Point, z: Point) -> bool {
        self.edges.binary_search(&sort3(x, y, z)).is_ok()
    }

    pub fn degree(&self, x: Point) -> usize {
        self.edges.iter().filter(|e| e.contains(&x)).count()
    }

    /// Kernel of the hypergraph if every pairwise edge intersection equals
    /// one common set. A single-edge hypergraph reports its two smallest
    /// points. Errors on zero edges (kernel undefined).
    pub fn is_delta_star(&self) -> Result<Option<Vec<Point>>> {
        if self.edges.is_empty() {
            return Err(Error::EmptyHypergraph);
        }
        if self.edges.len() == 1 {
            return Ok(Some(vec![self.edges[0][0], self.edges[0][1]]));
        }
        let kernel = intersect(&self.edges[0], &self.edges[1]);
        for (a, ea) in self.edges.iter().enumerate() {
            for eb in self.edges.iter().skip(a + 1) {
                if intersect(ea, eb) != kernel {
                    return Ok(None);
                }
            }
        }
        Ok(Some(kernel))
    }

    /// A star whose kernel has exactly two points. Single-edge hypergraphs
    /// count, reporting the smallest two points of the edge.
    pub fn is_tight_star(&self) -> Result<Option<[Point; 2]>> {
        Ok(self.is_delta_star()?.and_then(|k| match k.len() {
            2 => Some([k[0], k[1]]),
            _ => None,
        }))
    }

    /// Whether the edges can be covered by `k` tight stars on the same
    /// ground set (union not necessarily edge-disjoint). For 3-uniform
    /// hypergraphs this holds exactly when some `k` point pairs cover every
    /// edge, decided by exhaustive choice of the kernels.
    pub fn is_tight_k_star(&self, k: usize) -> Result<bool> {
        if k > 3 {
            return Err(Error::GuardExceeded {
                op: "is_tight_k_star (k)",
                n: k,
                max: 3,
            });
        }
        if self.n > MAX_ORDER {
            return Err(Error::GuardExceeded {
                op: "is_tight_k_star",
                n: self.n,
                max: MAX_ORDER,
            });
        }
        if self.edges.is_empty() {
            return Ok(true);
        }
        fn covers(kernel: &[Point; 2], e: &[Point; 3]) -> bool {
            e.contains(&kernel[0]) && e.contains(&kernel[1])
        }
        // Any cover must handle the first uncovered edge with one of its
        // three pairs, so branching over those pairs is exhaustive.
        fn search(h: &TriangleHypergraph, chosen: &mut Vec<[Point; 2]>, k: usize) -> bool {
            let uncovered = h
                .edges
                .iter()
                .find(|e| !chosen.iter().any(|kern| covers(kern, e)));
            let Some(edge) = uncovered else {
                return true;
            };
            if chosen.len() == k {
                return false;
            }
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                chosen.push([edge[a], edge[b]]);
                if search(h, chosen, k) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        Ok(search(self, &mut Vec::with_capacity(k), k))
    }

    /// Link graph of `y`: edges are the residual pairs of the hyperedges
    /// through `y`. Possibly disconnected.
    pub fn link_graph(&self, y: Point) -> SimpleGraph {
        assert!(y < self.n, "point out of range");
        let edges: Vec<(Point, Point)> = self
            .edges
            .iter()
            .filter(|e| e.contains(&y))
            .map(|e| {
                let rest: Vec<Point> = e.iter().copied().filter(|&p| p != y).collect();
                (rest[0], rest[1])
            })
            .collect();
        SimpleGraph::new(self.n, edges)
    }

    /// Serialize in the `.th` text format.
    pub fn to_th(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for e in &self.edges {
            out.push_str(&format!("t {} {} {}\n", e[0], e[1], e[2]));
        }
        out
    }

    /// Parse the `.th` text format: `n <count>` then `t i j k` per edge.
    pub fn from_th(text: &str) -> Result<Self> {
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
                    n = Some(
                        parts
                            .next()
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| err("malformed n line".into()))?,
                    )
                }
                "t" => {
                    let mut tri = [0usize; 3];
                    for slot in tri.iter_mut() {
                        *slot = parts
                            .next()
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| err("malformed edge".into()))?;
                    }
                    edges.push(tri);
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

fn intersect(a: &[Point; 3], b: &[Point; 3]) -> Vec<Point> {
    a.iter().copied().filter(|p| b.contains(p)).collect()
}

/// The triangle hypergraph of a structure: edges are its triangles.
pub fn triangle_hypergraph(b: &BetweennessStructure) -> TriangleHypergraph {
    TriangleHypergraph::new(b.order(), b.triangles()).expect("structure order is in range")
}

/// Pattern family of two disjoint-kernel stars sharing their co-kernel run:
/// kernels `{w, x}` and `{y, z}`, shared outer points, plus one private
/// point per star. At order 7 this is the unique metrizable pattern of the
/// minimal-cosize classification.
pub fn double_star_disjoint(n: usize) -> Result<TriangleHypergraph> {
    if n < 6 {
        return Err(Error::OrderOutOfRange { n, min: 6, max: MAX_ORDER });
    }
    // u=0, v=1, w=2, x=3, y=4, z=5, shared points 6..n
    let mut edges = vec![[0, 2, 3], [1, 4, 5]];
    for p in 6..n {
        edges.push([p, 2, 3]);
        edges.push([p, 4, 5]);
    }
    TriangleHypergraph::new(n, edges)
}

/// Pattern family of two stars with kernels sharing an apex point and
/// identical co-kernel runs; two points stay isolated.
pub fn double_star_shared_apex(n: usize) -> Result<TriangleHypergraph> {
    if n < 7 {
        return Err(Error::OrderOutOfRange { n, min: 7, max: MAX_ORDER });
    }
    // u=0, v=1 isolated; x=2, y=3, z=4; shared points 5..n
    let mut edges = Vec::new();
    for p in 5..n {
        edges.push([p, 2, 3]);
        edges.push([p, 3, 4]);
    }
    TriangleHypergraph::new(n, edges)
}

/// The seven lines of the Fano plane on points 0..7.
pub fn fano_plane_lines() -> [[Point; 3]; 7] {
    [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ]
}

/// The triangle hypergraph whose collinear triples are the Fano lines: all
/// 28 triples that are not lines are edges.
pub fn fano_triangle_hypergraph() -> TriangleHypergraph {
    let lines = fano_plane_lines();
    let mut edges = Vec::new();
    for k in 2..7 {
        for j in 1..k {
            for i in 0..j {
                if !lines.contains(&[i, j, k]) {
                    edges.push([i, j, k]);
                }
            }
        }
    }
    TriangleHypergraph::new(7, edges).expect("triples are within range")
}

/// Pattern family of two stars with kernels sharing an apex point, where
/// each star additionally owns two private pendant points.
pub fn double_star_pendants(n: usize) -> Result<TriangleHypergraph> {
    if n < 7 {
        return Err(Error::OrderOutOfRange { n, min: 7, max: MAX_ORDER });
    }
    // u=0, v=1, p=2, q=3; x=4, y=5, z=6; shared points 7..n
    let mut edges = vec![[0, 4, 5], [1, 4, 5], [2, 5, 6], [3, 5, 6]];
    for p in 7..n {
        edges.push([p, 4, 5]);
        edges.push([p, 5, 6]);
    }
    TriangleHypergraph::new(n, edges)
}
