//! Betweenness structures: a total assignment of a state (triangle, or
//! collinear with a named middle) to every 3-subset of an n-point ground set.
//!
//! Degenerate triples are never represented, and a collinear triple names
//! exactly one middle, so the first three betweenness axioms hold by
//! construction. The four relations property is checkable with [`
//! BetweennessStructure::check_frp`].

use crate::error::{Error, Result};

pub type Point = usize;

/// Hard cap on the order of any structure handled by this crate.
pub const MAX_ORDER: usize = 12;

pub(crate) fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub(crate) fn binom3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Number of 3-subsets of an n-point set.
pub fn triple_count(n: usize) -> usize {
    binom3(n)
}

/// Colexicographic rank of the sorted triple `i < j < k`.
///
/// The rank is a bijection between sorted triples and `0..C(n,3)`, and all
/// triples contained in `{0..m}` precede those containing point `m`.
pub fn triple_rank(i: Point, j: Point, k: Point) -> usize {
    debug_assert!(i < j && j < k);
    binom3(k) + binom2(j) + i
}

/// Inverse of [`triple_rank`].
pub fn triple_unrank(rank: usize) -> [Point; 3] {
    let mut k = 2;
    while binom3(k + 1) <= rank {
        k += 1;
    }
    let rem = rank - binom3(k);
    let mut j = 1;
    while binom2(j + 1) <= rem {
        j += 1;
    }
    let i = rem - binom2(j);
    [i, j, k]
}

pub(crate) fn sort3(a: Point, b: Point, c: Point) -> [Point; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// State of one 3-subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleState {
    /// No point of the triple lies between the other two.
    Triangle,
    /// The named point lies between the other two.
    Collinear(Point),
}

/// A permutation of the points `0..n`, read as a linear arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointOrder(Vec<Point>);

impl PointOrder {
    pub fn new(perm: Vec<Point>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidPermutation { n });
            }
            seen[p] = true;
        }
        Ok(PointOrder(perm))
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        PointOrder(v)
    }
}

/// A betweenness structure on points `0..n`.
///
/// States are stored in a flat sequence indexed by colexicographic triple
/// rank, giving O(1) access per triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetweennessStructure {
    n: usize,
    states: Vec<TripleState>,
}

impl BetweennessStructure {
    fn check_order(n: usize) -> Result<()> {
        if n < 1 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                n,
                min: 1,
                max: MAX_ORDER,
            });
        }
        Ok(())
    }

    /// Structure with every triple a triangle (empty betweenness relation).
    pub fn all_triangles(n: usize) -> Result<Self> {
        Self::check_order(n)?;
        Ok(BetweennessStructure {
            n,
            states: vec![TripleState::Triangle; triple_count(n)],
        })
    }

    /// Build from a full state vector indexed by triple rank.
    pub fn from_states(n: usize, states: Vec<TripleState>) -> Result<Self> {
        Self::check_order(n)?;
        assert_eq!(states.len(), triple_count(n), "state vector length mismatch");
        for (r, s) in states.iter().enumerate() {
            if let TripleState::Collinear(m) = *s {
                let t = triple_unrank(r);
                assert!(t.contains(&m), "middle {m} not in triple {t:?}");
            }
        }
        Ok(BetweennessStructure { n, states })
    }

    /// Build from an explicit list of collinear triples `(a, b, c, middle)`;
    /// every triple not listed is a triangle.
    pub fn from_collinear(n: usize, collinear: &[(Point, Point, Point, Point)]) -> Result<Self> {
        let mut b = Self::all_triangles(n)?;
        for &(x, y, z, m) in collinear {
            let t = sort3(x, y, z);
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::InvalidEdge {
                    u: x,
                    v: z,
                    reason: "triple has repeated points".into(),
                });
            }
            if t[2] >= n {
                return Err(Error::PointOutOfRange { p: t[2], n });
            }
            if !t.contains(&m) {
                return Err(Error::PointOutOfRange { p: m, n });
            }
            b.states[triple_rank(t[0], t[1], t[2])] = TripleState::Collinear(m);
        }
        Ok(b)
    }

    /// The ordered structure induced by a linear arrangement: every triple is
    /// collinear and its middle is the positionally middle point.
    pub fn ordered(order: &PointOrder) -> Result<Self> {
        let n = order.len();
        Self::check_order(n)?;
        let mut pos = vec![0usize; n];
        for (idx, &p) in order.points().iter().enumerate() {
            pos[p] = idx;
        }
        let mut states = Vec::with_capacity(triple_count(n));
        for r in 0..triple_count(n) {
            let [i, j, k] = triple_unrank(r);
            let mut by_pos = [(pos[i], i), (pos[j], j), (pos[k], k)];
            by_pos.sort_unstable();
            states.push(TripleState::Collinear(by_pos[1].1));
        }
        Ok(BetweennessStructure { n, states })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn state_by_rank(&self, rank: usize) -> TripleState {
        self.states[rank]
    }

    pub fn states(&self) -> &[TripleState] {
        &self.states
    }

    /// State of the triple `{x, y, z}` (points in any order).
    pub fn state(&self, x: Point, y: Point, z: Point) -> TripleState {
        let [i, j, k] = sort3(x, y, z);
        self.states[triple_rank(i, j, k)]
    }

    /// Whether `y` lies between `x` and `z`.
    pub fn between(&self, x: Point, y: Point, z: Point) -> bool {
        self.state(x, y, z) == TripleState::Collinear(y)
    }

    /// Number of triangles.
    pub fn cosize(&self) -> usize {
        self.states
            .iter()
            .filter(|s| **s == TripleState::Triangle)
            .count()
    }

    /// Number of collinear triples.
    pub fn size(&self) -> usize {
        triple_count(self.n) - self.cosize()
    }

    pub fn is_linear(&self) -> bool {
        self.cosize() == 0
    }

    /// All triangles, as sorted triples in rank order.
    pub fn triangles(&self) -> Vec<[Point; 3]> {
        self.states
            .iter()
            .enumerate()
            .filter_map(|(r, s)| (*s == TripleState::Triangle).then(|| triple_unrank(r)))
            .collect()
    }

    /// All collinear triples with their middles, in rank order.
    pub fn collinear_triples(&self) -> Vec<([Point; 3], Point)> {
        self.states
            .iter()
            .enumerate()
            .filter_map(|(r, s)| match s {
                TripleState::Collinear(m) => Some((triple_unrank(r), *m)),
                TripleState::Triangle => None,
            })
            .collect()
    }

    /// Number of triangles containing `x`.
    pub fn triangle_degree(&self, x: Point) -> usize {
        assert!(x < self.n, "point out of range");
        self.triangles().iter().filter(|t| t.contains(&x)).count()
    }

    /// Number of collinear triples in which `x` is the middle.
    pub fn middle_degree(&self, x: Point) -> usize {
        assert!(x < self.n, "point out of range");
        self.states
            .iter()
            .filter(|s| **s == TripleState::Collinear(x))
            .count()
    }

    /// Four relations property: for all distinct `x, y, z, w`, if `(x y z)`
    /// and `(x w y)` hold then `(x w z)` and `(w y z)` hold. Structures
    /// passing this check are almost-metrizable.
    pub fn check_frp(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                if y == x {
                    continue;
                }
                for z in 0..n {
                    if z == x || z == y {
                        continue;
                    }
                    if !self.between(x, y, z) {
                        continue;
                    }
                    for w in 0..n {
                        if w == x || w == y || w == z {
                            continue;
                        }
                        if self.between(x, w, y)
                            && !(self.between(x, w, z) && self.between(w, y, z))
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Substructure induced by the point set `ys`, relabeled to `0..|ys|`
    /// preserving the relative order of indices.
    pub fn restrict(&self, ys: &[Point]) -> Result<Self> {
        let mut ys: Vec<Point> = ys.to_vec();
        ys.sort_unstable();
        ys.dedup();
        if ys.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&p) = ys.iter().find(|&&p| p >= self.n) {
            return Err(Error::PointOutOfRange { p, n: self.n });
        }
        let m = ys.len();
        let mut states = Vec::with_capacity(triple_count(m));
        for r in 0..triple_count(m) {
            let [a, b, c] = triple_unrank(r);
            let state = match self.state(ys[a], ys[b], ys[c]) {
                TripleState::Triangle => TripleState::Triangle,
                TripleState::Collinear(mid) => {
                    let local = ys.iter().position(|&p| p == mid).unwrap();
                    TripleState::Collinear(local)
                }
            };
            states.push(state);
        }
        Ok(BetweennessStructure { n: m, states })
    }

    /// `restrict` to the complement of `{x}`.
    pub fn delete_point(&self, x: Point) -> Result<Self> {
        let ys: Vec<Point> = (0..self.n).filter(|&p| p != x).collect();
        self.restrict(&ys)
    }

    /// Relabel points: point `p` becomes `perm[p]`.
    pub fn relabel(&self, perm: &PointOrder) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let p = perm.points();
        let mut states = vec![TripleState::Triangle; self.states.len()];
        for (r, s) in self.states.iter().enumerate() {
            let [i, j, k] = triple_unrank(r);
            let [a, b, c] = sort3(p[i], p[j], p[k]);
            states[triple_rank(a, b, c)] = match s {
                TripleState::Triangle => TripleState::Triangle,
                TripleState::Collinear(m) => TripleState::Collinear(p[*m]),
            };
        }
        BetweennessStructure { n: self.n, states }
    }

    /// Whether `self` extends `other`: every collinear triple of `other` is
    /// collinear in `self` with the same middle. Both must share one order.
    pub fn is_extension(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "extension requires equal orders");
        other
            .states
            .iter()
            .enumerate()
            .all(|(r, s)| match s {
                TripleState::Triangle => true,
                TripleState::Collinear(_) => self.states[r] == *s,
            })
    }

    /// Pairs `{x, z}` with no point between them (edges of the adjacency
    /// graph).
    pub fn adjacency_pairs(&self) -> Vec<(Point, Point)> {
        let mut edges = Vec::new();
        for z in 0..self.n {
            for x in 0..z {
                let blocked = (0..self.n)
                    .any(|y| y != x && y != z && self.between(x, y, z));
                if !blocked {
                    edges.push((x, z));
                }
            }
        }
        edges
    }

    /// All 4-point subsets inducing a cyclic line: the four triples are
    /// collinear and each point is a middle exactly once.
    pub fn find_cyclic_lines(&self) -> Vec<[Point; 4]> {
        let mut out = Vec::new();
        let n = self.n;
        for d in 3..n {
            for c in 2..d {
                for b in 1..c {
                    for a in 0..b {
                        if is_cyclic_quad(self, [a, b, c, d]) {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out
    }

    /// No cyclic lines.
    pub fn is_regular(&self) -> bool {
        self.find_cyclic_lines().is_empty()
    }

    /// If some linear arrangement induces exactly this structure, return it.
    ///
    /// Only the candidate order read off the adjacency path is tried when the
    /// structure is linear and its adjacency graph is a path; otherwise falls
    /// back to an arrangement scan. The returned order starts at the smaller
    /// endpoint.
    pub fn is_ordered(&self) -> Option<PointOrder> {
        if !self.is_linear() {
            return None;
        }
        if self.n <= 2 {
            return Some(PointOrder((0..self.n).collect()));
        }
        if let Some(path) = self.adjacency_path() {
            let order = PointOrder(path);
            let induced = Self::ordered(&order).expect("order within range");
            if induced == *self {
                return Some(canonical_direction(order));
            }
        }
        // Fallback: for a linear structure an ordered extension is equality.
        self.search_ordering().map(canonical_direction)
    }

    /// If some ordered structure extends this one, return the witnessing
    /// arrangement.
    pub fn is_orderable(&self) -> Result<Option<PointOrder>> {
        if self.n > 10 {
            return Err(Error::GuardExceeded {
                op: "is_orderable",
                n: self.n,
                max: 10,
            });
        }
        Ok(self.search_ordering())
    }

    /// Backtracking search for an arrangement in which every collinear triple
    /// has its middle positionally between the other two points.
    fn search_ordering(&self) -> Option<PointOrder> {
        let n = self.n;
        let mut perm: Vec<Point> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        let mut pos = vec![usize::MAX; n];
        let collinear = self.collinear_triples();
        // Triples indexed by their largest-positioned point are checked as
        // soon as all three points are placed.
        fn dfs(
            b: &BetweennessStructure,
            collinear: &[([Point; 3], Point)],
            perm: &mut Vec<Point>,
            used: &mut [bool],
            pos: &mut [usize],
        ) -> bool {
            let n = b.order();
            if perm.len() == n {
                return true;
            }
            'cand: for p in 0..n {
                if used[p] {
                    continue;
                }
                let t = perm.len();
                for &([x, y, z], m) in collinear {
                    if !(x == p || y == p || z == p) {
                        continue;
                    }
                    let others = [x, y, z];
                    let mut placed = true;
                    for &o in &others {
                        if o != p && pos[o] == usize::MAX {
                            placed = false;
                            break;
                        }
                    }
                    if !placed {
                        continue;
                    }
                    let pp = |q: Point| if q == p { t } else { pos[q] };
                    let mut ps = [pp(x), pp(y), pp(z)];
                    ps.sort_unstable();
                    if pp(m) != ps[1] {
                        continue 'cand;
                    }
                }
                perm.push(p);
                used[p] = true;
                pos[p] = t;
                if dfs(b, collinear, perm, used, pos) {
                    return true;
                }
                perm.pop();
                used[p] = false;
                pos[p] = usize::MAX;
            }
            false
        }
        if dfs(self, &collinear, &mut perm, &mut used, &mut pos) {
            Some(PointOrder(perm))
        } else {
            None
        }
    }

    /// If the adjacency graph is a path, return its vertices in path order.
    fn adjacency_path(&self) -> Option<Vec<Point>> {
        let n = self.n;
        let mut nbrs: Vec<Vec<Point>> = vec![Vec::new(); n];
        for (x, z) in self.adjacency_pairs() {
            nbrs[x].push(z);
            nbrs[z].push(x);
        }
        let ends: Vec<Point> = (0..n).filter(|&p| nbrs[p].len() == 1).collect();
        if ends.len() != 2 || nbrs.iter().any(|v| v.len() > 2) {
            return None;
        }
        let start = *ends.iter().min().unwrap();
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while path.len() < n {
            let next = *nbrs[cur].iter().find(|&&q| q != prev)?;
            path.push(next);
            prev = cur;
            cur = next;
        }
        Some(path)
    }

    /// Serialize in the `.bws` text format.
    pub fn to_bws(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (t, m) in self.collinear_triples() {
            out.push_str(&format!("c {} {} {} {}\n", t[0], t[1], t[2], m));
        }
        out
    }

    /// Parse the `.bws` text format: `n <count>` then one `c i j k m` line
    /// per collinear triple; triples absent from the file are triangles.
    /// Lines starting with `#` are comments.
    pub fn from_bws(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut collinear = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let tag = parts.next().unwrap();
            let parse = |s: Option<&str>| -> Result<usize> {
                s.and_then(|v| v.parse().ok()).ok_or(Error::Parse {
                    line: lineno + 1,
                    msg: format!("malformed line: {line}"),
                })
            };
            match tag {
                "n" => {
                    if n.is_some() {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: "duplicate n line".into(),
                        });
                    }
                    n = Some(parse(parts.next())?);
                }
                "c" => {
                    let i = parse(parts.next())?;
                    let j = parse(parts.next())?;
                    let k = parse(parts.next())?;
                    let m = parse(parts.next())?;
                    collinear.push((i, j, k, m));
                }
                _ => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("unknown record tag: {tag}"),
                    })
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "missing n line".into(),
        })?;
        let mut b = Self::all_triangles(n)?;
        let mut seen = vec![false; triple_count(n)];
        for (x, y, z, m) in collinear {
            let t = sort3(x, y, z);
            if t[0] == t[1] || t[1] == t[2] || t[2] >= n || !t.contains(&m) {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("invalid collinear record {x} {y} {z} {m}"),
                });
            }
            let r = triple_rank(t[0], t[1], t[2]);
            if seen[r] {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("duplicate triple {t:?}"),
                });
            }
            seen[r] = true;
            b.states[r] = TripleState::Collinear(m);
        }
        Ok(b)
    }
}

fn is_cyclic_quad(b: &BetweennessStructure, q: [Point; 4]) -> bool {
    let mut mid_count = [0usize; 4];
    for a in 0..4 {
        for c in (a + 1)..4 {
            for d in (c + 1)..4 {
                match b.state(q[a], q[c], q[d]) {
                    TripleState::Triangle => return false,
                    TripleState::Collinear(m) => {
                        let idx = q.iter().position(|&p| p == m).unwrap();
                        mid_count[idx] += 1;
                    }
                }
            }
        }
    }
    mid_count.iter().all(|&c| c == 1)
}

/// Pick the direction whose first point is smaller than its last.
fn canonical_direction(order: PointOrder) -> PointOrder {
    let pts = order.points();
    if pts.first() <= pts.last() {
        order
    } else {
        order.reversed()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_structure(n: usize) -> BetweennessStructure {
        BetweennessStructure::ordered(&PointOrder::new((0..n).collect()).unwrap()).unwrap()
    }

    /// The cyclic linear structure on four points.
    fn c4_structure() -> BetweennessStructure {
        // unit 4-cycle 0-1-2-3-0: opposite pairs at distance 2, adjacent at 1
        BetweennessStructure::from_collinear(
            4,
            &[(0, 1, 2, 1), (0, 1, 3, 0), (0, 2, 3, 3), (1, 2, 3, 2)],
        )
        .unwrap()
    }

    #[test]
    fn triple_rank_is_bijective() {
        for n in 3..=MAX_ORDER {
            let mut seen = vec![false; triple_count(n)];
            for k in 2..n {
                for j in 1..k {
                    for i in 0..j {
                        let r = triple_rank(i, j, k);
                        assert!(!seen[r]);
                        seen[r] = true;
                        assert_eq!(triple_unrank(r), [i, j, k]);
                    }
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn ordered_structures_are_linear_and_frp() {
        for n in 1..=7 {
            let b = path_structure(n);
            assert!(b.is_linear());
            assert!(b.check_frp());
            assert_eq!(b.cosize(), 0);
        }
    }

    #[test]
    fn frp_direct_violation() {
        // collinear (0 1 2), (0 3 1) but {0,3,2} left a triangle
        let b =
            BetweennessStructure::from_collinear(4, &[(0, 1, 2, 1), (0, 3, 1, 3)]).unwrap();
        assert!(!b.check_frp());
    }

    #[test]
    fn cosize_counts_triangles() {
        let b = BetweennessStructure::all_triangles(3).unwrap();
        assert_eq!(b.cosize(), 1);
        assert_eq!(path_structure(5).cosize(), 0);
        for n in 3..=7 {
            let b = BetweennessStructure::all_triangles(n).unwrap();
            assert_eq!(b.cosize() + b.size(), triple_count(n));
        }
    }

    #[test]
    fn restrict_of_path_is_path() {
        let b = path_structure(5);
        let sub = b.restrict(&[0, 1, 2]).unwrap();
        assert_eq!(sub, path_structure(3));
        // any 3 points of the cyclic line are collinear
        let c4 = c4_structure();
        for a in 0..4 {
            let ys: Vec<Point> = (0..4).filter(|&p| p != a).collect();
            let sub = c4.restrict(&ys).unwrap();
            assert_eq!(sub.cosize(), 0);
        }
        assert!(b.restrict(&[]).is_err());
    }

    #[test]
    fn restrict_is_functorial() {
        let b = path_structure(6);
        let y = [0, 2, 3, 5];
        let z = [1, 2, 3];
        let once = b.restrict(&y).unwrap().restrict(&z).unwrap();
        let image: Vec<Point> = z.iter().map(|&i| y[i]).collect();
        let direct = b.restrict(&image).unwrap();
        assert_eq!(once, direct);
    }

    #[test]
    fn extension_basics() {
        let b = path_structure(4);
        assert!(b.is_extension(&b));
        let c4 = c4_structure();
        assert!(!b.is_extension(&c4));
        // ordered structures extend anything they were built to extend
        let loose = BetweennessStructure::from_collinear(4, &[(0, 1, 2, 1)]).unwrap();
        assert!(b.is_extension(&loose));
    }

    #[test]
    fn c4_is_linear_but_not_ordered() {
        let c4 = c4_structure();
        assert!(c4.is_linear());
        assert!(c4.is_ordered().is_none());
        assert!(!c4.is_regular());
        assert_eq!(c4.find_cyclic_lines(), vec![[0, 1, 2, 3]]);
    }

    #[test]
    fn path_is_ordered_with_reversal_tie_break() {
        let b = path_structure(6);
        let o = b.is_ordered().unwrap();
        assert_eq!(o.points(), &[0, 1, 2, 3, 4, 5]);
        // relabeled path: order recovered up to reversal, smaller end first
        let perm = PointOrder::new(vec![5, 4, 3, 2, 1, 0]).unwrap();
        let o2 = b.relabel(&perm).is_ordered().unwrap();
        assert_eq!(o2.points(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn ordered_implies_orderable_and_regular() {
        for n in 2..=6 {
            let b = path_structure(n);
            let w = b.is_orderable().unwrap().unwrap();
            assert!(BetweennessStructure::ordered(&w).unwrap().is_extension(&b));
            assert!(b.is_regular());
        }
    }

    #[test]
    fn star_structure_is_not_orderable() {
        // middle point 0 between every other pair: fine for orderable only if
        // 0 can sit between all pairs, which fails with three spokes
        let b = BetweennessStructure::from_collinear(
            4,
            &[(0, 1, 2, 0), (0, 1, 3, 0), (0, 2, 3, 0)],
        )
        .unwrap();
        assert!(b.check_frp());
        assert!(b.is_orderable().unwrap().is_none());
    }

    #[test]
    fn bws_round_trip() {
        let c4 = c4_structure();
        let text = c4.to_bws();
        let back = BetweennessStructure::from_bws(&text).unwrap();
        assert_eq!(c4, back);
        let with_comment = format!("# cyclic line\n{text}");
        assert_eq!(BetweennessStructure::from_bws(&with_comment).unwrap(), c4);
        assert!(BetweennessStructure::from_bws("c 0 1 2 1\n").is_err());
    }

    #[test]
    fn order_guard() {
        assert!(BetweennessStructure::all_triangles(0).is_err());
        assert!(BetweennessStructure::all_triangles(MAX_ORDER + 1).is_err());
    }
}
