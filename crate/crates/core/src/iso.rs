//! Canonical forms and isomorphism testing for betweenness structures and
//! triangle hypergraphs.
//!
//! The canonical form is the lexicographically minimal byte encoding of the
//! triple-state sequence over all relabelings of the points. Because triples
//! are ranked colexicographically, the encoding of the triples inside the
//! first `t` relabeled points is a prefix of the full encoding, so the
//! minimum is found by a level-by-level search keeping only candidates whose
//! next segment is minimal, pruned against the best complete encoding seen.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hyper::TriangleHypergraph;
use crate::structure::{triple_count, BetweennessStructure, Point, TripleState};

/// Guard for the factorial search space.
pub const MAX_CANON_ORDER: usize = 10;

/// Minimal encoding of a structure or hypergraph over all relabelings.
/// Equal forms hold exactly for isomorphic objects of equal order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Compact hexadecimal rendering for reports.
    pub fn hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:x}")).collect()
    }
}

/// Byte for the relabeled triple whose old points, listed in new-label
/// order, are `(a, b, c)`: 0..=2 name the middle's position, 3 is a
/// triangle.
fn structure_code(b: &BetweennessStructure) -> impl Fn(Point, Point, Point) -> u8 + '_ {
    move |pa, pb, pc| match b.state(pa, pb, pc) {
        TripleState::Triangle => 3,
        TripleState::Collinear(m) => {
            if m == pa {
                0
            } else if m == pb {
                1
            } else {
                2
            }
        }
    }
}

fn hypergraph_code(h: &TriangleHypergraph) -> impl Fn(Point, Point, Point) -> u8 + '_ {
    move |pa, pb, pc| u8::from(h.has_edge(pa, pb, pc))
}

fn guard(n: usize, op: &'static str) -> Result<()> {
    if n > MAX_CANON_ORDER {
        return Err(Error::GuardExceeded {
            op,
            n,
            max: MAX_CANON_ORDER,
        });
    }
    Ok(())
}

/// Canonical form of a betweenness structure (n <= 10).
pub fn canonical_form(b: &BetweennessStructure) -> Result<CanonicalForm> {
    guard(b.order(), "canonical_form")?;
    Ok(CanonicalForm {
        n: b.order(),
        bytes: minimize(b.order(), &structure_code(b)),
    })
}

/// Canonical form of a triangle hypergraph, encoded over edge/non-edge
/// states (n <= 10).
pub fn canonical_form_hypergraph(h: &TriangleHypergraph) -> Result<CanonicalForm> {
    guard(h.order(), "canonical_form_hypergraph")?;
    Ok(CanonicalForm {
        n: h.order(),
        bytes: minimize(h.order(), &hypergraph_code(h)),
    })
}

pub fn is_isomorphic(b1: &BetweennessStructure, b2: &BetweennessStructure) -> Result<bool> {
    if b1.order() != b2.order() {
        return Ok(false);
    }
    Ok(canonical_form(b1)? == canonical_form(b2)?)
}

pub fn is_isomorphic_hypergraph(
    h1: &TriangleHypergraph,
    h2: &TriangleHypergraph,
) -> Result<bool> {
    if h1.order() != h2.order() {
        return Ok(false);
    }
    Ok(canonical_form_hypergraph(h1)? == canonical_form_hypergraph(h2)?)
}

/// Reduce a list to isomorphism-class representatives with multiplicities,
/// preserving first-seen representatives and their order.
pub fn dedupe(
    items: impl IntoIterator<Item = BetweennessStructure>,
) -> Result<Vec<(CanonicalForm, BetweennessStructure, u64)>> {
    let mut classes: Vec<(CanonicalForm, BetweennessStructure, u64)> = Vec::new();
    let mut index: HashMap<CanonicalForm, usize> = HashMap::new();
    for b in items {
        let form = canonical_form(&b)?;
        match index.get(&form) {
            Some(&i) => classes[i].2 += 1,
            None => {
                index.insert(form.clone(), classes.len());
                classes.push((form, b, 1));
            }
        }
    }
    Ok(classes)
}

struct Minimizer<'a> {
    n: usize,
    encode: &'a dyn Fn(Point, Point, Point) -> u8,
    old_of_new: Vec<Point>,
    used: Vec<bool>,
    cur: Vec<u8>,
    best: Vec<u8>,
}

/// Sentinel above every real state byte; slots of `best` beyond the refined
/// prefix hold it until some branch reaches them.
const UNREFINED: u8 = u8::MAX;

fn minimize(n: usize, encode: &dyn Fn(Point, Point, Point) -> u8) -> Vec<u8> {
    let mut search = Minimizer {
        n,
        encode,
        old_of_new: Vec::with_capacity(n),
        used: vec![false; n],
        cur: Vec::with_capacity(triple_count(n)),
        best: vec![UNREFINED; triple_count(n)],
    };
    search.dfs();
    debug_assert!(search.best.iter().all(|&b| b != UNREFINED));
    search.best
}

impl Minimizer<'_> {
    /// Segment of encoding bytes contributed by placing old point `p` at the
    /// next new label: one byte per pair of already-placed labels.
    fn segment(&self, p: Point) -> Vec<u8> {
        let t = self.old_of_new.len();
        let mut seg = Vec::with_capacity(t.saturating_sub(1) * t / 2);
        for b in 1..t {
            for a in 0..b {
                seg.push((self.encode)(self.old_of_new[a], self.old_of_new[b], p));
            }
        }
        seg
    }

    /// Invariant on entry: `cur == best[..cur.len()]`. The branch segments
    /// are compared against `best` in place; a strictly smaller segment
    /// refines `best` immediately (re-padding the suffix), so `best` only
    /// ever decreases and ends as the minimum over all relabelings.
    fn dfs(&mut self) {
        let level = self.old_of_new.len();
        if level == self.n {
            return;
        }
        let mut candidates: Vec<(Vec<u8>, Point)> = (0..self.n)
            .filter(|&p| !self.used[p])
            .map(|p| (self.segment(p), p))
            .collect();
        let min_seg = candidates
            .iter()
            .map(|(seg, _)| seg.clone())
            .min()
            .expect("some point is unused");
        candidates.retain(|(seg, _)| *seg == min_seg);
        let pos = self.cur.len();
        match min_seg.as_slice().cmp(&self.best[pos..pos + min_seg.len()]) {
            std::cmp::Ordering::Greater => return,
            std::cmp::Ordering::Less => {
                self.best[pos..pos + min_seg.len()].copy_from_slice(&min_seg);
                for slot in self.best[pos + min_seg.len()..].iter_mut() {
                    *slot = UNREFINED;
                }
            }
            std::cmp::Ordering::Equal => {}
        }
        for (seg, p) in candidates {
            self.old_of_new.push(p);
            self.used[p] = true;
            self.cur.extend_from_slice(&seg);
            self.dfs();
            self.cur.truncate(self.cur.len() - seg.len());
            self.used[p] = false;
            self.old_of_new.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::structure::PointOrder;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn random_perm(n: usize, rng: &mut impl rand::Rng) -> PointOrder {
        let mut v: Vec<Point> = (0..n).collect();
        v.shuffle(rng);
        PointOrder::new(v).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let subjects = vec![
            FamilySpec::Path { n: 6 }.induced_structure().unwrap(),
            FamilySpec::Cycle { n: 4 }.induced_structure().unwrap(),
            FamilySpec::CompleteBipartite { a: 2, b: 3 }
                .induced_structure()
                .unwrap(),
            FamilySpec::T { n: 7, i: 1 }.induced_structure().unwrap(),
            FamilySpec::S { n: 6, c: 4 }.induced_structure().unwrap(),
        ];
        for b in subjects {
            let form = canonical_form(&b).unwrap();
            for _ in 0..100 {
                let perm = random_perm(b.order(), &mut rng);
                assert_eq!(canonical_form(&b.relabel(&perm)).unwrap(), form);
            }
        }
    }

    #[test]
    fn distinguishes_path_and_cycle() {
        let p4 = FamilySpec::Path { n: 4 }.induced_structure().unwrap();
        let c4 = FamilySpec::Cycle { n: 4 }.induced_structure().unwrap();
        assert!(!is_isomorphic(&p4, &c4).unwrap());
    }

    #[test]
    fn distinguishes_r_and_s() {
        let r = FamilySpec::R { n: 5, i: 1, c: 4 }.induced_structure().unwrap();
        let s = FamilySpec::S { n: 5, c: 4 }.induced_structure().unwrap();
        assert!(!is_isomorphic(&r, &s).unwrap());
        let r61 = FamilySpec::R { n: 6, i: 1, c: 4 }.induced_structure().unwrap();
        let r62 = FamilySpec::R { n: 6, i: 2, c: 4 }.induced_structure().unwrap();
        assert!(!is_isomorphic(&r61, &r62).unwrap());
    }

    #[test]
    fn dedupe_collapses_an_orbit() {
        let b = FamilySpec::CompleteBipartite { a: 2, b: 3 }
            .induced_structure()
            .unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let relabelings: Vec<_> = (0..40)
            .map(|_| b.relabel(&random_perm(5, &mut rng)))
            .collect();
        let classes = dedupe(relabelings).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].2, 40);
    }

    #[test]
    fn full_orbit_has_one_form() {
        // all 120 relabelings of each order-5 class collapse to one form
        for b in [
            FamilySpec::R { n: 5, i: 1, c: 4 }.induced_structure().unwrap(),
            FamilySpec::S { n: 5, c: 4 }.induced_structure().unwrap(),
            FamilySpec::CompleteBipartite { a: 2, b: 3 }
                .induced_structure()
                .unwrap(),
        ] {
            let forms: std::collections::HashSet<CanonicalForm> = all_perms(5)
                .iter()
                .map(|p| canonical_form(&b.relabel(p)).unwrap())
                .collect();
            assert_eq!(forms.len(), 1);
        }
    }

    #[test]
    fn brute_force_agreement_small() {
        // all permutation pairs on small structures agree with form equality
        let subjects = vec![
            FamilySpec::Path { n: 4 }.induced_structure().unwrap(),
            FamilySpec::Cycle { n: 4 }.induced_structure().unwrap(),
            FamilySpec::Q { n: 4, c: 3 }.induced_structure().unwrap(),
            FamilySpec::R { n: 4, i: 1, c: 3 }.induced_structure().unwrap(),
        ];
        let perms: Vec<PointOrder> = all_perms(4);
        for b1 in &subjects {
            for b2 in &subjects {
                let brute = perms.iter().any(|p| b1.relabel(p) == *b2);
                assert_eq!(is_isomorphic(b1, b2).unwrap(), brute);
            }
        }
    }

    fn all_perms(n: usize) -> Vec<PointOrder> {
        let mut out = Vec::new();
        let mut v: Vec<Point> = (0..n).collect();
        permute(&mut v, 0, &mut out);
        out
    }

    fn permute(v: &mut Vec<Point>, k: usize, out: &mut Vec<PointOrder>) {
        if k == v.len() {
            out.push(PointOrder::new(v.clone()).unwrap());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, out);
            v.swap(k, i);
        }
    }

    #[test]
    fn guard_rejects_large_orders() {
        let b = BetweennessStructure::all_triangles(11).unwrap();
        assert!(canonical_form(&b).is_err());
    }
}
