//! Unit propagation over partial betweenness assignments.
//!
//! Every ground instance of the four relations property over ordered
//! 4-tuples is compiled once per order into implication clauses between
//! (triple, middle) literals. A triple assigned Triangle blocks all three of
//! its middle literals. Propagation is eager: whenever a literal becomes
//! true or false, all clauses watching it are re-examined, so any completed
//! assignment reached without conflict satisfies every clause.

use std::collections::HashSet;

use crate::structure::{
    sort3, triple_count, triple_rank, triple_unrank, BetweennessStructure, Point, TripleState,
};

/// Literal: `triple_rank * 3 + slot`, where `slot` is the middle's position
/// within the sorted triple.
pub type Lit = u32;

const TRI_BIT: u8 = 0b1000;
const MID_MASK: u8 = 0b0111;
pub const MASK_ALL: u8 = 0b1111;

fn lit(rank: usize, slot: usize) -> Lit {
    (rank * 3 + slot) as Lit
}

fn lit_parts(l: Lit) -> (usize, usize) {
    ((l / 3) as usize, (l % 3) as usize)
}

/// Literal for "triple {x,y,z} has middle m".
pub fn middle_lit(x: Point, y: Point, z: Point, m: Point) -> Lit {
    let t = sort3(x, y, z);
    let slot = t.iter().position(|&p| p == m).expect("middle in triple");
    lit(triple_rank(t[0], t[1], t[2]), slot)
}

#[derive(Debug, Clone, Copy)]
struct Clause {
    p1: Lit,
    p2: Lit,
    concl: Lit,
}

/// Compiled propagation rules for one order.
pub struct ClauseDb {
    n: usize,
    triples: Vec<[Point; 3]>,
    clauses: Vec<Clause>,
    by_premise: Vec<Vec<u32>>,
    by_conclusion: Vec<Vec<u32>>,
}

impl ClauseDb {
    pub fn new(n: usize) -> Self {
        let count = triple_count(n);
        let triples: Vec<[Point; 3]> = (0..count).map(triple_unrank).collect();
        let mut seen: HashSet<(Lit, Lit, Lit)> = HashSet::new();
        let mut clauses = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if y == x {
                    continue;
                }
                for z in 0..n {
                    if z == x || z == y {
                        continue;
                    }
                    for w in 0..n {
                        if w == x || w == y || w == z {
                            continue;
                        }
                        // (x y z) and (x w y) imply (x w z) and (w y z)
                        let l1 = middle_lit(x, y, z, y);
                        let l2 = middle_lit(x, w, y, w);
                        for concl in [middle_lit(x, w, z, w), middle_lit(w, y, z, y)] {
                            let key = (l1.min(l2), l1.max(l2), concl);
                            if seen.insert(key) {
                                clauses.push(Clause {
                                    p1: key.0,
                                    p2: key.1,
                                    concl: key.2,
                                });
                            }
                        }
                    }
                }
            }
        }
        let mut by_premise = vec![Vec::new(); count * 3];
        let mut by_conclusion = vec![Vec::new(); count * 3];
        for (id, c) in clauses.iter().enumerate() {
            by_premise[c.p1 as usize].push(id as u32);
            if c.p2 != c.p1 {
                by_premise[c.p2 as usize].push(id as u32);
            }
            by_conclusion[c.concl as usize].push(id as u32);
        }
        ClauseDb {
            n,
            triples,
            clauses,
            by_premise,
            by_conclusion,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn triple_points(&self, rank: usize) -> [Point; 3] {
        self.triples[rank]
    }

    pub fn triple_count(&self) -> usize {
        self.triples.len()
    }
}

/// A per-triple assignment state with domain masks and an undo trail.
///
/// Mask bits 0..=2 are the surviving middle slots, bit 3 is the triangle
/// option. A decided triple has exactly one surviving bit; propagation never
/// removes a decided state (removal would empty the mask and raise a
/// conflict instead).
pub struct PartialStructure<'a> {
    db: &'a ClauseDb,
    masks: Vec<u8>,
    trail: Vec<(u32, u8)>,
    undecided: usize,
    queue: Vec<(Lit, bool)>,
}

impl<'a> PartialStructure<'a> {
    pub fn new(db: &'a ClauseDb) -> Self {
        let count = db.triple_count();
        PartialStructure {
            db,
            masks: vec![MASK_ALL; count],
            trail: Vec::with_capacity(count * 2),
            undecided: count,
            queue: Vec::new(),
        }
    }

    pub fn mask(&self, rank: usize) -> u8 {
        self.masks[rank]
    }

    pub fn is_decided(&self, rank: usize) -> bool {
        self.masks[rank].count_ones() == 1
    }

    pub fn is_complete(&self) -> bool {
        self.undecided == 0
    }

    /// Snapshot of the trail; pass to [`Self::rollback`] to undo.
    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (rank, old) = self.trail.pop().unwrap();
            let cur = self.masks[rank as usize];
            if cur.count_ones() == 1 && old.count_ones() > 1 {
                self.undecided += 1;
            }
            self.masks[rank as usize] = old;
        }
        self.queue.clear();
    }

    /// Triple ranks whose masks changed after the given trail mark.
    pub fn changed_since(&self, mark: usize) -> impl Iterator<Item = usize> + '_ {
        self.trail[mark..].iter().map(|&(rank, _)| rank as usize)
    }

    fn lit_true(&self, l: Lit) -> bool {
        let (rank, slot) = lit_parts(l);
        self.masks[rank] == 1u8 << slot
    }

    fn lit_false(&self, l: Lit) -> bool {
        let (rank, slot) = lit_parts(l);
        self.masks[rank] & (1u8 << slot) == 0
    }

    /// Intersect the mask of `rank` with `keep`; enqueue literal events.
    /// Returns false on an emptied mask (conflict).
    fn narrow(&mut self, rank: usize, keep: u8) -> bool {
        let old = self.masks[rank];
        let new = old & keep;
        if new == old {
            return true;
        }
        if new == 0 {
            return false;
        }
        self.trail.push((rank as u32, old));
        self.masks[rank] = new;
        if old.count_ones() > 1 && new.count_ones() == 1 {
            self.undecided -= 1;
        }
        let removed_mids = (old & !new) & MID_MASK;
        for slot in 0..3 {
            if removed_mids & (1 << slot) != 0 {
                self.queue.push((lit(rank, slot), false));
            }
        }
        if new & MID_MASK == new && new.count_ones() == 1 {
            let slot = new.trailing_zeros() as usize;
            self.queue.push((lit(rank, slot), true));
        }
        true
    }

    fn drain_queue(&mut self) -> bool {
        let db = self.db;
        while let Some((l, became_true)) = self.queue.pop() {
            let clause_ids: &[u32] = if became_true {
                &db.by_premise[l as usize]
            } else {
                &db.by_conclusion[l as usize]
            };
            for &id in clause_ids {
                let Clause { p1, p2, concl } = db.clauses[id as usize];
                if became_true {
                    let other = if p1 == l { p2 } else { p1 };
                    if self.lit_true(other) {
                        let (rank, slot) = lit_parts(concl);
                        if !self.narrow(rank, 1 << slot) {
                            self.queue.clear();
                            return false;
                        }
                    } else if self.lit_false(concl) {
                        let (rank, slot) = lit_parts(other);
                        if !self.narrow(rank, !(1u8 << slot) & MASK_ALL) {
                            self.queue.clear();
                            return false;
                        }
                    }
                } else {
                    // conclusion became false: both premises cannot hold
                    if self.lit_true(p1) {
                        let (rank, slot) = lit_parts(p2);
                        if !self.narrow(rank, !(1u8 << slot) & MASK_ALL) {
                            self.queue.clear();
                            return false;
                        }
                    } else if self.lit_true(p2) {
                        let (rank, slot) = lit_parts(p1);
                        if !self.narrow(rank, !(1u8 << slot) & MASK_ALL) {
                            self.queue.clear();
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Decide a triple to Triangle and propagate.
    pub fn assign_triangle(&mut self, rank: usize) -> bool {
        self.narrow(rank, TRI_BIT) && self.drain_queue()
    }

    /// Rule out the triangle option and propagate.
    pub fn forbid_triangle(&mut self, rank: usize) -> bool {
        self.narrow(rank, MID_MASK) && self.drain_queue()
    }

    /// Decide a triple to the middle in the given slot and propagate.
    pub fn assign_middle_slot(&mut self, rank: usize, slot: usize) -> bool {
        self.narrow(rank, 1 << slot) && self.drain_queue()
    }

    /// Undecided triple with the fewest surviving options, ties broken by
    /// colexicographic rank.
    pub fn branch_triple(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for (rank, &m) in self.masks.iter().enumerate() {
            let opts = m.count_ones();
            if opts > 1 {
                match best {
                    Some((b, _)) if b <= opts => {}
                    _ => best = Some((opts, rank)),
                }
            }
        }
        best.map(|(_, rank)| rank)
    }

    /// The completed structure (requires [`Self::is_complete`]).
    pub fn to_structure(&self) -> BetweennessStructure {
        assert!(self.is_complete(), "assignment incomplete");
        let states: Vec<TripleState> = self
            .masks
            .iter()
            .enumerate()
            .map(|(rank, &m)| {
                if m == TRI_BIT {
                    TripleState::Triangle
                } else {
                    let slot = m.trailing_zeros() as usize;
                    TripleState::Collinear(self.db.triple_points(rank)[slot])
                }
            })
            .collect();
        BetweennessStructure::from_states(self.db.order(), states).expect("order within range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::PointOrder;

    #[test]
    fn ordered_prefix_propagates_to_full_order() {
        // A structure ordered on a run and on the complementary ends is the
        // full ordered structure; propagation must close the same instances.
        let n = 6;
        let db = ClauseDb::new(n);
        let full =
            BetweennessStructure::ordered(&PointOrder::new((0..n).collect()).unwrap()).unwrap();
        // feed only the triples inside {1..4} and inside {0,1,4,5}
        let inner: Vec<Point> = vec![1, 2, 3, 4];
        let outer: Vec<Point> = vec![0, 1, 4, 5];
        let mut ps = PartialStructure::new(&db);
        for set in [&inner, &outer] {
            for a in 0..set.len() {
                for b in (a + 1)..set.len() {
                    for c in (b + 1)..set.len() {
                        let t = sort3(set[a], set[b], set[c]);
                        let rank = triple_rank(t[0], t[1], t[2]);
                        match full.state(t[0], t[1], t[2]) {
                            TripleState::Collinear(m) => {
                                let slot = t.iter().position(|&p| p == m).unwrap();
                                assert!(ps.assign_middle_slot(rank, slot));
                            }
                            TripleState::Triangle => unreachable!(),
                        }
                    }
                }
            }
        }
        // the run plus the complementary ends force the full order
        assert!(ps.is_complete(), "propagation left triples undecided");
        assert_eq!(ps.to_structure(), full);
    }

    #[test]
    fn conflict_on_frp_violation() {
        let db = ClauseDb::new(4);
        let mut ps = PartialStructure::new(&db);
        // (0 1 2) and (0 3 1) force (0 3 2) and (3 1 2); making {0,2,3} a
        // triangle first must conflict when the premises are asserted
        let r023 = triple_rank(0, 2, 3);
        assert!(ps.assign_triangle(r023));
        assert!(ps.assign_middle_slot(triple_rank(0, 1, 2), 1));
        let ok = ps.assign_middle_slot(triple_rank(0, 1, 3), 2);
        assert!(!ok, "premises complete an impossible instance");
    }

    #[test]
    fn rollback_restores_masks() {
        let db = ClauseDb::new(5);
        let mut ps = PartialStructure::new(&db);
        let before: Vec<u8> = (0..db.triple_count()).map(|r| ps.mask(r)).collect();
        let mark = ps.mark();
        assert!(ps.assign_middle_slot(0, 1));
        assert!(ps.assign_triangle(5));
        ps.rollback(mark);
        let after: Vec<u8> = (0..db.triple_count()).map(|r| ps.mask(r)).collect();
        assert_eq!(before, after);
        assert!(!ps.is_complete());
    }
}
