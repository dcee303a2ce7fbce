//! Isomorph-reduced exhaustive enumeration of almost-metrizable betweenness
//! structures under co-size and property filters, the extremal counts built
//! on it, and the registered claim verifiers.
//!
//! Enumeration splits on the triangle set first (a binary include/exclude
//! scan over triple ranks with unit propagation running during selection),
//! then backtracks over middle assignments. Isomorph reduction is post-hoc
//! canonical-form dedupe; class counts in scope are tiny, so simplicity
//! wins over orderly generation.

pub mod claims;
pub(crate) mod propagate;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::iso::{canonical_form, CanonicalForm};
use crate::structure::{triple_count, BetweennessStructure, Point};
use propagate::{ClauseDb, PartialStructure};

/// Hereditary property filters for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyFilter {
    /// Accept everything.
    Trivial,
    /// No cyclic lines.
    Regular,
    /// Has an ordered extension.
    Orderable,
}

impl PropertyFilter {
    pub fn accepts(&self, b: &BetweennessStructure) -> bool {
        match self {
            PropertyFilter::Trivial => true,
            PropertyFilter::Regular => b.is_regular(),
            PropertyFilter::Orderable => b
                .is_orderable()
                .expect("enumeration guard keeps orders within the orderability scan")
                .is_some(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PropertyFilter::Trivial => "trivial",
            PropertyFilter::Regular => "regular",
            PropertyFilter::Orderable => "orderable",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "trivial" => Some(PropertyFilter::Trivial),
            "regular" => Some(PropertyFilter::Regular),
            "orderable" => Some(PropertyFilter::Orderable),
            _ => None,
        }
    }
}

/// Co-size constraint of an enumeration run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosizeSpec {
    Exact(usize),
    AtMost(usize),
}

impl CosizeSpec {
    fn values(&self) -> Vec<usize> {
        match *self {
            CosizeSpec::Exact(m) => vec![m],
            CosizeSpec::AtMost(m) => (0..=m).collect(),
        }
    }
}

/// Enumeration guards. Exhaustive runs default to n <= 7; n = 8 is the
/// documented long-run opt-in, and `BWL_MAX_N` overrides the cap entirely
/// (the caller accepts the runtime). Orders above 10 are never allowed:
/// canonical forms and the orderability scan stop there.
#[derive(Debug, Clone, Copy)]
pub struct EnumLimits {
    pub max_n: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits { max_n: 7 }
    }
}

impl EnumLimits {
    pub fn long_run() -> Self {
        EnumLimits { max_n: 8 }
    }

    /// Default limits, raised by the `BWL_MAX_N` environment variable.
    pub fn from_env() -> Self {
        let base = EnumLimits::default();
        match std::env::var("BWL_MAX_N").ok().and_then(|v| v.parse().ok()) {
            Some(n) => EnumLimits {
                max_n: usize::min(n, 10),
            },
            None => base,
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        let cap = usize::min(self.max_n, 10);
        if n > cap {
            return Err(Error::GuardExceeded {
                op: "enumerate",
                n,
                max: cap,
            });
        }
        Ok(())
    }
}

/// One isomorphism class in a classification.
#[derive(Debug, Clone)]
pub struct ClassEntry {
    pub form: CanonicalForm,
    pub representative: BetweennessStructure,
    pub labeled_count: u64,
}

/// Outcome of one exhaustive enumeration.
#[derive(Debug, Clone)]
pub struct ClassificationResult {
    pub n: usize,
    pub cosize: CosizeSpec,
    pub filter: PropertyFilter,
    pub classes: Vec<ClassEntry>,
    pub labeled_total: u64,
    pub wall: Duration,
}

/// Table of 4-point subsets used for incremental cyclic-line pruning.
struct QuadTable {
    quads: Vec<([usize; 4], [Point; 4])>,
    by_rank: Vec<Vec<u32>>,
}

fn build_quads(n: usize) -> QuadTable {
    let mut quads = Vec::new();
    let mut by_rank = vec![Vec::new(); triple_count(n)];
    for d in 3..n {
        for c in 2..d {
            for b in 1..c {
                for a in 0..b {
                    let pts = [a, b, c, d];
                    let mut ranks = [0usize; 4];
                    for (slot, skip) in (0..4).enumerate() {
                        let t: Vec<Point> =
                            pts.iter().copied().filter(|&p| p != pts[skip]).collect();
                        ranks[slot] = crate::structure::triple_rank(t[0], t[1], t[2]);
                    }
                    let id = quads.len() as u32;
                    for r in ranks {
                        by_rank[r].push(id);
                    }
                    quads.push((ranks, pts));
                }
            }
        }
    }
    QuadTable { quads, by_rank }
}

/// Decided quad forming a cyclic line: all four triples collinear with each
/// point a middle exactly once.
fn quad_cyclic(ps: &PartialStructure, db: &ClauseDb, ranks: &[usize; 4], pts: &[Point; 4]) -> bool {
    let mut count = [0u8; 4];
    for &r in ranks {
        let m = ps.mask(r);
        if m & 0b1000 != 0 {
            return false;
        }
        let slot = m.trailing_zeros() as usize;
        let middle = db.triple_points(r)[slot];
        let idx = pts.iter().position(|&p| p == middle).unwrap();
        count[idx] += 1;
    }
    count.iter().all(|&c| c == 1)
}

struct Enumeration<'a> {
    db: &'a ClauseDb,
    ps: PartialStructure<'a>,
    target: usize,
    quads: Option<&'a QuadTable>,
    stop: bool,
}

impl<'a> Enumeration<'a> {
    /// Check the quads completed by the trail segment after `mark`; a cyclic
    /// quad refutes the Regular filter.
    fn regular_ok(&self, mark: usize) -> bool {
        let Some(table) = self.quads else {
            return true;
        };
        for rank in self.ps.changed_since(mark) {
            if !self.ps.is_decided(rank) {
                continue;
            }
            for &qid in &table.by_rank[rank] {
                let (ranks, pts) = &table.quads[qid as usize];
                if ranks.iter().all(|&r| self.ps.is_decided(r))
                    && quad_cyclic(&self.ps, self.db, ranks, pts)
                {
                    return false;
                }
            }
        }
        true
    }

    fn dfs_sets(&mut self, rank: usize, chosen: usize, visit: &mut dyn FnMut(&BetweennessStructure) -> bool) {
        if self.stop {
            return;
        }
        let total = self.db.triple_count();
        let remaining = total - rank;
        if chosen + remaining < self.target {
            return;
        }
        if chosen == self.target {
            let mark = self.ps.mark();
            let mut ok = true;
            for r in rank..total {
                if !self.ps.forbid_triangle(r) {
                    ok = false;
                    break;
                }
            }
            if ok && self.regular_ok(mark) {
                self.dfs_middles(visit);
            }
            self.ps.rollback(mark);
            return;
        }
        // include this rank in the triangle set
        let mark = self.ps.mark();
        if self.ps.assign_triangle(rank) && self.regular_ok(mark) {
            self.dfs_sets(rank + 1, chosen + 1, visit);
        }
        self.ps.rollback(mark);
        if self.stop {
            return;
        }
        // exclude it
        let mark = self.ps.mark();
        if self.ps.forbid_triangle(rank) && self.regular_ok(mark) {
            self.dfs_sets(rank + 1, chosen, visit);
        }
        self.ps.rollback(mark);
    }

    fn dfs_middles(&mut self, visit: &mut dyn FnMut(&BetweennessStructure) -> bool) {
        if self.stop {
            return;
        }
        let Some(rank) = self.ps.branch_triple() else {
            let b = self.ps.to_structure();
            debug_assert!(b.check_frp(), "propagation soundness");
            if !visit(&b) {
                self.stop = true;
            }
            return;
        };
        let mask = self.ps.mask(rank);
        for slot in 0..3 {
            if mask & (1 << slot) == 0 {
                continue;
            }
            let mark = self.ps.mark();
            if self.ps.assign_middle_slot(rank, slot) && self.regular_ok(mark) {
                self.dfs_middles(visit);
            }
            self.ps.rollback(mark);
            if self.stop {
                return;
            }
        }
        // the triangle option never survives the set-selection phase
        debug_assert_eq!(mask & 0b1000, 0);
    }
}

/// Visit every almost-metrizable labeled structure of order `n` with exactly
/// `m` triangles, in a fixed deterministic order. The visitor returns false
/// to stop early. With `prune_regular`, branches containing a completed
/// cyclic line are cut (only valid when the caller filters on regularity).
fn for_each_structure(
    n: usize,
    m: usize,
    prune_regular: bool,
    visit: &mut dyn FnMut(&BetweennessStructure) -> bool,
) {
    if m > triple_count(n) {
        return;
    }
    let db = ClauseDb::new(n);
    let quads = prune_regular.then(|| build_quads(n));
    let mut search = Enumeration {
        ps: PartialStructure::new(&db),
        db: &db,
        target: m,
        quads: quads.as_ref(),
        stop: false,
    };
    search.dfs_sets(0, 0, visit);
}

/// Exhaustively classify `B_filter(n, cosize)` up to isomorphism.
pub fn enumerate_structures(
    n: usize,
    cosize: CosizeSpec,
    filter: PropertyFilter,
    limits: &EnumLimits,
) -> Result<ClassificationResult> {
    limits.check(n)?;
    let start = Instant::now();
    let mut classes: Vec<ClassEntry> = Vec::new();
    let mut index: HashMap<CanonicalForm, usize> = HashMap::new();
    let mut guard_error = None;
    for m in cosize.values() {
        for_each_structure(n, m, filter == PropertyFilter::Regular, &mut |b| {
            let form = match canonical_form(b) {
                Ok(f) => f,
                Err(e) => {
                    guard_error = Some(e);
                    return false;
                }
            };
            match index.get(&form) {
                Some(&i) => classes[i].labeled_count += 1,
                None => {
                    index.insert(form.clone(), classes.len());
                    classes.push(ClassEntry {
                        form,
                        representative: b.clone(),
                        labeled_count: 1,
                    });
                }
            }
            true
        });
    }
    if let Some(e) = guard_error {
        return Err(e);
    }
    // property filters are isomorphism-invariant, so one test per class
    classes.retain(|c| filter.accepts(&c.representative));
    let labeled_total = classes.iter().map(|c| c.labeled_count).sum();
    Ok(ClassificationResult {
        n,
        cosize,
        filter,
        classes,
        labeled_total,
        wall: start.elapsed(),
    })
}

/// First structure in `B_filter(n, m)` under the deterministic enumeration
/// order, or `None` when the set is empty.
pub fn exists_structure(
    n: usize,
    m: usize,
    filter: PropertyFilter,
    limits: &EnumLimits,
) -> Result<Option<BetweennessStructure>> {
    limits.check(n)?;
    let mut found = None;
    for_each_structure(n, m, filter == PropertyFilter::Regular, &mut |b| {
        if filter.accepts(b) {
            found = Some(b.clone());
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// Smallest co-size above `k` with a nonempty `B_filter(n, .)`, by
/// ascending-co-size search with early exit.
pub fn tau(n: usize, k: usize, filter: PropertyFilter, limits: &EnumLimits) -> Result<usize> {
    limits.check(n)?;
    for m in (k + 1)..=triple_count(n) {
        if exists_structure(n, m, filter, limits)?.is_some() {
            return Ok(m);
        }
    }
    // the all-triangles structure always exists with co-size C(n,3) and
    // satisfies every filter, so the loop returns before reaching here
    unreachable!("co-size C(n,3) is always attained")
}

/// `tau(n, n - 2, filter)`: the second gap of the co-size spectrum.
pub fn tau_second(n: usize, filter: PropertyFilter, limits: &EnumLimits) -> Result<usize> {
    tau(n, n - 2, filter, limits)
}

/// Per-`n` nonemptiness of `B(n, kn - c)` over an inclusive range.
pub fn probe_gamma_sigma(
    k: usize,
    c: i64,
    n_from: usize,
    n_to: usize,
    limits: &EnumLimits,
) -> Result<Vec<(usize, bool)>> {
    let mut out = Vec::new();
    for n in n_from..=n_to {
        let m = (k as i64) * (n as i64) - c;
        let nonempty = if m < 0 || m > triple_count(n) as i64 {
            false
        } else if m == 0 {
            // linear structures exist at every order
            true
        } else {
            exists_structure(n, m as usize, PropertyFilter::Trivial, limits)?.is_some()
        };
        out.push((n, nonempty));
    }
    Ok(out)
}

/// Quick existence check of a labeled structure with the given triangle set,
/// used by verifiers for pattern-specific probes.
pub fn structures_with_triangle_set(
    n: usize,
    triangles: &[[Point; 3]],
    limits: &EnumLimits,
) -> Result<Vec<BetweennessStructure>> {
    limits.check(n)?;
    let db = ClauseDb::new(n);
    let mut ps = PartialStructure::new(&db);
    let tri_ranks: Vec<usize> = triangles
        .iter()
        .map(|t| {
            let mut s = *t;
            s.sort_unstable();
            crate::structure::triple_rank(s[0], s[1], s[2])
        })
        .collect();
    let mut ok = true;
    for rank in 0..db.triple_count() {
        let keep = if tri_ranks.contains(&rank) {
            ps.assign_triangle(rank)
        } else {
            ps.forbid_triangle(rank)
        };
        if !keep {
            ok = false;
            break;
        }
    }
    let mut out = Vec::new();
    if ok {
        collect_all(&mut ps, &mut out);
    }
    Ok(out)
}

fn collect_all(ps: &mut PartialStructure, out: &mut Vec<BetweennessStructure>) {
    let Some(rank) = ps.branch_triple() else {
        out.push(ps.to_structure());
        return;
    };
    let mask = ps.mask(rank);
    for slot in 0..3 {
        if mask & (1 << slot) != 0 {
            let mark = ps.mark();
            if ps.assign_middle_slot(rank, slot) {
                collect_all(ps, out);
            }
            ps.rollback(mark);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::iso::is_isomorphic;

    fn limits() -> EnumLimits {
        EnumLimits::default()
    }

    #[test]
    fn linear_classes_at_4_are_path_and_cycle() {
        let r = enumerate_structures(4, CosizeSpec::Exact(0), PropertyFilter::Trivial, &limits())
            .unwrap();
        assert_eq!(r.classes.len(), 2);
        let p4 = FamilySpec::Path { n: 4 }.induced_structure().unwrap();
        let c4 = FamilySpec::Cycle { n: 4 }.induced_structure().unwrap();
        for class in &r.classes {
            assert!(
                is_isomorphic(&class.representative, &p4).unwrap()
                    || is_isomorphic(&class.representative, &c4).unwrap()
            );
        }
    }

    #[test]
    fn quasilinear_classes_at_5() {
        let r = enumerate_structures(5, CosizeSpec::Exact(1), PropertyFilter::Trivial, &limits())
            .unwrap();
        assert_eq!(r.classes.len(), 3);
        let expected = [
            FamilySpec::CompleteBipartite { a: 2, b: 3 }
                .induced_structure()
                .unwrap(),
            FamilySpec::R { n: 5, i: 1, c: 4 }.induced_structure().unwrap(),
            FamilySpec::S { n: 5, c: 4 }.induced_structure().unwrap(),
        ];
        for want in &expected {
            assert!(r
                .classes
                .iter()
                .any(|c| is_isomorphic(&c.representative, want).unwrap()));
        }
    }

    #[test]
    fn tau_small_orders() {
        assert_eq!(tau(3, 0, PropertyFilter::Trivial, &limits()).unwrap(), 1);
        assert_eq!(tau(4, 0, PropertyFilter::Trivial, &limits()).unwrap(), 1);
        assert_eq!(tau(5, 0, PropertyFilter::Trivial, &limits()).unwrap(), 1);
        assert_eq!(tau(6, 0, PropertyFilter::Trivial, &limits()).unwrap(), 2);
    }

    #[test]
    fn no_regular_structures_of_cosize_one_at_order_5() {
        // every B(5,1) class contains a cyclic line
        let r = enumerate_structures(5, CosizeSpec::Exact(1), PropertyFilter::Regular, &limits())
            .unwrap();
        assert!(r.classes.is_empty());
        let trivial =
            enumerate_structures(5, CosizeSpec::Exact(1), PropertyFilter::Trivial, &limits())
                .unwrap();
        for class in &trivial.classes {
            assert!(!class.representative.is_regular());
        }
    }

    #[test]
    fn regular_classes_of_minimum_cosize_at_order_5() {
        let r = enumerate_structures(5, CosizeSpec::Exact(2), PropertyFilter::Regular, &limits())
            .unwrap();
        assert_eq!(r.classes.len(), 4);
        let expected = [
            FamilySpec::Q { n: 5, c: 3 }.induced_structure().unwrap(),
            FamilySpec::R { n: 5, i: 1, c: 3 }.induced_structure().unwrap(),
            FamilySpec::R { n: 5, i: 2, c: 3 }.induced_structure().unwrap(),
            FamilySpec::S { n: 5, c: 3 }.induced_structure().unwrap(),
        ];
        for want in &expected {
            assert!(r
                .classes
                .iter()
                .any(|c| is_isomorphic(&c.representative, want).unwrap()));
        }
    }

    #[test]
    fn determinism_across_runs() {
        let a = enumerate_structures(5, CosizeSpec::Exact(1), PropertyFilter::Trivial, &limits())
            .unwrap();
        let b = enumerate_structures(5, CosizeSpec::Exact(1), PropertyFilter::Trivial, &limits())
            .unwrap();
        let fa: Vec<_> = a.classes.iter().map(|c| c.form.clone()).collect();
        let fb: Vec<_> = b.classes.iter().map(|c| c.form.clone()).collect();
        assert_eq!(fa, fb);
        assert_eq!(a.labeled_total, b.labeled_total);
    }

    #[test]
    fn guard_respected() {
        assert!(enumerate_structures(
            9,
            CosizeSpec::Exact(1),
            PropertyFilter::Trivial,
            &limits()
        )
        .is_err());
    }
}
