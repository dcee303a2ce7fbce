//! Metrizability decisions with exact rational certificates.
//!
//! A structure is metrizable when some metric induces it; after rescaling,
//! strictness of the triangle inequalities can be pinned as slack >= 1 and
//! positivity as distance >= 1, which turns the decision into a closed
//! rational feasibility problem. A hypergraph is metrizable when some
//! metrizable structure has exactly its edges as triangles; the middle
//! assignments of the remaining triples are searched with unit propagation.
//!
//! Positive verdicts are re-validated by a round trip through the metric
//! induction code path, which shares nothing with the solver.

mod lp;

use num::BigRational;

use crate::enumerate::propagate::{ClauseDb, PartialStructure};
use crate::error::{Error, Result};
use crate::graphs::{induce, pair_rank, RationalMetric};
use crate::hyper::TriangleHypergraph;
use crate::iso::{dedupe, CanonicalForm};
use crate::structure::{binom2, BetweennessStructure, TripleState};

/// The rational feasibility system of one structure: a variable per
/// unordered pair, one equality per collinear triple, three slack
/// inequalities per triangle, and an implicit `>= 1` bound per variable.
#[derive(Debug, Clone)]
pub struct FeasibilitySystem {
    pub num_vars: usize,
    /// `d[.0] = d[.1] + d[.2]`
    pub equalities: Vec<(usize, usize, usize)>,
    /// `d[.1] + d[.2] - d[.0] >= 1`
    pub slack_inequalities: Vec<(usize, usize, usize)>,
}

/// Build the feasibility system characterizing the metrics that induce `b`.
pub fn feasibility_system(b: &BetweennessStructure) -> FeasibilitySystem {
    let n = b.order();
    let pr = |x: usize, y: usize| pair_rank(x.min(y), x.max(y));
    let mut equalities = Vec::new();
    let mut slack_inequalities = Vec::new();
    for z in 0..n {
        for y in 0..z {
            for x in 0..y {
                match b.state(x, y, z) {
                    TripleState::Collinear(m) => {
                        let others: Vec<usize> =
                            [x, y, z].into_iter().filter(|&p| p != m).collect();
                        equalities.push((
                            pr(others[0], others[1]),
                            pr(others[0], m),
                            pr(m, others[1]),
                        ));
                    }
                    TripleState::Triangle => {
                        for m in [x, y, z] {
                            let others: Vec<usize> =
                                [x, y, z].into_iter().filter(|&p| p != m).collect();
                            slack_inequalities.push((
                                pr(others[0], others[1]),
                                pr(others[0], m),
                                pr(m, others[1]),
                            ));
                        }
                    }
                }
            }
        }
    }
    FeasibilitySystem {
        num_vars: binom2(n),
        equalities,
        slack_inequalities,
    }
}

/// Exact rational point satisfying the system, or `None` when infeasible.
/// An inconsistent equality subsystem is reported as an error, distinct
/// from inequality infeasibility.
pub fn solve_feasibility(sys: &FeasibilitySystem) -> Result<Option<Vec<BigRational>>> {
    lp::solve(sys.num_vars, &sys.equalities, &sys.slack_inequalities)
}

/// A metric inducing exactly `b`, with all distances and triangle slacks
/// at least 1, or `None` when no inducing metric exists.
pub fn metrize_structure(b: &BetweennessStructure) -> Option<RationalMetric> {
    let sys = feasibility_system(b);
    let assignment = solve_feasibility(&sys)
        .expect("betweenness equalities are homogeneous, never inconsistent")?;
    let metric = RationalMetric::new(b.order(), assignment)
        .expect("feasible point satisfies all metric invariants");
    // independent round trip: the certificate must re-induce the structure
    assert_eq!(
        induce(&metric),
        *b,
        "solver produced a metric that does not re-induce its structure"
    );
    Some(metric)
}

/// Why a hypergraph failed to metrize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotMetrizableReason {
    /// No assignment of middles to the non-edge triples satisfies the four
    /// relations property.
    NoAlmostMetrizableAssignment,
    /// Almost-metrizable assignments exist, but every one has an infeasible
    /// metric system.
    AllAssignmentsLpInfeasible,
}

#[derive(Debug, Clone)]
pub enum MetrizationVerdict {
    Metrizable {
        metric: RationalMetric,
        structure: BetweennessStructure,
    },
    NotMetrizable {
        reason: NotMetrizableReason,
    },
}

impl MetrizationVerdict {
    pub fn is_metrizable(&self) -> bool {
        matches!(self, MetrizationVerdict::Metrizable { .. })
    }
}

/// One isomorphism class of structures realizing the hypergraph.
#[derive(Debug, Clone)]
pub struct RealizingClass {
    pub form: CanonicalForm,
    pub structure: BetweennessStructure,
    pub labeled_count: u64,
    pub metric: Option<RationalMetric>,
}

#[derive(Debug, Clone)]
pub struct HypergraphMetrization {
    pub verdict: MetrizationVerdict,
    /// All realizing almost-metrizable classes, present when requested.
    pub classes: Option<Vec<RealizingClass>>,
}

/// Decide metrizability of a triangle hypergraph (n <= 9): edges are forced
/// to Triangle, every other triple is assigned a middle by backtracking with
/// unit propagation, and each complete almost-metrizable class is tested for
/// rational feasibility.
pub fn metrize_hypergraph(
    h: &TriangleHypergraph,
    collect_all: bool,
) -> Result<HypergraphMetrization> {
    let n = h.order();
    if n > 9 {
        return Err(Error::GuardExceeded {
            op: "metrize_hypergraph",
            n,
            max: 9,
        });
    }
    let db = ClauseDb::new(n);
    let mut ps = PartialStructure::new(&db);
    let mut consistent = true;
    for rank in 0..db.triple_count() {
        let t = db.triple_points(rank);
        let ok = if h.has_edge(t[0], t[1], t[2]) {
            ps.assign_triangle(rank)
        } else {
            ps.forbid_triangle(rank)
        };
        if !ok {
            consistent = false;
            break;
        }
    }
    let mut labeled: Vec<BetweennessStructure> = Vec::new();
    if consistent {
        collect_assignments(&mut ps, &mut labeled);
    }
    let raw = dedupe(labeled)?;
    let mut verdict: Option<MetrizationVerdict> = None;
    let had_assignments = !raw.is_empty();
    let mut classes = Vec::with_capacity(raw.len());
    for (form, structure, labeled_count) in raw {
        debug_assert!(structure.check_frp());
        if verdict.is_some() && !collect_all {
            break;
        }
        let metric = metrize_structure(&structure);
        if let (None, Some(m)) = (&verdict, &metric) {
            verdict = Some(MetrizationVerdict::Metrizable {
                metric: m.clone(),
                structure: structure.clone(),
            });
        }
        classes.push(RealizingClass {
            form,
            structure,
            labeled_count,
            metric,
        });
    }
    let verdict = verdict.unwrap_or(MetrizationVerdict::NotMetrizable {
        reason: if had_assignments {
            NotMetrizableReason::AllAssignmentsLpInfeasible
        } else {
            NotMetrizableReason::NoAlmostMetrizableAssignment
        },
    });
    Ok(HypergraphMetrization {
        verdict,
        classes: collect_all.then_some(classes),
    })
}

fn collect_assignments(ps: &mut PartialStructure, out: &mut Vec<BetweennessStructure>) {
    let Some(rank) = ps.branch_triple() else {
        out.push(ps.to_structure());
        return;
    };
    let mask = ps.mask(rank);
    for slot in 0..3 {
        if mask & (1 << slot) != 0 {
            let mark = ps.mark();
            if ps.assign_middle_slot(rank, slot) {
                collect_assignments(ps, out);
            }
            ps.rollback(mark);
        }
    }
    if mask & 0b1000 != 0 {
        let mark = ps.mark();
        if ps.assign_triangle(rank) {
            collect_assignments(ps, out);
        }
        ps.rollback(mark);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::graphs::{apsp, induce_graph};
    use crate::hyper::{double_star_disjoint, triangle_hypergraph};
    use crate::iso::is_isomorphic;
    use num::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn path3_metrizes() {
        let b = FamilySpec::Path { n: 3 }.induced_structure().unwrap();
        let m = metrize_structure(&b).unwrap();
        assert_eq!(induce(&m), b);
    }

    #[test]
    fn t71_metrizes_with_round_trip() {
        let b = FamilySpec::T { n: 7, i: 1 }.induced_structure().unwrap();
        let m = metrize_structure(&b).unwrap();
        assert_eq!(induce(&m), b);
        // scale-invariance of the validator
        for factor in [rat(2, 1), rat(1, 2)] {
            let scaled = m.scaled(&factor).unwrap();
            assert_eq!(induce(&scaled), b);
        }
    }

    #[test]
    fn k23_system_accepts_its_own_metric() {
        let g = FamilySpec::CompleteBipartite { a: 2, b: 3 }.build().unwrap();
        let b = induce_graph(&g);
        let sys = feasibility_system(&b);
        // the unit-weight shortest-path metric satisfies every constraint
        let m = apsp(&g);
        for &(a, p, q) in &sys.equalities {
            let (x0, x1) = crate::graphs::pair_unrank(a);
            let (y0, y1) = crate::graphs::pair_unrank(p);
            let (z0, z1) = crate::graphs::pair_unrank(q);
            assert_eq!(m.get(x0, x1), m.get(y0, y1) + m.get(z0, z1));
        }
        for &(a, p, q) in &sys.slack_inequalities {
            let (x0, x1) = crate::graphs::pair_unrank(a);
            let (y0, y1) = crate::graphs::pair_unrank(p);
            let (z0, z1) = crate::graphs::pair_unrank(q);
            assert!(m.get(y0, y1) + m.get(z0, z1) > m.get(x0, x1));
        }
        assert!(metrize_structure(&b).is_some());
    }

    #[test]
    fn frp_violation_is_not_metrizable() {
        let b = BetweennessStructure::from_collinear(4, &[(0, 1, 2, 1), (0, 3, 1, 3)]).unwrap();
        assert!(!b.check_frp());
        assert!(metrize_structure(&b).is_none());
    }

    #[test]
    fn disjoint_double_star_metrizes_uniquely_at_order_7() {
        let h = double_star_disjoint(7).unwrap();
        let out = metrize_hypergraph(&h, true).unwrap();
        assert!(out.verdict.is_metrizable());
        let classes = out.classes.unwrap();
        assert_eq!(classes.len(), 1);
        let expect = FamilySpec::T { n: 7, i: 1 }.induced_structure().unwrap();
        assert!(is_isomorphic(&classes[0].structure, &expect).unwrap());
        assert!(classes[0].metric.is_some());
    }

    #[test]
    fn empty_hypergraph_on_4_points_realizes_both_linear_classes() {
        let h = TriangleHypergraph::new(4, vec![]).unwrap();
        let out = metrize_hypergraph(&h, true).unwrap();
        assert!(out.verdict.is_metrizable());
        let classes = out.classes.unwrap();
        assert_eq!(classes.len(), 2);
        let p4 = FamilySpec::Path { n: 4 }.induced_structure().unwrap();
        let c4 = FamilySpec::Cycle { n: 4 }.induced_structure().unwrap();
        let mut matched = 0;
        for class in &classes {
            if is_isomorphic(&class.structure, &p4).unwrap()
                || is_isomorphic(&class.structure, &c4).unwrap()
            {
                matched += 1;
            }
            assert!(class.metric.is_some());
        }
        assert_eq!(matched, 2);
    }

    #[test]
    fn own_hypergraph_always_realizable() {
        for spec in [
            FamilySpec::S { n: 6, c: 4 },
            FamilySpec::R { n: 5, i: 1, c: 4 },
            FamilySpec::Q { n: 5, c: 3 },
        ] {
            let b = spec.induced_structure().unwrap();
            let h = triangle_hypergraph(&b);
            let out = metrize_hypergraph(&h, false).unwrap();
            assert!(out.verdict.is_metrizable(), "{spec}");
            assert!(out.classes.is_none());
        }
    }
}
