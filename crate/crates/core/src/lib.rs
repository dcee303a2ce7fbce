//! Exact toolkit for finite betweenness structures.
//!
//! A betweenness structure assigns to every 3-subset of an `n`-point ground
//! set either a *triangle* state or a *collinear* state naming the middle
//! point. The crate builds such structures from weighted graphs via exact
//! shortest-path metrics, classifies them up to isomorphism by exhaustive
//! isomorph-reduced search, and decides metrizability through exact rational
//! linear feasibility. All metric arithmetic is arbitrary-precision rational;
//! no floating point enters any decision.
//!
//! Module map:
//! - [`structure`]: the core representation, axioms and basic queries;
//! - [`graphs`]: weighted graphs, all-pairs shortest paths, metric induction;
//! - [`families`]: the named parametric graph families and the exceptional
//!   catalog;
//! - [`iso`]: canonical forms and isomorphism;
//! - [`hyper`]: triangle hypergraphs and star-shaped predicates;
//! - [`metrize`]: metrizability decisions with rational certificates;
//! - [`enumerate`]: exhaustive enumeration, extremal counts and the claim
//!   verifiers.

pub mod enumerate;
pub mod error;
pub mod families;
pub mod graphs;
pub mod hyper;
pub mod iso;
pub mod metrize;
pub mod structure;

pub use error::{Error, Result};
pub use structure::{BetweennessStructure, Point, PointOrder, TripleState};

// re-exported because rational weights and metrics appear in public APIs
pub use num;
