//! Exact machinery for finite higher-rank graphs and their branching systems.
//!
//! The crate is split along the objects it manipulates:
//!
//! * [`arith`] — exact scalars: big rationals, positive prime-power products
//!   (closed under rational powers), and formal radical sums. Nothing in this
//!   crate ever touches floating point.
//! * [`graph`] — finite k-colored 1-skeletons with factorization squares,
//!   validation of the k-graph axioms, path normal forms, composition,
//!   factorization, minimal common extensions and exhaustiveness.
//! * [`cylinder`] — the exact set algebra of boundary-path cylinders and the
//!   canonical branching system on the boundary path space with counting
//!   measure.
//! * [`interval`] — branching systems on rational boxes in dimension 1 or 2
//!   with piecewise affine/monomial maps, Radon–Nikodym data, the full axiom
//!   checkers, and semibranching conversion.
//! * [`operator`] — weighted composition operators: the symbolic form of the
//!   generating partial isometries, their products and adjoints, and the
//!   Cuntz–Krieger relation checker.
//! * [`periodicity`] — the periodicity test for single-vertex 2-graphs, the
//!   distinguished unitary, and faithfulness certificates.
//!
//! Everything is immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod cylinder;
pub mod fixtures;
pub mod graph;
pub mod interval;
pub mod operator;
pub mod periodicity;

pub use arith::{Exact, Monomial, Radical, Rational};
pub use cylinder::{canonical_bs, CanonicalBs, CylinderSet};
pub use graph::{Degree, KGraph, Path, RawGraph, ValidationReport};
