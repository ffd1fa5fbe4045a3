//! Exact combinatorics of effectively multigraded polynomial rings.
//!
//! The crate computes, with exact integer/rational arithmetic throughout:
//! weight and orbit cones of monomials, the matroid of monomic relevant
//! generators, GIT cones and the chamber decomposition of the weight space
//! (the secondary fan), irrelevant ideals of characters, moving and nef
//! cones, and the Gale correspondence between ray configurations and
//! gradings.
//!
//! Modules build on each other bottom-up:
//!
//! * [`lattice`] — integer linear algebra: Smith normal form, cokernels,
//!   ranks, finitely generated abelian groups.
//! * [`cone`] — rational polyhedral cones with dual V/H representations and
//!   exact LP feasibility.
//! * [`grading`] — graded polynomial ring data: weight cones, relevance,
//!   matroid bases, semistability of points.
//! * [`gitfan`] — chambers, irrelevant ideals, secondary-fan operations,
//!   Gale duality, fans and nef cones.

pub mod cone;
pub mod error;
pub mod gitfan;
pub mod grading;
pub mod lattice;

pub use cone::{lp_feasible, LpProblem, QCone};
pub use error::{Error, Result};
pub use gitfan::{Chamber, Fan};
pub use grading::{DegreeMatrix, MonomialSupport, PointSupport};
pub use lattice::{
    cokernel, rank_of_span, smith_normal_form, Cokernel, DegreeVector, FgAbelianGroup, IntMatrix,
    Snf,
};
