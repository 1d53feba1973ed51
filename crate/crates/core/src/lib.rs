//! Exact computations with group-graded rings: structure-constant algebras
//! and Leavitt path algebras, epsilon idempotents, their boolean semigroup,
//! peeling decompositions and graded modules.

pub mod coeff;
pub mod decomposition;
pub mod error;
pub mod grading;
pub mod group;
pub mod lattice;
pub mod lpa;
pub mod modules;
pub mod par;
pub mod sc;

pub use coeff::{CoeffRing, CoordSpace, Ideal, Scalar};
pub use error::{Error, Result};
pub use group::{cyclic_group, FiniteGroup, GroupElem};
