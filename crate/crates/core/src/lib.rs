//! A workbench for finite (marked) *-categories and their ℚ(i)-linear
//! versions.
//!
//! The crate builds the standard small classifier categories, tensors and
//! cotensors with finite groupoids, cylinder and path factorizations with
//! model-structure certificates, strict equivariant fixed points and orbits,
//! and categories of controlled objects over finite bornological coarse
//! spaces.  Everything is finite and exhaustively checkable: all values are
//! immutable after validation, all operations are pure, and every search is
//! bounded and deterministic.

pub mod bounds;
pub mod scalar;
pub mod linalg;
pub mod fincat;
pub mod star;
pub mod gtensor;
pub mod model;
pub mod equivariant;
pub mod controlled;
pub mod corpus;
pub mod json;
pub mod report;
pub mod suites;
