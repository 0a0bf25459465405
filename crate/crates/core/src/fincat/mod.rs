//! Finite categories as object/morphism tables with total composition data.
//!
//! Ids are dense integers and every enumeration is lexicographic in ids, so
//! all witness choices are deterministic.

mod category;
mod functor;
mod natural;
mod equivalence;
mod limits;
mod groupoid;

pub use category::{CategoryError, FinCategory, RawCategory};
pub use functor::{enumerate_functors, Functor, FunctorError};
pub use natural::{
    check_natural, enumerate_transformations, is_natural_iso, NatTransformation, NaturalityFailure,
};
pub use equivalence::{find_isomorphism, is_equivalence, isomorphic, EquivalenceWitness};
pub use limits::{cones_into, finite_limit, universal_property_holds, Diagram, DiagramError, LimitCone};
pub use groupoid::{as_groupoid, FinGroupoid, GroupoidError};
