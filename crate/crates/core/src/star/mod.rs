//! Marked *-categories: finite categories with an involution fixing objects
//! and a distinguished set of unitary morphisms.

mod marked;
mod functor;
mod classifiers;
mod equivalence;
mod linear;
mod linearize;
mod presentation;

pub use marked::{MarkedStarCategory, StarError};
pub use functor::{
    enumerate_star_functors, exists_unitary_iso, star_functor_ok, unitary_isos, StarFunctorError,
};
pub use classifiers::{classifier, represented_hom, ClassifierKind, RepresentedHom, UNIVERSAL_UNITARY};
pub use equivalence::{
    definitional_weak_equivalence, is_weak_equivalence, weak_equivalence_routes_agree,
    WeakEquivalenceWitness,
};
pub use linear::{LinElem, LinearError, LinearFunctor, LinearStarCategory};
pub use linearize::{linearize, phi_to_psi, psi_to_phi, IntoLinearError, Linearized, StarFunctorIntoLinear};
pub use presentation::{
    free_star_evaluate, FreeStarPresentation, Letter, PresentationError, Word,
};
