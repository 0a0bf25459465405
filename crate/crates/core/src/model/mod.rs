//! Model-structure predicates, lifting searches, and the explicit cylinder
//! and path factorizations.

mod lifting;
mod cylinder;
mod path;
mod axioms;

pub use lifting::{solve_lifting, solve_lifting_where, LiftingError, LiftingProblem};
pub use cylinder::{
    cylinder_canonical_from_sharp, cylinder_factorize, cylinder_factorize_linear,
    cylinder_ump_agrees, Cylinder, Factorization, LinearFactorization,
};
pub use path::{path_factorize, path_good_recipe_holds, PathObject};
pub use axioms::{
    all_objects_fibrant_and_cofibrant, has_rlp_against_generator, is_cofibration, is_good,
    retract_closure_holds, trivial_fibration_characterization_agrees, two_of_three_consistent,
    GoodWitness, RetractDiagram,
};
