//! Group actions on (marked/linear) *-categories, the resolution Fun^u(G̃, −),
//! explicit homotopy fixed points, and homotopy orbits.

mod group;
mod gtilde;
mod resolution;
mod fixed_points;
mod orbit;

pub use group::{FinGroup, GAction, GActionError, GroupError, LinearGAction};
pub use gtilde::{build_gtilde, GTilde};
pub use resolution::{
    resolution, resolution_linear, solve_equivariant_lifting, EquivariantLiftingProblem,
    Resolution, ResolutionLinear,
};
pub use fixed_points::{
    fixed_points, fixed_points_agree, fixed_points_linear, fixed_points_linear_agree,
    lim_of_resolution, lim_of_resolution_linear, FixedPoints, FixedPointsLinear,
    LimOfResolution, LimOfResolutionLinear,
};
pub use orbit::{
    gtilde_colim_certificate, induction_value, orbit, orbit_cofibrant_certificate, orbit_linear,
    trivial_fibration_section,
};
