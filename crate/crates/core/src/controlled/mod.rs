//! Controlled objects over finite bornological coarse spaces, in the
//! correspondence category of finite sets.

mod space;
mod vplus;
mod equivariant;

pub use space::{BornCoarseSpace, Bornology, GCoarseSpace, Relation, SpaceError};
pub use vplus::{
    build_vplus, is_controlled, pushforward_measure, ControlledObject, ControlledObjectError,
    VPlus,
};
pub use equivariant::{equivariant_vplus, equivariant_vplus_agrees, vplus_action, EquivariantVPlus};
