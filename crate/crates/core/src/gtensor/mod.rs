//! Tensor and cotensor with finite groupoids, the exponential law, the
//! fundamental groupoid, and simplicial mapping spaces.

mod sharp;
mod funu;
mod exponential;
mod simplicial;
mod mapping;

pub use sharp::{sharp_tensor, sharp_times, SharpProduct, SharpTensor};
pub use funu::{funu, funu_linear, FunuCat, FunuLinear, LinUnitaryFunctor, LinearValueSet};
pub use exponential::{
    phi_to_psi_tensor, phi_to_psi_times, psi_to_phi_tensor, psi_to_phi_times, TransportError,
};
pub use simplicial::{
    fundamental_groupoid, hom_into, nerve_truncated, FiniteSimplicialSet, GroupoidPresentation,
    SimplicialError,
};
pub use mapping::{
    degeneracy, face, level_one_isos_agree, mapping_space, sharp_vertex_map,
    simplicial_identities_hold,
};
