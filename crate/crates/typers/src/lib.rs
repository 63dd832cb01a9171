//! Morphisms of type `(r,s)` between direct sums of sheaves, in abstract form.
//!
//! [`HomData`] records the Hom spaces between the sources and targets together
//! with their composition tensors. From it, [`build_theta_p`] assembles the
//! abstract morphism space `Θ_p`, [`mutated_hom_data`] produces the Hom data of
//! the mutated morphisms, and [`map_polarization`] carries a polarization across.

pub mod build;
pub mod error;
pub mod hom;
pub mod morphism;
pub mod mutated;
pub mod polarization;

pub use build::{build_theta_p, build_theta_p_with_layout, group_to_pair, in_w0_p, point_to_rs, rs_to_point, Layout};
pub use error::{Result, TypeError};
pub use hom::{binomial, monomials, multiplication_tensor, projective_space_ext_warnings, projective_space_hom_data, CompositionDoc, HomData, HomDoc};
pub use morphism::{compose_blocks, Multiplicities, RsMorphism, SourceAut, TargetAut};
pub use mutated::{canonical_embedding, dual_point_to_rs, mutated_hom_data, mutated_multiplicities, MutatedHomData, Realized};
pub use polarization::{map_polarization, mutated_subspace_dims, signed_difference, Polarization, PolarizationDoc, PolarizationMap};
