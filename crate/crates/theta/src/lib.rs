//! Abstract morphism spaces.
//!
//! A [`ThetaSpace`] bundles the spaces `N1, N2, M1, M2, A0, B0, M, N` with the
//! structure maps `rho1, rho2, mu, nu` satisfying diagram (D). Its total space
//! consists of [`MorphismPoint`]s, acted on by the groups `G_R` and `G_L`
//! through [`RightElement`] and [`LeftElement`].

pub mod chart;
pub mod doc;
pub mod error;
pub mod group;
pub mod point;
pub mod random;
pub mod space;

pub use chart::Chart;
pub use doc::{PointDoc, ThetaDoc};
pub use error::{Result, ThetaError};
pub use group::{act, act_left, act_right, GroupElement, LeftElement, PairElement, RightElement};
pub use point::{in_w0, MorphismPoint};
pub use space::{validate_theta, Check, Dims, ThetaSpace, ValidationReport, CHECK_DIAGRAM, CHECK_DIMS, CHECK_NU, CHECK_RHO2};
