//! Exact-arithmetic verification workbench for 3-dimensional normal almost
//! contact metric manifolds given by constant-structure frames.
//!
//! A frame manifold is a Lie-algebra frame `e_1, e_2, e_3` with constant
//! brackets and a constant metric. On it we compute the Levi-Civita
//! connection, curvature, almost contact metric invariants, and the
//! residuals of the Riemann and Ricci soliton equations, all with exact
//! rationals.

#![allow(clippy::needless_range_loop)]

pub mod acm;
pub mod connection;
pub mod curvature;
pub mod error;
pub mod fixtures;
pub mod frame;
pub mod kn;
pub mod manifest;
pub mod operators;
pub mod report;
pub mod scalar;
pub mod soliton;
pub mod suite;
pub mod tensor;

pub use acm::{AcmStructure, AlphaBetaReport, ClassificationReport};
pub use connection::{koszul_connection, Connection};
pub use curvature::{curvature_package, CurvaturePackage};
pub use error::{Error, Result};
pub use frame::{build_manifold, Bracket, FrameManifold, VectorField};
pub use kn::kulkarni_nomizu;
pub use report::{Check, CheckReport, Status};
pub use scalar::{parse_rational, Rational};
pub use soliton::{GradientSolitonInstance, SolitonInstance};
pub use tensor::{tensor_contract, tensor_norm_squared, Tensor, Variance};
