//! Frenet and Bishop frames of space curves, AW(k)-type classification in
//! both frames, and curve synthesis from prescribed Bishop curvatures.
//!
//! The pipeline:
//!
//! - [`curve`]: arc-length resampling and finite-difference derivatives,
//! - [`frames`]: Frenet apparatus and double-reflection Bishop frames,
//! - [`profile`]: curvature profiles and the Frenet <-> Bishop conversion,
//! - [`aw`]: the N-vector chains, residual batteries and [`aw::AwReport`],
//! - [`synthesis`]: RK4 integration of the Bishop equations and the
//!   closed-form solution families,
//! - [`io`] and [`cli`]: file formats and the command-line front end.
//!
//! See the crate's `examples/` directory for one runnable program per capability.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod aw;
pub mod cli;
pub mod curve;
pub mod diff;
pub mod error;
pub mod expr;
pub mod frames;
pub mod io;
pub mod profile;
pub mod spline;
pub mod synthesis;
pub mod vec3;

pub use aw::{
    bishop_aw_residuals, bishop_n_chain, classify, dependence_check, evaluate_curve, evaluate_profile,
    frenet_aw_residuals, frenet_n_chain, gram_schmidt_star, AwCondition, AwReport, ClassifyInput, ClassifyOptions,
    PlaneVec,
};
pub use curve::{derivatives, resample_arclength, CurveSamples, Grid};
pub use error::{Error, Result};
pub use expr::{parse_scalar_function, Expr, ScalarFunction};
pub use frames::{bishop_frame, frenet_frame, BishopField, FrenetField, DEFAULT_KAPPA_MIN};
pub use profile::{bishop_to_frenet, frenet_to_bishop, measure_curve, CurvatureProfile, MeasureOptions, Provenance};
pub use synthesis::{
    canonical_profile, synthesize_from_bishop, synthesize_from_frenet, CanonicalFamily, FamilyKind, InitialFrame,
    SynthesisSpec, Synthesized,
};
pub use vec3::Vec3;
