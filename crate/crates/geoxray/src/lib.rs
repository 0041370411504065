//! Numerical laboratory for the geodesic X-ray transform on 2D Riemannian
//! surfaces with boundary.
//!
//! The crate is organised around a small set of subsystems:
//!
//! * [`surface`] — metric families on planar charts (conformal disk, warped
//!   annulus) behind the [`surface::Geometry`] trait, plus a named preset
//!   registry selected at runtime.
//! * [`grid`] — structured spatial grids per chart with quadrature weights,
//!   finite-difference stencils and smooth interpolation.
//! * [`flow`] — the geodesic flow on the unit tangent bundle: escape times,
//!   boundary fans, Santaló quadrature, non-escaping mass, Jacobi fields.
//! * [`tensors`] — symmetric tensor fields, the pullback/pushforward pair,
//!   the symmetrised derivative and divergence, solenoidal decomposition.
//! * [`xray`] — the ray transform, its adjoint, resolvents and normal
//!   operator, matrix assembly with SVD injectivity margins, and the
//!   invariant-extension solver.
//! * [`fiber`] — vertical Fourier analysis on the unit tangent bundle:
//!   raising/lowering operators, Hilbert transform, Szegő projector, and the
//!   holomorphic product construction.

pub mod fields;
pub mod fiber;
pub mod flow;
pub mod grid;
pub mod solve;
pub mod surface;
pub mod tensors;
pub mod xray;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("point ({0}, {1}) lies outside the extended chart domain")]
    OutsideChart(f64, f64),
    #[error("unknown surface preset `{0}`")]
    UnknownPreset(String),
    #[error("invalid model parameter: {0}")]
    InvalidModel(String),
    #[error("integrator failure: {0}")]
    Integrator(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("escape rate undefined: {0}")]
    UndefinedRate(String),
    #[error("linear solver did not converge (relative residual {residual:.3e})")]
    SolverNonConvergence { residual: f64 },
    #[error("degenerate basis: {0}")]
    DegenerateBasis(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed data: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
