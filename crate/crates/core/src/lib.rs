//! Fourth-order compact finite differences for parabolic equations with
//! mixed derivatives, in two and three space dimensions.
//!
//! The numerical core (grids, coefficient sampling, stencil weights, sparse
//! solver, time stepping, von Neumann analysis, smoothing) is generic over
//! [`Real`], implemented for `f32` and `f64`. The Black-Scholes adapter and
//! the experiment harness run in `f64`.

pub mod black_scholes;
pub mod error;
pub mod grid;
pub mod harness;
pub mod hoc_stencil;
pub mod linear_algebra;
pub mod pde_model;
pub mod scalar;
pub mod smoothing;
pub mod stability;
pub mod time_integrator;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Grid = grid::Grid<f64>;
pub type CoefficientSample = pde_model::CoefficientSample<f64>;
pub type Jet = pde_model::Jet<f64>;
pub type StencilWeights = hoc_stencil::StencilWeights<f64>;
pub type CsrMatrix = linear_algebra::CsrMatrix<f64>;
pub type SolverConfig = linear_algebra::SolverConfig<f64>;
pub type ConstantField = pde_model::ConstantField<f64>;
pub type FrozenSample = stability::FrozenSample<f64>;
pub type Smoother = smoothing::Smoother<f64>;
