//! Controlled generation by optimizing the source noise point of a flow ODE.
//!
//! The crate provides analytically tractable flow models built from affine
//! Gaussian probability paths: a scheduler `(alpha_t, sigma_t)`, an analytic
//! target prior (weighted point set or isotropic Gaussian mixture), the exact
//! marginal velocity field with its spatial Jacobian and divergence, fixed-step
//! ODE solvers (optionally augmented with the log-density coordinate), several
//! independently derived gradient engines (discrete adjoint, continuous
//! adjoint, closed-form Jacobian, finite differences), inverse-problem cost
//! functions with linear corruption operators, and an L-BFGS driver for the
//! outer optimization over the source point.
//!
//! The crate is `no_std` (with `alloc`); IO, configuration and the CLI live in
//! the companion `dflow-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod linalg;
pub mod objective;
pub mod optimize;
pub mod prior;
pub mod scheduler;
pub mod sensitivity;
pub mod solver;

pub use error::Error;
pub use prior::{FlowField, PosteriorStats, TargetPrior};
pub use scheduler::Scheduler;
pub use solver::{Direction, Scheme, Trajectory};
