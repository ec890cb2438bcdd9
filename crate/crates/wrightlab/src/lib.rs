//! wrightlab evaluates the Wright function 1Psi1(rho,k;rho,delta;x) and the
//! reduced Wright function phi(rho,delta;x) for real arguments by several
//! independent routes (convergent series, exact polynomial form,
//! special-function closed forms, saddle-point and algebraic asymptotics,
//! quadrature of integral representations) and cross-validates them.

pub mod asymptotics;
pub mod closed_forms;
mod dd;
pub mod error;
pub mod integral_reps;
pub mod logscale;
mod quad;
pub mod report;
mod series;
pub mod specfun;
pub mod verify;
pub mod wright_core;

pub use error::{Result, WrightError};
pub use logscale::LogScaledReal;
pub use report::MethodReport;
pub use wright_core::{PhiParams, WrightParams};
