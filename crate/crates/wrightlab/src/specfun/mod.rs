//! Classical special-function kernels: log-gamma with sign tracking, rising
//! products, Stirling numbers, the confluent hypergeometric function, Bessel
//! functions, the Airy function and the Whittaker W function.
//!
//! Everything here is restricted to the real-argument, desk-scale ranges the
//! rest of the crate needs.

mod airy;
pub(crate) mod bessel;
pub(crate) mod gamma;
mod kummer;
mod stirling;
pub(crate) mod whittaker;

pub use airy::airy_ai;
pub use bessel::{bessel, BesselKind};
pub use gamma::{ln_gamma, ln_gamma_signed, recip_gamma, rising_product};
pub use kummer::kummer_1f1;
pub use stirling::{stirling, BigIntStirlingTable, StirlingKind, STIRLING_MAX_INDEX};
pub use whittaker::whittaker_w;
