//! Closed-form models of the attoclock ionization time delay.
//!
//! The crate evaluates the geometry of the field-dressed Coulomb barrier,
//! the adiabatic, nonadiabatic (symmetrized), intermediate and Keldysh delay
//! formulas, the photon-energy partition of the ionization step, and compares
//! model curves against measured delay-vs-field datasets.
//!
//! Everything is in Hartree atomic units internally; [`units`] converts at
//! the boundary.

// `!(x > 0.0)` is used throughout so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod barrier;
pub mod cli;
pub mod data;
pub mod delays;
pub mod error;
pub mod format;
pub mod photons;
pub mod units;

pub use barrier::{AtomSpec, BarrierGeometry, PulseSpec};
pub use delays::{DelayResult, Excess, Regime};
pub use error::{Error, Result};
pub use photons::EnergyPartition;
