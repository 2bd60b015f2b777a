//! Model curves versus measured delays.
//!
//! [`dataset`] reads delay-vs-field measurements, [`angle`] turns attoclock
//! offset angles into delays, [`model`] selects which delay formula to
//! evaluate, and [`sweep`]/[`compare`] produce model curves and agreement
//! metrics.

pub mod angle;
pub mod compare;
pub mod dataset;
pub mod model;
pub mod sweep;

pub use angle::{angle_to_delay, AngleClock};
pub use compare::{compare, CompareOptions, ComparisonReport};
pub use dataset::{load_dataset, read_dataset, DatasetFormat, Measurement};
pub use model::{ModelKind, ModelPoint, ModelSpec};
pub use sweep::{linear_grid, sweep, write_sweep_csv, RowStatus, SweepRow};
