//! Locally one-to-one, sense-preserving planar harmonic mappings `f = h + conj(g)`
//! on the unit disc whose analytic part `h` is starlike.
//!
//! The crate is split into five layers:
//!
//! - [`series`]: truncated complex power series with certified evaluation tails,
//! - [`maps`]: construction of class members (starlike `h`, admissible dilatation,
//!   reconstructed `g`), the Alexander lift and the closed-form extremal family,
//! - [`bounds`]: closed-form two-sided envelopes and coefficient bounds,
//! - [`verify`]: sweeps that check sampled members against every bound,
//! - [`cli`]: the `harmonic` command-line front end.

// `!(x < y)` is used on purpose so NaN is rejected
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod maps;
pub mod series;
pub mod verify;

pub use num_complex::Complex64;

pub use bounds::{Envelope, Quantity};
pub use maps::{HarmonicMap, HerglotzMeasure, DiskMoebius, PolarGrid};
pub use series::TruncatedSeries;
pub use verify::{BoundReport, SweepSummary, Verdict};
