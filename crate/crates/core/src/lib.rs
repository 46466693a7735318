//! Exact Chern numbers of generalised Kummer varieties.
//!
//! The pipeline localizes the (deformed) universal genus on Hilbert schemes of
//! points of a toric surface, assembles the three resulting generating series
//! into the generating series of the Kummer varieties, and converts the
//! power-sum integrals into Chern numbers.
//!
//! Modules, bottom-up:
//! * [`partitions`]: partitions, arm/leg statistics, fixed-point index sets.
//! * [`polyring`]: exact truncated polynomial and series arithmetic.
//! * [`symfun`]: Newton's identities, Chern tables and genus evaluation.
//! * [`localization`]: torus-fixed points, tangent weights, localized genera.
//! * [`assembly`]: generating series and Chern numbers of `A^[[n]]` and `X^[k]`.
//! * [`reference`]: the published table of Chern numbers for `n ≤ 8`.
//! * [`cli`]: the `kummer-chern` command line.

pub mod assembly;
pub mod cli;
pub mod error;
pub mod localization;
pub mod partitions;
pub mod polyring;
pub mod reference;
pub mod symfun;

pub use error::{Error, Result};
