//! Ballot permutations and odd order permutations.
//!
//! The crate implements a statistic-preserving bijection between ballot
//! permutations (every prefix has at least as many ascents as descents) and
//! permutations whose cycles all have odd length, together with the
//! machinery it is built from:
//!
//! - [`perm`]: one-line permutations, cycle systems, linear and cyclic
//!   statistics, ballot height profiles and class enumeration.
//! - [`boxperm`]: box-permutations, cyclic box-permutations and the
//!   box-neighbor-set preserving bijections `phi` and `psi`.
//! - [`dyck`]: maximal Dyck factor extraction and the main bijection
//!   [`dyck::psi_map`] with its inverse.
//! - [`clusters`]: well-labelled positive paths (cluster-permutations), odd
//!   order cluster-permutations and the extended bijection, plus exact
//!   generating function oracles.
//! - [`walks`]: Gessel and Gouyou-Beauchamps quarter-plane walk counts.
//! - [`patterns`]: classical pattern avoidance, the ballot recurrences for
//!   213 and 231 avoiders and the descent-preserving Wilf maps.
//! - [`verify`]: self-contained verification suites producing [`verify::Report`]s.

pub mod boxperm;
pub mod clusters;
pub mod dyck;
mod error;
pub mod patterns;
pub mod perm;
mod recurrence;
pub mod reference;
pub mod verify;
pub mod walks;

pub use error::{Error, Result};
pub use perm::{BallotProfile, CycleSystem, PeakRecord, Permutation, StatRecord};
