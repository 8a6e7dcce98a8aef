//! Exact Helly-type certification.
//!
//! Two settings are covered:
//!
//! * linear systems in `k` unknowns, where every `(k + 1)`-subsystem being
//!   consistent forces the whole system to be consistent ([`linear`]);
//! * closed disks in the plane, where every three meeting forces all of
//!   them to meet ([`disks`]), together with the geometric machinery behind
//!   that statement: arc-polygon intersection regions, closest point-pairs
//!   and separating lines.
//!
//! All decisions are exact. Rationals are arbitrary precision; points with
//! radical coordinates are handled symbolically in quadratic extensions.

pub mod disks;
pub mod enclosure;
pub mod error;
pub mod exactq;
pub mod generate;
pub mod instance;
pub mod linear;
pub mod oracles;
pub mod par;
pub mod report;
pub mod svg;

pub use error::{Error, Result};
pub use exactq::{AffineSolutionSet, Rat, RatMatrix};
