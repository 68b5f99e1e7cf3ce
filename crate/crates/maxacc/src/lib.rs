//! Maximal proper-acceleration bounds and their laboratory/astrophysical tests.
//!
//! A massive particle's proper acceleration is bounded by `2 m c^3 / hbar`.
//! This crate evaluates that bound and three settings where it bites:
//!
//! * relativistic transformation of accelerations between frames
//!   ([`kinematics`]),
//! * electric-field bounds at the surface of a superconducting sphere in the
//!   Meissner state ([`londonsphere`]),
//! * decay-width caps and the particle mass bounds they imply
//!   ([`widthbounds`]),
//! * equilibrium radii of degenerate stars when the bound corrects the
//!   Fermi pressure ([`stellar`]).
//!
//! [`report`] assembles a table comparing every computed quantity against its
//! published value.
//!
//! Unit policy: CGS-Gaussian everywhere (cm, g, s, erg, gauss, statvolt/cm),
//! except [`widthbounds`] which works in GeV natural units; electric-field
//! results that are compared against published numbers are converted to N/C
//! where documented. All outputs are deterministic: no randomness, no clocks,
//! and floating-point evaluation order is fixed.

// Domain guards are written `!(x > 0.0)` on purpose: the negated form also
// rejects NaN, which `x <= 0.0` lets through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bound;
pub mod config;
pub mod fmt;
pub mod kinematics;
pub mod londonsphere;
pub mod physcore;
pub mod report;
pub mod solve;
pub mod stellar;
pub mod widthbounds;

mod error;
mod quad;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
