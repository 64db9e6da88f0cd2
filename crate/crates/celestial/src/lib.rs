//! Exact verification toolkit for celestial surfaces — surfaces in 3-space
//! carrying at least two families of circles.
//!
//! The crate has four engine layers and two front layers:
//!
//! * [`exact`] — exact scalars in ℚ, ℚ(i), ℚ(i)(√m); sparse multivariate
//!   polynomials; expression parser/printer; rational maps.
//! * [`lattice`] — Picard lattices of weak Del Pezzo / ruled surfaces: class
//!   enumeration, Weyl orbits, Dynkin types, real structures.
//! * [`moebius`] — Möbius geometry: stereographic machinery, surface type and
//!   cyclicity, Möbius models on the 3-sphere, map images, singular-locus and
//!   circle-family checks.
//! * [`catalog`] — embedded example surfaces, maps, and every expected
//!   classification table, plus a text format for user surfaces.
//! * [`classifier`] — regenerates the classification tables from the engines
//!   and verifies catalog surfaces, diffing against the expected data.
//!
//! The `celestial` binary exposes all of this on the command line.

pub mod catalog;
pub mod classifier;
pub mod exact;
pub mod lattice;
pub mod moebius;
