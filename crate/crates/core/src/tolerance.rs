//! Default numeric tolerances.
//!
//! All thresholds are relative unless stated otherwise.

/// Target width of the arctangent bisection.
pub const BISECTION_RELATIVE: f64 = 1e-12;

/// Iteration cap of every floating bisection in the crate.
pub const BISECTION_MAX_ITERATIONS: usize = 200;

/// Width of refined isolation intervals for Robbins roots.
pub const ROOT_REFINEMENT: f64 = 1e-15;

/// Matching a tangential `16 A^2` against a Robbins root.
pub const ROOT_MATCH: f64 = 1e-7;

/// Normalized resultant magnitude accepted as zero for inexact inputs.
pub const RESULTANT_ZERO: f64 = 1e-6;

/// Float equality for the Pitot condition on inexact inputs.
pub const PITOT_RELATIVE: f64 = 1e-12;

/// Fit residual, relative to the configuration diameter, accepted as
/// tangential or cyclic.
pub const FIT_RESIDUAL: f64 = 1e-6;

/// Allowed miss of the arctangent sum when reconstructing from an inradius.
pub const ANGLE_SUM: f64 = 1e-9;
