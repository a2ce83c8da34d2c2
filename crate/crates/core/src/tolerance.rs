//! Numeric tolerances used across the crate.
//!
//! Geometry on the unit circle keeps every coordinate in [-1, 1], so the
//! scales below are absolute unless stated otherwise. They are deliberately
//! centralized: a comparison that silently uses its own epsilon is a bug
//! magnet when two code paths must agree on the same classification.

/// Minimum circular separation between two pair angles, in radians.
///
/// Also the slack allowed when checking that an angle lies in [0, pi).
pub const ANGLE_TOL: f64 = 1e-9;

/// Relative tolerance for comparing two areas computed by independent routes.
pub const REL_TOL: f64 = 1e-9;

/// Absolute guard for area ties and strict-increase checks.
///
/// Areas of antipodal polygons on the unit circle live in (0, pi]; two areas
/// closer than this are treated as equal, and a "strict" improvement must
/// clear it. Kahan-summed signed areas of up to a few million terms stay well
/// inside this bound.
pub const AREA_GUARD: f64 = 1e-12;

/// Absolute tolerance for point-on-hyperplane and origin-position tests.
pub const GEOM_TOL: f64 = 1e-9;

/// Step used to perturb a candidate normal off its boundary points.
///
/// Large against GEOM_TOL so the perturbed direction classifies boundary
/// points decisively, small against the angular gaps of any input we accept.
pub const PERTURB_STEP: f64 = 1e-5;
