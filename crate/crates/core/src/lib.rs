//! Extremal antipodal polygons and polytopes.
//!
//! An antipodal set is n pairs of diametrically opposite points on the unit
//! circle; a selection picks one point per pair, and the n chosen points form
//! a convex polygon. This crate finds the selections of minimum and maximum
//! area in linear time, classifies selections as thin (contained in a closed
//! half-plane) or thick (every open half-plane holds at least
//! ceil((n-2)/2) chosen points), transforms selections toward thickness by
//! area-increasing flips, and cross-checks everything against exhaustive
//! enumeration. The `polytopes` module carries the thick/thin story to the
//! unit sphere in d dimensions, where maximum volume and thickness no longer
//! coincide.

mod flips;
mod geometry;
mod oracle;
mod polytopes;
mod set;
mod solvers;
pub mod tolerance;

pub use flips::{apply_flip3, apply_flip_run, thicken, FlipKind, FlipLog, FlipStep};
pub use geometry::{
    contains_origin, ear_is_minimal, is_thick, is_thin, max_circular_gap, min_side_count,
    polygon_area, thick_threshold, triangle_area, PolygonGeometry,
};
pub use oracle::{
    brute_extremes, build_even_counterexample, solve_k, solve_k_with_budget, verify_thick_claims,
    verify_thin_theorem, KPolygonResult, OracleError, VerificationReport, Violation,
    DEFAULT_SOLVE_K_BUDGET, MAX_BRUTE_PAIRS, MAX_VERIFY_PAIRS,
};
pub use polytopes::{
    build_counterexample_3d, build_counterexample_d, build_thick_polytope, gale_set,
    hemisphere_min_count, hull_volume, is_thick_polytope, thick_threshold_d, AntipodalSetD, Facet,
    HullResult, PolytopeError, SelectionD, MAX_HEMISPHERE_POINTS, MAX_HULL_POINTS,
};
pub use set::{AngleUnit, AntipodalSet, Point2, Selection, SetError};
pub use solvers::{
    solve_max_area, solve_min_area, sweep_profile, thick_candidates, thin_selection,
    ExtremalResult, Objective, SweepFamily,
};
