//! Exhaustive ground truth: full-selection enumeration, theorem
//! verification over all selections, the clustered even-n counterexample,
//! and the brute-force k-polygon solver.

use std::f64::consts::{FRAC_PI_2, PI};

use itertools::Itertools;
use thiserror::Error;

use crate::geometry::{is_thick, is_thin, polygon_area};
use crate::set::{AngleUnit, AntipodalSet, Selection};
use crate::solvers::{solve_max_area, solve_min_area, ExtremalResult, Objective};
use crate::tolerance::{ANGLE_TOL, AREA_GUARD};

/// Enumeration ceiling for [`brute_extremes`].
pub const MAX_BRUTE_PAIRS: usize = 24;
/// Enumeration ceiling for the verification suites.
pub const MAX_VERIFY_PAIRS: usize = 16;
/// Default ceiling on the number of inner solves in [`solve_k`].
pub const DEFAULT_SOLVE_K_BUDGET: u128 = 10_000_000;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("{n} pairs exceeds the exhaustive-enumeration limit of {max}")]
    TooManyPairs { n: usize, max: usize },
    #[error("k-polygons need k >= 3 vertices, got {0}")]
    KTooSmall(usize),
    #[error("k = {k} exceeds the number of pairs n = {n}")]
    KTooLarge { k: usize, n: usize },
    #[error("{combinations} pair exclusions exceed the budget of {budget} inner solves")]
    BudgetExceeded { combinations: u128, budget: u128 },
    #[error("counterexample needs an even n >= 6, got {0}")]
    BadCounterexampleSize(usize),
    #[error("eta = {eta} out of range; need 0 < eta < {max}")]
    EtaOutOfRange { eta: f64, max: f64 },
    #[error(transparent)]
    Set(#[from] crate::set::SetError),
}

/// A witnessed failure of a verified property.
#[derive(Debug, Clone)]
pub struct Violation {
    pub selections: Vec<Selection>,
    pub areas: Vec<f64>,
}

/// Result of checking one property exhaustively on one set.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub property: String,
    pub n: usize,
    pub instances_tested: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Iterator over all `2^n` selections in lexicographic (binary counter)
/// order, pair 1 as the most significant bit.
fn selection_from_mask(n: usize, mask: u32) -> Selection {
    Selection::new((0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect())
}

/// Exact minimum and maximum over all `2^n` selections.
///
/// Complementary selections bound congruent polygons, so only the half with
/// pair 1 unflipped is evaluated; the skipped half contains no new areas and
/// no lexicographically smaller tie, since a complement always starts with a
/// one. Ties are resolved exactly like the linear solvers: areas within the
/// 1e-12 guard count as optima, first (= smallest) selection wins.
pub fn brute_extremes(set: &AntipodalSet) -> Result<(ExtremalResult, ExtremalResult), OracleError> {
    let n = set.n();
    if n > MAX_BRUTE_PAIRS {
        return Err(OracleError::TooManyPairs { n, max: MAX_BRUTE_PAIRS });
    }
    let half = 1u32 << (n - 1);
    let mut areas = Vec::with_capacity(half as usize);
    for mask in 0..half {
        areas.push(polygon_area(set, &selection_from_mask(n, mask)));
    }
    let min = areas.iter().copied().fold(f64::INFINITY, f64::min);
    let max = areas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let pick = |target: f64, tie: &dyn Fn(f64) -> bool| {
        let mut count = 0;
        let mut first = None;
        for (mask, &a) in areas.iter().enumerate() {
            if tie(a) {
                count += 1;
                first.get_or_insert(mask as u32);
            }
        }
        let selection = selection_from_mask(n, first.expect("extremum exists"));
        let area = polygon_area(set, &selection);
        debug_assert!((area - target).abs() <= AREA_GUARD);
        // Each evaluated optimum stands for itself and its complement.
        ExtremalResult { selection, area, optima_count: 2 * count }
    };
    let min_result = pick(min, &|a| a - min <= AREA_GUARD);
    let max_result = pick(max, &|a| max - a <= AREA_GUARD);
    Ok((min_result, max_result))
}

fn check_verify_size(set: &AntipodalSet) -> Result<(), OracleError> {
    let n = set.n();
    if n > MAX_VERIFY_PAIRS {
        return Err(OracleError::TooManyPairs { n, max: MAX_VERIFY_PAIRS });
    }
    Ok(())
}

/// Checks that every thin polygon has strictly less area than every non-thin
/// polygon, by exhausting all `2^n` selections.
pub fn verify_thin_theorem(set: &AntipodalSet) -> Result<VerificationReport, OracleError> {
    check_verify_size(set)?;
    let n = set.n();
    let total = 1u32 << n;
    let mut max_thin: Option<(f64, Selection)> = None;
    let mut min_other: Option<(f64, Selection)> = None;
    for mask in 0..total {
        let sel = selection_from_mask(n, mask);
        let area = polygon_area(set, &sel);
        if is_thin(set, &sel) {
            if max_thin.as_ref().is_none_or(|(a, _)| area > *a) {
                max_thin = Some((area, sel));
            }
        } else if min_other.as_ref().is_none_or(|(a, _)| area < *a) {
            min_other = Some((area, sel));
        }
    }
    let mut violations = Vec::new();
    let (thin_area, thin_sel) = max_thin.expect("thin windows always exist");
    let (other_area, other_sel) = min_other.expect("non-thin selections exist for n >= 3");
    if !(thin_area + AREA_GUARD < other_area) {
        violations.push(Violation {
            selections: vec![thin_sel, other_sel],
            areas: vec![thin_area, other_area],
        });
    }
    Ok(VerificationReport {
        property: "every thin polygon is smaller than every non-thin polygon".into(),
        n,
        instances_tested: total as usize,
        violations,
    })
}

/// Checks the thick extremality claims by exhausting all `2^n` selections:
/// some thick polygon strictly beats every non-thick one; for odd `n`,
/// every thick polygon beats every non-thick one and the two alternating
/// selections have equal area.
pub fn verify_thick_claims(set: &AntipodalSet) -> Result<VerificationReport, OracleError> {
    check_verify_size(set)?;
    let n = set.n();
    let total = 1u32 << n;
    let mut max_thick: Option<(f64, Selection)> = None;
    let mut min_thick: Option<(f64, Selection)> = None;
    let mut max_other: Option<(f64, Selection)> = None;
    let mut thick_areas: Vec<f64> = Vec::new();
    for mask in 0..total {
        let sel = selection_from_mask(n, mask);
        let area = polygon_area(set, &sel);
        if is_thick(set, &sel) {
            if max_thick.as_ref().is_none_or(|(a, _)| area > *a) {
                max_thick = Some((area, sel.clone()));
            }
            if min_thick.as_ref().is_none_or(|(a, _)| area < *a) {
                min_thick = Some((area, sel.clone()));
            }
            if n % 2 == 1 {
                thick_areas.push(area);
            }
        } else if max_other.as_ref().is_none_or(|(a, _)| area > *a) {
            max_other = Some((area, sel));
        }
    }
    let mut violations = Vec::new();
    let (best_thick, best_thick_sel) = max_thick.expect("thick selections always exist");
    let (worst_other, worst_other_sel) = max_other.expect("non-thick selections exist for n >= 3");
    if !(worst_other + AREA_GUARD < best_thick) {
        violations.push(Violation {
            selections: vec![best_thick_sel.clone(), worst_other_sel.clone()],
            areas: vec![best_thick, worst_other],
        });
    }
    if n % 2 == 1 {
        let (least_thick, least_thick_sel) = min_thick.expect("thick selections always exist");
        if !(worst_other + AREA_GUARD < least_thick) {
            violations.push(Violation {
                selections: vec![least_thick_sel, worst_other_sel],
                areas: vec![least_thick, worst_other],
            });
        }
        // For odd n the thick selections are exactly the two alternations.
        if thick_areas.len() == 2 && (thick_areas[0] - thick_areas[1]).abs() > AREA_GUARD {
            violations.push(Violation { selections: vec![], areas: thick_areas.clone() });
        }
    }
    Ok(VerificationReport {
        property: "some thick polygon beats every non-thick polygon".into(),
        n,
        instances_tested: total as usize,
        violations,
    })
}

/// Clustered even-`n` set on which one non-thick polygon beats a thick one.
///
/// Pairs 1 and 2 sit at angles `eta` and `2*eta`, pairs 3..n climb from
/// `pi/2` in `eta` steps. `P` is the thick candidate keeping both `p_1` and
/// `p_2`; its area tends to 1 as `eta -> 0`. `Q` keeps `p_1, p_2', p_3,
/// p_4'` and the antipodes of everything after; its area tends to 2, and its
/// selected points leave a half-plane nearly empty, so it is far from thick.
pub fn build_even_counterexample(
    n: usize,
    eta: f64,
) -> Result<(AntipodalSet, Selection, Selection), OracleError> {
    if n < 6 || n % 2 != 0 {
        return Err(OracleError::BadCounterexampleSize(n));
    }
    let max_eta = PI / (4.0 * n as f64);
    if !(eta > 0.0 && eta < max_eta) {
        return Err(OracleError::EtaOutOfRange { eta, max: max_eta });
    }
    let mut angles = vec![eta, 2.0 * eta];
    angles.extend((3..=n).map(|i| FRAC_PI_2 + (i - 2) as f64 * eta));
    let set = AntipodalSet::new(&angles, AngleUnit::Radians, ANGLE_TOL)?;

    // The candidate with its adjacent selected pair at positions (0, 1).
    let p = Selection::new((0..n).map(|i| i >= 2 && i % 2 == 0).collect());
    // 0101 then all antipodes: a fat quadrilateral plus a clustered tail.
    let q = Selection::new((0..n).map(|i| i >= 4 || i % 2 == 1).collect());
    debug_assert!(is_thick(&set, &p));
    debug_assert!(!is_thick(&set, &q));
    Ok((set, p, q))
}

/// One optimal k-vertex antipodal polygon: `excluded_pairs` were removed
/// from the set, `selection` indexes the remaining pairs in ascending
/// original order.
#[derive(Debug, Clone)]
pub struct KPolygonResult {
    pub excluded_pairs: Vec<usize>,
    pub selection: Selection,
    pub area: f64,
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Exact extremal polygon with `k < n` vertices, by trying every way to
/// exclude `n - k` pairs and solving the remaining instance exactly.
/// Exclusion sets are visited in lexicographic order and the first optimum
/// wins, so results are deterministic.
pub fn solve_k_with_budget(
    set: &AntipodalSet,
    k: usize,
    objective: Objective,
    budget: u128,
) -> Result<KPolygonResult, OracleError> {
    let n = set.n();
    if k < 3 {
        return Err(OracleError::KTooSmall(k));
    }
    if k > n {
        return Err(OracleError::KTooLarge { k, n });
    }
    let combinations = binomial(n, n - k);
    if combinations > budget {
        return Err(OracleError::BudgetExceeded { combinations, budget });
    }
    let mut best: Option<KPolygonResult> = None;
    for excluded in (0..n).combinations(n - k) {
        let kept: Vec<f64> =
            (0..n).filter(|i| !excluded.contains(i)).map(|i| set.angles()[i]).collect();
        let sub = AntipodalSet::new(&kept, AngleUnit::Radians, set.tolerance())
            .expect("subset of a valid set is valid");
        let result = match objective {
            Objective::Min => solve_min_area(&sub),
            Objective::Max => solve_max_area(&sub),
        };
        let better = match &best {
            None => true,
            Some(b) => match objective {
                Objective::Min => result.area < b.area - AREA_GUARD,
                Objective::Max => result.area > b.area + AREA_GUARD,
            },
        };
        if better {
            best = Some(KPolygonResult {
                excluded_pairs: excluded,
                selection: result.selection,
                area: result.area,
            });
        }
    }
    Ok(best.expect("at least one exclusion set exists"))
}

/// [`solve_k_with_budget`] with the default budget.
pub fn solve_k(
    set: &AntipodalSet,
    k: usize,
    objective: Objective,
) -> Result<KPolygonResult, OracleError> {
    solve_k_with_budget(set, k, objective, DEFAULT_SOLVE_K_BUDGET)
}
