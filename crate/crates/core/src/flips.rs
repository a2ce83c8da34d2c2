//! Area-increasing flip operations and the thickening loop.
//!
//! A flip swaps one pair's selected point for its antipode. Two situations
//! guarantee an area gain: a point whose two circular neighbors are also
//! selected (flip it), and a maximal alternating run fenced by two defects
//! (flip its interior). Applying these until neither exists lands on a thick
//! selection.

use crate::geometry::{is_thick, polygon_area};
use crate::set::{AntipodalSet, Selection};
use crate::tolerance::AREA_GUARD;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipKind {
    Flip3,
    FlipRun,
}

/// One applied operation. `location` is a circular point index: the flipped
/// middle point for [`FlipKind::Flip3`], the first point of the run for
/// [`FlipKind::FlipRun`]. Pair indices are zero-based.
#[derive(Debug, Clone)]
pub struct FlipStep {
    pub kind: FlipKind,
    pub location: usize,
    pub pairs_flipped: Vec<usize>,
    pub area_before: f64,
    pub area_after: f64,
}

impl std::fmt::Display for FlipStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match self.kind {
            FlipKind::Flip3 => "flip3",
            FlipKind::FlipRun => "flip_run",
        };
        let pairs: Vec<String> = self.pairs_flipped.iter().map(|p| (p + 1).to_string()).collect();
        write!(
            f,
            "{kind} at point {}, pairs {}, area {:.6} -> {:.6}",
            self.location,
            pairs.join(" "),
            self.area_before,
            self.area_after,
        )
    }
}

/// Ordered record of the operations applied by [`thicken`].
#[derive(Debug, Clone, Default)]
pub struct FlipLog {
    pub steps: Vec<FlipStep>,
}

impl std::fmt::Display for FlipLog {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            writeln!(f, "step {}: {step}", i + 1)?;
        }
        Ok(())
    }
}

/// Toggles pair `i`. Flipping twice is the identity.
pub fn flip_pair(sel: &Selection, i: usize) -> Selection {
    assert!(i < sel.len(), "pair index {i} out of range for {} pairs", sel.len());
    let mut bits = sel.bits().to_vec();
    bits[i] = !bits[i];
    Selection::new(bits)
}

fn flip_pairs(sel: &Selection, pairs: &[usize]) -> Selection {
    let mut bits = sel.bits().to_vec();
    for &p in pairs {
        bits[p] = !bits[p];
    }
    Selection::new(bits)
}

fn assert_strict_gain(step: &FlipStep) {
    assert!(
        step.area_after > step.area_before + AREA_GUARD,
        "flip failed to strictly increase area ({} -> {}); \
         degenerate geometry should have been rejected at construction",
        step.area_before,
        step.area_after,
    );
}

/// Flips the middle pair of the first three consecutive selected points, in
/// scan order from the smallest angle. A triple of unselected points is the
/// antipodal mirror of a selected triple, so scanning selected triples covers
/// both. Returns the improved selection, or `None` when no triple exists.
pub fn apply_flip3(set: &AntipodalSet, sel: &Selection) -> Option<(Selection, FlipStep)> {
    let m = 2 * set.n();
    let w = sel.word();
    let j = (0..m).find(|&j| w[j] && w[(j + 1) % m] && w[(j + 2) % m])?;
    let mid = (j + 1) % m;
    let pair = mid % set.n();
    let next = flip_pair(sel, pair);
    let step = FlipStep {
        kind: FlipKind::Flip3,
        location: mid,
        pairs_flipped: vec![pair],
        area_before: polygon_area(set, sel),
        area_after: polygon_area(set, &next),
    };
    assert_strict_gain(&step);
    Some((next, step))
}

/// Flips the interior of the first maximal alternating run.
///
/// A run starts at a defect (two circularly adjacent points with equal
/// selection status), alternates through its interior, and ends at the next
/// defect. Flipping every interior pair removes both defects, and their
/// antipodal mirror defects with them. Runs of `m` points are only valid for
/// `4 <= m < n`; the wrapping "run" between a defect and its own mirror is
/// not improvable. Returns `None` when no valid run exists.
///
/// Callers must exhaust [`apply_flip3`] first; a remaining triple panics.
pub fn apply_flip_run(set: &AntipodalSet, sel: &Selection) -> Option<(Selection, FlipStep)> {
    let n = set.n();
    let m = 2 * n;
    let w = sel.word();
    for j in 0..m {
        assert!(
            !(w[j] && w[(j + 1) % m] && w[(j + 2) % m]),
            "apply_flip_run called with a selected triple at point {j}; apply flip3 first",
        );
    }
    let defects: Vec<usize> = (0..m).filter(|&j| w[j] == w[(j + 1) % m]).collect();
    if n < 5 || defects.is_empty() {
        return None;
    }
    for (idx, &j) in defects.iter().enumerate() {
        let next = defects[(idx + 1) % defects.len()];
        let gap = (next + m - j) % m;
        // gap 1 would be a triple; defects are centrally symmetric so the
        // gap never exceeds n.
        if (2..=n - 3).contains(&gap) {
            let pairs: Vec<usize> = (1..=gap).map(|k| (j + k) % n).collect();
            let flipped = flip_pairs(sel, &pairs);
            let step = FlipStep {
                kind: FlipKind::FlipRun,
                location: j,
                pairs_flipped: pairs,
                area_before: polygon_area(set, sel),
                area_after: polygon_area(set, &flipped),
            };
            assert_strict_gain(&step);
            return Some((flipped, step));
        }
    }
    None
}

/// Applies flips until none is possible: triples first, then runs, re-probing
/// triples after every run. The result is always thick; the area strictly
/// increases at every step; an already-thick selection comes back unchanged
/// with an empty log.
///
/// Every operation removes four defects from the circular word and creates
/// none, so termination is immediate; the `n^2` cap is a tripwire for bugs,
/// not a tuning knob.
pub fn thicken(set: &AntipodalSet, sel: &Selection) -> (Selection, FlipLog) {
    let n = set.n();
    let mut current = sel.clone();
    let mut log = FlipLog::default();
    loop {
        assert!(
            log.steps.len() <= n * n,
            "thicken exceeded {} steps on n={n}; the flip loop is broken",
            n * n,
        );
        if let Some((next, step)) = apply_flip3(set, &current) {
            current = next;
            log.steps.push(step);
            continue;
        }
        if let Some((next, step)) = apply_flip_run(set, &current) {
            current = next;
            log.steps.push(step);
            continue;
        }
        break;
    }
    assert!(
        is_thick(set, &current),
        "thicken terminated on a non-thick selection {current}; this is a bug",
    );
    (current, log)
}
