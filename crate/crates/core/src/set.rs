//! Antipodal point sets on the unit circle and selections of one point per pair.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

use crate::tolerance::ANGLE_TOL;

/// Interpretation of raw input angles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AngleUnit {
    Degrees,
    #[default]
    Radians,
}

#[derive(Debug, Error)]
pub enum SetError {
    #[error("need at least 3 antipodal pairs, got {0}")]
    TooFewPairs(usize),
    #[error("angle #{index} is not a finite number")]
    NotFinite { index: usize },
    #[error(
        "pair angles {a:.12} and {b:.12} rad coincide within tolerance {tol:e} \
         (duplicate or antipodal input points)"
    )]
    DuplicatePair { a: f64, b: f64, tol: f64 },
    #[error("selection has {got} bits but the set has {expected} pairs")]
    SelectionLength { got: usize, expected: usize },
    #[error("selection bitstring may only contain '0' and '1', found {0:?}")]
    BadSelectionChar(char),
}

/// A point in the plane. Everything in this crate keeps coordinates on or
/// inside the unit circle, so absolute tolerances are meaningful.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn from_angle(theta: f64) -> Self {
        Point2 { x: theta.cos(), y: theta.sin() }
    }

    /// z-component of the cross product, treating both points as vectors.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn antipode(self) -> Point2 {
        Point2 { x: -self.x, y: -self.y }
    }
}

/// `n` antipodal pairs on the unit circle, stored as one representative angle
/// per pair in `[0, pi)`, strictly increasing.
///
/// Pair `i` stands for the points `p_i = (cos θ_i, sin θ_i)` and its
/// antipode `p_i' = -p_i`. Indexing the full circular order of all `2n`
/// points, position `j < n` is `p_j` and position `j >= n` is `p_{j-n}'`;
/// because every representative lies in `[0, pi)`, this numbering is already
/// sorted by angle.
#[derive(Debug, Clone, PartialEq)]
pub struct AntipodalSet {
    angles: Vec<f64>,
    tolerance: f64,
    points: Vec<Point2>,
}

impl AntipodalSet {
    /// Canonicalizes raw angles: converts to radians, reduces mod pi into
    /// `[0, pi)`, sorts, and validates pairwise separation (including the
    /// circular wrap between the last and first pair lines).
    pub fn new(raw_angles: &[f64], unit: AngleUnit, tolerance: f64) -> Result<Self, SetError> {
        if raw_angles.len() < 3 {
            return Err(SetError::TooFewPairs(raw_angles.len()));
        }
        let mut angles = Vec::with_capacity(raw_angles.len());
        for (index, &raw) in raw_angles.iter().enumerate() {
            if !raw.is_finite() {
                return Err(SetError::NotFinite { index });
            }
            let rad = match unit {
                AngleUnit::Degrees => raw.to_radians(),
                AngleUnit::Radians => raw,
            };
            let mut reduced = rad.rem_euclid(PI);
            // rem_euclid can round up to pi itself when rad is a huge
            // near-multiple of pi.
            if reduced >= PI {
                reduced = 0.0;
            }
            angles.push(reduced);
        }
        angles.sort_unstable_by(f64::total_cmp);
        Self::from_sorted(angles, tolerance)
    }

    /// Convenience constructor with the default tolerance.
    pub fn from_degrees(raw_angles: &[f64]) -> Result<Self, SetError> {
        Self::new(raw_angles, AngleUnit::Degrees, ANGLE_TOL)
    }

    /// Convenience constructor with the default tolerance.
    pub fn from_radians(raw_angles: &[f64]) -> Result<Self, SetError> {
        Self::new(raw_angles, AngleUnit::Radians, ANGLE_TOL)
    }

    fn from_sorted(angles: Vec<f64>, tolerance: f64) -> Result<Self, SetError> {
        let n = angles.len();
        if n < 3 {
            return Err(SetError::TooFewPairs(n));
        }
        for w in angles.windows(2) {
            if w[1] - w[0] <= tolerance {
                return Err(SetError::DuplicatePair { a: w[0], b: w[1], tol: tolerance });
            }
        }
        // The pair lines at angles[0] and angles[n-1] approach each other
        // through the wrap at pi.
        if angles[0] + PI - angles[n - 1] <= tolerance {
            return Err(SetError::DuplicatePair { a: angles[n - 1], b: angles[0], tol: tolerance });
        }
        let mut points = Vec::with_capacity(2 * n);
        points.extend(angles.iter().map(|&t| Point2::from_angle(t)));
        for j in 0..n {
            // Exact negation, so pair symmetry holds to the last bit.
            points.push(points[j].antipode());
        }
        Ok(AntipodalSet { angles, tolerance, points })
    }

    /// Draws `n` pair angles i.i.d. uniform in `[0, pi)`, redrawing any that
    /// collide within the default tolerance. Collisions are resolved per
    /// angle, not by rejecting the whole sample: at n in the millions a
    /// tolerance collision is near-certain somewhere, so whole-set rejection
    /// would never terminate.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self, SetError> {
        if n < 3 {
            return Err(SetError::TooFewPairs(n));
        }
        let mut angles: Vec<f64> = Vec::with_capacity(n);
        loop {
            while angles.len() < n {
                angles.push(rng.random::<f64>() * PI);
            }
            angles.sort_unstable_by(f64::total_cmp);
            let mut kept: Vec<f64> = Vec::with_capacity(n);
            for &a in &angles {
                if kept.last().is_none_or(|&b| a - b > ANGLE_TOL) {
                    kept.push(a);
                }
            }
            while kept.len() > 1 && kept[0] + PI - kept[kept.len() - 1] <= ANGLE_TOL {
                kept.pop();
            }
            if kept.len() == n {
                return Self::from_sorted(kept, ANGLE_TOL);
            }
            angles = kept;
        }
    }

    /// Number of antipodal pairs.
    pub fn n(&self) -> usize {
        self.angles.len()
    }

    /// Representative angles, sorted ascending in `[0, pi)`.
    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// All `2n` points in circular (ascending angle) order: representatives
    /// first, antipodes after.
    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    /// Point at circular position `j` in `[0, 2n)`.
    pub fn point(&self, j: usize) -> Point2 {
        self.points[j]
    }

    /// Angle of circular position `j`, in `[0, 2pi)`.
    pub fn point_angle(&self, j: usize) -> f64 {
        let n = self.n();
        if j < n {
            self.angles[j]
        } else {
            self.angles[j - n] + PI
        }
    }
}

/// One bit per pair: `false` keeps the representative `p_i`, `true` swaps in
/// the antipode `p_i'`. The induced 0/1 word over all `2n` circular positions
/// (see [`Selection::word`]) is centrally symmetric: `w[j+n] = !w[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Selection {
    bits: Vec<bool>,
}

impl Selection {
    pub fn new(bits: Vec<bool>) -> Self {
        Selection { bits }
    }

    /// All representatives, no antipodes.
    pub fn all_base(n: usize) -> Self {
        Selection { bits: vec![false; n] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn complement(&self) -> Selection {
        Selection { bits: self.bits.iter().map(|b| !b).collect() }
    }

    /// Whether circular position `j` in `[0, 2n)` is selected.
    pub fn selected_at(&self, j: usize) -> bool {
        let n = self.bits.len();
        if j < n {
            !self.bits[j]
        } else {
            self.bits[j - n]
        }
    }

    /// The 0/1 word over all `2n` circular positions.
    pub fn word(&self) -> Vec<bool> {
        let n = self.bits.len();
        (0..2 * n).map(|j| self.selected_at(j)).collect()
    }

    /// Circular positions of the selected points, ascending. Ascending
    /// position order is ascending angle order, so this is the vertex order
    /// of the polygon.
    pub fn selected_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..2 * self.bits.len()).filter(|&j| self.selected_at(j))
    }

    /// Validates this selection against a set, for inputs that arrive as data.
    pub fn check_against(&self, set: &AntipodalSet) -> Result<(), SetError> {
        if self.len() != set.n() {
            return Err(SetError::SelectionLength { got: self.len(), expected: set.n() });
        }
        Ok(())
    }
}

impl FromStr for Selection {
    type Err = SetError;

    fn from_str(s: &str) -> Result<Self, SetError> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(SetError::BadSelectionChar(other)),
            }
        }
        Ok(Selection { bits })
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes_degrees() {
        let s = AntipodalSet::from_degrees(&[0.0, 60.0, 120.0]).unwrap();
        assert_eq!(s.n(), 3);
        assert!((s.angles()[1] - PI / 3.0).abs() < 1e-15);
        assert!((s.angles()[2] - 2.0 * PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_antipodal_duplicate() {
        // 240 deg reduces to 60 deg mod pi, clashing with the existing pair.
        let err = AntipodalSet::from_degrees(&[240.0, 0.0, 60.0]).unwrap_err();
        assert!(matches!(err, SetError::DuplicatePair { .. }));
    }

    #[test]
    fn rejects_wraparound_duplicate() {
        let almost_pi = 180.0 - 1e-11;
        let err = AntipodalSet::from_degrees(&[0.0, 90.0, almost_pi]).unwrap_err();
        assert!(matches!(err, SetError::DuplicatePair { .. }));
    }

    #[test]
    fn rejects_too_few() {
        assert!(matches!(AntipodalSet::from_degrees(&[0.0, 90.0]), Err(SetError::TooFewPairs(2))));
    }

    #[test]
    fn unsorted_input_is_sorted() {
        let a = AntipodalSet::from_degrees(&[120.0, 0.0, 60.0]).unwrap();
        let b = AntipodalSet::from_degrees(&[0.0, 60.0, 120.0]).unwrap();
        assert_eq!(a.angles(), b.angles());
    }

    #[test]
    fn point_order_is_angular() {
        let s = AntipodalSet::from_degrees(&[0.0, 45.0, 90.0, 135.0]).unwrap();
        for j in 0..7 {
            assert!(s.point_angle(j) < s.point_angle(j + 1));
        }
        // Antipodes are exact negations.
        for j in 0..4 {
            assert_eq!(s.point(j + 4).x, -s.point(j).x);
            assert_eq!(s.point(j + 4).y, -s.point(j).y);
        }
    }

    #[test]
    fn selection_word_is_centrally_symmetric() {
        let sel: Selection = "0010".parse().unwrap();
        let w = sel.word();
        for j in 0..4 {
            assert_eq!(w[j + 4], !w[j]);
        }
        assert_eq!(sel.to_string(), "0010");
    }

    #[test]
    fn selected_positions_match_bits() {
        let sel: Selection = "0010".parse().unwrap();
        let pos: Vec<usize> = sel.selected_positions().collect();
        assert_eq!(pos, vec![0, 1, 3, 6]);
    }

    #[test]
    fn random_sets_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [3, 5, 16, 100] {
            let s = AntipodalSet::random(n, &mut rng).unwrap();
            assert_eq!(s.n(), n);
            for w in s.angles().windows(2) {
                assert!(w[1] - w[0] > ANGLE_TOL);
            }
            assert!(s.angles()[0] + PI - s.angles()[n - 1] > ANGLE_TOL);
        }
    }
}
