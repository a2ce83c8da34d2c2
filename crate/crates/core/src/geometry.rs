//! Area and the thin/thick/origin predicates for antipodal polygons.

use std::f64::consts::PI;

use crate::set::{AntipodalSet, Point2, Selection};

/// Kahan compensated accumulator. The shoelace sums here mix terms of both
/// signs near magnitude 1; compensation keeps million-term sums at a few ulp.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    pub(crate) fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum
    }
}

/// Signed area of triangle `(a, b, c)`, positive when counterclockwise.
pub fn triangle_area(a: Point2, b: Point2, c: Point2) -> f64 {
    ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)) / 2.0
}

/// Area of the antipodal polygon picked by `sel`.
///
/// The selected points, visited in ascending circular position, are already
/// the counterclockwise vertex order of a convex polygon, so the shoelace
/// sum needs no sorting. Every caller that cross-checks areas goes through
/// this one function; two code paths that select the same vertices get
/// bit-identical results.
pub fn polygon_area(set: &AntipodalSet, sel: &Selection) -> f64 {
    debug_assert_eq!(set.n(), sel.len());
    let mut acc = Kahan::default();
    let mut first = None;
    let mut prev = None;
    for j in sel.selected_positions() {
        let p = set.point(j);
        match prev {
            None => first = Some(p),
            Some(q) => acc.add(Point2::cross(q, p)),
        }
        prev = Some(p);
    }
    if let (Some(last), Some(first)) = (prev, first) {
        acc.add(Point2::cross(last, first));
    }
    (acc.total() / 2.0).abs()
}

/// Maximum angular gap between consecutive selected vertices.
pub fn max_circular_gap(set: &AntipodalSet, sel: &Selection) -> f64 {
    let angles: Vec<f64> = sel.selected_positions().map(|j| set.point_angle(j)).collect();
    let mut max_gap = angles[0] + 2.0 * PI - angles[angles.len() - 1];
    for w in angles.windows(2) {
        max_gap = max_gap.max(w[1] - w[0]);
    }
    max_gap
}

/// A polygon is thin when all its vertices fit in a half-plane bounded by a
/// line through the origin, i.e. some angular gap between consecutive
/// vertices exceeds pi. A gap of exactly pi would need two antipodal
/// vertices, which no selection can produce.
pub fn is_thin(set: &AntipodalSet, sel: &Selection) -> bool {
    max_circular_gap(set, sel) > PI
}

/// Strict interior test for the origin.
///
/// With vertices in counterclockwise order the origin is inside iff every
/// consecutive cross product is positive. Each cross product is sin of the
/// angular gap, and gaps stay away from pi by the set tolerance, so the sign
/// is decided well clear of rounding noise.
pub fn contains_origin(set: &AntipodalSet, sel: &Selection) -> bool {
    let positions: Vec<usize> = sel.selected_positions().collect();
    positions
        .iter()
        .zip(positions.iter().cycle().skip(1))
        .all(|(&a, &b)| Point2::cross(set.point(a), set.point(b)) > 0.0)
}

/// Minimum number of selected vertices over every open half-plane bounded by
/// a line through the origin.
///
/// One representative line per angular interval between consecutive circle
/// positions is exhaustive (side counts are constant inside an interval),
/// and the representative's open side holds exactly `n` consecutive
/// positions of the circular word. So the minimum is a minimum over word
/// windows of length `n`, and the window count changes by at most one per
/// shift because `w[q+n] = !w[q]`.
pub fn min_side_count(set: &AntipodalSet, sel: &Selection) -> usize {
    let n = set.n();
    let w = sel.word();
    let mut count = w[..n].iter().filter(|&&b| b).count();
    let mut min = count;
    for q in 0..2 * n - 1 {
        count -= w[q] as usize;
        count += w[(q + n) % (2 * n)] as usize;
        min = min.min(count);
    }
    min
}

/// Half-plane occupancy threshold for thickness: ceil((n-2)/2).
pub fn thick_threshold(n: usize) -> usize {
    (n - 2).div_ceil(2)
}

/// A polygon is thick when every open half-plane bounded by a line through
/// the origin contains at least ceil((n-2)/2) of its vertices.
pub fn is_thick(set: &AntipodalSet, sel: &Selection) -> bool {
    min_side_count(set, sel) >= thick_threshold(set.n())
}

/// The triangle spanned by point `q = (pair, antipode?)` and its two circular
/// neighbors, compared against every other triangle with apex `q` and one
/// point strictly on each side of the line through `q` and `q'`. The
/// neighbor triangle must be the strict minimum.
pub fn ear_is_minimal(set: &AntipodalSet, pair: usize, antipode: bool) -> bool {
    let n = set.n();
    let m = 2 * n;
    let j = if antipode { pair + n } else { pair };
    let q = set.point(j);
    // Positions j+1 .. j+n-1 lie strictly on one side of the line through q
    // and its antipode, positions j+n+1 .. j+2n-1 strictly on the other.
    let left: Vec<usize> = (1..n).map(|k| (j + k) % m).collect();
    let right: Vec<usize> = (n + 1..m).map(|k| (j + k) % m).collect();
    let ear = triangle_area(set.point((j + m - 1) % m), q, set.point((j + 1) % m)).abs();
    for &a in &left {
        for &b in &right {
            if a == (j + 1) % m && b == (j + m - 1) % m {
                continue;
            }
            if triangle_area(set.point(b), q, set.point(a)).abs() <= ear {
                return false;
            }
        }
    }
    true
}

/// Materialized view of a selection: counterclockwise vertices plus area.
#[derive(Debug, Clone)]
pub struct PolygonGeometry {
    pub vertices: Vec<Point2>,
    pub area: f64,
}

impl PolygonGeometry {
    pub fn of(set: &AntipodalSet, sel: &Selection) -> Self {
        let vertices = sel.selected_positions().map(|j| set.point(j)).collect();
        PolygonGeometry { vertices, area: polygon_area(set, sel) }
    }
}
