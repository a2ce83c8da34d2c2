//! Antipodal sets on the unit sphere in d dimensions: convex hull volumes,
//! open-hemisphere occupancy, thick polytopes from sign-alternated moment
//! curves, and the clustered constructions showing that volume extremality
//! and thickness part ways above the plane.

use std::collections::BTreeMap;

use itertools::Itertools;
use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::tolerance::{GEOM_TOL, PERTURB_STEP};

/// Ceiling for brute-force facet enumeration.
pub const MAX_HULL_POINTS: usize = 25;
/// Ceiling for brute-force hemisphere counting.
pub const MAX_HEMISPHERE_POINTS: usize = 30;

#[derive(Debug, Error)]
pub enum PolytopeError {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("need at least {need} points in dimension {d}, got {got}")]
    TooFewPoints { need: usize, d: usize, got: usize },
    #[error("{got} points exceeds the enumeration limit of {max}")]
    TooManyPoints { got: usize, max: usize },
    #[error("point #{index} has dimension {got}, expected {expected}")]
    MixedDimensions { index: usize, got: usize, expected: usize },
    #[error("point #{index} is not unit length (norm {norm})")]
    NotUnit { index: usize, norm: f64 },
    #[error("points #{i} and #{j} lie on the same line through the origin")]
    CoincidentPairLines { i: usize, j: usize },
    #[error("points do not affinely span dimension {d}; the hull has no volume")]
    Degenerate { d: usize },
    #[error("points do not linearly span dimension {d}")]
    NotSpanning { d: usize },
    #[error("selection has {got} bits but the set has {expected} pairs")]
    SelectionLength { got: usize, expected: usize },
    #[error("{0}")]
    ParamOutOfRange(String),
    #[error("construction self-check failed: {0}")]
    SelfCheckFailed(String),
}

/// `n` antipodal pairs on the unit sphere in `R^d`, one representative per
/// pair, antipodes implicit.
#[derive(Debug, Clone)]
pub struct AntipodalSetD {
    d: usize,
    vectors: Vec<DVector<f64>>,
}

impl AntipodalSetD {
    pub fn new(d: usize, vectors: Vec<DVector<f64>>) -> Result<Self, PolytopeError> {
        if d < 2 {
            return Err(PolytopeError::DimensionTooSmall(d));
        }
        if vectors.len() < d {
            return Err(PolytopeError::TooFewPoints { need: d, d, got: vectors.len() });
        }
        for (index, v) in vectors.iter().enumerate() {
            if v.len() != d {
                return Err(PolytopeError::MixedDimensions { index, got: v.len(), expected: d });
            }
            let norm = v.norm();
            if (norm - 1.0).abs() > GEOM_TOL {
                return Err(PolytopeError::NotUnit { index, norm });
            }
        }
        for [i, j] in (0..vectors.len()).array_combinations() {
            if vectors[i].dot(&vectors[j]).abs() >= 1.0 - GEOM_TOL {
                return Err(PolytopeError::CoincidentPairLines { i, j });
            }
        }
        Ok(AntipodalSetD { d, vectors })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[DVector<f64>] {
        &self.vectors
    }

    /// The vertices chosen by a selection: `u_i` or `-u_i` per pair.
    pub fn selected_vertices(&self, sel: &SelectionD) -> Result<Vec<DVector<f64>>, PolytopeError> {
        if sel.len() != self.n() {
            return Err(PolytopeError::SelectionLength { got: sel.len(), expected: self.n() });
        }
        Ok(self
            .vectors
            .iter()
            .zip(sel.bits())
            .map(|(v, &flip)| if flip { -v } else { v.clone() })
            .collect())
    }
}

/// One bit per pair, `true` selecting the antipode, as in the planar case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionD {
    bits: Vec<bool>,
}

impl SelectionD {
    pub fn new(bits: Vec<bool>) -> Self {
        SelectionD { bits }
    }

    pub fn all_base(n: usize) -> Self {
        SelectionD { bits: vec![false; n] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }
}

/// A supporting hyperplane of the hull: the indices of every input point on
/// it, its outward unit normal, and `offset = normal . x` for points x on
/// the plane. All other input points satisfy `normal . p < offset`.
#[derive(Debug, Clone)]
pub struct Facet {
    pub vertices: Vec<usize>,
    pub normal: DVector<f64>,
    pub offset: f64,
}

/// Facets, volume, and origin position of a full-dimensional convex hull.
#[derive(Debug, Clone)]
pub struct HullResult {
    pub facets: Vec<Facet>,
    pub volume: f64,
    pub origin_inside: bool,
}

/// Vector orthogonal to `d-1` row vectors in `R^d`, by cofactor expansion.
/// Its norm is the (d-1)-parallelepiped measure of the rows, so a near-zero
/// result flags affine dependence.
fn generalized_cross(rows: &[DVector<f64>], d: usize) -> DVector<f64> {
    debug_assert_eq!(rows.len(), d - 1);
    let mut out = DVector::zeros(d);
    for k in 0..d {
        let minor = DMatrix::from_fn(d - 1, d - 1, |r, c| {
            let col = if c < k { c } else { c + 1 };
            rows[r][col]
        });
        let det = minor.determinant();
        out[k] = if k % 2 == 0 { det } else { -det };
    }
    out
}

/// Modified Gram-Schmidt with one re-orthogonalization pass; drops
/// dependent inputs.
fn orthonormal_basis<I: IntoIterator<Item = DVector<f64>>>(vectors: I) -> Vec<DVector<f64>> {
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for mut v in vectors {
        for _ in 0..2 {
            for b in &basis {
                let c = b.dot(&v);
                v -= b * c;
            }
        }
        let norm = v.norm();
        if norm > 1e-12 {
            basis.push(v / norm);
        }
    }
    basis
}

fn centroid(points: &[DVector<f64>]) -> DVector<f64> {
    let mut c = DVector::zeros(points[0].len());
    for p in points {
        c += p;
    }
    c / points.len() as f64
}

/// Every hyperplane supporting a facet: a `dim`-subset spans a candidate
/// plane, and the plane survives when one strict side is empty. Cohyperplanar
/// subsets collapse into one facet keyed by the full on-plane vertex set, so
/// inputs like box faces or pyramid bases need no perturbation.
fn carrier_planes(points: &[DVector<f64>], dim: usize) -> Vec<Facet> {
    let m = points.len();
    let mut seen: BTreeMap<Vec<usize>, Facet> = BTreeMap::new();
    for subset in (0..m).combinations(dim) {
        let base = &points[subset[0]];
        let edges: Vec<DVector<f64>> = subset[1..].iter().map(|&i| &points[i] - base).collect();
        let cross = generalized_cross(&edges, dim);
        let norm = cross.norm();
        if norm < 1e-12 {
            continue;
        }
        let mut normal = cross / norm;
        let mut offset = normal.dot(base);
        let mut on = Vec::new();
        let mut above = 0usize;
        let mut below = 0usize;
        for (j, p) in points.iter().enumerate() {
            let s = normal.dot(p) - offset;
            if s > GEOM_TOL {
                above += 1;
            } else if s < -GEOM_TOL {
                below += 1;
            } else {
                on.push(j);
            }
        }
        if above > 0 && below > 0 {
            continue;
        }
        if above > 0 {
            normal = -normal;
            offset = -offset;
        }
        seen.entry(on.clone()).or_insert(Facet { vertices: on, normal, offset });
    }
    seen.into_values().collect()
}

/// Coordinates of the listed points inside their own affine flat, expressed
/// in an orthonormal basis anchored at the first point.
fn flat_coordinates(points: &[DVector<f64>], members: &[usize]) -> Vec<DVector<f64>> {
    let base = &points[members[0]];
    let basis = orthonormal_basis(members[1..].iter().map(|&i| &points[i] - base));
    members
        .iter()
        .map(|&i| {
            let rel = &points[i] - base;
            DVector::from_fn(basis.len(), |l, _| basis[l].dot(&rel))
        })
        .collect()
}

/// 2D convex hull area, monotone chain then shoelace. Inputs may be in any
/// order and may contain interior or collinear points.
fn hull_area_2d(points: &[DVector<f64>]) -> f64 {
    let mut pts: Vec<(f64, f64)> = points.iter().map(|p| (p[0], p[1])).collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    if pts.len() < 3 {
        return 0.0;
    }
    let turn = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    let hull = [lower, upper].concat();
    let mut area = 0.0;
    for i in 0..hull.len() {
        let (x1, y1) = hull[i];
        let (x2, y2) = hull[(i + 1) % hull.len()];
        area += x1 * y2 - x2 * y1;
    }
    area.abs() / 2.0
}

/// Measure of the convex hull of `points` living in `R^dim`, by recursive
/// cone decomposition: extent in 1D, shoelace in 2D, otherwise sum over
/// facets of facet measure times centroid height over `dim`.
fn convex_measure(points: &[DVector<f64>], dim: usize) -> f64 {
    match dim {
        0 => 0.0,
        1 => {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for p in points {
                lo = lo.min(p[0]);
                hi = hi.max(p[0]);
            }
            (hi - lo).max(0.0)
        }
        2 => hull_area_2d(points),
        _ => {
            let planes = carrier_planes(points, dim);
            let center = centroid(points);
            cone_volume(points, dim, &planes, &center)
        }
    }
}

fn cone_volume(
    points: &[DVector<f64>],
    dim: usize,
    planes: &[Facet],
    center: &DVector<f64>,
) -> f64 {
    planes
        .iter()
        .map(|pl| {
            let coords = flat_coordinates(points, &pl.vertices);
            let height = pl.offset - pl.normal.dot(center);
            convex_measure(&coords, dim - 1) * height / dim as f64
        })
        .sum()
}

/// Full facet enumeration and volume of the convex hull of `points`.
///
/// Points that are not vertices (interior, or interior to a face) are
/// harmless. The only rejected degeneracy is an input whose affine span is
/// below `d` dimensions: then there is no volume to measure.
pub fn hull_volume(points: &[DVector<f64>]) -> Result<HullResult, PolytopeError> {
    if points.is_empty() {
        return Err(PolytopeError::TooFewPoints { need: 3, d: 0, got: 0 });
    }
    let d = points[0].len();
    if d < 2 {
        return Err(PolytopeError::DimensionTooSmall(d));
    }
    for (index, p) in points.iter().enumerate() {
        if p.len() != d {
            return Err(PolytopeError::MixedDimensions { index, got: p.len(), expected: d });
        }
    }
    let m = points.len();
    if m > MAX_HULL_POINTS {
        return Err(PolytopeError::TooManyPoints { got: m, max: MAX_HULL_POINTS });
    }
    if m <= d {
        return Err(PolytopeError::Degenerate { d });
    }
    let center = centroid(points);
    let centered = DMatrix::from_fn(m, d, |r, c| points[r][c] - center[c]);
    if centered.rank(1e-9) < d {
        return Err(PolytopeError::Degenerate { d });
    }
    let facets = carrier_planes(points, d);
    let volume = cone_volume(points, d, &facets, &center);
    let origin_inside = facets.iter().all(|f| f.offset > GEOM_TOL);
    Ok(HullResult { facets, volume, origin_inside })
}

/// The five-point pyramid-versus-spread pair in 3D: `S1` is a clustered
/// near-hemisphere configuration whose hull misses the origin, `S2` flips
/// its first two points, surrounds the origin, and still ends up with about
/// half the volume. `delta = sqrt(1 - 2 eps^2)` keeps everything on the
/// sphere.
pub fn build_counterexample_3d(
    eps: f64,
) -> Result<(Vec<DVector<f64>>, Vec<DVector<f64>>), PolytopeError> {
    if !(eps > 0.0 && eps < 0.3) {
        return Err(PolytopeError::ParamOutOfRange(format!(
            "eps = {eps} out of range; need 0 < eps < 0.3"
        )));
    }
    build_counterexample_d(3, eps)
}

/// The d-dimensional generalization of [`build_counterexample_3d`], for
/// 3 <= d <= 6.
///
/// Every axis `i < d` carries an aligned pair of points `(.., +-delta at
/// i, ..)` with `eps` in all remaining coordinates, where
/// `delta = sqrt(1 - (d-1) eps^2)`; axis `d` carries one singular point
/// with the same pattern, `(eps, .., eps, delta)`, except in 3D where the
/// singular point stays at the exact pole `(0, 0, 1)`. `T1` takes the
/// singular point and both members of every aligned pair: a clustered cap
/// whose hull misses the origin. `T2` flips the singular point and one
/// member of each aligned pair except the last: it surrounds the origin
/// with volume smaller by a factor approaching `2^(d-2)`.
pub fn build_counterexample_d(
    d: usize,
    eps: f64,
) -> Result<(Vec<DVector<f64>>, Vec<DVector<f64>>), PolytopeError> {
    if !(3..=6).contains(&d) {
        return Err(PolytopeError::ParamOutOfRange(format!(
            "d = {d} out of range; need 3 <= d <= 6"
        )));
    }
    let dd = (d - 1) as f64;
    if !(eps > 0.0 && dd * eps * eps < 1.0) {
        return Err(PolytopeError::ParamOutOfRange(format!(
            "eps = {eps} out of range; need 0 < eps < {}",
            (1.0 / dd).sqrt()
        )));
    }
    let delta = (1.0 - dd * eps * eps).sqrt();
    let pole = if d == 3 {
        DVector::from_fn(d, |r, _| if r == d - 1 { 1.0 } else { 0.0 })
    } else {
        DVector::from_fn(d, |r, _| if r == d - 1 { delta } else { eps })
    };
    let aligned = |axis: usize, sign: f64| {
        DVector::from_fn(d, |r, _| if r == axis { sign * delta } else { eps })
    };
    let mut t1 = vec![pole.clone()];
    for axis in 0..d - 1 {
        t1.push(aligned(axis, 1.0));
        t1.push(aligned(axis, -1.0));
    }
    let mut t2 = vec![-&pole];
    for axis in 0..d - 2 {
        t2.push(-aligned(axis, 1.0));
        t2.push(aligned(axis, -1.0));
    }
    t2.push(aligned(d - 2, 1.0));
    t2.push(aligned(d - 2, -1.0));

    let h1 = hull_volume(&t1)?;
    let h2 = hull_volume(&t2)?;
    if h1.origin_inside {
        return Err(PolytopeError::SelfCheckFailed(
            "clustered hull was expected to exclude the origin".into(),
        ));
    }
    if !h2.origin_inside {
        return Err(PolytopeError::SelfCheckFailed(
            "spread hull was expected to contain the origin".into(),
        ));
    }
    Ok((t1, t2))
}

/// Minimum, over all open half-spaces bounded by hyperplanes through the
/// origin, of the number of points strictly inside, together with a witness
/// direction attaining it.
///
/// Candidate normals come from every (d-1)-subset's orthogonal complement.
/// A candidate is never counted as-is: its boundary points would sit exactly
/// on the hyperplane, where strict counting is meaningless. Instead the
/// candidate is nudged toward and away from each boundary point (keeping the
/// other boundary points on the plane), which lands a representative
/// direction inside every adjacent cell of the direction arrangement. One
/// fixed generic direction is evaluated last as a safety net.
pub fn hemisphere_min_count(
    points: &[DVector<f64>],
) -> Result<(usize, DVector<f64>), PolytopeError> {
    if points.is_empty() {
        return Err(PolytopeError::TooFewPoints { need: 2, d: 0, got: 0 });
    }
    let d = points[0].len();
    if d < 2 {
        return Err(PolytopeError::DimensionTooSmall(d));
    }
    for (index, p) in points.iter().enumerate() {
        if p.len() != d {
            return Err(PolytopeError::MixedDimensions { index, got: p.len(), expected: d });
        }
    }
    let m = points.len();
    if m > MAX_HEMISPHERE_POINTS {
        return Err(PolytopeError::TooManyPoints { got: m, max: MAX_HEMISPHERE_POINTS });
    }
    let matrix = DMatrix::from_fn(m, d, |r, c| points[r][c]);
    if matrix.rank(1e-9) < d {
        return Err(PolytopeError::NotSpanning { d });
    }

    let strict_count = |dir: &DVector<f64>| points.iter().filter(|p| dir.dot(p) > GEOM_TOL).count();
    let mut best: Option<(usize, DVector<f64>)> = None;
    let consider = |dir: DVector<f64>, best: &mut Option<(usize, DVector<f64>)>| {
        let count = strict_count(&dir);
        if best.as_ref().is_none_or(|(c, _)| count < *c) {
            *best = Some((count, dir));
        }
    };

    for subset in (0..m).combinations(d - 1) {
        let rows: Vec<DVector<f64>> = subset.iter().map(|&i| points[i].clone()).collect();
        let cross = generalized_cross(&rows, d);
        let norm = cross.norm();
        if norm < 1e-12 {
            continue;
        }
        for sign in [1.0, -1.0] {
            let u = &cross * (sign / norm);
            let boundary: Vec<usize> =
                (0..m).filter(|&j| u.dot(&points[j]).abs() <= GEOM_TOL).collect();
            for &b in &boundary {
                let others = orthonormal_basis(
                    boundary.iter().filter(|&&j| j != b).map(|&j| points[j].clone()),
                );
                for t in [1.0, -1.0] {
                    let mut w = &points[b] * t;
                    for basis in &others {
                        let c = basis.dot(&w);
                        w -= basis * c;
                    }
                    if w.norm() < 1e-12 {
                        w = &points[b] * t;
                    }
                    w /= w.norm();
                    let mut dir = &u + &w * PERTURB_STEP;
                    dir /= dir.norm();
                    consider(dir, &mut best);
                }
            }
        }
    }
    // Deterministic fallback direction; only matters if it strictly beats
    // every perturbed candidate.
    let mut generic = DVector::from_fn(d, |r, _| std::f64::consts::E.powi(r as i32));
    generic /= generic.norm();
    consider(generic, &mut best);
    Ok(best.expect("spanning input always yields candidate directions"))
}

/// Points on the sphere in `R^d` such that every open half-space bounded by
/// a hyperplane through the origin contains at least `k` of them: unit
/// moment-curve samples with alternating signs,
/// `x_i = (-1)^i gamma(i) / |gamma(i)|` for `gamma(t) = (1, t, .., t^(d-1))`.
/// Returns `2k + d - 1` points and contains no antipodal pair.
pub fn gale_set(d: usize, k: usize) -> Result<Vec<DVector<f64>>, PolytopeError> {
    if !(2..=6).contains(&d) {
        return Err(PolytopeError::ParamOutOfRange(format!(
            "d = {d} out of range; need 2 <= d <= 6"
        )));
    }
    if k < 1 {
        return Err(PolytopeError::ParamOutOfRange("k must be at least 1".into()));
    }
    let m = 2 * k + d - 1;
    if m > MAX_HEMISPHERE_POINTS {
        return Err(PolytopeError::ParamOutOfRange(format!(
            "2k + d - 1 = {m} points exceeds the limit of {MAX_HEMISPHERE_POINTS}"
        )));
    }
    let mut out = Vec::with_capacity(m);
    for i in 1..=m {
        let t = i as f64;
        let mut gamma = DVector::from_fn(d, |r, _| t.powi(r as i32));
        gamma /= gamma.norm();
        if i % 2 == 1 {
            gamma = -gamma;
        }
        out.push(gamma);
    }
    for [i, j] in (0..m).array_combinations() {
        if out[i].dot(&out[j]).abs() >= 1.0 - GEOM_TOL {
            return Err(PolytopeError::SelfCheckFailed(format!(
                "moment-curve points {i} and {j} nearly antipodal or equal"
            )));
        }
    }
    Ok(out)
}

/// Occupancy threshold for a thick polytope: ceil((n - d) / 2).
pub fn thick_threshold_d(n: usize, d: usize) -> usize {
    (n - d).div_ceil(2)
}

/// A selection is thick when every open half-space bounded by a hyperplane
/// through the origin contains at least ceil((n-d)/2) selected vertices.
pub fn is_thick_polytope(set: &AntipodalSetD, sel: &SelectionD) -> Result<bool, PolytopeError> {
    let vertices = set.selected_vertices(sel)?;
    let (count, _) = hemisphere_min_count(&vertices)?;
    Ok(count >= thick_threshold_d(set.n(), set.d()))
}

/// A thick antipodal polytope on `n` pairs in `R^d`: representatives from
/// the alternating moment-curve family for `k = ceil((n-d+1)/2)`, truncated
/// to `n` points, all selected unflipped. Dropping the possible surplus
/// point costs each half-space at most one, which still clears the
/// thickness threshold.
pub fn build_thick_polytope(
    d: usize,
    n: usize,
) -> Result<(AntipodalSetD, SelectionD), PolytopeError> {
    if n < d {
        return Err(PolytopeError::ParamOutOfRange(format!("need n >= d, got n = {n}, d = {d}")));
    }
    if n > 15 {
        return Err(PolytopeError::ParamOutOfRange(format!("n = {n} out of range; need n <= 15")));
    }
    let k = (n - d + 1).div_ceil(2);
    let mut points = gale_set(d, k)?;
    points.truncate(n);
    let set = AntipodalSetD::new(d, points)?;
    let sel = SelectionD::all_base(n);
    if !is_thick_polytope(&set, &sel)? {
        return Err(PolytopeError::SelfCheckFailed(format!(
            "moment-curve selection failed the thickness check for d = {d}, n = {n}"
        )));
    }
    Ok((set, sel))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[f64]) -> DVector<f64> {
        DVector::from_column_slice(coords)
    }

    #[test]
    fn unit_simplex_volume() {
        let pts = vec![
            v(&[0.0, 0.0, 0.0]),
            v(&[1.0, 0.0, 0.0]),
            v(&[0.0, 1.0, 0.0]),
            v(&[0.0, 0.0, 1.0]),
        ];
        let hull = hull_volume(&pts).unwrap();
        assert!((hull.volume - 1.0 / 6.0).abs() < 1e-12, "{}", hull.volume);
        assert_eq!(hull.facets.len(), 4);
        assert!(!hull.origin_inside);
    }

    #[test]
    fn cube_volume_with_coplanar_faces() {
        let mut pts = Vec::new();
        for x in [-1.0, 1.0] {
            for y in [-1.0, 1.0] {
                for z in [-1.0, 1.0] {
                    pts.push(v(&[x, y, z]));
                }
            }
        }
        let hull = hull_volume(&pts).unwrap();
        assert!((hull.volume - 8.0).abs() < 1e-12, "{}", hull.volume);
        assert_eq!(hull.facets.len(), 6);
        assert!(hull.origin_inside);
    }

    #[test]
    fn cube_volume_perturbed() {
        // Antipodally symmetric deterministic perturbation below 1e-7.
        let mut pts = Vec::new();
        for (i, (x, y)) in [(-1.0, -1.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 1.0)].iter().enumerate() {
            let nudge = 1e-8 * (i as f64 + 1.0);
            let p = v(&[*x + nudge, *y - nudge, 1.0 + nudge]);
            pts.push(-&p);
            pts.push(p);
        }
        let hull = hull_volume(&pts).unwrap();
        assert!((hull.volume - 8.0).abs() < 1e-5, "{}", hull.volume);
    }

    #[test]
    fn pyramid_closed_form() {
        let (s1, _) = build_counterexample_3d(0.1).unwrap();
        let hull = hull_volume(&s1).unwrap();
        let expected = 2.0 * (1.0 - 2.0 * 0.01) * (1.0 - 0.1) / 3.0;
        assert!((hull.volume - expected).abs() < 1e-9, "{} vs {expected}", hull.volume);
        assert!((hull.volume - 0.588).abs() < 1e-9);
        assert!(!hull.origin_inside);
    }

    #[test]
    fn spread_counterpart_contains_origin() {
        let (_, s2) = build_counterexample_3d(0.1).unwrap();
        let hull = hull_volume(&s2).unwrap();
        assert!(hull.origin_inside);
        assert!(hull.volume > 0.0);
    }

    #[test]
    fn ratio_tends_to_two_in_3d() {
        // The finite-eps ratio sits at 2 - 10 eps + O(eps^2): the flipped
        // hull carries an O(eps) sliver at the near-coincident pair and the
        // bases shrink by (1 -+ eps) factors. Frozen values from exact
        // tetrahedral decomposition, cross-checked against hull_volume.
        let ratio = |eps: f64| {
            let (s1, s2) = build_counterexample_3d(eps).unwrap();
            hull_volume(&s1).unwrap().volume / hull_volume(&s2).unwrap().volume
        };
        let r1 = ratio(0.01);
        let r2 = ratio(0.0025);
        assert!((r1 - 1.903293).abs() < 1e-4, "ratio {r1}");
        assert!((r2 - 1.975211).abs() < 1e-4, "ratio {r2}");
        assert!(r1 < r2 && r2 < 2.0);
    }

    #[test]
    fn ratio_marches_toward_power_of_two() {
        // Same first-order convergence in higher dimensions; frozen from
        // hull_volume at eps = 0.005.
        for (d, expected) in [(4, 3.772950), (5, 7.173065)] {
            let (t1, t2) = build_counterexample_d(d, 0.005).unwrap();
            let r = hull_volume(&t1).unwrap().volume / hull_volume(&t2).unwrap().volume;
            assert!((r - expected).abs() < 1e-4, "d={d}: ratio {r}");
        }
    }

    #[test]
    fn d3_specialization_is_exact() {
        let (a1, a2) = build_counterexample_3d(0.07).unwrap();
        let (b1, b2) = build_counterexample_d(3, 0.07).unwrap();
        assert_eq!(a1, b1);
        assert_eq!(a2, b2);
    }

    #[test]
    fn rejects_flat_input() {
        let pts = vec![
            v(&[0.0, 0.0, 0.0]),
            v(&[1.0, 0.0, 0.0]),
            v(&[0.0, 1.0, 0.0]),
            v(&[1.0, 1.0, 0.0]),
        ];
        assert!(matches!(hull_volume(&pts), Err(PolytopeError::Degenerate { .. })));
    }

    #[test]
    fn volume_scales_and_rotates() {
        let (s1, _) = build_counterexample_3d(0.2).unwrap();
        let base = hull_volume(&s1).unwrap().volume;
        let s = 1.7;
        let scaled: Vec<DVector<f64>> = s1.iter().map(|p| p * s).collect();
        let vs = hull_volume(&scaled).unwrap().volume;
        assert!((vs - base * s.powi(3)).abs() < 1e-9 * vs);
        // Rotate about z then x by fixed angles.
        let (c1, s1a) = (0.6f64.cos(), 0.6f64.sin());
        let (c2, s2a) = (1.1f64.cos(), 1.1f64.sin());
        let rot = DMatrix::from_row_slice(3, 3, &[c1, -s1a, 0.0, s1a, c1, 0.0, 0.0, 0.0, 1.0])
            * DMatrix::from_row_slice(3, 3, &[1.0, 0.0, 0.0, 0.0, c2, -s2a, 0.0, s2a, c2]);
        let rotated: Vec<DVector<f64>> = s1.iter().map(|p| &rot * p).collect();
        let vr = hull_volume(&rotated).unwrap().volume;
        assert!((vr - base).abs() < 1e-7 * base.max(1.0), "{vr} vs {base}");
    }

    #[test]
    fn octahedron_hemisphere_count() {
        let pts = vec![
            v(&[1.0, 0.0, 0.0]),
            v(&[-1.0, 0.0, 0.0]),
            v(&[0.0, 1.0, 0.0]),
            v(&[0.0, -1.0, 0.0]),
            v(&[0.0, 0.0, 1.0]),
            v(&[0.0, 0.0, -1.0]),
        ];
        let (count, witness) = hemisphere_min_count(&pts).unwrap();
        assert_eq!(count, 2);
        // The witness itself attains the reported minimum.
        let attained = pts.iter().filter(|p| witness.dot(p) > GEOM_TOL).count();
        assert_eq!(attained, 2);
    }

    #[test]
    fn tetrahedron_hemisphere_count() {
        let r = 3f64.sqrt();
        let pts = vec![
            v(&[1.0 / r, 1.0 / r, 1.0 / r]),
            v(&[1.0 / r, -1.0 / r, -1.0 / r]),
            v(&[-1.0 / r, 1.0 / r, -1.0 / r]),
            v(&[-1.0 / r, -1.0 / r, 1.0 / r]),
        ];
        let (count, _) = hemisphere_min_count(&pts).unwrap();
        assert_eq!(count, 1);
    }

    #[test]
    fn hemisphere_rejects_flat_points() {
        let pts = vec![v(&[1.0, 0.0, 0.0]), v(&[-1.0, 0.0, 0.0]), v(&[0.5, 0.0, 0.0])];
        assert!(matches!(hemisphere_min_count(&pts), Err(PolytopeError::NotSpanning { .. })));
    }

    #[test]
    fn gale_sets_meet_their_bound() {
        for (d, k) in [(2, 2), (3, 1), (3, 2), (4, 3)] {
            let pts = gale_set(d, k).unwrap();
            assert_eq!(pts.len(), 2 * k + d - 1);
            let (count, _) = hemisphere_min_count(&pts).unwrap();
            assert!(count >= k, "d={d} k={k}: count {count}");
        }
    }

    #[test]
    fn clustered_pyramid_selection_is_not_thick() {
        let (s1, s2) = build_counterexample_3d(0.1).unwrap();
        let set1 = AntipodalSetD::new(3, s1).unwrap();
        let sel = SelectionD::all_base(5);
        assert!(!is_thick_polytope(&set1, &sel).unwrap());
        let set2 = AntipodalSetD::new(3, s2).unwrap();
        assert!(is_thick_polytope(&set2, &sel).unwrap());
    }

    #[test]
    fn thick_polytopes_verify() {
        for (d, n) in [(2, 3), (2, 6), (3, 5), (4, 6)] {
            let (set, sel) = build_thick_polytope(d, n).unwrap();
            assert_eq!(set.n(), n);
            assert!(is_thick_polytope(&set, &sel).unwrap(), "d={d} n={n}");
        }
    }
}
