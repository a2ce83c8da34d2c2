//! Linear-time extremal solvers: minimum area over thin windows, maximum
//! area over the near-alternating thick family.

use crate::geometry::{polygon_area, triangle_area, Kahan};
use crate::set::{AntipodalSet, Selection};
use crate::tolerance::AREA_GUARD;

/// Optimization direction, shared with the k-polygon brute-force solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Min,
    Max,
}

/// Candidate family a sweep runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepFamily {
    Thin,
    Thick,
}

/// Outcome of an extremal solve. `optima_count` counts optima within the
/// swept candidate family (ties resolved at the 1e-12 guard); `selection` is
/// the lexicographically smallest of them, and `area` is its area recomputed
/// from scratch.
#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub selection: Selection,
    pub area: f64,
    pub optima_count: usize,
}

/// The thin polygon `S_q`: point `q` plus the next `n-1` circular positions.
/// Pair `i` contributes its antipode exactly when position `i` falls outside
/// the window, i.e. `i + n` falls inside it.
pub fn thin_selection(set: &AntipodalSet, q: usize) -> Selection {
    let n = set.n();
    let m = 2 * n;
    assert!(q < m, "point index {q} out of range for {n} pairs");
    Selection::new((0..n).map(|i| (i + m - q) % m >= n).collect())
}

/// Areas of all `2n` thin windows, in window order. Initial shoelace is
/// compensated; each shift then applies the two-triangle exchange
///   area(S_{q+1}) = area(S_q) - T(q+n-1, q, q+1) + T(q+1, q+n-1, q+n)
/// which drops vertex `q` and appends vertex `q+n`.
fn thin_areas(set: &AntipodalSet) -> Vec<f64> {
    let n = set.n();
    let m = 2 * n;
    let mut acc = Kahan::default();
    for k in 0..n {
        acc.add(set.point(k).cross(set.point((k + 1) % n)));
    }
    let mut area = acc.total() / 2.0;
    let mut areas = Vec::with_capacity(m);
    areas.push(area);
    for q in 0..m - 1 {
        let drop = triangle_area(set.point((q + n - 1) % m), set.point(q), set.point((q + 1) % m));
        let grow = triangle_area(
            set.point((q + 1) % m),
            set.point((q + n - 1) % m),
            set.point((q + n) % m),
        );
        area += grow - drop;
        areas.push(area);
    }
    areas
}

/// Rank of the thin window `q` in selection-lexicographic order, O(1).
///
/// Window 0 selects no antipodes ("00..0"); windows above `n` produce a
/// zero-prefix with a one-tail that shrinks as `q` grows; windows `1..=n`
/// start with a one. So the lexicographic order of the `2n` windows is
/// `0, 2n-1, 2n-2, ..., n+1, 1, 2, ..., n`.
fn thin_lex_rank(q: usize, n: usize) -> usize {
    if q == 0 {
        0
    } else if q > n {
        2 * n - q
    } else {
        n - 1 + q
    }
}

/// Minimum-area antipodal polygon. The minimum over all `2^n` selections is
/// attained by a thin window, so a linear sweep over the `2n` windows with
/// constant-time area updates suffices.
pub fn solve_min_area(set: &AntipodalSet) -> ExtremalResult {
    let n = set.n();
    let areas = thin_areas(set);
    let min = areas.iter().copied().fold(f64::INFINITY, f64::min);
    let mut count = 0;
    let mut best_q = 0;
    let mut best_rank = usize::MAX;
    for (q, &a) in areas.iter().enumerate() {
        if a - min <= AREA_GUARD {
            count += 1;
            let rank = thin_lex_rank(q, n);
            if rank < best_rank {
                best_rank = rank;
                best_q = q;
            }
        }
    }
    let selection = thin_selection(set, best_q);
    let area = polygon_area(set, &selection);
    ExtremalResult { selection, area, optima_count: count }
}

/// Word of the thick candidate whose adjacent selected pair sits at circular
/// positions `(j, j+1)`: ones at `j` and `j+1`, zeros at `j+n` and `j+n+1`,
/// alternating elsewhere, centrally symmetric. Defined for even `n`.
fn candidate_word_at(n: usize, j: usize, position: usize) -> bool {
    let r = (position + 2 * n - j) % (2 * n);
    if r == 0 {
        true
    } else if r < n {
        r % 2 == 1
    } else if r == n {
        false
    } else {
        (r - n) % 2 == 0
    }
}

fn candidate_selection(n: usize, j: usize) -> Selection {
    Selection::new((0..n).map(|i| candidate_word_at(n, j, i + n)).collect())
}

/// Rank of the even-`n` candidate at `j` under lexicographic order of its
/// selection bits, without materializing them. Near-ties are common on large
/// sets (candidate areas differ by O(1/n^3)), so the tie-break must not build
/// and compare bit vectors per tied candidate.
///
/// Every candidate's bits follow a strict 0/1 alternation except for one
/// deviation; the lex order is decided by which phase the word starts in,
/// whether the deviation writes a 0 or a 1, and where it sits. That sorts the
/// candidates into four blocks: `j` even below `n`, then `j - n` odd, then
/// `j` odd below `n`, then `j - n` even, with earlier deviations first in the
/// 0-writing blocks and later deviations first in the 1-writing ones.
fn thick_lex_rank(j: usize, n: usize) -> usize {
    if j < n {
        if j % 2 == 0 {
            j
        } else {
            2 * n + j
        }
    } else {
        let q = j - n;
        if q % 2 == 1 {
            n + (n - q)
        } else {
            3 * n + (n - q)
        }
    }
}

/// The thick candidate family: for odd `n` the two alternating selections,
/// for even `n` the `2n` selections with exactly one adjacent selected pair,
/// one per circular position of that pair.
pub fn thick_candidates(set: &AntipodalSet) -> Vec<Selection> {
    let n = set.n();
    if n % 2 == 1 {
        let alt = Selection::new((0..n).map(|i| i % 2 == 1).collect());
        let other = alt.complement();
        vec![alt, other]
    } else {
        (0..2 * n).map(|j| candidate_selection(n, j)).collect()
    }
}

/// Walks the even-`n` candidate family along its flip chain, calling
/// `visit(defect position, area)` once per candidate in visit order.
///
/// Flipping pair `(j+1) mod n` turns the candidate with its selected pair at
/// `j` into the one at `j+n+1 (mod 2n)`; since gcd(n+1, 2n) = 1, the chain
/// of `2n` flips visits every candidate once. Each flip swaps one vertex for
/// its antipode, a constant-time two-triangle area exchange because gaps
/// between selected positions in this family never exceed three.
///
/// A visitor instead of a returned `Vec` keeps million-point solves out of
/// a profile buffer they would stream through twice; repeating the walk
/// reproduces areas bit for bit, so two passes can share a guard threshold.
fn walk_thick_chain_even(set: &AntipodalSet, mut visit: impl FnMut(usize, f64)) {
    let n = set.n();
    let m = 2 * n;
    let mut w: Vec<bool> = (0..m).map(|pos| candidate_word_at(n, 0, pos)).collect();
    let mut area = polygon_area(set, &candidate_selection(n, 0));
    let mut j = 0usize;
    visit(j, area);

    let prev_selected = |w: &[bool], from: usize| {
        let mut k = (from + m - 1) % m;
        while !w[k] {
            k = (k + m - 1) % m;
        }
        k
    };
    let next_selected = |w: &[bool], from: usize| {
        let mut k = (from + 1) % m;
        while !w[k] {
            k = (k + 1) % m;
        }
        k
    };

    for _ in 0..m - 1 {
        let pair = (j + 1) % n;
        let (off, on) = if w[pair] { (pair, pair + n) } else { (pair + n, pair) };
        let a = prev_selected(&w, off);
        let b = next_selected(&w, off);
        area -= triangle_area(set.point(a), set.point(off), set.point(b));
        w[off] = false;
        w[on] = true;
        let a2 = prev_selected(&w, on);
        let b2 = next_selected(&w, on);
        area += triangle_area(set.point(a2), set.point(on), set.point(b2));
        j = (j + n + 1) % m;
        visit(j, area);
    }
}

/// Maximum-area antipodal polygon. The maximum over all `2^n` selections is
/// attained inside the thick candidate family, so it is found by comparing
/// two alternating polygons (odd `n`) or chaining through the `2n`
/// candidates with constant-time updates (even `n`).
pub fn solve_max_area(set: &AntipodalSet) -> ExtremalResult {
    let n = set.n();
    if n % 2 == 1 {
        let cands = thick_candidates(set);
        let areas: Vec<f64> = cands.iter().map(|s| polygon_area(set, s)).collect();
        let max = areas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let optima: Vec<usize> = (0..2).filter(|&i| max - areas[i] <= AREA_GUARD).collect();
        // The alternation starting with a base point is lexicographically
        // smaller than its complement.
        let pick = optima[0];
        ExtremalResult {
            selection: cands[pick].clone(),
            area: areas[pick],
            optima_count: optima.len(),
        }
    } else {
        let mut max = f64::NEG_INFINITY;
        walk_thick_chain_even(set, |_, a| {
            if a > max {
                max = a;
            }
        });
        let mut count = 0;
        let mut best_rank = usize::MAX;
        let mut best_j = 0;
        walk_thick_chain_even(set, |j, a| {
            if max - a <= AREA_GUARD {
                count += 1;
                let rank = thick_lex_rank(j, n);
                if rank < best_rank {
                    best_rank = rank;
                    best_j = j;
                }
            }
        });
        let selection = candidate_selection(n, best_j);
        let area = polygon_area(set, &selection);
        ExtremalResult { selection, area, optima_count: count }
    }
}

/// Candidate areas in sweep order, for debugging and plots. The profile's
/// extremum matches the corresponding solver output.
pub fn sweep_profile(set: &AntipodalSet, family: SweepFamily) -> Vec<(usize, f64)> {
    match family {
        SweepFamily::Thin => thin_areas(set).into_iter().enumerate().collect(),
        SweepFamily::Thick => {
            let n = set.n();
            if n % 2 == 1 {
                thick_candidates(set)
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (i, polygon_area(set, s)))
                    .collect()
            } else {
                let mut profile = Vec::with_capacity(2 * n);
                walk_thick_chain_even(set, |j, a| profile.push((j, a)));
                profile
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{is_thick, is_thin};

    fn reg(n: usize) -> AntipodalSet {
        let step = 180.0 / n as f64;
        let angles: Vec<f64> = (0..n).map(|i| i as f64 * step).collect();
        AntipodalSet::from_degrees(&angles).unwrap()
    }

    #[test]
    fn thin_selection_windows() {
        let set = reg(3);
        assert_eq!(thin_selection(&set, 0).to_string(), "000");
        assert_eq!(thin_selection(&set, 1).to_string(), "100");
        assert_eq!(thin_selection(&set, 3).to_string(), "111");
        for q in 0..6 {
            assert!(is_thin(&set, &thin_selection(&set, q)));
        }
    }

    #[test]
    fn thick_rank_orders_candidates_lexicographically() {
        for n in (4..=16).step_by(2) {
            let mut by_rank: Vec<usize> = (0..2 * n).collect();
            by_rank.sort_by_key(|&j| thick_lex_rank(j, n));
            let mut by_bits: Vec<usize> = (0..2 * n).collect();
            by_bits.sort_by(|&a, &b| {
                candidate_selection(n, a).bits().cmp(candidate_selection(n, b).bits())
            });
            assert_eq!(by_rank, by_bits, "n = {n}");
        }
    }

    #[test]
    fn congruent_windows_have_equal_area() {
        let set = reg(3);
        let a0 = polygon_area(&set, &thin_selection(&set, 0));
        let a3 = polygon_area(&set, &thin_selection(&set, 3));
        assert!((a0 - a3).abs() < 1e-15);
    }

    #[test]
    fn reg3_min() {
        let r = solve_min_area(&reg(3));
        assert_eq!(r.selection.to_string(), "000");
        assert!((r.area - 3f64.sqrt() / 4.0).abs() < 1e-12);
        assert_eq!(r.optima_count, 6);
    }

    #[test]
    fn reg4_min() {
        let r = solve_min_area(&reg(4));
        assert_eq!(r.selection.to_string(), "0000");
        assert!((r.area - 2f64.sqrt() / 2.0).abs() < 1e-12);
        assert_eq!(r.optima_count, 8);
    }

    #[test]
    fn reg3_max() {
        let r = solve_max_area(&reg(3));
        assert_eq!(r.selection.to_string(), "010");
        assert!((r.area - 3.0 * 3f64.sqrt() / 4.0).abs() < 1e-12);
        assert_eq!(r.optima_count, 2);
    }

    #[test]
    fn reg4_max() {
        let r = solve_max_area(&reg(4));
        assert_eq!(r.selection.to_string(), "0010");
        assert!((r.area - (1.0 + 2f64.sqrt() / 2.0)).abs() < 1e-12);
        assert_eq!(r.optima_count, 8);
    }

    #[test]
    fn candidates_are_thick_and_distinct() {
        for n in [3, 4, 5, 6, 8] {
            let set = reg(n);
            let cands = thick_candidates(&set);
            assert_eq!(cands.len(), if n % 2 == 1 { 2 } else { 2 * n });
            for (i, c) in cands.iter().enumerate() {
                assert!(is_thick(&set, c), "n={n} candidate {i} = {c}");
                for later in &cands[i + 1..] {
                    assert_ne!(c, later);
                }
            }
        }
    }

    #[test]
    fn profiles_agree_with_solvers() {
        let set = AntipodalSet::from_degrees(&[5.0, 30.0, 80.0, 95.0, 140.0, 170.0]).unwrap();
        let thin = sweep_profile(&set, SweepFamily::Thin);
        let best_thin = thin.iter().map(|&(_, a)| a).fold(f64::INFINITY, f64::min);
        assert!((best_thin - solve_min_area(&set).area).abs() < 1e-12);
        let thick = sweep_profile(&set, SweepFamily::Thick);
        let best_thick = thick.iter().map(|&(_, a)| a).fold(f64::NEG_INFINITY, f64::max);
        assert!((best_thick - solve_max_area(&set).area).abs() < 1e-12);
    }

    #[test]
    fn incremental_chain_matches_recomputation() {
        let set = AntipodalSet::from_degrees(&[5.0, 30.0, 80.0, 95.0, 140.0, 170.0]).unwrap();
        walk_thick_chain_even(&set, |j, a| {
            let direct = polygon_area(&set, &candidate_selection(set.n(), j));
            assert!((a - direct).abs() <= 1e-9 * direct.max(1.0), "candidate {j}: {a} vs {direct}");
        });
    }

    #[test]
    fn incremental_windows_match_recomputation() {
        let set = AntipodalSet::from_degrees(&[5.0, 30.0, 80.0, 95.0, 140.0, 170.0]).unwrap();
        for (q, a) in thin_areas(&set).into_iter().enumerate() {
            let direct = polygon_area(&set, &thin_selection(&set, q));
            assert!((a - direct).abs() <= 1e-9 * direct.max(1.0), "window {q}: {a} vs {direct}");
        }
    }

    #[test]
    fn solver_classes() {
        let set =
            AntipodalSet::from_degrees(&[11.0, 44.0, 67.0, 102.0, 133.0, 150.0, 171.0]).unwrap();
        assert!(is_thin(&set, &solve_min_area(&set).selection));
        assert!(is_thick(&set, &solve_max_area(&set).selection));
    }
}
