//! Deterministic SVG rendering of antipodal sets: fixed canvas, fixed
//! palette, 6-decimal coordinates, no timestamps, so identical inputs give
//! identical bytes.

use std::fmt::Write as _;
use std::io::{self, Write};

use antipodal::{AntipodalSet, Selection};

const SIZE: f64 = 600.0;
const CENTER: f64 = 300.0;
const RADIUS: f64 = 250.0;
const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];
const DASHES: [&str; 4] = ["", "7,4", "2,3", "9,3,2,3"];

/// Maximum number of overlaid selections.
pub const MAX_OVERLAYS: usize = 4;

fn screen(set: &AntipodalSet, position: usize) -> (f64, f64) {
    let p = set.point(position);
    // y grows downward in SVG.
    (CENTER + RADIUS * p.x, CENTER - RADIUS * p.y)
}

/// Render `set` with up to [`MAX_OVERLAYS`] selections overlaid and return
/// the number of bytes written.
pub fn emit_svg<W: Write>(
    set: &AntipodalSet,
    selections: &[Selection],
    out: &mut W,
) -> io::Result<usize> {
    assert!(selections.len() <= MAX_OVERLAYS, "at most {MAX_OVERLAYS} selections");
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(s, "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"#ffffff\"/>");
    let _ = writeln!(
        s,
        "<circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{RADIUS}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>"
    );
    // Faint diameter per pair, showing the antipodal structure.
    for pair in 0..set.n() {
        let (x1, y1) = screen(set, pair);
        let (x2, y2) = screen(set, pair + set.n());
        let _ = writeln!(
            s,
            "<line x1=\"{x1:.6}\" y1=\"{y1:.6}\" x2=\"{x2:.6}\" y2=\"{y2:.6}\" stroke=\"#dddddd\" stroke-width=\"1\" stroke-dasharray=\"2,2\"/>"
        );
    }
    for (idx, sel) in selections.iter().enumerate() {
        let color = COLORS[idx];
        let dash = if DASHES[idx].is_empty() {
            String::new()
        } else {
            format!(" stroke-dasharray=\"{}\"", DASHES[idx])
        };
        let mut path = String::new();
        for (step, position) in sel.selected_positions().enumerate() {
            let (x, y) = screen(set, position);
            let verb = if step == 0 { 'M' } else { 'L' };
            let _ = write!(path, "{verb} {x:.6} {y:.6} ");
        }
        path.push('Z');
        let _ = writeln!(
            s,
            "<path d=\"{path}\" fill=\"{color}\" fill-opacity=\"0.06\" stroke=\"{color}\" stroke-width=\"2\"{dash}/>"
        );
        for position in 0..2 * set.n() {
            let (x, y) = screen(set, position);
            if sel.selected_at(position) {
                let _ =
                    writeln!(s, "<circle cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"4\" fill=\"{color}\"/>");
            } else {
                let _ = writeln!(
                    s,
                    "<circle cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"4\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>"
                );
            }
        }
    }
    let _ = writeln!(s, "</svg>");
    out.write_all(s.as_bytes())?;
    Ok(s.len())
}
