//! Plain-text set files: one angle per line, `#` starts a comment, blank
//! lines ignored. Serialization is always radians at 12 decimals, which
//! round-trips exactly through the parser.

use std::fmt::Write as _;
use std::path::Path;

use antipodal::{AngleUnit, AntipodalSet};
use anyhow::{Context, Result};

pub fn parse_set_str(text: &str, unit: AngleUnit, origin: &str) -> Result<AntipodalSet> {
    let mut angles = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let value: f64 = line
            .parse()
            .with_context(|| format!("{origin}:{}: invalid angle '{line}'", idx + 1))?;
        angles.push(value);
    }
    AntipodalSet::new(&angles, unit, antipodal::tolerance::ANGLE_TOL)
        .with_context(|| format!("{origin}: not a valid antipodal set"))
}

pub fn parse_set_file(path: &Path, unit: AngleUnit) -> Result<AntipodalSet> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_set_str(&text, unit, &path.display().to_string())
}

pub fn serialize_set(set: &AntipodalSet) -> String {
    let mut out = String::new();
    for &a in set.angles() {
        writeln!(out, "{a:.12}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_degrees_with_comments() {
        let a = parse_set_str("0\n60\n120", AngleUnit::Degrees, "t").unwrap();
        let b =
            parse_set_str("# equilateral\n0 # C\n\n60\n120  # trailing\n", AngleUnit::Degrees, "t")
                .unwrap();
        assert_eq!(a.angles(), b.angles());
    }

    #[test]
    fn reports_the_offending_line() {
        let err = parse_set_str("0\nabc\n90", AngleUnit::Degrees, "t").unwrap_err();
        assert!(format!("{err:#}").contains("t:2"), "{err:#}");
    }

    #[test]
    fn rejects_near_duplicates() {
        let err = parse_set_str("0\n0.0000000001\n90", AngleUnit::Degrees, "t").unwrap_err();
        assert!(format!("{err:#}").contains("not a valid antipodal set"));
    }

    #[test]
    fn round_trips_at_twelve_decimals() {
        let set = parse_set_str("0\n31.7\n64.21\n118.3\n157.0", AngleUnit::Degrees, "t").unwrap();
        let once = serialize_set(&set);
        let reparsed = parse_set_str(&once, AngleUnit::Radians, "t").unwrap();
        assert_eq!(once, serialize_set(&reparsed));
    }
}
