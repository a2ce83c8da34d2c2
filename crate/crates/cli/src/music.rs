//! The 12-tone pitch clock as an antipodal set. Six semitones make a
//! tritone, which is exactly a diameter of the clock, so the six antipodal
//! pairs are the six tritones and every selection is a six-note scale that
//! avoids all of them. The maximum-area selection is the maximally even
//! such scale.

use antipodal::AntipodalSet;

/// Pitch classes by clock position, C at 0 degrees, 30 degrees per semitone.
pub const PITCH_CLASSES: [&str; 12] =
    ["C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"];

/// Six pairs at 0, 30, .., 150 degrees; point position j carries
/// `PITCH_CLASSES[j]`.
pub fn music_clock_set() -> AntipodalSet {
    AntipodalSet::from_degrees(&[0.0, 30.0, 60.0, 90.0, 120.0, 150.0])
        .expect("the pitch clock is a valid antipodal set")
}
