//! Lattice paths in the first quadrant with NE, SE, S, SW and E steps and marked peaks.

mod bijection;
mod enumerate;
mod gf;

pub use bijection::{path_to_symbol, symbol_to_path, BijectionError};
pub use enumerate::{count_e, count_e_tilde, enumerate_paths, DEFAULT_PATH_BOUND};
pub use gf::{gamma_closed, gamma_recurrence, gf_closed, gf_recurrence, gf_sum_closed, gf_sum_q_gauss, PathGf};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    NE,
    SE,
    S,
    SW,
    E,
}

impl Step {
    /// `(dx, dy)`.
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::NE => (1, 1),
            Step::SE => (1, -1),
            Step::S => (0, -1),
            Step::SW => (-1, -1),
            Step::E => (1, 0),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Step::NE => "NE",
            Step::SE => "SE",
            Step::S => "S",
            Step::SW => "SW",
            Step::E => "E",
        };
        f.write_str(s)
    }
}

impl FromStr for Step {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "NE" => Ok(Step::NE),
            "SE" => Ok(Step::SE),
            "S" => Ok(Step::S),
            "SW" => Ok(Step::SW),
            "E" => Ok(Step::E),
            other => Err(PathError::Parse(other.into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PeakMark {
    One,
    A,
    B,
    AB,
}

impl PeakMark {
    pub fn marked_by_a(self) -> bool {
        matches!(self, PeakMark::A | PeakMark::AB)
    }

    pub fn marked_by_b(self) -> bool {
        matches!(self, PeakMark::B | PeakMark::AB)
    }

    /// Whether this mark may sit on a peak left by `step`.
    fn fits(self, step: Step) -> bool {
        matches!(
            (self, step),
            (PeakMark::One, Step::SE) | (PeakMark::A | PeakMark::B, Step::S) | (PeakMark::AB, Step::SW)
        )
    }
}

impl fmt::Display for PeakMark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PeakMark::One => "1",
            PeakMark::A => "a",
            PeakMark::B => "b",
            PeakMark::AB => "ab",
        };
        f.write_str(s)
    }
}

impl FromStr for PeakMark {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1" | "one" => Ok(PeakMark::One),
            "a" => Ok(PeakMark::A),
            "b" => Ok(PeakMark::B),
            "ab" => Ok(PeakMark::AB),
            other => Err(PathError::Parse(other.into())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("step {step} goes below the axis")]
    BelowAxis { step: usize },
    #[error("path ends at height {0}, not on the axis")]
    EndsAbove(i64),
    #[error("step {step} is S or SW but does not follow a NE step")]
    VerticalWithoutNe { step: usize },
    #[error("step {step} is E at height {height}")]
    EastAboveAxis { step: usize, height: i64 },
    #[error("trailing E steps after the last peak")]
    TrailingEast,
    #[error("{peaks} peaks but {marks} marks")]
    MarkCount { peaks: usize, marks: usize },
    #[error("peak {peak} carries mark {mark} but is left by a {step} step")]
    MarkMismatch { peak: usize, mark: PeakMark, step: Step },
    #[error("mark list is not indexed 0..N in order")]
    MarkIndex,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// A peak and what the bijection needs to know about it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeakRecord {
    pub x: u32,
    pub y: u32,
    pub mark: PeakMark,
    /// An odd number of E steps lies to the left.
    pub east_parity: bool,
    /// Peaks marked by a strictly to the left.
    pub u: u32,
    /// Peaks marked by b strictly to the left.
    pub v: u32,
}

/// A validated path: start height, steps, and one mark per peak in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PathJson", into = "PathJson")]
pub struct LatticePath {
    start_height: u32,
    steps: Vec<Step>,
    marks: Vec<PeakMark>,
}

#[derive(Serialize, Deserialize)]
struct MarkJson {
    peak: usize,
    mark: PeakMark,
}

#[derive(Serialize, Deserialize)]
struct PathJson {
    start_height: u32,
    steps: Vec<Step>,
    marks: Vec<MarkJson>,
}

impl TryFrom<PathJson> for LatticePath {
    type Error = PathError;

    fn try_from(j: PathJson) -> Result<Self, Self::Error> {
        if j.marks.iter().enumerate().any(|(n, m)| m.peak != n) {
            return Err(PathError::MarkIndex);
        }
        LatticePath::new(j.start_height, j.steps, j.marks.into_iter().map(|m| m.mark).collect())
    }
}

impl From<LatticePath> for PathJson {
    fn from(p: LatticePath) -> Self {
        PathJson {
            start_height: p.start_height,
            steps: p.steps,
            marks: p.marks.into_iter().enumerate().map(|(peak, mark)| MarkJson { peak, mark }).collect(),
        }
    }
}

impl LatticePath {
    pub fn new(start_height: u32, steps: Vec<Step>, marks: Vec<PeakMark>) -> Result<Self, PathError> {
        let mut y = i64::from(start_height);
        let mut peaks = 0usize;
        let mut last_peak_step = None;
        for (n, &s) in steps.iter().enumerate() {
            let after_ne = n > 0 && steps[n - 1] == Step::NE;
            match s {
                Step::S | Step::SW if !after_ne => return Err(PathError::VerticalWithoutNe { step: n }),
                Step::E if y != 0 => return Err(PathError::EastAboveAxis { step: n, height: y }),
                _ => {}
            }
            if after_ne && s != Step::NE {
                let mark = marks.get(peaks).copied();
                if let Some(mark) = mark {
                    if !mark.fits(s) {
                        return Err(PathError::MarkMismatch { peak: peaks, mark, step: s });
                    }
                }
                peaks += 1;
                last_peak_step = Some(n);
            }
            y += s.delta().1;
            if y < 0 {
                return Err(PathError::BelowAxis { step: n });
            }
        }
        if y != 0 {
            return Err(PathError::EndsAbove(y));
        }
        if peaks != marks.len() {
            return Err(PathError::MarkCount { peaks, marks: marks.len() });
        }
        let tail_from = last_peak_step.map_or(0, |n| n + 1);
        if steps[tail_from..].contains(&Step::E) {
            return Err(PathError::TrailingEast);
        }
        Ok(LatticePath { start_height, steps, marks })
    }

    /// Parses `"2: SE NE S ...; a 1 b"`, marks optional when there are no peaks.
    pub fn parse_compact(s: &str) -> Result<Self, PathError> {
        let (h, rest) = s.split_once(':').ok_or_else(|| PathError::Parse(s.into()))?;
        let start = h.trim().parse::<u32>().map_err(|_| PathError::Parse(h.into()))?;
        let (steps, marks) = rest.split_once(';').unwrap_or((rest, ""));
        let split = |t: &str| t.split([' ', ',']).filter(|w| !w.is_empty()).map(str::to_owned).collect::<Vec<_>>();
        let steps = split(steps).iter().map(|w| w.parse()).collect::<Result<_, _>>()?;
        let marks = split(marks).iter().map(|w| w.parse()).collect::<Result<_, _>>()?;
        LatticePath::new(start, steps, marks)
    }

    /// The path with no peaks, descending from `h` to the axis.
    pub fn descent(h: u32) -> Self {
        LatticePath { start_height: h, steps: vec![Step::SE; h as usize], marks: Vec::new() }
    }

    pub fn start_height(&self) -> u32 {
        self.start_height
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn marks(&self) -> &[PeakMark] {
        &self.marks
    }

    /// Vertices visited, starting at `(0, start_height)`.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut at = (0, i64::from(self.start_height));
        let mut out = vec![at];
        for s in &self.steps {
            let (dx, dy) = s.delta();
            at = (at.0 + dx, at.1 + dy);
            out.push(at);
        }
        out
    }

    pub fn max_height(&self) -> u32 {
        self.vertices().iter().map(|v| v.1).max().unwrap_or(0) as u32
    }

    pub fn peaks(&self) -> Vec<PeakRecord> {
        let verts = self.vertices();
        let mut out = Vec::with_capacity(self.marks.len());
        let (mut east, mut u, mut v) = (0u32, 0u32, 0u32);
        for (n, s) in self.steps.iter().enumerate() {
            if *s == Step::E {
                east += 1;
            }
            let is_peak = *s == Step::NE && self.steps.get(n + 1).is_some_and(|&t| t != Step::NE);
            if is_peak {
                let mark = self.marks[out.len()];
                let (x, y) = verts[n + 1];
                out.push(PeakRecord { x: x as u32, y: y as u32, mark, east_parity: east % 2 == 1, u, v });
                u += u32::from(mark.marked_by_a());
                v += u32::from(mark.marked_by_b());
            }
        }
        out
    }

    pub fn peak_count(&self) -> usize {
        self.marks.len()
    }

    /// Sum of the peaks' x-coordinates.
    pub fn major_index(&self) -> u32 {
        self.peaks().iter().map(|p| p.x).sum()
    }

    /// Peaks marked by a.
    pub fn s(&self) -> u32 {
        self.marks.iter().filter(|m| m.marked_by_a()).count() as u32
    }

    /// Peaks marked by b.
    pub fn t(&self) -> u32 {
        self.marks.iter().filter(|m| m.marked_by_b()).count() as u32
    }

    /// Starts at height `k - i` and stays below `k`.
    pub fn satisfies_odd(&self, k: u32, i: u32) -> bool {
        i <= k && self.start_height == k - i && self.max_height() < k
    }

    /// The odd conditions, and `x - u + v ≡ i - 1 (mod 2)` at every peak of height `k - 1`.
    pub fn satisfies_even(&self, k: u32, i: u32) -> bool {
        self.satisfies_odd(k, i)
            && self
                .peaks()
                .iter()
                .filter(|p| p.y + 1 == k)
                .all(|p| (i64::from(p.x) - i64::from(p.u) + i64::from(p.v) - i64::from(i) + 1).rem_euclid(2) == 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("path serialisation cannot fail")
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self.steps.iter().map(Step::to_string).collect();
        let marks: Vec<String> = self.marks.iter().map(PeakMark::to_string).collect();
        write!(f, "{}: {}; {}", self.start_height, steps.join(" "), marks.join(" "))
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn figure1() -> LatticePath {
        LatticePath::parse_compact("2: SE NE S SE NE SE NE S NE SW NE SE; a 1 b ab 1").unwrap()
    }

    pub(crate) fn figure2() -> LatticePath {
        LatticePath::parse_compact("1: NE SW NE SW NE SE NE S SE NE NE SW SE NE SW; ab ab 1 a ab ab").unwrap()
    }

    pub(crate) fn figure3() -> LatticePath {
        LatticePath::parse_compact(
            "2: SE SE NE NE SW SE NE NE NE S NE NE SE SE SE NE SE NE NE S SE SE E NE NE SW NE SE NE NE S SE SE; \
             ab a 1 1 b ab 1 b",
        )
        .unwrap()
    }

    #[test]
    fn major_indices_of_figures() {
        assert_eq!(figure1().major_index(), 26);
        assert_eq!(figure2().major_index(), 19);
        let xs: Vec<u32> = figure1().peaks().iter().map(|p| p.x).collect();
        assert_eq!(xs, [2, 4, 6, 7, 7]);
        assert_eq!(LatticePath::descent(3).major_index(), 0);
    }

    #[test]
    fn third_figure_peaks() {
        let p = figure3();
        let got: Vec<(u32, u32, PeakMark)> = p.peaks().iter().map(|r| (r.x, r.y, r.mark)).collect();
        use PeakMark::*;
        assert_eq!(
            got,
            [(4, 2, AB), (7, 3, A), (9, 4, One), (13, 2, One), (16, 3, B), (21, 2, AB), (21, 2, One), (24, 3, B)]
        );
        assert_eq!((p.major_index(), p.s(), p.t()), (115, 3, 4));
        assert!(p.satisfies_odd(5, 3));
        assert!(!p.satisfies_odd(5, 2));
        assert!(!p.satisfies_odd(4, 2));
        let last = p.peaks()[7];
        assert_eq!((last.u, last.v, last.east_parity), (3, 3, true));
    }

    #[test]
    fn validation() {
        assert_eq!(LatticePath::parse_compact("1: S"), Err(PathError::VerticalWithoutNe { step: 0 }));
        assert_eq!(LatticePath::parse_compact("1: E SE"), Err(PathError::EastAboveAxis { step: 0, height: 1 }));
        assert_eq!(LatticePath::parse_compact("0: NE"), Err(PathError::EndsAbove(1)));
        assert_eq!(LatticePath::parse_compact("0: SE"), Err(PathError::BelowAxis { step: 0 }));
        assert_eq!(LatticePath::parse_compact("0: NE SE E; 1"), Err(PathError::TrailingEast));
        assert!(matches!(LatticePath::parse_compact("0: NE SE; a"), Err(PathError::MarkMismatch { .. })));
        assert_eq!(LatticePath::parse_compact("0: NE SE"), Err(PathError::MarkCount { peaks: 1, marks: 0 }));
        assert!(LatticePath::parse_compact("0: E NE SE; 1").is_ok());
    }

    #[test]
    fn conditions() {
        assert!(LatticePath::descent(1).satisfies_even(3, 2));
        assert!(!LatticePath::descent(1).satisfies_odd(3, 1));
        assert!(figure2().satisfies_odd(3, 2));
        assert!(!figure2().satisfies_odd(2, 1));
    }

    #[test]
    fn json_round_trip() {
        let p = figure1();
        let text = p.to_json();
        assert!(text.starts_with(r#"{"start_height":2,"steps":["SE","NE","S""#));
        assert!(text.contains(r#"{"peak":3,"mark":"ab"}"#));
        assert_eq!(serde_json::from_str::<LatticePath>(&text).unwrap(), p);
        let bad = text.replace(r#""peak":3"#, r#""peak":7"#);
        assert!(serde_json::from_str::<LatticePath>(&bad).is_err());
    }
}
