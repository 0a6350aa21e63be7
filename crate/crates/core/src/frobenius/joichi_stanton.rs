use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::overpartition::{Overpartition, Part};
use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JoichiStantonError {
    #[error("mark {mark} is not below the length {len}")]
    MarkTooLarge { mark: u32, len: usize },
    #[error("marks must be strictly decreasing: {0:?}")]
    MarksNotDistinct(Vec<u32>),
}

/// An overpartition of length `N` split into an ordinary partition of length `N` and
/// distinct marks below `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JoichiStanton {
    pub associated: Partition,
    pub marks: Vec<u32>,
}

impl JoichiStanton {
    pub fn weight(&self) -> u32 {
        self.associated.weight() + self.marks.iter().sum::<u32>()
    }
}

/// Each overlined position `m` (1-based) loses its overline, takes one cell from each of
/// positions `1..m`, and leaves the mark `m - 1`.
pub fn joichi_stanton(o: &Overpartition) -> JoichiStanton {
    let parts = o.parts();
    let mut sizes: Vec<u32> = parts.iter().map(|p| p.size).collect();
    let mut marks = Vec::new();
    for (m, p) in parts.iter().enumerate() {
        if p.over {
            for s in &mut sizes[..m] {
                *s -= 1;
            }
            marks.push(m as u32);
        }
    }
    marks.reverse();
    let associated = Partition::new(sizes).expect("removing cells keeps the parts decreasing");
    JoichiStanton { associated, marks }
}

pub fn joichi_stanton_inverse(d: &JoichiStanton) -> Result<Overpartition, JoichiStantonError> {
    let len = d.associated.len();
    if d.marks.windows(2).any(|w| w[0] <= w[1]) {
        return Err(JoichiStantonError::MarksNotDistinct(d.marks.clone()));
    }
    if let Some(&mark) = d.marks.iter().find(|&&m| m as usize >= len) {
        return Err(JoichiStantonError::MarkTooLarge { mark, len });
    }
    let mut parts: Vec<Part> = d.associated.parts().iter().map(|&s| Part::plain(s)).collect();
    for &m in &d.marks {
        parts[m as usize].over = true;
        for p in &mut parts[..m as usize] {
            p.size += 1;
        }
    }
    Ok(Overpartition::new(parts).expect("the inverse map always yields a canonical overpartition"))
}
