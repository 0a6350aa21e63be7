//! Ordinary partitions into nonnegative parts, with conjugation and successive Durfee squares.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parts must be weakly decreasing: {0:?}")]
pub struct NotDecreasing(pub Vec<u32>);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = NotDecreasing;

    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, NotDecreasing> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Positive parts only.
    pub fn trimmed(&self) -> Partition {
        Partition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// Conjugate, into positive parts.
    pub fn conjugate(&self) -> Partition {
        let top = self.largest();
        Partition((1..=top).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Conjugate padded with zeros to exactly `len` parts; `None` if it has more.
    pub fn conjugate_padded(&self, len: usize) -> Option<Partition> {
        let mut c = self.conjugate().0;
        if c.len() > len {
            return None;
        }
        c.resize(len, 0);
        Some(Partition(c))
    }

    /// Largest `d` with `λ_d >= d`.
    pub fn durfee(&self) -> u32 {
        self.0.iter().enumerate().take_while(|(n, &p)| p as usize > *n).count() as u32
    }

    /// Sizes of the successive Durfee squares, each taken in what lies below the previous.
    pub fn durfee_squares(&self) -> DurfeeDecomposition {
        let mut sizes = Vec::new();
        let mut rest: &[u32] = &self.0;
        loop {
            let d = Partition(rest.to_vec()).durfee();
            if d == 0 {
                break;
            }
            sizes.push(d);
            rest = &rest[d as usize..];
        }
        DurfeeDecomposition { sizes, source: self.trimmed() }
    }

    /// Adds parts and re-sorts.
    pub fn with_parts(&self, extra: &[u32]) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(extra);
        Partition::from_unsorted(v)
    }

    /// Removes one copy of each listed value; `None` if some value is missing.
    pub fn without_parts(&self, gone: &[u32]) -> Option<Partition> {
        let mut v = self.0.clone();
        for g in gone {
            let pos = v.iter().position(|p| p == g)?;
            v.remove(pos);
        }
        Some(Partition(v))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Successive Durfee squares of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DurfeeDecomposition {
    pub sizes: Vec<u32>,
    source: Partition,
}

impl DurfeeDecomposition {
    /// Number of rows covered by the first `count` squares.
    pub fn rows_through(&self, count: usize) -> usize {
        self.sizes.iter().take(count).map(|&d| d as usize).sum()
    }

    /// Size of square `j`, where square 0 has the given size `zeroth`; 0 past the end.
    pub fn size(&self, j: usize, zeroth: u32) -> u32 {
        if j == 0 {
            zeroth
        } else {
            self.sizes.get(j - 1).copied().unwrap_or(0)
        }
    }

    /// The parts right of square `j` (1-based) and the parts below the last square.
    pub fn remainders(&self) -> (Vec<Partition>, Partition) {
        let mut right = Vec::new();
        let mut row = 0usize;
        for &d in &self.sizes {
            let block = &self.source.0[row..row + d as usize];
            right.push(Partition(block.iter().map(|p| p - d).collect()));
            row += d as usize;
        }
        (right, Partition(self.source.0[row..].to_vec()))
    }

    /// Rebuilds the partition from squares and remainders.
    pub fn reassemble(&self) -> Partition {
        let (right, below) = self.remainders();
        let mut parts = Vec::new();
        for (d, r) in self.sizes.iter().zip(right) {
            parts.extend(r.0.iter().map(|p| p + d));
        }
        parts.extend(below.0);
        Partition(parts)
    }
}
