//! Overpartitions, overpartition pairs and the frequency conditions that the R and R̃
//! series count.

mod corollaries;
mod enumerate;
mod table;

pub use corollaries::{
    corollary1_check, corollary1_product, corollary2_check, corollary2_product, corollary4_check, corollary4_product,
    CorollarySides, UnattachedReading,
};
pub use enumerate::{
    count_b, count_b_tilde, enumerate_pairs, overpartitions, overpartitions_with_len, EnumError, DEFAULT_PAIR_BOUND,
};
pub use table::{CountTable, TableEntry};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OverpartitionError {
    #[error("parts must be weakly decreasing with the overlined copy first: {0}")]
    NotCanonical(String),
    #[error("size {0} is overlined more than once")]
    DuplicateOverline(u32),
    #[error("zero part in an overpartition of positive parts")]
    ZeroPart,
    #[error("cannot parse part {0:?}")]
    Parse(String),
}

/// One part; `over` marks the overlined copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Part {
    pub size: u32,
    pub over: bool,
}

impl Part {
    pub fn plain(size: u32) -> Self {
        Part { size, over: false }
    }

    pub fn overlined(size: u32) -> Self {
        Part { size, over: true }
    }
}

impl PartialOrd for Part {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

/// Canonical order: larger sizes first, the overlined copy before plain ones.
impl Ord for Part {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        o.size.cmp(&self.size).then(o.over.cmp(&self.over))
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.size, if self.over { "'" } else { "" })
    }
}

/// A partition whose parts may carry an overline, at most one per size. Parts are
/// nonnegative here; pairs require positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Part>", into = "Vec<Part>")]
pub struct Overpartition {
    parts: Vec<Part>,
}

impl TryFrom<Vec<Part>> for Overpartition {
    type Error = OverpartitionError;

    fn try_from(parts: Vec<Part>) -> Result<Self, Self::Error> {
        Overpartition::new(parts)
    }
}

impl From<Overpartition> for Vec<Part> {
    fn from(o: Overpartition) -> Self {
        o.parts
    }
}

impl Overpartition {
    pub fn new(parts: Vec<Part>) -> Result<Self, OverpartitionError> {
        for w in parts.windows(2) {
            if w[0] > w[1] {
                return Err(OverpartitionError::NotCanonical(Self { parts: parts.clone() }.to_string()));
            }
            if w[0].size == w[1].size && w[0].over && w[1].over {
                return Err(OverpartitionError::DuplicateOverline(w[0].size));
            }
        }
        Ok(Overpartition { parts })
    }

    /// Sorts the parts into canonical order first.
    pub fn from_unsorted(mut parts: Vec<Part>) -> Result<Self, OverpartitionError> {
        parts.sort();
        Self::new(parts)
    }

    pub(crate) fn from_canonical(parts: Vec<Part>) -> Self {
        debug_assert!(Self::new(parts.clone()).is_ok());
        Overpartition { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.size).sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().map_or(0, |p| p.size)
    }

    pub fn has_zero(&self) -> bool {
        self.parts.last().is_some_and(|p| p.size == 0)
    }

    /// Occurrences of `j` with the given overline flag.
    pub fn freq(&self, j: u32, over: bool) -> u32 {
        self.parts.iter().filter(|p| p.size == j && p.over == over).count() as u32
    }

    pub fn overlined_count(&self) -> u32 {
        self.parts.iter().filter(|p| p.over).count() as u32
    }

    pub fn plain_count(&self) -> u32 {
        self.parts.iter().filter(|p| !p.over).count() as u32
    }

    /// Overlined parts of size at most `j`.
    pub fn overlined_up_to(&self, j: u32) -> u32 {
        self.parts.iter().filter(|p| p.over && p.size <= j).count() as u32
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, p) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `"6',4,4,3"` or `"(6',4,4,3)"`: a trailing `'` overlines a part.
impl FromStr for Overpartition {
    type Err = OverpartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Self::empty());
        }
        let parts = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (num, over) = match tok.strip_suffix('\'') {
                    Some(n) => (n, true),
                    None => (tok, false),
                };
                num.parse::<u32>().map(|size| Part { size, over }).map_err(|_| OverpartitionError::Parse(tok.into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

/// `(λ, μ)`, both into positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OverpartitionPair {
    pub lambda: Overpartition,
    pub mu: Overpartition,
}

/// The statistics `(s, t, m, n)` tracked by the four-variable series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairStats {
    pub s: u32,
    pub t: u32,
    pub m: u32,
    pub n: u32,
}

impl OverpartitionPair {
    pub fn new(lambda: Overpartition, mu: Overpartition) -> Result<Self, OverpartitionError> {
        if lambda.has_zero() || mu.has_zero() {
            return Err(OverpartitionError::ZeroPart);
        }
        Ok(OverpartitionPair { lambda, mu })
    }

    pub fn weight(&self) -> u32 {
        self.lambda.weight() + self.mu.weight()
    }

    pub fn largest(&self) -> u32 {
        self.lambda.largest().max(self.mu.largest())
    }

    /// `s` counts overlined parts of λ and plain parts of μ; `t` counts parts of μ.
    pub fn stats(&self) -> PairStats {
        PairStats {
            s: self.lambda.overlined_count() + self.mu.plain_count(),
            t: self.mu.len() as u32,
            m: (self.lambda.len() + self.mu.len()) as u32,
            n: self.weight(),
        }
    }

    /// `j` occurs, only plain, and only in μ.
    pub fn unattached(&self, j: u32) -> bool {
        self.mu.freq(j, false) > 0
            && self.mu.freq(j, true) == 0
            && self.lambda.freq(j, false) == 0
            && self.lambda.freq(j, true) == 0
    }

    /// `v_j = f_j(λ) + f_j̄(λ) + f_j̄(μ) + [j unattached]`.
    pub fn valuation(&self, j: u32) -> u32 {
        self.lambda.freq(j, false) + self.lambda.freq(j, true) + self.mu.freq(j, true) + u32::from(self.unattached(j))
    }

    /// `v_1 <= i - 1` and `f_j(λ) + v_{j+1} <= k - 1` for all `j >= 1`.
    pub fn satisfies_thm1(&self, k: u32, i: u32) -> bool {
        if self.valuation(1) + 1 > i {
            return false;
        }
        (1..=self.largest()).all(|j| self.lambda.freq(j, false) + self.valuation(j + 1) < k)
    }

    /// The first conditions plus the parity rule at every `j` where the second is tight:
    /// `j f_j(λ) + (j+1) v_{j+1} ≡ i - 1 + O_j(λ) + O_j(μ) (mod 2)`.
    pub fn satisfies_thm2(&self, k: u32, i: u32) -> bool {
        if !self.satisfies_thm1(k, i) {
            return false;
        }
        (1..=self.largest()).all(|j| {
            let f = self.lambda.freq(j, false);
            let v = self.valuation(j + 1);
            if f + v != k - 1 {
                return true;
            }
            let lhs = j * f + (j + 1) * v;
            let rhs = i - 1 + self.lambda.overlined_up_to(j) + self.mu.overlined_up_to(j);
            lhs % 2 == rhs % 2
        })
    }
}

impl fmt::Display for OverpartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lambda, self.mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(l: &str, m: &str) -> OverpartitionPair {
        OverpartitionPair::new(l.parse().unwrap(), m.parse().unwrap()).unwrap()
    }

    #[test]
    fn worked_pair_statistics() {
        let p = pair("6',4,4,3", "6,4',4,2',2,1");
        assert_eq!(p.lambda.freq(4, false), 2);
        assert_eq!(p.lambda.freq(6, true), 1);
        assert_eq!(Overpartition::empty().freq(3, true), 0);
        let unattached: Vec<u32> = (1..=7).filter(|&j| p.unattached(j)).collect();
        assert_eq!(unattached, [1]);
        assert_eq!(p.valuation(1), 1);
        assert_eq!(p.valuation(4), 3);
        assert_eq!(p.valuation(5), 0);
        assert_eq!(p.valuation(9), 0);
    }

    #[test]
    fn conditions_on_small_pairs() {
        let empty = OverpartitionPair::default();
        for k in 2..5 {
            for i in 1..=k {
                assert!(empty.satisfies_thm1(k, i) && empty.satisfies_thm2(k, i));
            }
        }
        assert!(!pair("1", "").satisfies_thm1(2, 1));
        assert!(pair("1", "").satisfies_thm1(2, 2));
    }

    #[test]
    fn parse_and_validate() {
        let o: Overpartition = "(7',4,2',0)".parse().unwrap();
        assert_eq!(o.to_string(), "(7',4,2',0)");
        assert_eq!("3,3',1".parse::<Overpartition>(), Err(OverpartitionError::NotCanonical("(3,3',1)".into())));
        assert!(Overpartition::from_unsorted(vec![Part::plain(1), Part::overlined(3), Part::plain(3)]).is_ok());
        assert!(OverpartitionPair::new("1,0".parse().unwrap(), Overpartition::empty()).is_err());
        let json = serde_json::to_string(&o).unwrap();
        assert_eq!(
            json,
            r#"[{"size":7,"over":true},{"size":4,"over":false},{"size":2,"over":true},{"size":0,"over":false}]"#
        );
        assert_eq!(serde_json::from_str::<Overpartition>(&json).unwrap(), o);
    }
}
