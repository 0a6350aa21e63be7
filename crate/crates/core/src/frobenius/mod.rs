//! Two-rowed arrays of overpartitions into nonnegative parts, their successive ranks, and
//! the C / C̃ tables.

mod joichi_stanton;

pub use joichi_stanton::{joichi_stanton, joichi_stanton_inverse, JoichiStanton, JoichiStantonError};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::overpartition::{overpartitions_with_len, CountTable, EnumError, Overpartition, OverpartitionError};
use crate::series::GaussInt;

/// Largest weight [`enumerate_symbols`] accepts unless told otherwise.
pub const DEFAULT_SYMBOL_BOUND: u32 = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("rows have different lengths ({top} on top, {bottom} below)")]
    RowLengths { top: usize, bottom: usize },
    #[error(transparent)]
    Row(#[from] OverpartitionError),
    #[error("expected \"top/bottom\", got {0:?}")]
    Format(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSymbol")]
pub struct FrobeniusSymbol {
    top: Overpartition,
    bottom: Overpartition,
}

#[derive(Deserialize)]
struct RawSymbol {
    top: Overpartition,
    bottom: Overpartition,
}

impl TryFrom<RawSymbol> for FrobeniusSymbol {
    type Error = SymbolError;

    fn try_from(r: RawSymbol) -> Result<Self, Self::Error> {
        FrobeniusSymbol::new(r.top, r.bottom)
    }
}

impl FrobeniusSymbol {
    pub fn new(top: Overpartition, bottom: Overpartition) -> Result<Self, SymbolError> {
        if top.len() != bottom.len() {
            return Err(SymbolError::RowLengths { top: top.len(), bottom: bottom.len() });
        }
        Ok(FrobeniusSymbol { top, bottom })
    }

    pub fn top(&self) -> &Overpartition {
        &self.top
    }

    pub fn bottom(&self) -> &Overpartition {
        &self.bottom
    }

    /// Number of columns `N`.
    pub fn columns(&self) -> usize {
        self.top.len()
    }

    /// `N` plus every entry.
    pub fn weight(&self) -> u32 {
        self.columns() as u32 + self.top.weight() + self.bottom.weight()
    }

    /// Plain entries of the bottom row.
    pub fn s(&self) -> u32 {
        self.bottom.plain_count()
    }

    /// Plain entries of the top row.
    pub fn t(&self) -> u32 {
        self.top.plain_count()
    }

    /// `r_m = a_m - b_m - #plain{b_{m+1..N}} + #plain{a_{m+1..N}}`.
    pub fn successive_ranks(&self) -> Vec<i64> {
        let (a, b) = (self.top.parts(), self.bottom.parts());
        let mut out = vec![0; a.len()];
        let (mut plain_a, mut plain_b) = (0i64, 0i64);
        for m in (0..a.len()).rev() {
            out[m] = i64::from(a[m].size) - i64::from(b[m].size) - plain_b + plain_a;
            plain_a += i64::from(!a[m].over);
            plain_b += i64::from(!b[m].over);
        }
        out
    }

    /// Every rank lies in `lo..=hi`.
    pub fn ranks_within(&self, lo: i64, hi: i64) -> bool {
        self.successive_ranks().iter().all(|r| (lo..=hi).contains(r))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("symbol serialisation cannot fail")
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.top, self.bottom)
    }
}

/// `"7',4,2',0/3',3,1,0'"`, parentheses optional.
impl FromStr for FrobeniusSymbol {
    type Err = SymbolError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (top, bottom) = s.split_once('/').ok_or_else(|| SymbolError::Format(s.into()))?;
        FrobeniusSymbol::new(top.parse()?, bottom.parse()?)
    }
}

/// Rows of weight `w` and length `len`, indexed `[len][w]`.
fn rows(n: u32) -> Vec<Vec<Vec<Overpartition>>> {
    (0..=n).into_par_iter().map(|len| (0..=n - len).map(|w| overpartitions_with_len(w, len)).collect()).collect()
}

fn symbols_from(rows: &[Vec<Vec<Overpartition>>], n: u32) -> Vec<FrobeniusSymbol> {
    let mut out = Vec::new();
    for len in 0..=n {
        let left = n - len;
        let by_w = &rows[len as usize];
        for w in 0..=left {
            for top in &by_w[w as usize] {
                for bottom in &by_w[(left - w) as usize] {
                    out.push(FrobeniusSymbol { top: top.clone(), bottom: bottom.clone() });
                }
            }
        }
    }
    out
}

/// Every symbol of weight `n`: by column count, then top-row weight, then rows in order.
pub fn enumerate_symbols(n: u32, bound: u32) -> Result<Vec<FrobeniusSymbol>, EnumError> {
    if n > bound {
        return Err(EnumError::BoundExceeded { n, bound });
    }
    Ok(symbols_from(&rows(n), n))
}

/// Tallies symbols of weight `<= n_max` accepted by `keep`, by `(s, t, n)`.
pub fn tally_symbols(
    n_max: u32,
    bound: u32,
    keep: impl Fn(&FrobeniusSymbol) -> bool + Sync + Send,
) -> Result<CountTable, EnumError> {
    if n_max > bound {
        return Err(EnumError::BoundExceeded { n: n_max, bound });
    }
    let rows = rows(n_max);
    let one = GaussInt::from(1);
    let parts: Vec<CountTable> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut out = CountTable::new(n_max);
            for f in symbols_from(&rows, n).iter().filter(|f| keep(f)) {
                out.add(f.s(), f.t(), n, &one);
            }
            out
        })
        .collect();
    let mut total = CountTable::new(n_max);
    for p in &parts {
        total.merge(p);
    }
    Ok(total)
}

/// The rank window `[2 - i, 2k - i - 1]`, or `[2 - i, 2k - i - 2]` for the even family.
pub fn rank_window(k: u32, i: u32, even: bool) -> (i64, i64) {
    let (k, i) = (i64::from(k), i64::from(i));
    (2 - i, 2 * k - i - 1 - i64::from(even))
}

fn check_ki(k: u32, i: u32) -> Result<(), EnumError> {
    if k < 2 || i == 0 || i > k {
        return Err(EnumError::InvalidParams { k, i });
    }
    Ok(())
}

/// Symbols with every successive rank in `[2 - i, 2k - i - 1]`.
pub fn count_c(k: u32, i: u32, n_max: u32, bound: u32) -> Result<CountTable, EnumError> {
    check_ki(k, i)?;
    let (lo, hi) = rank_window(k, i, false);
    tally_symbols(n_max, bound, |f| f.ranks_within(lo, hi))
}

/// Symbols with every successive rank in `[2 - i, 2k - i - 2]`.
pub fn count_c_tilde(k: u32, i: u32, n_max: u32, bound: u32) -> Result<CountTable, EnumError> {
    check_ki(k, i)?;
    let (lo, hi) = rank_window(k, i, true);
    tally_symbols(n_max, bound, |f| f.ranks_within(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::overpartition::{count_b, count_b_tilde, enumerate_pairs, DEFAULT_PAIR_BOUND};

    fn sym(s: &str) -> FrobeniusSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn ranks_of_worked_symbol() {
        let f = sym("7',4,2',0/3',3,1,0'");
        assert_eq!(f.successive_ranks(), [4, 1, 2, 0]);
        assert_eq!(sym("5'/2'").successive_ranks(), [3]);
        assert!(FrobeniusSymbol::default().successive_ranks().is_empty());
    }

    #[test]
    fn large_symbol_statistics() {
        let f = sym("14,12',12,8,7',4',3',2/9',8',8,7',5',4',3,1");
        assert_eq!((f.s(), f.t(), f.weight()), (3, 4, 115));
        assert_eq!(f.successive_ranks(), [5, 4, 4, 0, 1, -1, 0, 1]);
        assert!(f.ranks_within(-1, 6));
        assert!(!f.ranks_within(0, 6));
    }

    #[test]
    fn small_listings() {
        assert_eq!(enumerate_symbols(0, 14).unwrap(), [FrobeniusSymbol::default()]);
        let one: Vec<String> = enumerate_symbols(1, 14).unwrap().iter().map(|f| f.to_string()).collect();
        assert_eq!(one, ["(0')/(0')", "(0')/(0)", "(0)/(0')", "(0)/(0)"]);
        for n in 0..=8 {
            assert_eq!(enumerate_symbols(n, 14).unwrap().len(), enumerate_pairs(n, DEFAULT_PAIR_BOUND).unwrap().len());
        }
        assert!(enumerate_symbols(15, 14).is_err());
    }

    #[test]
    fn c_tables_match_b() {
        for (k, i) in [(2, 1), (2, 2), (3, 2)] {
            let c = count_c(k, i, 8, DEFAULT_SYMBOL_BOUND).unwrap();
            assert_eq!(c, count_b(k, i, 8, DEFAULT_PAIR_BOUND).unwrap());
            let ct = count_c_tilde(k, i, 8, DEFAULT_SYMBOL_BOUND).unwrap();
            assert_eq!(ct, count_b_tilde(k, i, 8, DEFAULT_PAIR_BOUND).unwrap());
            assert_eq!(c.get(0, 0, 0), GaussInt::from(1));
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let f = sym("7',4,2',0/3',3,1,0'");
        let back: FrobeniusSymbol = serde_json::from_str(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<FrobeniusSymbol>(r#"{"top":[{"size":1,"over":false}],"bottom":[]}"#).is_err());
        assert!("1,2/3".parse::<FrobeniusSymbol>().is_err());
        assert!("1".parse::<FrobeniusSymbol>().is_err());
    }
}
