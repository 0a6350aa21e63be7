use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::series::{GaussInt, SeriesError, TruncatedSeries};

/// Weighted counts indexed by `(s, t, n)`; absent keys are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    n_max: u32,
    entries: BTreeMap<(u32, u32, u32), GaussInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub s: u32,
    pub t: u32,
    pub n: u32,
    pub re: String,
    pub im: String,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n_max: u32,
    entries: Vec<TableEntry>,
}

impl CountTable {
    pub fn new(n_max: u32) -> Self {
        CountTable { n_max, entries: BTreeMap::new() }
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn add(&mut self, s: u32, t: u32, n: u32, c: &GaussInt) {
        assert!(n <= self.n_max, "n = {n} beyond table bound {}", self.n_max);
        let slot = self.entries.entry((s, t, n)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&(s, t, n));
        }
    }

    pub fn get(&self, s: u32, t: u32, n: u32) -> GaussInt {
        self.entries.get(&(s, t, n)).cloned().unwrap_or_default()
    }

    /// Sum over `s` and `t` at weight `n`.
    pub fn total(&self, n: u32) -> GaussInt {
        self.entries.iter().filter(|((_, _, m), _)| *m == n).fold(GaussInt::zero(), |acc, (_, c)| acc + c.clone())
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32, u32), &GaussInt)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn merge(&mut self, o: &CountTable) {
        self.n_max = self.n_max.max(o.n_max);
        for ((s, t, n), c) in o.iter() {
            self.add(s, t, n, c);
        }
    }

    /// Coefficients of `a^s b^t q^n`, summed over `x`, for `n <= n_max`. The series must
    /// be exact through `q^{n_max}`.
    pub fn from_series(series: &TruncatedSeries, n_max: u32) -> Result<Self, SeriesError> {
        let n_max_i = i64::from(n_max);
        if series.q_cutoff() <= n_max_i {
            // surfaces the window error through the regular coefficient accessor
            series.coeff_sum_x(0, 0, n_max_i)?;
        }
        if series.var_cap() < n_max {
            series.coeff_sum_x(series.var_cap() + 1, 0, 0)?;
        }
        let mut table = CountTable::new(n_max);
        for (e, c) in series.iter() {
            if e.q < 0 {
                continue;
            }
            if e.q <= n_max_i {
                table.add(e.a, e.b, e.q as u32, c);
            }
        }
        Ok(table)
    }

    /// Keys where the two tables differ, with both values.
    pub fn diff(&self, o: &CountTable) -> Vec<((u32, u32, u32), GaussInt, GaussInt)> {
        let mut keys: Vec<_> = self.entries.keys().chain(o.entries.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(s, t, n)| {
                let (l, r) = (self.get(s, t, n), o.get(s, t, n));
                (l != r).then_some(((s, t, n), l, r))
            })
            .collect()
    }

    fn rows(&self) -> Vec<TableEntry> {
        self.entries
            .iter()
            .map(|(&(s, t, n), c)| TableEntry { s, t, n, re: c.re.to_string(), im: c.im.to_string() })
            .collect()
    }

    /// Header `s,t,n,re,im`, nonzero entries only, sorted by `(s, t, n)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,t,n,re,im\n");
        for r in self.rows() {
            let _ = writeln!(out, "{},{},{},{},{}", r.s, r.t, r.n, r.re, r.im);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TableJson { n_max: self.n_max, entries: self.rows() })
            .expect("table serialisation cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        let raw: TableJson = serde_json::from_str(text)?;
        let mut table = CountTable::new(raw.n_max);
        for e in raw.entries {
            let parse = |v: &str| v.parse::<num_bigint::BigInt>().map_err(serde::de::Error::custom);
            table.add(e.s, e.t, e.n, &GaussInt::new(parse(&e.re)?, parse(&e.im)?));
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_entries_vanish() {
        let mut t = CountTable::new(3);
        t.add(1, 0, 2, &GaussInt::from(2));
        t.add(1, 0, 2, &GaussInt::from(-2));
        assert_eq!(t, CountTable::new(3));
    }

    #[test]
    fn csv_and_json_round_trip() {
        let mut t = CountTable::new(4);
        t.add(0, 1, 3, &GaussInt::new(2, -1));
        t.add(0, 0, 0, &GaussInt::from(1));
        assert_eq!(t.to_csv(), "s,t,n,re,im\n0,0,0,1,0\n0,1,3,2,-1\n");
        assert_eq!(CountTable::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(t.total(3), GaussInt::new(2, -1));
    }
}
