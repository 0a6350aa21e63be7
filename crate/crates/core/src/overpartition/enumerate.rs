//! Exhaustive listings, in a fixed order, and the tallies built from them.

use rayon::prelude::*;
use thiserror::Error;

use super::{CountTable, Overpartition, OverpartitionPair, Part};
use crate::series::GaussInt;

/// Largest weight the listing functions accept unless told otherwise.
pub const DEFAULT_PAIR_BOUND: u32 = 18;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("weight {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: u32, bound: u32 },
    #[error("need k >= 2 and 1 <= i <= k, got k = {k}, i = {i}")]
    InvalidParams { k: u32, i: u32 },
}

fn check_bound(n: u32, bound: u32) -> Result<(), EnumError> {
    if n > bound {
        return Err(EnumError::BoundExceeded { n, bound });
    }
    Ok(())
}

pub(crate) fn check_ki(k: u32, i: u32) -> Result<(), EnumError> {
    if k < 2 || i == 0 || i > k {
        return Err(EnumError::InvalidParams { k, i });
    }
    Ok(())
}

/// Walks sizes downward from `size`, choosing a multiplicity and overline flag for each.
fn rec(size: u32, weight: u32, len: Option<u32>, cur: &mut Vec<Part>, out: &mut Vec<Overpartition>) {
    if size == 0 {
        match len {
            None if weight == 0 => out.push(Overpartition::from_canonical(cur.clone())),
            Some(r) if weight == 0 => {
                // r zeros, the first possibly overlined
                let mark = cur.len();
                cur.extend(std::iter::repeat_n(Part::plain(0), r as usize));
                out.push(Overpartition::from_canonical(cur.clone()));
                if r > 0 {
                    cur[mark].over = true;
                    out.push(Overpartition::from_canonical(cur.clone()));
                }
                cur.truncate(mark);
            }
            _ => {}
        }
        return;
    }
    let most = len.map_or(weight / size, |r| r.min(weight / size));
    let mark = cur.len();
    for c in 0..=most {
        let rest = len.map(|r| r - c);
        if c == 0 {
            rec(size - 1, weight, rest, cur, out);
            continue;
        }
        cur.push(Part::overlined(size));
        cur.extend(std::iter::repeat_n(Part::plain(size), c as usize - 1));
        rec(size - 1, weight - c * size, rest, cur, out);
        cur[mark].over = false;
        rec(size - 1, weight - c * size, rest, cur, out);
        cur.truncate(mark);
    }
}

/// All overpartitions of `n` into positive parts, sorted.
pub fn overpartitions(n: u32) -> Vec<Overpartition> {
    let mut out = Vec::new();
    rec(n, n, None, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All overpartitions of `n` into exactly `len` nonnegative parts, sorted.
pub fn overpartitions_with_len(n: u32, len: u32) -> Vec<Overpartition> {
    let mut out = Vec::new();
    rec(n, n, Some(len), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions of `n` (no overlines) whose odd parts are distinct, sorted.
pub(crate) fn partitions_distinct_odd(n: u32) -> Vec<Overpartition> {
    overpartitions(n)
        .into_iter()
        .filter(|o| {
            o.overlined_count() == 0 && o.parts().windows(2).all(|w| w[0].size != w[1].size || w[0].size % 2 == 0)
        })
        .collect()
}

/// Tables of overpartitions by weight, `0..=n_max`.
pub(crate) fn by_weight(n_max: u32) -> Vec<Vec<Overpartition>> {
    (0..=n_max).into_par_iter().map(overpartitions).collect()
}

/// Every overpartition pair of total weight `n`, ordered by `|λ|`, then λ, then μ.
pub fn enumerate_pairs(n: u32, bound: u32) -> Result<Vec<OverpartitionPair>, EnumError> {
    check_bound(n, bound)?;
    let table = by_weight(n);
    Ok((0..=n as usize)
        .flat_map(|w| {
            let (ls, ms) = (&table[w], &table[n as usize - w]);
            ls.iter().flat_map(move |l| ms.iter().map(move |m| OverpartitionPair { lambda: l.clone(), mu: m.clone() }))
        })
        .collect())
}

fn tally(
    n_max: u32,
    bound: u32,
    keep: impl Fn(&OverpartitionPair) -> bool + Sync + Send,
) -> Result<CountTable, EnumError> {
    check_bound(n_max, bound)?;
    let table = by_weight(n_max);
    let one = GaussInt::from(1);
    let parts: Vec<CountTable> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut out = CountTable::new(n_max);
            for w in 0..=n as usize {
                for l in &table[w] {
                    for m in &table[n as usize - w] {
                        let p = OverpartitionPair { lambda: l.clone(), mu: m.clone() };
                        if keep(&p) {
                            let st = p.stats();
                            out.add(st.s, st.t, n, &one);
                        }
                    }
                }
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

/// Pairs meeting the first frequency conditions, tallied by `(s, t, n)` for `n <= n_max`.
pub fn count_b(k: u32, i: u32, n_max: u32, bound: u32) -> Result<CountTable, EnumError> {
    check_ki(k, i)?;
    tally(n_max, bound, |p| p.satisfies_thm1(k, i))
}

/// Pairs meeting the conditions together with the parity rule.
pub fn count_b_tilde(k: u32, i: u32, n_max: u32, bound: u32) -> Result<CountTable, EnumError> {
    check_ki(k, i)?;
    tally(n_max, bound, |p| p.satisfies_thm2(k, i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overpartition_counts() {
        let counts: Vec<usize> = (0..9).map(|n| overpartitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 8, 14, 24, 40, 64, 100]);
    }

    #[test]
    fn weight_one_pairs() {
        let pairs: Vec<String> =
            enumerate_pairs(1, DEFAULT_PAIR_BOUND).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(pairs, ["((), (1'))", "((), (1))", "((1'), ())", "((1), ())"]);
        assert_eq!(enumerate_pairs(3, 2), Err(EnumError::BoundExceeded { n: 3, bound: 2 }));
    }

    #[test]
    fn fixed_length_rows() {
        let rows = overpartitions_with_len(2, 2);
        let shown: Vec<String> = rows.iter().map(|o| o.to_string()).collect();
        assert_eq!(shown, ["(2',0')", "(2',0)", "(2,0')", "(2,0)", "(1',1,)", "(1,1)"].map(|s| s.replace(",)", ")")));
    }

    #[test]
    fn distinct_odd_filter() {
        let shown: Vec<String> = partitions_distinct_odd(4).iter().map(|o| o.to_string()).collect();
        assert_eq!(shown, ["(4)", "(3,1)", "(2,2)"]);
    }

    #[test]
    fn tables_match_series_k3() {
        use crate::hypergeometric::{series_r, series_r_tilde, SeriesParams};
        for i in 1..=3u32 {
            let p = SeriesParams::new(3, i64::from(i), 9).with_cap(8);
            let r = CountTable::from_series(&series_r(&p).unwrap(), 8).unwrap();
            let rt = CountTable::from_series(&series_r_tilde(&p).unwrap(), 8).unwrap();
            assert_eq!(count_b(3, i, 8, DEFAULT_PAIR_BOUND).unwrap(), r, "i = {i}");
            assert_eq!(count_b_tilde(3, i, 8, DEFAULT_PAIR_BOUND).unwrap(), rt, "i = {i}");
        }
    }

    #[test]
    fn small_weight_answers() {
        let b = count_b(2, 2, 5, DEFAULT_PAIR_BOUND).unwrap();
        assert_eq!(b.get(0, 0, 0), GaussInt::from(1));
        assert_eq!(b.get(0, 0, 5), GaussInt::from(2));
        assert!(count_b(1, 1, 3, 10).is_err());
    }
}
