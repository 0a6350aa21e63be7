//! Paths under the odd `(k, i)`-conditions against Frobenius symbols with ranks in
//! `[2 - i, 2k - i - 1]`. Peaks become columns, leftmost peak in the rightmost column.

use thiserror::Error;

use super::{LatticePath, PathError, PeakMark, Step};
use crate::frobenius::{rank_window, FrobeniusSymbol};
use crate::overpartition::{Overpartition, Part};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("path does not satisfy the odd ({k},{i})-conditions")]
    NotAdmissiblePath { k: u32, i: u32 },
    #[error("column {column} has rank {rank} outside [{lo}, {hi}]")]
    RankOutOfWindow { column: usize, rank: i64, lo: i64, hi: i64 },
    #[error("peak {peak} at ({x}, {y}) cannot be reached from ({from_x}, {from_y})")]
    Unreachable { peak: usize, x: i64, y: i64, from_x: i64, from_y: i64 },
    #[error("need k >= 2 and 1 <= i <= k, got k = {k}, i = {i}")]
    InvalidParams { k: u32, i: u32 },
    #[error(transparent)]
    Path(#[from] PathError),
}

fn check(k: u32, i: u32) -> Result<(), BijectionError> {
    if k < 2 || i == 0 || i > k {
        return Err(BijectionError::InvalidParams { k, i });
    }
    Ok(())
}

pub fn path_to_symbol(p: &LatticePath, k: u32, i: u32) -> Result<FrobeniusSymbol, BijectionError> {
    check(k, i)?;
    if !p.satisfies_odd(k, i) {
        return Err(BijectionError::NotAdmissiblePath { k, i });
    }
    let h = i64::from(k - i);
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for pk in p.peaks().iter().rev() {
        let (x, y, u, v) = (i64::from(pk.x), i64::from(pk.y), i64::from(pk.u), i64::from(pk.v));
        let (twice_p, twice_q) = if pk.east_parity {
            (x + h + y - 1 + u - v, x - h - y - 1 - u + v)
        } else {
            (x + h - y + u - v, x - h + y - 2 - u + v)
        };
        assert!(twice_p % 2 == 0 && twice_q % 2 == 0 && twice_p >= 0 && twice_q >= 0, "peak {pk:?} gives no column");
        let (over_p, over_q) = match pk.mark {
            PeakMark::One => (true, true),
            PeakMark::A => (true, false),
            PeakMark::B => (false, true),
            PeakMark::AB => (false, false),
        };
        top.push(Part { size: (twice_p / 2) as u32, over: over_p });
        bottom.push(Part { size: (twice_q / 2) as u32, over: over_q });
    }
    let row = |v: Vec<Part>| Overpartition::new(v).expect("columns from an admissible path form overpartitions");
    Ok(FrobeniusSymbol::new(row(top), row(bottom)).expect("rows have one entry per peak"))
}

pub fn symbol_to_path(f: &FrobeniusSymbol, k: u32, i: u32) -> Result<LatticePath, BijectionError> {
    check(k, i)?;
    let (lo, hi) = rank_window(k, i, false);
    if let Some((column, &rank)) = f.successive_ranks().iter().enumerate().find(|(_, r)| !(lo..=hi).contains(*r)) {
        return Err(BijectionError::RankOutOfWindow { column, rank, lo, hi });
    }
    let h = i64::from(k - i);
    let (tops, bottoms) = (f.top().parts(), f.bottom().parts());
    let (mut cx, mut cy, mut east) = (0i64, h, 0i64);
    let (mut u, mut v) = (0i64, 0i64);
    let mut steps = Vec::new();
    let mut marks = Vec::new();
    for (peak, col) in (0..f.columns()).rev().enumerate() {
        let (a, b) = (tops[col], bottoms[col]);
        let (p, q) = (i64::from(a.size), i64::from(b.size));
        let mark = match (a.over, b.over) {
            (true, true) => PeakMark::One,
            (true, false) => PeakMark::A,
            (false, true) => PeakMark::B,
            (false, false) => PeakMark::AB,
        };
        let x = p + q + 1;
        let y_even = h + 1 + q - p + u - v;
        let y_odd = p - q - u + v - h;
        assert!((y_even >= 1) != (y_odd >= 1), "exactly one height formula applies");
        let (y, odd_east) = if y_even >= 1 { (y_even, false) } else { (y_odd, true) };
        let unreachable = BijectionError::Unreachable { peak, x, y, from_x: cx, from_y: cy };
        let (dx, dy) = (x - cx, y - cy);
        let flat = dx - cy - y;
        let (d, e, up) = if flat > 0 {
            (cy, flat, y)
        } else if (dx + dy) % 2 == 0 {
            ((dx - dy) / 2, 0, (dx + dy) / 2)
        } else {
            return Err(unreachable);
        };
        if d < 0 || d > cy || up < 1 || y >= i64::from(k) || ((east + e) % 2 == 1) != odd_east {
            return Err(unreachable);
        }
        steps.extend(std::iter::repeat_n(Step::SE, d as usize));
        steps.extend(std::iter::repeat_n(Step::E, e as usize));
        steps.extend(std::iter::repeat_n(Step::NE, up as usize));
        east += e;
        let (out, dx_out) = match mark {
            PeakMark::One => (Step::SE, 1),
            PeakMark::A | PeakMark::B => (Step::S, 0),
            PeakMark::AB => (Step::SW, -1),
        };
        steps.push(out);
        marks.push(mark);
        (cx, cy) = (x + dx_out, y - 1);
        u += i64::from(mark.marked_by_a());
        v += i64::from(mark.marked_by_b());
    }
    steps.extend(std::iter::repeat_n(Step::SE, cy as usize));
    let path = LatticePath::new(k - i, steps, marks)?;
    debug_assert!(path.satisfies_odd(k, i));
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::{enumerate_symbols, DEFAULT_SYMBOL_BOUND};
    use crate::paths::enumerate_paths;
    use crate::paths::tests::figure3;

    #[test]
    fn third_figure_maps_to_printed_symbol() {
        let f = path_to_symbol(&figure3(), 5, 3).unwrap();
        assert_eq!(f.to_string(), "(14,12',12,8,7',4',3',2)/(9',8',8,7',5',4',3,1)");
        assert_eq!(symbol_to_path(&f, 5, 3).unwrap(), figure3());
    }

    #[test]
    fn empty_cases() {
        assert_eq!(path_to_symbol(&LatticePath::descent(1), 3, 2).unwrap(), FrobeniusSymbol::default());
        assert_eq!(symbol_to_path(&FrobeniusSymbol::default(), 3, 2).unwrap(), LatticePath::descent(1));
        assert!(matches!(path_to_symbol(&figure3(), 5, 2), Err(BijectionError::NotAdmissiblePath { .. })));
        let wide: FrobeniusSymbol = "(9)/(0)".parse().unwrap();
        assert!(matches!(symbol_to_path(&wide, 3, 2), Err(BijectionError::RankOutOfWindow { .. })));
    }

    #[test]
    fn round_trips_k3_i2() {
        let (k, i) = (3, 2);
        let (lo, hi) = rank_window(k, i, false);
        for n in 0..=8 {
            for p in enumerate_paths(k, i, n, false, 24).unwrap() {
                let f = path_to_symbol(&p, k, i).unwrap();
                assert_eq!((f.weight(), f.columns(), f.s(), f.t()), (n, p.peak_count(), p.s(), p.t()));
                assert_eq!(symbol_to_path(&f, k, i).unwrap(), p);
            }
            for f in enumerate_symbols(n, DEFAULT_SYMBOL_BOUND).unwrap().iter().filter(|f| f.ranks_within(lo, hi)) {
                assert_eq!(&path_to_symbol(&symbol_to_path(f, k, i).unwrap(), k, i).unwrap(), f);
            }
        }
    }
}
