use rayon::prelude::*;

use super::{LatticePath, PeakMark, Step};
use crate::overpartition::{CountTable, EnumError};
use crate::series::GaussInt;

/// Largest major index [`enumerate_paths`] accepts unless told otherwise.
pub const DEFAULT_PATH_BOUND: u32 = 24;

struct Search {
    k: u32,
    n: u32,
    steps: Vec<Step>,
    marks: Vec<PeakMark>,
    out: Vec<LatticePath>,
    start: u32,
}

const MARKERS: [(Step, PeakMark); 4] =
    [(Step::SE, PeakMark::One), (Step::S, PeakMark::A), (Step::S, PeakMark::B), (Step::SW, PeakMark::AB)];

impl Search {
    /// At `(x, y)` after the start or after a peak's outgoing step, with `major` so far.
    fn valley(&mut self, x: u32, y: u32, major: u32) {
        if major == self.n {
            let mark = self.steps.len();
            self.steps.extend(std::iter::repeat_n(Step::SE, y as usize));
            self.out.push(LatticePath {
                start_height: self.start,
                steps: self.steps.clone(),
                marks: self.marks.clone(),
            });
            self.steps.truncate(mark);
        }
        let room = self.n - major;
        for d in 0..=y {
            let floor = y - d;
            let max_e = if floor == 0 { room } else { 0 };
            for e in 0..=max_e {
                for up in 1..self.k - floor {
                    let px = x + d + e + up;
                    if px > room {
                        break;
                    }
                    let mark = self.steps.len();
                    self.steps.extend(std::iter::repeat_n(Step::SE, d as usize));
                    self.steps.extend(std::iter::repeat_n(Step::E, e as usize));
                    self.steps.extend(std::iter::repeat_n(Step::NE, up as usize));
                    for (step, m) in MARKERS {
                        self.steps.push(step);
                        self.marks.push(m);
                        let nx = (i64::from(px) + step.delta().0) as u32;
                        self.valley(nx, floor + up - 1, major + px);
                        self.marks.pop();
                        self.steps.pop();
                    }
                    self.steps.truncate(mark);
                }
            }
        }
    }
}

fn search(k: u32, i: u32, n: u32) -> Vec<LatticePath> {
    let mut s = Search { k, n, steps: Vec::new(), marks: Vec::new(), out: Vec::new(), start: k - i };
    s.valley(0, k - i, 0);
    s.out
}

fn check(k: u32, i: u32, n: u32, bound: u32) -> Result<(), EnumError> {
    if k < 2 || i == 0 || i > k {
        return Err(EnumError::InvalidParams { k, i });
    }
    if n > bound {
        return Err(EnumError::BoundExceeded { n, bound });
    }
    Ok(())
}

/// Paths of major index `n` meeting the odd (or, with `even`, the even) `(k, i)`-conditions,
/// in the order a left-to-right depth-first construction finds them.
pub fn enumerate_paths(k: u32, i: u32, n: u32, even: bool, bound: u32) -> Result<Vec<LatticePath>, EnumError> {
    check(k, i, n, bound)?;
    let mut all = search(k, i, n);
    if even {
        all.retain(|p| p.satisfies_even(k, i));
    }
    Ok(all)
}

fn tally(k: u32, i: u32, n_max: u32, even: bool, bound: u32) -> Result<CountTable, EnumError> {
    check(k, i, n_max, bound)?;
    let one = GaussInt::from(1);
    let parts: Vec<CountTable> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut t = CountTable::new(n_max);
            for p in search(k, i, n).iter().filter(|p| !even || p.satisfies_even(k, i)) {
                t.add(p.s(), p.t(), n, &one);
            }
            t
        })
        .collect();
    let mut total = CountTable::new(n_max);
    for p in &parts {
        total.merge(p);
    }
    Ok(total)
}

/// Odd-condition paths tallied by `(s, t, major index)`.
pub fn count_e(k: u32, i: u32, n_max: u32, bound: u32) -> Result<CountTable, EnumError> {
    tally(k, i, n_max, false, bound)
}

/// Even-condition paths tallied by `(s, t, major index)`.
pub fn count_e_tilde(k: u32, i: u32, n_max: u32, bound: u32) -> Result<CountTable, EnumError> {
    tally(k, i, n_max, true, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::overpartition::{count_b, count_b_tilde, DEFAULT_PAIR_BOUND};
    use std::collections::HashSet;

    #[test]
    fn weight_zero_is_the_descent() {
        for (k, i) in [(2, 1), (2, 2), (4, 1)] {
            assert_eq!(enumerate_paths(k, i, 0, false, 24).unwrap(), [LatticePath::descent(k - i)]);
        }
    }

    #[test]
    fn found_paths_are_valid_and_distinct() {
        for n in 0..=8 {
            let ps = enumerate_paths(3, 2, n, false, 24).unwrap();
            let set: HashSet<_> = ps.iter().cloned().collect();
            assert_eq!(set.len(), ps.len());
            for p in &ps {
                let checked = LatticePath::new(p.start_height(), p.steps().to_vec(), p.marks().to_vec()).unwrap();
                assert_eq!(checked.major_index(), n);
                assert!(checked.satisfies_odd(3, 2));
            }
        }
    }

    #[test]
    fn even_paths_are_a_subset() {
        for n in 0..=10 {
            let odd: HashSet<_> = enumerate_paths(3, 2, n, false, 24).unwrap().into_iter().collect();
            assert!(enumerate_paths(3, 2, n, true, 24).unwrap().iter().all(|p| odd.contains(p)));
        }
    }

    #[test]
    fn tables_match_pairs() {
        for (k, i) in [(2, 2), (2, 1), (3, 1), (3, 3)] {
            assert_eq!(count_e(k, i, 9, 24).unwrap(), count_b(k, i, 9, DEFAULT_PAIR_BOUND).unwrap(), "k={k} i={i}");
            assert_eq!(
                count_e_tilde(k, i, 9, 24).unwrap(),
                count_b_tilde(k, i, 9, DEFAULT_PAIR_BOUND).unwrap(),
                "k={k} i={i}"
            );
        }
        assert_eq!(enumerate_paths(5, 3, 115, false, 24), Err(EnumError::BoundExceeded { n: 115, bound: 24 }));
    }
}
