//! Successive Durfee squares on the conjugated associated partitions of a Frobenius symbol:
//! admissibility, k-conjugation and self-conjugacy.

use crate::frobenius::{joichi_stanton, joichi_stanton_inverse, tally_symbols, FrobeniusSymbol, JoichiStanton};
use crate::overpartition::{CountTable, EnumError};
use crate::partition::Partition;

pub use crate::partition::DurfeeDecomposition;

pub fn durfee_squares(p: &Partition) -> DurfeeDecomposition {
    p.durfee_squares()
}

/// How the inserted sizes `n_j` are read off.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InsertionReading {
    /// All `n_j` are square sizes of ν itself.
    #[default]
    Static,
    /// Parts are inserted for `j = i, i+1, ...`, each size read from the partition built so far.
    Sequential,
}

/// The pieces k-conjugation works with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationContext {
    pub columns: u32,
    pub lam1p: Partition,
    pub lam2p: Partition,
    pub mu1: Vec<u32>,
    pub mu2: Vec<u32>,
    /// Size of the `(k-2)`th square of λ′₂, the 0th being the column count.
    pub pivot: u32,
    /// Parts of λ′₁ no larger than the pivot.
    pub region_g1: Partition,
    /// Rows of λ′₂ below its `(k-2)`th square.
    pub region_g2: Partition,
}

impl ConjugationContext {
    pub fn new(f: &FrobeniusSymbol, k: u32) -> Self {
        assert!(k >= 2, "k-conjugation needs k >= 2");
        let top = joichi_stanton(f.top());
        let bottom = joichi_stanton(f.bottom());
        let columns = f.columns() as u32;
        let lam1p = top.associated.conjugate();
        let lam2p = bottom.associated.conjugate();
        let squares = lam2p.durfee_squares();
        let depth = (k - 2) as usize;
        let pivot = squares.size(depth, columns);
        let rows = if squares.sizes.len() < depth { lam2p.len() } else { squares.rows_through(depth) };
        let region_g2 = Partition::new(lam2p.parts()[rows..].to_vec()).expect("suffix of a partition");
        let region_g1 = Partition::new(lam1p.parts().iter().copied().filter(|&p| p <= pivot).collect())
            .expect("subsequence of a partition");
        ConjugationContext { columns, lam1p, lam2p, mu1: top.marks, mu2: bottom.marks, pivot, region_g1, region_g2 }
    }

    /// Swaps the two regions and rebuilds the symbol.
    pub fn conjugate(&self) -> FrobeniusSymbol {
        let keep1: Vec<u32> = self.lam1p.parts().iter().copied().filter(|&p| p > self.pivot).collect();
        let keep2 = &self.lam2p.parts()[..self.lam2p.len() - self.region_g2.len()];
        let new1 = Partition::from_unsorted([keep1.as_slice(), self.region_g2.parts()].concat());
        let new2 = Partition::from_unsorted([keep2, self.region_g1.parts()].concat());
        let n = self.columns as usize;
        let row = |p: Partition, marks: &[u32]| {
            let associated = p.conjugate_padded(n).expect("parts stay within the column count");
            joichi_stanton_inverse(&JoichiStanton { associated, marks: marks.to_vec() }).expect("marks unchanged")
        };
        FrobeniusSymbol::new(row(new1, &self.mu1), row(new2, &self.mu2)).expect("row lengths unchanged")
    }
}

/// Exchanges the rows of λ′₂ below its `(k-2)`th Durfee square with the parts of λ′₁ no
/// larger than that square. An involution.
pub fn k_conjugate(f: &FrobeniusSymbol, k: u32) -> FrobeniusSymbol {
    ConjugationContext::new(f, k).conjugate()
}

/// Sizes `n_j` for `j` in `i..k`, from the squares of `p` (`n_1` is the column count).
fn required_sizes(p: &Partition, columns: u32, k: u32, i: u32) -> Vec<u32> {
    let squares = p.durfee_squares();
    (i..k).map(|j| squares.size(j as usize - 1, columns)).collect()
}

/// Every way to pull at most `most` parts out of `p`, as (removed, rest).
fn removals(p: &Partition, most: usize) -> Vec<(Vec<u32>, Partition)> {
    let mut values: Vec<(u32, usize)> = Vec::new();
    for &x in p.parts() {
        match values.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => values.push((x, 1)),
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        values: &[(u32, usize)],
        left: usize,
        chosen: &mut Vec<u32>,
        p: &Partition,
        out: &mut Vec<(Vec<u32>, Partition)>,
    ) {
        let Some(((v, c), rest)) = values.split_first() else {
            out.push((chosen.clone(), p.without_parts(chosen).expect("chosen from p")));
            return;
        };
        for take in 0..=(*c).min(left) {
            let mark = chosen.len();
            chosen.extend(std::iter::repeat_n(*v, take));
            rec(rest, left - take, chosen, p, out);
            chosen.truncate(mark);
        }
    }
    rec(&values, most, &mut chosen, p, &mut out);
    out
}

fn nonzero_sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.retain(|&x| x > 0);
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn inserts_to(nu: &Partition, target: &Partition, columns: u32, k: u32, i: u32, reading: InsertionReading) -> bool {
    match reading {
        InsertionReading::Static => {
            let want = nonzero_sorted(required_sizes(nu, columns, k, i));
            &nu.with_parts(&want) == target
        }
        InsertionReading::Sequential => {
            let mut cur = nu.clone();
            for j in i..k {
                let size = cur.durfee_squares().size(j as usize - 1, columns);
                if size > 0 {
                    cur = cur.with_parts(&[size]);
                }
            }
            &cur == target
        }
    }
}

/// λ′₂ of `f` is some ν with at most `k - 2` Durfee squares plus one part `n_j` for each
/// `i <= j <= k - 1`, where `n_j` is the size of ν's `(j-1)`th square (`n_1` = columns).
pub fn is_ki_admissible(f: &FrobeniusSymbol, k: u32, i: u32) -> bool {
    is_ki_admissible_with(f, k, i, InsertionReading::Static)
}

pub fn is_ki_admissible_with(f: &FrobeniusSymbol, k: u32, i: u32, reading: InsertionReading) -> bool {
    let columns = f.columns() as u32;
    let lam2p = joichi_stanton(f.bottom()).associated.conjugate();
    removals(&lam2p, (k - i) as usize).into_iter().any(|(_, nu)| {
        nu.durfee_squares().sizes.len() <= (k - 2) as usize && inserts_to(&nu, &lam2p, columns, k, i, reading)
    })
}

/// `f` with its bottom row rebuilt from a new λ′₂.
fn with_lam2p(f: &FrobeniusSymbol, lam2p: &Partition) -> FrobeniusSymbol {
    let marks = joichi_stanton(f.bottom()).marks;
    let associated = lam2p.conjugate_padded(f.columns()).expect("parts within the column count");
    let bottom = joichi_stanton_inverse(&JoichiStanton { associated, marks }).expect("marks unchanged");
    FrobeniusSymbol::new(f.top().clone(), bottom).expect("row lengths unchanged")
}

pub fn is_self_k_conjugate(f: &FrobeniusSymbol, k: u32) -> bool {
    &k_conjugate(f, k) == f
}

/// `f` arises from a symbol fixed by k-conjugation by adding to its λ′₂ one part `n_j` for
/// each `i <= j <= k - 1`, the sizes read from that symbol's λ′₂.
pub fn is_self_ki_conjugate(f: &FrobeniusSymbol, k: u32, i: u32) -> bool {
    let columns = f.columns() as u32;
    let lam2p = joichi_stanton(f.bottom()).associated.conjugate();
    removals(&lam2p, (k - i) as usize).into_iter().any(|(removed, nu)| {
        nonzero_sorted(required_sizes(&nu, columns, k, i)) == removed && is_self_k_conjugate(&with_lam2p(f, &nu), k)
    })
}

fn check_ki(k: u32, i: u32) -> Result<(), EnumError> {
    if k < 2 || i == 0 || i > k {
        return Err(EnumError::InvalidParams { k, i });
    }
    Ok(())
}

/// (k,i)-admissible symbols tallied by `(s, t, n)`.
pub fn count_d(k: u32, i: u32, n_max: u32, bound: u32) -> Result<CountTable, EnumError> {
    check_ki(k, i)?;
    tally_symbols(n_max, bound, |f| is_ki_admissible(f, k, i))
}

/// As [`count_d`] under the chosen insertion reading.
pub fn count_d_with(
    k: u32,
    i: u32,
    n_max: u32,
    bound: u32,
    reading: InsertionReading,
) -> Result<CountTable, EnumError> {
    check_ki(k, i)?;
    tally_symbols(n_max, bound, |f| is_ki_admissible_with(f, k, i, reading))
}

/// Self-(k,i)-conjugate symbols tallied by `(s, t, n)`.
pub fn count_d_tilde(k: u32, i: u32, n_max: u32, bound: u32) -> Result<CountTable, EnumError> {
    check_ki(k, i)?;
    tally_symbols(n_max, bound, |f| is_self_ki_conjugate(f, k, i))
}
