//! Three specialisations of the pair theorems, each as an A-side count, a B-side count and
//! the infinite product both should expand.

use rayon::prelude::*;

use super::enumerate::{by_weight, check_ki, partitions_distinct_odd};
use super::{EnumError, Overpartition, OverpartitionPair};
use crate::series::{
    pochhammer_inf_inv, pochhammer_inf_step, GaussInt, Monomial, SeriesError, TruncatedSeries, Truncation,
};

/// Per-weight counts `a[n]` and `b[n]` for `0 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollarySides {
    pub a: Vec<GaussInt>,
    pub b: Vec<GaussInt>,
}

impl CorollarySides {
    /// First weight where the sides disagree.
    pub fn first_mismatch(&self) -> Option<usize> {
        self.a.iter().zip(&self.b).position(|(x, y)| x != y)
    }
}

/// How an even part `2j` of μ is detached in the third family: `2j+1` is absent from both
/// partitions and `2j+2` is absent from λ (`Lambda`) or from μ (`Mu`, the literal wording).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnattachedReading {
    Lambda,
    Mu,
}

fn count(n: u32) -> GaussInt {
    GaussInt::from(i64::from(n))
}

fn sides(n_max: u32, weigh: impl Fn(u32) -> (GaussInt, GaussInt) + Sync + Send) -> CorollarySides {
    let (a, b) = (0..=n_max).into_par_iter().map(weigh).unzip();
    CorollarySides { a, b }
}

fn cor1_valuation(o: &Overpartition, j: u32) -> u32 {
    let even = 2 * j;
    let odd = even - 1;
    let detached =
        o.freq(odd, false) > 0 && o.freq(even, false) == 0 && o.freq(even, true) == 0 && o.freq(odd, true) == 0;
    o.freq(even, false) + o.freq(odd, true) + o.freq(even, true) + u32::from(detached)
}

fn cor1_b(o: &Overpartition, k: u32) -> bool {
    if cor1_valuation(o, 1) + 1 > k {
        return false;
    }
    (1..=o.largest() / 2 + 1).all(|j| o.freq(2 * j, false) + cor1_valuation(o, j + 1) < k)
}

/// Overpartitions of `n` avoiding multiples of `2k-1`, against overpartitions obeying the
/// doubled-index frequency conditions at `i = k`.
pub fn corollary1_check(k: u32, n_max: u32, bound: u32) -> Result<CorollarySides, EnumError> {
    check_ki(k, k)?;
    if n_max > bound {
        return Err(EnumError::BoundExceeded { n: n_max, bound });
    }
    let table = by_weight(n_max);
    let m = 2 * k - 1;
    Ok(sides(n_max, |n| {
        let list = &table[n as usize];
        let a = list.iter().filter(|o| o.parts().iter().all(|p| p.size % m != 0)).count() as u32;
        let b = list.iter().filter(|o| cor1_b(o, k)).count() as u32;
        (count(a), count(b))
    }))
}

/// `(-q)_∞ (q^{2k-1}; q^{2k-1})_∞ / ((q)_∞ (-q^{2k-1}; q^{2k-1})_∞)`.
pub fn corollary1_product(k: u32, q_cutoff: i64) -> Result<TruncatedSeries, SeriesError> {
    let t = Truncation::new(q_cutoff);
    let m = i64::from(2 * k - 1);
    pochhammer_inf_step(&Monomial::new(-1, 0, 0, 0, 1), 1, t)?
        .mul(&pochhammer_inf_step(&Monomial::q_pow(m), m, t)?)?
        .mul(&pochhammer_inf_inv(&Monomial::q_pow(1), 1, t)?)?
        .mul(&pochhammer_inf_inv(&Monomial::new(-1, 0, 0, 0, m), m, t)?)
}

/// Pairs with μ in even parts and λ avoiding multiples of `k-1`, against pairs obeying the
/// parity conditions at `i = k-1` with an even number of overlined parts, weighted by
/// `i^{overlined in λ} (-i)^{overlined in μ}`.
pub fn corollary2_check(k: u32, n_max: u32, bound: u32) -> Result<CorollarySides, EnumError> {
    check_ki(k, k - 1)?;
    if n_max > bound {
        return Err(EnumError::BoundExceeded { n: n_max, bound });
    }
    let table = by_weight(n_max);
    let m = k - 1;
    Ok(sides(n_max, |n| {
        let mut a = 0u32;
        let mut b = GaussInt::from(0);
        for w in 0..=n as usize {
            for l in &table[w] {
                for mu in &table[n as usize - w] {
                    if l.parts().iter().all(|p| p.size % m != 0) && mu.parts().iter().all(|p| p.size % 2 == 0) {
                        a += 1;
                    }
                    let (ol, om) = (l.overlined_count(), mu.overlined_count());
                    if (ol + om) % 2 == 1 {
                        continue;
                    }
                    let p = OverpartitionPair { lambda: l.clone(), mu: mu.clone() };
                    if p.satisfies_thm2(k, k - 1) {
                        b += &(GaussInt::i().pow(ol) * GaussInt::new(0, -1).pow(om));
                    }
                }
            }
        }
        (count(a), b)
    }))
}

/// `(-q)_∞ (-q²; q²)_∞ (q^{k-1}; q^{k-1})_∞ / ((q)_∞ (q²; q²)_∞ (-q^{k-1}; q^{k-1})_∞)`.
pub fn corollary2_product(k: u32, q_cutoff: i64) -> Result<TruncatedSeries, SeriesError> {
    let t = Truncation::new(q_cutoff);
    let m = i64::from(k - 1);
    pochhammer_inf_step(&Monomial::new(-1, 0, 0, 0, 1), 1, t)?
        .mul(&pochhammer_inf_step(&Monomial::new(-1, 0, 0, 0, 2), 2, t)?)?
        .mul(&pochhammer_inf_step(&Monomial::q_pow(m), m, t)?)?
        .mul(&pochhammer_inf_inv(&Monomial::q_pow(1), 1, t)?)?
        .mul(&pochhammer_inf_inv(&Monomial::q_pow(2), 2, t)?)?
        .mul(&pochhammer_inf_inv(&Monomial::new(-1, 0, 0, 0, m), m, t)?)
}

fn plain(o: &Overpartition, j: u32) -> u32 {
    o.freq(j, false)
}

fn cor4_detached(l: &Overpartition, mu: &Overpartition, even: u32, reading: UnattachedReading) -> bool {
    let next = match reading {
        UnattachedReading::Lambda => plain(l, even + 2),
        UnattachedReading::Mu => plain(mu, even + 2),
    };
    plain(mu, even) > 0 && plain(l, even + 1) == 0 && plain(mu, even + 1) == 0 && next == 0
}

fn cor4_valuation(l: &Overpartition, mu: &Overpartition, j: u32, reading: UnattachedReading) -> u32 {
    let even = 2 * j;
    let detached = j >= 2 && cor4_detached(l, mu, even - 2, reading);
    plain(l, even) + plain(l, even - 1) + plain(mu, even - 1) + u32::from(detached)
}

fn cor4_b(l: &Overpartition, mu: &Overpartition, k: u32, i: u32, reading: UnattachedReading) -> bool {
    if plain(l, 1) + plain(l, 2) + plain(mu, 1) + 1 > i {
        return false;
    }
    let top = l.largest().max(mu.largest());
    (1..=top / 2 + 1).all(|j| plain(l, 2 * j) + cor4_valuation(l, mu, j + 1, reading) < k)
}

/// Partition pairs with distinct odd parts: μ's even parts avoid `0, ±(2i-2) mod 4k-2` on
/// the A side, the doubled-index frequency conditions hold on the B side. Needs `i >= 2`.
pub fn corollary4_check(
    k: u32,
    i: u32,
    n_max: u32,
    bound: u32,
    reading: UnattachedReading,
) -> Result<CorollarySides, EnumError> {
    check_ki(k, i)?;
    if i < 2 {
        return Err(EnumError::InvalidParams { k, i });
    }
    if n_max > bound {
        return Err(EnumError::BoundExceeded { n: n_max, bound });
    }
    let table: Vec<Vec<Overpartition>> = (0..=n_max).into_par_iter().map(partitions_distinct_odd).collect();
    let modulus = 4 * k - 2;
    let banned = [0, 2 * i - 2, modulus - (2 * i - 2)];
    Ok(sides(n_max, |n| {
        let (mut a, mut b) = (0u32, 0u32);
        for w in 0..=n as usize {
            for l in &table[w] {
                for mu in &table[n as usize - w] {
                    if mu.parts().iter().all(|p| p.size % 2 == 1 || !banned.contains(&(p.size % modulus))) {
                        a += 1;
                    }
                    if cor4_b(l, mu, k, i, reading) {
                        b += 1;
                    }
                }
            }
        }
        (count(a), count(b))
    }))
}

/// `(-q; q²)²_∞ (q^{2i-2}, q^{4k-2i}, q^{4k-2}; q^{4k-2})_∞ / (q²; q²)²_∞`.
pub fn corollary4_product(k: u32, i: u32, q_cutoff: i64) -> Result<TruncatedSeries, SeriesError> {
    let t = Truncation::new(q_cutoff);
    let m = i64::from(4 * k - 2);
    let odd = pochhammer_inf_step(&Monomial::new(-1, 0, 0, 0, 1), 2, t)?;
    let even_inv = pochhammer_inf_inv(&Monomial::q_pow(2), 2, t)?;
    odd.mul(&odd)?
        .mul(&even_inv)?
        .mul(&even_inv)?
        .mul(&pochhammer_inf_step(&Monomial::q_pow(i64::from(2 * i - 2)), m, t)?)?
        .mul(&pochhammer_inf_step(&Monomial::q_pow(m - i64::from(2 * i - 2)), m, t)?)?
        .mul(&pochhammer_inf_step(&Monomial::q_pow(m), m, t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::overpartition::DEFAULT_PAIR_BOUND;

    fn column(s: &TruncatedSeries, n_max: u32) -> Vec<GaussInt> {
        (0..=n_max).map(|n| s.coeff(0, 0, 0, i64::from(n)).unwrap()).collect()
    }

    fn ints(v: &[i64]) -> Vec<GaussInt> {
        v.iter().map(|&c| GaussInt::from(c)).collect()
    }

    #[test]
    fn first_family_k2() {
        let s = corollary1_check(2, 6, DEFAULT_PAIR_BOUND).unwrap();
        assert_eq!(s.a, ints(&[1, 2, 4, 6, 10, 16, 24]));
        assert_eq!(s.first_mismatch(), None);
        assert_eq!(column(&corollary1_product(2, 7).unwrap(), 6), s.a);
    }

    #[test]
    fn second_family_k3() {
        let s = corollary2_check(3, 8, DEFAULT_PAIR_BOUND).unwrap();
        assert_eq!(s.first_mismatch(), None, "{s:?}");
        assert!(s.b.iter().all(GaussInt::is_real));
        assert_eq!(column(&corollary2_product(3, 9).unwrap(), 8), s.a);
    }

    #[test]
    fn third_family_product_matches_a_side() {
        let s = corollary4_check(3, 2, 8, DEFAULT_PAIR_BOUND, UnattachedReading::Lambda).unwrap();
        assert_eq!(column(&corollary4_product(3, 2, 9).unwrap(), 8), s.a);
    }

    #[test]
    fn literal_detachment_rule_breaks_third_family() {
        let lit = corollary4_check(2, 2, 7, DEFAULT_PAIR_BOUND, UnattachedReading::Mu).unwrap();
        assert_eq!(lit.first_mismatch(), Some(6));
        let fixed = corollary4_check(2, 2, 7, DEFAULT_PAIR_BOUND, UnattachedReading::Lambda).unwrap();
        assert_eq!(fixed.first_mismatch(), None);
    }

    #[test]
    fn domain_errors() {
        assert!(corollary4_check(3, 1, 4, 10, UnattachedReading::Lambda).is_err());
        assert!(corollary2_check(1, 4, 10).is_err());
        assert_eq!(corollary1_check(2, 11, 10), Err(EnumError::BoundExceeded { n: 11, bound: 10 }));
    }
}
