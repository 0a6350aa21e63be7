//! Generating functions for paths with a fixed number of peaks: the step-removal recurrences
//! and the closed finite sums, plus the sum over all peak counts.

use crate::hypergeometric::{ab_shifted, mono, outer_limit, sign, HyperError, Result};
use crate::series::{
    geometric, pochhammer_inf_inv, pochhammer_inf_step, pochhammer_inv, Monomial, TruncatedSeries, Truncation,
};

fn check(k: u32, i: u32, lo: u32, hi: u32) -> Result<()> {
    if k < 2 || i < lo || i > hi {
        return Err(HyperError::InvalidParams { k, i: i64::from(i), reason: "index out of range for this family" });
    }
    Ok(())
}

/// Both families at every `i` for peak counts `0..=n_max`, built from the recurrences.
pub struct PathGf {
    /// `e[N][i]` for `1 <= i <= k` (index 0 unused).
    e: Vec<Vec<TruncatedSeries>>,
    /// `g[N][i]` for `0 <= i < k`.
    g: Vec<Vec<TruncatedSeries>>,
    cutoff: i64,
}

impl PathGf {
    /// Every level is computed at a raised cutoff: the `q^{1-N}` factor in the Γ step lowers
    /// the window by `N - 1` per level.
    pub fn new(k: u32, n_max: u32, even: bool, t: Truncation) -> Result<Self> {
        if k < 2 {
            return Err(HyperError::InvalidParams { k, i: 0, reason: "k must be at least 2" });
        }
        let lift = i64::from(n_max) * (i64::from(n_max) - 1).max(0) / 2;
        let inner = Truncation { q_cutoff: t.q_cutoff + lift, ..t };
        let ku = k as usize;
        let zero = TruncatedSeries::zero(inner);
        let one = TruncatedSeries::one(inner);
        let mut e = vec![vec![one; ku + 1]];
        let mut g = vec![vec![zero.clone(); ku]];
        for big_n in 1..=i64::from(n_max) {
            let qn = Monomial::q_pow(big_n);
            let prev = &e[big_n as usize - 1];
            let f = TruncatedSeries::polynomial(
                [mono(1, 1, 0, 0, 0), mono(1, 0, 1, 0, 0), mono(1, 0, 0, 0, big_n - 1), mono(1, 1, 1, 0, 1 - big_n)],
                inner,
            );
            let mut gl = vec![zero.clone(); ku];
            for i in 1..ku {
                gl[i] = gl[i - 1].mul_monomial(&qn).add(&f.mul(&prev[i + 1])?)?;
            }
            let mut el = vec![zero.clone(); ku + 1];
            el[ku] = if even {
                let lower = if ku >= 2 { gl[ku - 2].mul_monomial(&Monomial::q_pow(2 * big_n)) } else { zero.clone() };
                lower.add(&gl[ku - 1].mul_monomial(&qn))?.mul(&geometric(&Monomial::q_pow(2 * big_n), inner)?)?
            } else {
                gl[ku - 1].mul_monomial(&qn).mul(&geometric(&qn, inner)?)?
            };
            for i in (1..ku).rev() {
                el[i] = gl[i - 1].mul_monomial(&qn).add(&el[i + 1].mul_monomial(&qn))?;
            }
            e.push(el);
            g.push(gl);
        }
        Ok(PathGf { e, g, cutoff: t.q_cutoff })
    }

    pub fn e(&self, i: u32, big_n: u32) -> TruncatedSeries {
        self.e[big_n as usize][i as usize].truncate(self.cutoff)
    }

    pub fn gamma(&self, i: u32, big_n: u32) -> TruncatedSeries {
        self.g[big_n as usize][i as usize].truncate(self.cutoff)
    }
}

/// The path generating function with `big_n` peaks, from the recurrences.
pub fn gf_recurrence(k: u32, i: u32, big_n: u32, even: bool, t: Truncation) -> Result<TruncatedSeries> {
    check(k, i, 1, k)?;
    Ok(PathGf::new(k, big_n, even, t)?.e(i, big_n))
}

/// The companion Γ series with `big_n` peaks, from the recurrences.
pub fn gamma_recurrence(k: u32, i: u32, big_n: u32, even: bool, t: Truncation) -> Result<TruncatedSeries> {
    check(k, i, 0, k - 1)?;
    Ok(PathGf::new(k, big_n, even, t)?.gamma(i, big_n))
}

/// Exponent of the `n`th term; `shift` is `k - i - 1` for 𝓔 and `k - i - 2` for Γ.
fn exponent(k: i64, shift: i64, n: i64, even: bool) -> i64 {
    if even {
        k * n * n + shift * n - n * (n - 1)
    } else {
        n * ((2 * k - 1) * n + 3) / 2 + shift * n
    }
}

fn closed(k: u32, i: u32, big_n: u32, even: bool, gamma: bool, t: Truncation) -> Result<TruncatedSeries> {
    let (kk, nn) = (i64::from(k), i64::from(big_n));
    let shift = kk - i64::from(i) - 1 - i64::from(gamma);
    let q = Monomial::q_pow(1);
    let top = if gamma { nn - 1 } else { nn };
    let mut sum = TruncatedSeries::zero(t);
    for n in -nn..=top {
        let head = TruncatedSeries::monomial(mono(sign(n), 0, 0, 0, exponent(kk, shift, n, even)), t);
        let left = (nn - n - i64::from(gamma)) as u32;
        let den = pochhammer_inv(&q, left, t)?.mul(&pochhammer_inv(&q, (nn + n) as u32, t)?)?;
        sum = sum.add(&head.mul(&den)?)?;
    }
    let lead = if gamma { 0 } else { nn };
    let pre = ab_shifted(0, nn, t).mul_monomial(&Monomial::q_pow(lead));
    pre.mul(&sum).map_err(Into::into)
}

/// The closed finite sum for paths with `big_n` peaks.
pub fn gf_closed(k: u32, i: u32, big_n: u32, even: bool, t: Truncation) -> Result<TruncatedSeries> {
    check(k, i, 1, k)?;
    closed(k, i, big_n, even, false, t)
}

/// The closed finite sum for Γ with `big_n` peaks.
pub fn gamma_closed(k: u32, i: u32, big_n: u32, even: bool, t: Truncation) -> Result<TruncatedSeries> {
    check(k, i, 0, k - 1)?;
    closed(k, i, big_n, even, true, t)
}

/// `Σ_N` of the closed forms. A path with `N` peaks has major index at least `N`, so
/// `N <= cutoff` is enough.
pub fn gf_sum_closed(k: u32, i: u32, even: bool, t: Truncation) -> Result<TruncatedSeries> {
    check(k, i, 1, k)?;
    let mut sum = TruncatedSeries::zero(t);
    for big_n in 0..t.q_cutoff.max(0) as u32 {
        sum = sum.add(&closed(k, i, big_n, even, false, t)?)?;
    }
    Ok(sum.into_partial(t.q_cutoff))
}

/// The same sum with the order of summation exchanged and the inner sum over `N` replaced by
/// the q-Gauss product: `(-aq, -bq)_∞ / (q, abq)_∞ · Σ_n (-1)^n q^{e(n) + |n|} P_{|n|} / (-aq, -bq)_{|n|}`.
pub fn gf_sum_q_gauss(k: u32, i: u32, even: bool, t: Truncation) -> Result<TruncatedSeries> {
    check(k, i, 1, k)?;
    let kk = i64::from(k);
    let shift = kk - i64::from(i) - 1;
    let ex = |n: i64| exponent(kk, shift, n, even) + n.abs();
    let stop_pos = outer_limit(ex, 0, t);
    let stop_neg = outer_limit(|m| ex(-m), 0, t);
    let mut sum = TruncatedSeries::zero(t);
    for n in (1 - stop_neg)..stop_pos {
        let m = n.abs();
        let head = TruncatedSeries::monomial(mono(sign(n), 0, 0, 0, ex(n)), t);
        let den = pochhammer_inv(&mono(-1, 1, 0, 0, 1), m as u32, t)?.mul(&pochhammer_inv(
            &mono(-1, 0, 1, 0, 1),
            m as u32,
            t,
        )?)?;
        sum = sum.add(&head.mul(&ab_shifted(0, m, t))?.mul(&den)?)?;
    }
    let num =
        pochhammer_inf_step(&mono(-1, 1, 0, 0, 1), 1, t)?.mul(&pochhammer_inf_step(&mono(-1, 0, 1, 0, 1), 1, t)?)?;
    let den = pochhammer_inf_inv(&Monomial::q_pow(1), 1, t)?.mul(&pochhammer_inf_inv(&mono(1, 1, 1, 0, 1), 1, t)?)?;
    Ok(sum.into_partial(t.q_cutoff).mul(&num)?.mul(&den)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeometric::{series_r_bilateral, series_r_tilde_bilateral, SeriesParams};
    use crate::overpartition::CountTable;
    use crate::paths::enumerate_paths;
    use crate::series::GaussInt;

    #[test]
    fn base_cases() {
        let t = Truncation::new(8);
        for even in [false, true] {
            assert_eq!(gf_recurrence(3, 2, 0, even, t).unwrap().agrees_with(&TruncatedSeries::one(t)), Ok(()));
            assert_eq!(gf_closed(3, 2, 0, even, t).unwrap().agrees_with(&TruncatedSeries::one(t)), Ok(()));
            assert!(gamma_closed(3, 0, 3, even, t).unwrap().is_zero());
            assert!(gamma_recurrence(3, 0, 2, even, t).unwrap().is_zero());
        }
    }

    #[test]
    fn recurrence_matches_closed_form() {
        let t = Truncation::new(10);
        for k in 2..=3 {
            for even in [false, true] {
                let rec = PathGf::new(k, 3, even, t).unwrap();
                for big_n in 0..=3 {
                    for i in 1..=k {
                        let c = gf_closed(k, i, big_n, even, t).unwrap();
                        assert_eq!(rec.e(i, big_n).agrees_with(&c), Ok(()), "k={k} i={i} N={big_n} even={even}");
                    }
                    for i in 0..k {
                        let c = gamma_closed(k, i, big_n, even, t).unwrap();
                        assert_eq!(rec.gamma(i, big_n).agrees_with(&c), Ok(()), "Γ k={k} i={i} N={big_n}");
                    }
                }
            }
        }
    }

    #[test]
    fn one_peak_matches_enumeration() {
        let t = Truncation::new(8);
        let gf = gf_recurrence(2, 2, 1, false, t).unwrap();
        let mut direct = CountTable::new(7);
        for n in 0..=7 {
            for p in enumerate_paths(2, 2, n, false, 24).unwrap().iter().filter(|p| p.peak_count() == 1) {
                direct.add(p.s(), p.t(), n, &GaussInt::from(1));
            }
        }
        assert_eq!(CountTable::from_series(&gf, 7).unwrap(), direct);
    }

    #[test]
    fn sum_over_peaks_gives_bilateral_series() {
        let t = Truncation::new(9);
        for (k, i) in [(2, 1), (3, 2)] {
            let p = SeriesParams::new(k, i64::from(i), 9);
            let odd = gf_sum_closed(k, i, false, t).unwrap();
            assert_eq!(odd.agrees_with(&gf_sum_q_gauss(k, i, false, t).unwrap()), Ok(()));
            assert_eq!(odd.agrees_with(&series_r_bilateral(&p).unwrap()), Ok(()));
            let even = gf_sum_closed(k, i, true, t).unwrap();
            assert_eq!(even.agrees_with(&gf_sum_q_gauss(k, i, true, t).unwrap()), Ok(()));
            assert_eq!(even.agrees_with(&series_r_tilde_bilateral(&p).unwrap()), Ok(()));
        }
    }
}
