//! Bailey pairs relative to `a = q`, the lattice transform and the Durfee multisums.

use super::{ab_shifted, inverse_q_factorials, mono, outer_limit, HyperError, Result, SeriesParams};
use crate::series::{
    geometric, pochhammer_inf_inv, pochhammer_inv, pochhammer_step_inv, Monomial, Offsets, TruncatedSeries, Truncation,
};

/// A Bailey pair `(α_n, β_n)` relative to `a_param`, checked on construction.
#[derive(Clone, Debug)]
pub struct BaileyPair {
    pub alpha: Vec<TruncatedSeries>,
    pub beta: Vec<TruncatedSeries>,
    pub a_param: Monomial,
}

impl BaileyPair {
    /// Verifies `β_n = Σ_{r<=n} α_r / ((q)_{n-r} (aq)_{n+r})` for every stored `n`.
    pub fn new(alpha: Vec<TruncatedSeries>, beta: Vec<TruncatedSeries>, a_param: Monomial) -> Result<Self> {
        if alpha.len() != beta.len() || alpha.is_empty() {
            return Err(HyperError::InvalidArgument("alpha and beta need the same nonzero length".into()));
        }
        let t = alpha[0].truncation();
        let q = Monomial::q_pow(1);
        let aq = a_param.clone().shift_q(1);
        for (n, b) in beta.iter().enumerate() {
            let mut sum = TruncatedSeries::zero(t);
            for (r, a) in alpha.iter().enumerate().take(n + 1) {
                let den = pochhammer_inv(&q, (n - r) as u32, t)?.mul(&pochhammer_inv(&aq, (n + r) as u32, t)?)?;
                sum = sum.add(&a.mul(&den)?)?;
            }
            sum.agrees_with(b).map_err(|mismatch| HyperError::BaileyRelation { n, mismatch: Box::new(mismatch) })?;
        }
        Ok(BaileyPair { alpha, beta, a_param })
    }

    /// Largest stored index.
    pub fn n_max(&self) -> usize {
        self.alpha.len() - 1
    }

    /// `α_n = (-1)^n q^{n(3n+1)/2} (1 - q^{2n+1})/(1 - q)`, `β_n = 1/(q)_n`.
    pub fn b3(n_max: usize, q_cutoff: i64) -> Result<Self> {
        let t = Truncation::new(q_cutoff);
        Self::slater(n_max, t, |n| n * (3 * n + 1) / 2, |n| Ok(pochhammer_inv(&Monomial::q_pow(1), n, t)?))
    }

    /// `α_n = (-1)^n q^{n²} (1 - q^{2n+1})/(1 - q)`, `β_n = 1/(q²; q²)_n`.
    pub fn e3(n_max: usize, q_cutoff: i64) -> Result<Self> {
        let t = Truncation::new(q_cutoff);
        Self::slater(n_max, t, |n| n * n, |n| Ok(pochhammer_step_inv(&Monomial::q_pow(2), 2, n, t)?))
    }

    fn slater(
        n_max: usize,
        t: Truncation,
        lead: impl Fn(i64) -> i64,
        beta: impl Fn(u32) -> Result<TruncatedSeries>,
    ) -> Result<Self> {
        let alpha = (0..=n_max as i64)
            .map(|n| {
                let s = if n % 2 == 0 { 1 } else { -1 };
                TruncatedSeries::polynomial((0..=2 * n).map(|j| mono(s, 0, 0, 0, lead(n) + j)), t)
            })
            .collect();
        let beta = (0..=n_max as u32).map(beta).collect::<Result<Vec<_>>>()?;
        Self::new(alpha, beta, Monomial::q_pow(1))
    }
}

/// Weakly decreasing tuples `n_1 >= ... >= n_len >= 0` with total weight below `cutoff`,
/// paired with that weight. `w(j, n)` is the weight of `n_j = n` (1-based `j`); it must be
/// nonnegative and nondecreasing in `n`.
fn decreasing_tuples(len: usize, cutoff: i64, w: &dyn Fn(usize, i64) -> i64) -> Vec<(Vec<i64>, i64)> {
    fn go(
        j: usize,
        len: usize,
        cap: i64,
        acc: i64,
        cutoff: i64,
        w: &dyn Fn(usize, i64) -> i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<(Vec<i64>, i64)>,
    ) {
        if j > len {
            out.push((cur.clone(), acc));
            return;
        }
        let mut n = 0;
        while n <= cap && acc + w(j, n) < cutoff {
            cur.push(n);
            go(j + 1, len, n, acc + w(j, n), cutoff, w, cur, out);
            cur.pop();
            n += 1;
        }
    }
    let mut out = Vec::new();
    go(1, len, i64::MAX, 0, cutoff, w, &mut Vec::new(), &mut out);
    out
}

/// The a-degree tradeoff of `∏_{j<n}(a+q^j)(b+q^j)`: with a-degree at most `cap`
/// its q-degree is at least `T(n - 1 - cap)`.
fn block_floor(n: i64, t: Truncation) -> i64 {
    let r = n - 1 - i64::from(t.var_cap);
    if r > 0 {
        r * (r + 1) / 2
    } else {
        0
    }
}

/// `Σ_{tuples} P_{n_1} q^{weight} / ((q)_{n_1-n_2} ... (q)_{n_{len-1}-n_len}) · last(n_len)`
/// over the tuples of [`decreasing_tuples`], with `n_j` for `j >= linear_from` also
/// contributing linearly.
fn nested_sum(
    len: usize,
    linear_from: usize,
    t: Truncation,
    last: &dyn Fn(usize) -> Result<TruncatedSeries>,
) -> Result<TruncatedSeries> {
    let w = |j: usize, n: i64| {
        let base = if j == 1 { n + block_floor(n, t) } else { n * n };
        base + if j >= linear_from { n } else { 0 }
    };
    let tuples = decreasing_tuples(len, t.q_cutoff, &w);
    let top = tuples.iter().map(|(v, _)| v[0]).max().unwrap_or(0);
    let inv_q = inverse_q_factorials(top as usize, 1, t)?;
    let mut sum = TruncatedSeries::zero(t);
    for (v, _) in &tuples {
        let e: i64 = v[0] + v[1..].iter().map(|n| n * n).sum::<i64>() + v[linear_from - 1..].iter().sum::<i64>();
        let mut term = &TruncatedSeries::monomial(Monomial::q_pow(e), t) * &ab_shifted(0, v[0], t);
        for pair in v.windows(2) {
            term = term.mul(&inv_q[(pair[0] - pair[1]) as usize])?;
        }
        term = term.mul(&last(v[len - 1] as usize)?)?;
        sum = sum.add(&term)?;
    }
    Ok(sum.into_partial(t.q_cutoff))
}

/// Largest `n_len` among the tuples a nested sum would visit.
fn deepest(len: usize, linear_from: usize, t: Truncation) -> usize {
    let w = |j: usize, n: i64| {
        let base = if j == 1 { n + block_floor(n, t) } else { n * n };
        base + if j >= linear_from { n } else { 0 }
    };
    decreasing_tuples(len, t.q_cutoff, &w).iter().map(|(v, _)| v[len - 1] as usize).max().unwrap_or(0)
}

/// Both sides of the Bailey lattice transform with parameters `(k, i)`, `0 <= i <= k`, `k >= 1`.
pub fn bailey_lattice_check(
    pair: &BaileyPair,
    k: u32,
    i: u32,
    q_cutoff: i64,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    if k == 0 || i > k {
        return Err(HyperError::InvalidParams { k, i: i64::from(i), reason: "need k >= 1 and 0 <= i <= k" });
    }
    let t = Truncation::new(q_cutoff);
    let (kk, ii) = (i64::from(k), i64::from(i));
    let len = k as usize;

    let need_beta = deepest(len, i as usize + 1, t);
    // summand n of the right side has q-valuation at least this, for α of valuation >= 0
    let rhs_floor =
        |n: i64| (n * n - n) * (ii - 1) + ii * n + ((n * n + n) * (kk - ii)).min((n * n - n) * (kk - ii) + 2 * n - 1);
    let stop = outer_limit(rhs_floor, 0, t).max(1);
    let need_alpha = (stop - 1) as usize;
    let required = need_beta.max(need_alpha);
    if pair.n_max() < required {
        return Err(HyperError::PairTooShallow { required, have: pair.n_max() });
    }

    let lhs_sum = nested_sum(len, i as usize + 1, t, &|n| Ok(pair.beta[n].clone()))?;
    let lhs_pre = pochhammer_inf_inv(&Monomial::q_pow(1), 1, t)?
        .mul(&crate::series::pochhammer_inf(&mono(1, 1, 1, 0, 1), t)?)?
        .mul(&pochhammer_inf_inv(&mono(-1, 1, 0, 0, 1), 1, t)?)?
        .mul(&pochhammer_inf_inv(&mono(-1, 0, 1, 0, 1), 1, t)?)?;
    let lhs = lhs_pre.mul(&lhs_sum)?;

    let one_minus_q = TruncatedSeries::polynomial([mono(1, 0, 0, 0, 0), mono(-1, 0, 0, 0, 1)], t);
    let mut sum = pair.alpha[0].clone();
    for n in 1..stop {
        // the outer power is folded into each α term so no factor has negative valuation
        let h = (n * n - n) * (ii - 1) + ii * n;
        let outer = (&ab_shifted(0, n, t) * &one_minus_q)
            .mul(&pochhammer_inv(&mono(-1, 1, 0, 0, 1), n as u32, t)?)?
            .mul(&pochhammer_inv(&mono(-1, 0, 1, 0, 1), n as u32, t)?)?;
        let up = pair.alpha[n as usize]
            .mul_monomial(&Monomial::q_pow(h + (n * n + n) * (kk - ii)))
            .mul(&geometric(&Monomial::q_pow(2 * n + 1), t)?)?;
        let down = pair.alpha[n as usize - 1]
            .mul_monomial(&Monomial::q_pow(h + (n * n - n) * (kk - ii) + 2 * n - 1))
            .mul(&geometric(&Monomial::q_pow(2 * n - 1), t)?)?;
        sum = sum.add(&outer.mul(&up.sub(&down)?)?)?;
    }
    let inv_q = pochhammer_inf_inv(&Monomial::q_pow(1), 1, t)?;
    let rhs = sum.into_partial(t.q_cutoff).mul(&inv_q)?.mul(&inv_q)?;
    Ok((lhs, rhs))
}

/// `Σ_{n_1>=...>=n_{k-1}>=0} q^{n_1 + n_2² + ... + n_{k-1}² + n_i + ... + n_{k-1}} P_{n_1}
/// / ((q)_{n_1-n_2} ... (q)_{n_{k-2}-n_{k-1}} (q)_{n_{k-1}})`, the generating function of the
/// (k,i)-admissible symbols.
pub fn multisum_d(p: &SeriesParams) -> Result<TruncatedSeries> {
    p.check_r()?;
    let t = p.truncation();
    let inv = inverse_q_factorials(t.q_cutoff.max(0) as usize, 1, t)?;
    let s = nested_sum((p.k - 1) as usize, p.i as usize, t, &|n| Ok(inv[n.min(inv.len() - 1)].clone()))?;
    Ok(s.assert_bound(Offsets::ZERO))
}

/// As [`multisum_d`] with `(q²; q²)_{n_{k-1}}` as the last denominator: the self-(k,i)-conjugate
/// symbols.
pub fn multisum_d_tilde(p: &SeriesParams) -> Result<TruncatedSeries> {
    p.check_r()?;
    let t = p.truncation();
    let inv = inverse_q_factorials(t.q_cutoff.max(0) as usize, 2, t)?;
    let s = nested_sum((p.k - 1) as usize, p.i as usize, t, &|n| Ok(inv[n.min(inv.len() - 1)].clone()))?;
    Ok(s.assert_bound(Offsets::ZERO))
}
