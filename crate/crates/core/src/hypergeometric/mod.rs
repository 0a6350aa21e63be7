//! The named four-variable series and the auxiliary identities built on them.
//!
//! All sums are written so that every factor is an honest power series: the
//! infinite prefactors are merged with the finite Pochhammer denominators, and the
//! bracketed difference of the R families is taken over its common denominator.

mod bailey;
mod classical;
mod identities;

pub use bailey::{bailey_lattice_check, multisum_d, multisum_d_tilde, BaileyPair};
pub use classical::{jacobi_triple_product, q_gauss_check};
pub use identities::{htilde_identities, qdiff_r_identities, qdiff_rtilde_identities, IdentityCheck};

use thiserror::Error;

use crate::series::{
    pochhammer_inf_inv, pochhammer_inf_step, pochhammer_step, Mismatch, Monomial, Offsets, SeriesError,
    TruncatedSeries, Truncation,
};

pub type Result<T> = std::result::Result<T, HyperError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HyperError {
    #[error("invalid parameters k={k}, i={i}: {reason}")]
    InvalidParams { k: u32, i: i64, reason: &'static str },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("Bailey relation fails at n={n}: {mismatch}")]
    BaileyRelation { n: usize, mismatch: Box<Mismatch> },
    #[error("Bailey pair stores n <= {have}, the requested cutoff needs n_max >= {required}")]
    PairTooShallow { required: usize, have: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// `(k, i)` plus the q-cutoff. The var_cap defaults to the cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesParams {
    pub k: u32,
    pub i: i64,
    pub q_cutoff: i64,
    pub var_cap: Option<u32>,
}

impl SeriesParams {
    pub fn new(k: u32, i: i64, q_cutoff: i64) -> Self {
        SeriesParams { k, i, q_cutoff, var_cap: None }
    }

    pub fn with_cap(mut self, cap: u32) -> Self {
        self.var_cap = Some(cap);
        self
    }

    pub fn truncation(&self) -> Truncation {
        match self.var_cap {
            Some(c) => Truncation::with_cap(self.q_cutoff, c),
            None => Truncation::new(self.q_cutoff),
        }
    }

    /// The range used by the R families: `k >= 2`, `1 <= i <= k`.
    pub fn check_r(&self) -> Result<()> {
        if self.q_cutoff <= 0 {
            return Err(SeriesError::BadCutoff(self.q_cutoff).into());
        }
        if self.k < 2 {
            return Err(self.invalid("k must be at least 2"));
        }
        if self.i < 1 || self.i > i64::from(self.k) {
            return Err(self.invalid("i must lie in 1..=k"));
        }
        Ok(())
    }

    fn check_h(&self) -> Result<()> {
        if self.q_cutoff <= 0 {
            return Err(SeriesError::BadCutoff(self.q_cutoff).into());
        }
        if self.k < 1 {
            return Err(self.invalid("k must be at least 1"));
        }
        Ok(())
    }

    fn invalid(&self, reason: &'static str) -> HyperError {
        HyperError::InvalidParams { k: self.k, i: self.i, reason }
    }
}

pub(crate) fn mono(c: i64, a: u32, b: u32, x: u32, q: i64) -> Monomial {
    Monomial::new(c, a, b, x, q)
}

pub(crate) fn sign(n: i64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `∏_{lo <= j < hi} (a + q^j)(b + q^j)`, an exact polynomial (Laurent in q when lo < 0).
/// With `lo = 0` this is `(-1/a, -1/b)_n (ab)^n`.
pub(crate) fn ab_shifted(lo: i64, hi: i64, t: Truncation) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(t);
    for j in lo..hi {
        let fa = TruncatedSeries::polynomial([mono(1, 1, 0, 0, 0), mono(1, 0, 0, 0, j)], t);
        let fb = TruncatedSeries::polynomial([mono(1, 0, 1, 0, 0), mono(1, 0, 0, 0, j)], t);
        acc = &(&acc * &fa) * &fb;
    }
    acc
}

/// `1/(q^step; q^step)_n` for `n = 0..=max`.
pub(crate) fn inverse_q_factorials(max: usize, step: i64, t: Truncation) -> Result<Vec<TruncatedSeries>> {
    let mut out = vec![TruncatedSeries::one(t)];
    for n in 1..=max {
        let g = crate::series::geometric(&Monomial::q_pow(step * n as i64), t)?;
        out.push(out[n - 1].mul(&g)?);
    }
    Ok(out)
}

/// First `n >= 0` from which every summand of an outer sum lies beyond the window.
///
/// `q_floor(n)` bounds the q-exponent of the explicit power in summand `n`, every other
/// factor having q-valuation >= 0 apart from the `∏(a + q^j)(b + q^j)` block of length `n`.
/// That block can keep q-degree 0 only by spending a-degree, so a monomial with a-degree
/// within the cap has q-degree at least `T(n - 1 - cap)`. `x_rate` is the x-degree each
/// increment of `n` adds.
pub(crate) fn outer_limit(q_floor: impl Fn(i64) -> i64, x_rate: i64, t: Truncation) -> i64 {
    let cap = i64::from(t.var_cap);
    let tri = |r: i64| if r > 0 { r * (r + 1) / 2 } else { 0 };
    let f = |n: i64| q_floor(n) + tri(n - 1 - cap);
    let mut n = 0;
    loop {
        if x_rate > 0 && x_rate * n > cap {
            return n;
        }
        // f is convex, so once it is at least the cutoff and nondecreasing it stays there
        if f(n) >= t.q_cutoff && f(n + 1) >= f(n) {
            return n;
        }
        n += 1;
    }
}

/// `(1 + axq^{n+1})(1 + bxq^{n+1}) - x^i q^{(2n+1)i - 2n}(a + q^n)(b + q^n)`: the bracket of
/// the R families times its denominator.
fn bracket_numerator(n: i64, i: i64, t: Truncation) -> TruncatedSeries {
    let left = TruncatedSeries::polynomial(
        [mono(1, 0, 0, 0, 0), mono(1, 1, 0, 1, n + 1), mono(1, 0, 1, 1, n + 1), mono(1, 1, 1, 2, 2 * n + 2)],
        t,
    );
    let e = (2 * n + 1) * i - 2 * n;
    let xi = i as u32;
    let right = TruncatedSeries::polynomial(
        [mono(1, 1, 1, xi, e), mono(1, 1, 0, xi, e + n), mono(1, 0, 1, xi, e + n), mono(1, 0, 0, xi, e + 2 * n)],
        t,
    );
    &left - &right
}

/// `(-a x q^{s}, -b x q^{s}; q)_∞`.
fn ab_x_tail(s: i64, t: Truncation) -> Result<TruncatedSeries> {
    let pa = pochhammer_inf_step(&mono(-1, 1, 0, 1, s), 1, t)?;
    let pb = pochhammer_inf_step(&mono(-1, 0, 1, 1, s), 1, t)?;
    Ok(pa.mul(&pb)?)
}

/// `R_{k,i}(a, b; x; q)`.
///
/// Rewritten as `1/(abxq)_∞ · Σ_n (-1)^n P_n x^{kn} q^{e(n)} N_n (-axq^{n+2}, -bxq^{n+2})_∞ / ((q)_n (xq^{n+1})_∞)`
/// with `P_n = ∏_{j<n}(a+q^j)(b+q^j)`, `e(n) = kn² + (k-i+1)n - C(n,2)` and `N_n` the
/// bracket numerator.
pub fn series_r(p: &SeriesParams) -> Result<TruncatedSeries> {
    p.check_r()?;
    let t = p.truncation();
    let (k, i) = (i64::from(p.k), p.i);
    let e = |n: i64| k * n * n + (k - i + 1) * n - n * (n - 1) / 2;
    let stop = outer_limit(e, k, t);
    let inv_q = inverse_q_factorials(stop.max(0) as usize, 1, t)?;
    let mut sum = TruncatedSeries::zero(t);
    for n in 0..stop {
        let head = TruncatedSeries::monomial(mono(sign(n), 0, 0, (k * n) as u32, e(n)), t);
        let poly = &(&head * &ab_shifted(0, n, t)) * &bracket_numerator(n, i, t);
        let term = poly
            .mul(&ab_x_tail(n + 2, t)?)?
            .mul(&pochhammer_inf_inv(&mono(1, 0, 0, 1, n + 1), 1, t)?)?
            .mul(&inv_q[n as usize])?;
        sum = sum.add(&term)?;
    }
    let sum = sum.mul(&pochhammer_inf_inv(&mono(1, 1, 1, 1, 1), 1, t)?)?;
    // each part contributes at least 1 to n and at most 1 to each of s, t, m
    Ok(sum.into_partial(t.q_cutoff).assert_bound(Offsets::ZERO))
}

/// `R̃_{k,i}(a, b; x; q)`, using `(x²q²; q²)_n / (xq)_∞ = (-xq)_n / (xq^{n+1})_∞`.
pub fn series_r_tilde(p: &SeriesParams) -> Result<TruncatedSeries> {
    p.check_r()?;
    let t = p.truncation();
    let (k, i) = (i64::from(p.k), p.i);
    let e = |n: i64| k * n * n + (k - i) * n - n * (n - 1);
    let stop = outer_limit(e, k - 1, t);
    let inv_q2 = inverse_q_factorials(stop.max(0) as usize, 2, t)?;
    let mut sum = TruncatedSeries::zero(t);
    for n in 0..stop {
        let head = TruncatedSeries::monomial(mono(sign(n), 0, 0, ((k - 1) * n) as u32, e(n)), t);
        let poly = &(&(&head * &ab_shifted(0, n, t)) * &bracket_numerator(n, i, t))
            * &pochhammer_step(&mono(-1, 0, 0, 1, 1), 1, n as u32, t);
        let term = poly
            .mul(&ab_x_tail(n + 2, t)?)?
            .mul(&pochhammer_inf_inv(&mono(1, 0, 0, 1, n + 1), 1, t)?)?
            .mul(&inv_q2[n as usize])?;
        sum = sum.add(&term)?;
    }
    let sum = sum.mul(&pochhammer_inf_inv(&mono(1, 1, 1, 1, 1), 1, t)?)?;
    Ok(sum.into_partial(t.q_cutoff).assert_bound(Offsets::ZERO))
}

/// Power of x by which [`series_h_tilde`] is shifted: `max(0, -i)`.
pub fn h_tilde_shift(i: i64) -> u32 {
    (-i).max(0) as u32
}

/// `x^{max(0,-i)} · H̃_{2,k,i}(a, b; x; q)`.
///
/// For negative `i` the series has negative x-powers; the shift keeps every stored
/// x-degree nonnegative. For `i >= 0` there is no shift.
pub fn series_h_tilde(p: &SeriesParams) -> Result<TruncatedSeries> {
    p.check_h()?;
    let t = p.truncation();
    let (k, i) = (i64::from(p.k), p.i);
    let s = i64::from(h_tilde_shift(i));
    // q-exponent of the two halves of (1 - x^i q^{2ni}) after the outer power
    let e = |n: i64| k * n * n + n - i * n - n * (n - 1);
    let floor = |n: i64| e(n).min(e(n) + 2 * n * i);
    let stop = outer_limit(floor, k - 1, t);
    let inv_q2 = inverse_q_factorials(stop.max(0) as usize, 2, t)?;
    let mut sum = TruncatedSeries::zero(t);
    for n in 0..stop {
        // x^s (x²; q²)_n (1 - x^i q^{2ni}) / (1 - x)
        let body = if n == 0 {
            let c = if i > 0 { 1 } else { -1 };
            TruncatedSeries::polynomial((0..i.abs()).map(|j| mono(c, 0, 0, j as u32, 0)), t)
        } else {
            let diff =
                TruncatedSeries::polynomial([mono(1, 0, 0, s as u32, 0), mono(-1, 0, 0, (s + i) as u32, 2 * n * i)], t);
            let one_plus_x = TruncatedSeries::polynomial([mono(1, 0, 0, 0, 0), mono(1, 0, 0, 1, 0)], t);
            let rest = pochhammer_step(&mono(1, 0, 0, 2, 2), 2, (n - 1) as u32, t);
            &(&diff * &one_plus_x) * &rest
        };
        let head = TruncatedSeries::monomial(mono(sign(n), 0, 0, ((k - 1) * n) as u32, e(n)), t);
        let poly = &(&head * &ab_shifted(0, n, t)) * &body;
        let term = poly.mul(&ab_x_tail(n + 1, t)?)?.mul(&inv_q2[n as usize])?;
        sum = sum.add(&term)?;
    }
    let sum = sum.mul(&pochhammer_inf_inv(&mono(1, 0, 0, 1, 1), 1, t)?)?;
    Ok(sum.into_partial(t.q_cutoff))
}

/// `J̃_{2,k,i} = (abxq)_∞ R̃_{k,i}`, for `1 <= i <= k`.
pub fn series_j_tilde(p: &SeriesParams) -> Result<TruncatedSeries> {
    let r = series_r_tilde(p)?;
    let t = p.truncation();
    let pre = pochhammer_inf_step(&mono(1, 1, 1, 1, 1), 1, t)?;
    Ok(pre.mul(&r)?)
}

/// `J̃_{2,k,i}` through `H̃_i(xq) + (axq + bxq) H̃_{i-1}(xq) + abx²q² H̃_{i-2}(xq)`, any `i >= 0`.
pub fn series_j_tilde_via_h(p: &SeriesParams) -> Result<TruncatedSeries> {
    if p.i < 0 {
        return Err(p.invalid("i must be nonnegative"));
    }
    let t = p.truncation();
    let mut sum = TruncatedSeries::zero(t);
    // (coefficient a^α b^β, x/q power e, index shift)
    let parts: [(&[(u32, u32)], i64, i64); 3] = [(&[(0, 0)], 0, 0), (&[(1, 0), (0, 1)], 1, 1), (&[(1, 1)], 2, 2)];
    for (coeffs, e, d) in parts {
        let j = p.i - d;
        let h = series_h_tilde(&SeriesParams { i: j, ..*p })?.dilate(crate::series::Var::X, 1);
        // x^e q^e H̃_j(xq) = x^{e-s} q^{e-s} (x^s H̃_j)(xq)
        let s = i64::from(h_tilde_shift(j));
        let pre = TruncatedSeries::polynomial(coeffs.iter().map(|&(a, b)| mono(1, a, b, (e - s) as u32, e - s)), t);
        sum = sum.add(&pre.mul(&h)?)?;
    }
    Ok(sum)
}

/// Summands of the bilateral forms: for `n >= 0` and `m = -n > 0` both reduce to
/// `(-1)^n P_|n| q^{E} / (-aq, -bq)_|n|`, so only the exponent differs.
fn bilateral(p: &SeriesParams, pos: impl Fn(i64) -> i64, neg: impl Fn(i64) -> i64) -> Result<TruncatedSeries> {
    p.check_r()?;
    let t = p.truncation();
    let stop_pos = outer_limit(&pos, 0, t);
    let stop_neg = outer_limit(&neg, 0, t);
    let mut sum = TruncatedSeries::zero(t);
    // prefactor (-aq, -bq)_∞ cancels against the denominator: (-aq^{m+1}, -bq^{m+1})_∞
    let tail = |m: i64| -> Result<TruncatedSeries> {
        let pa = pochhammer_inf_step(&mono(-1, 1, 0, 0, m + 1), 1, t)?;
        let pb = pochhammer_inf_step(&mono(-1, 0, 1, 0, m + 1), 1, t)?;
        Ok(pa.mul(&pb)?)
    };
    for (stop, expo, first) in [(stop_pos, &pos as &dyn Fn(i64) -> i64, 0), (stop_neg, &neg, 1)] {
        for m in first..stop {
            let head = TruncatedSeries::monomial(mono(sign(m), 0, 0, 0, expo(m)), t);
            let term = (&head * &ab_shifted(0, m, t)).mul(&tail(m)?)?;
            sum = sum.add(&term)?;
        }
    }
    let pre = pochhammer_inf_inv(&Monomial::q_pow(1), 1, t)?.mul(&pochhammer_inf_inv(&mono(1, 1, 1, 0, 1), 1, t)?)?;
    Ok(sum.mul(&pre)?.into_partial(t.q_cutoff).assert_bound(Offsets::ZERO))
}

/// `R_{k,i}(a, b; 1; q)` as the sum over all integers n.
pub fn series_r_bilateral(p: &SeriesParams) -> Result<TruncatedSeries> {
    let (k, i) = (i64::from(p.k), p.i);
    bilateral(p, |m| k * m * m + (k - i + 1) * m - m * (m - 1) / 2, |m| k * m * m - (k - i) * m - m * (m - 1) / 2)
}

/// `R̃_{k,i}(a, b; 1; q)` as the sum over all integers n.
pub fn series_r_tilde_bilateral(p: &SeriesParams) -> Result<TruncatedSeries> {
    let (k, i) = (i64::from(p.k), p.i);
    bilateral(p, |m| k * m * m + (k - i) * m - m * (m - 1), |m| k * m * m - (k - i) * m - m * (m - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{GaussInt, Specialization, Var};

    fn column_x1(s: &TruncatedSeries, n: i64) -> i64 {
        let c = s.coeff_sum_x(0, 0, n).unwrap();
        assert!(c.im == 0.into());
        i64::try_from(c.re).unwrap()
    }

    #[test]
    fn rogers_ramanujan_column() {
        let r = series_r(&SeriesParams::new(2, 2, 9)).unwrap();
        let got: Vec<i64> = (0..9).map(|n| column_x1(&r, n)).collect();
        assert_eq!(got, [1, 1, 1, 1, 2, 2, 3, 3, 4]);
        assert_eq!(r.coeff(0, 0, 0, 0).unwrap(), GaussInt::from(1));
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(matches!(series_r(&SeriesParams::new(1, 1, 5)), Err(HyperError::InvalidParams { .. })));
        assert!(matches!(series_r_tilde(&SeriesParams::new(3, 4, 5)), Err(HyperError::InvalidParams { .. })));
        assert!(series_r(&SeriesParams::new(2, 0, 5)).is_err());
    }

    #[test]
    fn bilateral_matches_x_to_one() {
        let x1 = Specialization::new().set(Var::X, 1, 0);
        for (k, i) in [(2, 2), (2, 1), (3, 2)] {
            let p = SeriesParams::new(k, i, 12);
            let uni = series_r(&p).unwrap().specialize(&x1).unwrap();
            let bi = series_r_bilateral(&p).unwrap();
            assert_eq!(uni.agrees_with(&bi), Ok(()), "R k={k} i={i}");
        }
        for (k, i) in [(3, 1), (2, 2)] {
            let p = SeriesParams::new(k, i, 12);
            let uni = series_r_tilde(&p).unwrap().specialize(&x1).unwrap();
            let bi = series_r_tilde_bilateral(&p).unwrap();
            assert_eq!(uni.agrees_with(&bi), Ok(()), "R~ k={k} i={i}");
        }
    }

    #[test]
    fn h_tilde_basics() {
        assert!(series_h_tilde(&SeriesParams::new(3, 0, 8)).unwrap().is_zero());
        for i in 1..=3 {
            let plus = series_h_tilde(&SeriesParams::new(3, i, 9)).unwrap();
            let minus = series_h_tilde(&SeriesParams::new(3, -i, 9)).unwrap();
            assert_eq!((&plus + &minus).agrees_with(&TruncatedSeries::zero(plus.truncation())), Ok(()));
        }
    }

    #[test]
    fn j_tilde_routes_agree() {
        let p = SeriesParams::new(3, 2, 10);
        let a = series_j_tilde(&p).unwrap();
        let b = series_j_tilde_via_h(&p).unwrap();
        assert_eq!(a.agrees_with(&b), Ok(()));
    }
}
