//! Jacobi's triple product and the q-Gauss sum over a two-sided window.

use super::{ab_shifted, mono, outer_limit, HyperError, Result};
use crate::series::{
    pochhammer, pochhammer_inf_inv, pochhammer_inf_step, pochhammer_inv, Monomial, TruncatedSeries, Truncation,
};

/// `∏_{j>=0} (1 - c q^{step·j})` for any q-degree of `c`: factors of non-positive degree
/// are multiplied out explicitly.
fn laurent_inf(c: &Monomial, step: i64, t: Truncation) -> Result<TruncatedSeries> {
    let mut head = TruncatedSeries::one(t);
    let mut c = c.clone();
    while c.deg_q <= 0 {
        let f = TruncatedSeries::polynomial([mono(1, 0, 0, 0, 0), c.clone().neg()], t);
        head = &head * &f;
        c = c.shift_q(step);
    }
    Ok(head.mul(&pochhammer_inf_step(&c, step, t)?)?)
}

/// Both sides of `Σ_{n∈Z} z^n q^{n²} = (-zq, -q/z, q²; q²)_∞` for `z = u q^e` with `u` a unit.
pub fn jacobi_triple_product(z: &Monomial, q_cutoff: i64) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let e = z.exponents();
    if e.a + e.b + e.x != 0 {
        return Err(HyperError::InvalidArgument(format!("z = {z:?} must be a pure power of q")));
    }
    let inv = z
        .coeff
        .unit_inverse()
        .ok_or_else(|| HyperError::InvalidArgument(format!("coefficient {} of z is not a unit", z.coeff)))?;
    let t = Truncation::new(q_cutoff);
    let reach = e.q.abs() + q_cutoff.max(0) + 2;
    let lhs = TruncatedSeries::polynomial(
        (-reach..=reach).filter(|n| n * n + e.q * n < q_cutoff).map(|n| {
            let u = if n >= 0 { z.coeff.pow(n as u32) } else { inv.pow((-n) as u32) };
            Monomial::new(u, 0, 0, 0, n * n + e.q * n)
        }),
        t,
    )
    .into_partial(t.q_cutoff);
    let zq = Monomial::new(-&z.coeff, 0, 0, 0, e.q + 1);
    let qz = Monomial::new(-inv, 0, 0, 0, 1 - e.q);
    let rhs =
        laurent_inf(&zq, 2, t)?.mul(&laurent_inf(&qz, 2, t)?)?.mul(&pochhammer_inf_step(&Monomial::q_pow(2), 2, t)?)?;
    Ok((lhs, rhs))
}

/// Summand `N` of the q-Gauss sum with parameter `n` (either sign).
///
/// For `n >= 0`: `∏_{n<=j<N}(a+q^j)(b+q^j) · q^{N-n} (-aq,-bq)_n / ((q)_{N+n} (q)_{N-n})`.
/// For `n = -m`: `∏_{-m<=j<0}(a+q^j)(b+q^j) ∏_{m<=j<N}(a+q^j)(b+q^j) · q^{m(m-1)+N+m} / ((q)_{N-m} (q)_{N+m})`.
pub fn q_gauss_summand(n: i64, big_n: i64, t: Truncation) -> Result<TruncatedSeries> {
    let m = n.abs();
    assert!(big_n >= m, "summand needs N >= |n|");
    let q = Monomial::q_pow(1);
    let poly = if n >= 0 {
        let lead = TruncatedSeries::monomial(Monomial::q_pow(big_n - n), t);
        let shifted = &lead * &ab_shifted(n, big_n, t);
        let pa = pochhammer(&mono(-1, 1, 0, 0, 1), n as u32, t);
        let pb = pochhammer(&mono(-1, 0, 1, 0, 1), n as u32, t);
        &(&shifted * &pa) * &pb
    } else {
        let lead = TruncatedSeries::monomial(Monomial::q_pow(m * (m - 1) + big_n + m), t);
        &(&lead * &ab_shifted(-m, 0, t)) * &ab_shifted(m, big_n, t)
    };
    let den = pochhammer_inv(&q, (big_n + m) as u32, t)?.mul(&pochhammer_inv(&q, (big_n - m) as u32, t)?)?;
    Ok(poly.mul(&den)?)
}

/// Both sides of the q-Gauss sum `Σ_{N>=|n|} summand(n, N) = (-aq, -bq)_∞ / (q, abq)_∞`.
pub fn q_gauss_check(n: i64, q_cutoff: i64) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let t = Truncation::new(q_cutoff);
    let m = n.abs();
    // summand N has q-valuation N - |n| once the a/b choices are paid for
    let stop = outer_limit(|r| r, 0, t);
    let mut lhs = TruncatedSeries::zero(t);
    for r in 0..stop {
        lhs = lhs.add(&q_gauss_summand(n, m + r, t)?)?;
    }
    let rhs = pochhammer_inf_step(&mono(-1, 1, 0, 0, 1), 1, t)?
        .mul(&pochhammer_inf_step(&mono(-1, 0, 1, 0, 1), 1, t)?)?
        .mul(&pochhammer_inf_inv(&Monomial::q_pow(1), 1, t)?)?
        .mul(&pochhammer_inf_inv(&mono(1, 1, 1, 0, 1), 1, t)?)?;
    Ok((lhs.into_partial(t.q_cutoff), rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::GaussInt;

    #[test]
    fn triple_product_small_z() {
        for (z, c) in [(Monomial::q_pow(0), 20), (Monomial::new(-1, 0, 0, 0, 0), 15), (Monomial::q_pow(1), 12)] {
            let (l, r) = jacobi_triple_product(&z, c).unwrap();
            assert_eq!(l.agrees_with(&r), Ok(()), "z = {z:?}");
            assert_eq!(l.coeff(0, 0, 0, 0).unwrap(), r.coeff(0, 0, 0, 0).unwrap());
        }
        let (l, r) = jacobi_triple_product(&Monomial::new(GaussInt::i(), 0, 0, 0, 0), 14).unwrap();
        assert_eq!(l.agrees_with(&r), Ok(()));
    }

    #[test]
    fn triple_product_rejects_variables() {
        assert!(jacobi_triple_product(&Monomial::new(1, 1, 0, 0, 0), 5).is_err());
        assert!(jacobi_triple_product(&Monomial::new(2, 0, 0, 0, 0), 5).is_err());
    }

    #[test]
    fn q_gauss_both_signs() {
        for n in [-2, -1, 0, 1, 2] {
            let (l, r) = q_gauss_check(n, 10).unwrap();
            assert_eq!(l.agrees_with(&r), Ok(()), "n = {n}");
            assert_eq!(r.coeff(0, 0, 0, 0).unwrap(), GaussInt::from(1));
        }
    }

    #[test]
    fn q_gauss_reflection() {
        let t = Truncation::new(10);
        for big_n in 2..5 {
            let p = q_gauss_summand(2, big_n, t).unwrap();
            let m = q_gauss_summand(-2, big_n, t).unwrap();
            assert_eq!(p.agrees_with(&m), Ok(()), "N = {big_n}");
        }
    }
}
