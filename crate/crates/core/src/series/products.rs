//! q-Pochhammer products, their inverses and Gaussian binomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{DegreeBound, GaussInt, Monomial, Offsets, Result, SeriesError, TruncatedSeries, Truncation};

fn one_minus(m: &Monomial, t: Truncation) -> TruncatedSeries {
    TruncatedSeries::polynomial([Monomial::new(1, 0, 0, 0, 0), m.clone().neg()], t)
}

/// `1/(1 - m)` as a geometric series. Needs positive q-degree, or q-degree zero with
/// some positive a/b/x degree (the var_cap then ends the series).
pub fn geometric(m: &Monomial, t: Truncation) -> Result<TruncatedSeries> {
    let e = m.exponents();
    let moves_vars = e.a + e.b + e.x > 0;
    if e.q < 0 || (e.q == 0 && !moves_vars) {
        return Err(SeriesError::NonConvergentGeometric(e));
    }
    if m.coeff.is_zero() {
        return Ok(TruncatedSeries::one(t));
    }
    let mut terms = Vec::new();
    let mut p = Monomial::new(1, 0, 0, 0, 0);
    while p.deg_q < t.q_cutoff && p.deg_a.max(p.deg_b).max(p.deg_x) <= t.var_cap {
        terms.push(p.clone());
        p = p.mul(m);
    }
    let o = m.offsets();
    let bound =
        if o.a <= 0 && o.b <= 0 && o.x <= 0 { DegreeBound::Offsets(Offsets::ZERO) } else { DegreeBound::Unknown };
    Ok(TruncatedSeries::from_parts(terms, 0, t, bound))
}

/// `(c; q)_n`.
pub fn pochhammer(c: &Monomial, n: u32, t: Truncation) -> TruncatedSeries {
    pochhammer_step(c, 1, n, t)
}

/// `(c; q^step)_n = ∏_{j<n} (1 - c q^{step·j})`.
pub fn pochhammer_step(c: &Monomial, step: i64, n: u32, t: Truncation) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(t);
    for j in 0..i64::from(n) {
        acc = &acc * &one_minus(&c.clone().shift_q(step * j), t);
    }
    acc
}

/// `1/(c; q)_n`.
pub fn pochhammer_inv(c: &Monomial, n: u32, t: Truncation) -> Result<TruncatedSeries> {
    pochhammer_step_inv(c, 1, n, t)
}

pub fn pochhammer_step_inv(c: &Monomial, step: i64, n: u32, t: Truncation) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(t);
    for j in 0..i64::from(n) {
        acc = acc.mul(&geometric(&c.clone().shift_q(step * j), t)?)?;
    }
    Ok(acc)
}

/// `(c; q)_∞`; the base must have positive q-degree.
pub fn pochhammer_inf(c: &Monomial, t: Truncation) -> Result<TruncatedSeries> {
    pochhammer_inf_step(c, 1, t)
}

pub fn pochhammer_inf_step(c: &Monomial, step: i64, t: Truncation) -> Result<TruncatedSeries> {
    if c.deg_q <= 0 || step <= 0 {
        return Err(SeriesError::NonConvergentProduct(c.deg_q));
    }
    let factors = stabilizing_length(c.deg_q, step, t.q_cutoff);
    let finite = pochhammer_step(c, step, factors, t);
    // each remaining factor is 1 + O(q^cutoff)
    let o = c.offsets();
    let tail = |d: i64| (0..).map(|j| d - step * j).take_while(|v| *v > 0).sum::<i64>();
    let bound = DegreeBound::Offsets(Offsets { a: tail(o.a), b: tail(o.b), x: tail(o.x) });
    let finite = finite.truncate(t.q_cutoff);
    let (terms, _, _) = finite.raw_parts();
    Ok(TruncatedSeries::assemble(terms.clone(), 0, t.q_cutoff, t.var_cap, bound, false))
}

/// `1/(c; q^step)_∞`; the base must have positive q-degree.
pub fn pochhammer_inf_inv(c: &Monomial, step: i64, t: Truncation) -> Result<TruncatedSeries> {
    if c.deg_q <= 0 || step <= 0 {
        return Err(SeriesError::NonConvergentProduct(c.deg_q));
    }
    let factors = stabilizing_length(c.deg_q, step, t.q_cutoff);
    pochhammer_step_inv(c, step, factors, t)
}

fn stabilizing_length(deg_q: i64, step: i64, cutoff: i64) -> u32 {
    let mut j = 0u32;
    while deg_q + step * i64::from(j) < cutoff {
        j += 1;
    }
    j
}

/// Gaussian binomial `[n choose k]_q`; zero when `k > n`.
pub fn q_binomial(n: u32, k: u32, t: Truncation) -> TruncatedSeries {
    if k > n {
        return TruncatedSeries::zero(t);
    }
    // [m, j] = [m-1, j-1] + q^j [m-1, j], row by row
    let k = k as usize;
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=m.min(k) {
            let mut poly: Vec<BigInt> = vec![BigInt::zero(); j * (m - j) + 1];
            if j >= 1 {
                for (d, c) in row[j - 1].iter().enumerate() {
                    poly[d] += c;
                }
            }
            if j < row.len() && j < m {
                for (d, c) in row[j].iter().enumerate() {
                    poly[d + j] += c;
                }
            }
            next.push(poly);
        }
        row = next;
    }
    let total = row.swap_remove(k);
    TruncatedSeries::polynomial(
        total.into_iter().enumerate().map(|(w, c)| Monomial::new(GaussInt::from(c), 0, 0, 0, w as i64)),
        t,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_poly(cs: &[i64], t: Truncation) -> TruncatedSeries {
        TruncatedSeries::polynomial(cs.iter().enumerate().map(|(n, &c)| Monomial::new(c, 0, 0, 0, n as i64)), t)
    }

    #[test]
    fn finite_products() {
        let t = Truncation::new(10);
        assert_eq!(pochhammer(&Monomial::q_pow(1), 2, t), q_poly(&[1, -1, -1, 1], t));
        assert_eq!(pochhammer(&Monomial::new(5, 1, 0, 0, 1), 0, t), TruncatedSeries::one(t));
        let c = Monomial::new(-1, 1, 0, 1, 1);
        let brute = (0..3).fold(TruncatedSeries::one(t), |acc, j| {
            let f = TruncatedSeries::polynomial([Monomial::new(1, 0, 0, 0, 0), c.clone().shift_q(j).neg()], t);
            &acc * &f
        });
        assert_eq!(pochhammer(&c, 3, t), brute);
    }

    #[test]
    fn euler_pentagonal() {
        let t = Truncation::new(13);
        let p = pochhammer_inf(&Monomial::q_pow(1), t).unwrap();
        let expect = q_poly(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1], t);
        assert_eq!(p.agrees_with(&expect), Ok(()));
        assert_eq!(p.agrees_with(&pochhammer(&Monomial::q_pow(1), 13, t)), Ok(()));
        let p3 = pochhammer_inf(&Monomial::q_pow(3), Truncation::new(3)).unwrap();
        assert_eq!(p3.agrees_with(&TruncatedSeries::one(Truncation::new(3))), Ok(()));
        assert_eq!(p3.len(), 1);
    }

    #[test]
    fn infinite_product_inverse() {
        let t = Truncation::new(15);
        let p = pochhammer_inf(&Monomial::q_pow(1), t).unwrap();
        let inv = pochhammer_inf_inv(&Monomial::q_pow(1), 1, t).unwrap();
        assert_eq!(p.mul(&inv).unwrap().agrees_with(&TruncatedSeries::one(t)), Ok(()));
        // partition numbers
        let parts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135];
        for (n, &c) in parts.iter().enumerate() {
            assert_eq!(inv.coeff(0, 0, 0, n as i64).unwrap(), GaussInt::from(c));
        }
    }

    #[test]
    fn rejects_divergent_products() {
        let t = Truncation::new(5);
        assert_eq!(pochhammer_inf(&Monomial::new(1, 1, 0, 0, 0), t), Err(SeriesError::NonConvergentProduct(0)));
        assert!(geometric(&Monomial::new(1, 0, 0, 0, 0), t).is_err());
    }

    #[test]
    fn gaussian_binomials() {
        let t = Truncation::new(20);
        assert_eq!(q_binomial(2, 1, t), q_poly(&[1, 1], t));
        assert_eq!(q_binomial(7, 0, t), TruncatedSeries::one(t));
        assert_eq!(q_binomial(4, 2, t), q_poly(&[1, 1, 2, 1, 1], t));
        assert!(q_binomial(2, 3, t).is_zero());
        // [n k] = (q)_n / ((q)_k (q)_{n-k})
        let q = Monomial::q_pow(1);
        let lhs = q_binomial(6, 2, t);
        let rhs = &(&pochhammer(&q, 6, t) * &pochhammer_inv(&q, 2, t).unwrap()) * &pochhammer_inv(&q, 4, t).unwrap();
        assert_eq!(lhs.agrees_with(&rhs), Ok(()));
    }
}
