//! q-difference relations for the R families and the H̃/J̃ relations, as lists of
//! named `lhs = rhs` pairs ready for comparison.

use super::{
    h_tilde_shift, mono, series_h_tilde, series_j_tilde, series_j_tilde_via_h, series_r, series_r_tilde, Result,
    SeriesParams,
};
use crate::series::{geometric, TruncatedSeries, Truncation, Var};

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
}

impl IdentityCheck {
    fn new(name: String, lhs: TruncatedSeries, rhs: TruncatedSeries) -> Self {
        IdentityCheck { name, lhs, rhs }
    }
}

fn poly(terms: &[(i64, u32, u32, u32, i64)], t: Truncation) -> TruncatedSeries {
    TruncatedSeries::polynomial(terms.iter().map(|&(c, a, b, x, q)| mono(c, a, b, x, q)), t)
}

/// Tables `F_j(x)` and `F_j(xq)` for `j = 1..=k`, index 0 unused.
fn family(
    k: u32,
    cutoff: i64,
    build: fn(&SeriesParams) -> Result<TruncatedSeries>,
) -> Result<(Vec<TruncatedSeries>, Vec<TruncatedSeries>)> {
    let mut plain = vec![TruncatedSeries::zero(Truncation::new(cutoff))];
    for j in 1..=k {
        plain.push(build(&SeriesParams::new(k, i64::from(j), cutoff))?);
    }
    let dilated = plain.iter().map(|s| s.dilate(Var::X, 1)).collect();
    Ok((plain, dilated))
}

/// `[F_{k-i+1} + (a+b) F_{k-i+2} + ab F_{k-i+3}](xq)`.
fn three_term(d: &[TruncatedSeries], k: usize, i: usize, t: Truncation) -> Result<TruncatedSeries> {
    let ab = poly(&[(1, 1, 0, 0, 0), (1, 0, 1, 0, 0)], t);
    let prod = poly(&[(1, 1, 1, 0, 0)], t);
    Ok(d[k - i + 1].add(&ab.mul(&d[k - i + 2])?)?.add(&prod.mul(&d[k - i + 3])?)?)
}

/// The three q-difference relations satisfied by `R_{k,i}`.
pub fn qdiff_r_identities(k: u32, cutoff: i64) -> Result<Vec<IdentityCheck>> {
    let t = Truncation::new(cutoff);
    let (r, d) = family(k, cutoff, series_r)?;
    let inv = geometric(&mono(1, 1, 1, 1, 1), t)?;
    let ku = k as usize;
    let mut out = vec![IdentityCheck::new(format!("R[{k},1](x) = R[{k},{k}](xq)"), r[1].clone(), d[ku].clone())];
    let xq = poly(&[(1, 0, 0, 1, 1)], t);
    let mix = poly(&[(1, 1, 0, 1, 1), (1, 0, 1, 1, 1), (1, 1, 1, 1, 1)], t);
    let rhs = xq.mul(&d[ku - 1])?.add(&mix.mul(&d[ku])?)?.mul(&inv)?;
    out.push(IdentityCheck::new(format!("R[{k},2] - R[{k},1]"), r[2].sub(&r[1])?, rhs));
    for i in 3..=ku {
        let lead = poly(&[(1, 0, 0, (i - 1) as u32, (i - 1) as i64)], t);
        let rhs = lead.mul(&three_term(&d, ku, i, t)?)?.mul(&inv)?;
        out.push(IdentityCheck::new(format!("R[{k},{i}] - R[{k},{}]", i - 1), r[i].sub(&r[i - 1])?, rhs));
    }
    Ok(out)
}

/// The three recurrences satisfied by `R̃_{k,i}`.
pub fn qdiff_rtilde_identities(k: u32, cutoff: i64) -> Result<Vec<IdentityCheck>> {
    let t = Truncation::new(cutoff);
    let (r, d) = family(k, cutoff, series_r_tilde)?;
    let inv = geometric(&mono(1, 1, 1, 1, 1), t)?;
    let ku = k as usize;
    let mut out = vec![IdentityCheck::new(format!("R~[{k},1](x) = R~[{k},{k}](xq)"), r[1].clone(), d[ku].clone())];
    let one_xq = poly(&[(1, 0, 0, 0, 0), (1, 0, 0, 1, 1)], t);
    let axq_bxq = poly(&[(1, 1, 0, 1, 1), (1, 0, 1, 1, 1)], t);
    let rhs = one_xq.mul(&d[ku - 1])?.add(&axq_bxq.mul(&d[ku])?)?.mul(&inv)?;
    out.push(IdentityCheck::new(format!("R~[{k},2]"), r[2].clone(), rhs));
    for i in 3..=ku {
        let lead = poly(&[(1, 0, 0, (i - 2) as u32, (i - 2) as i64), (1, 0, 0, (i - 1) as u32, (i - 1) as i64)], t);
        let rhs = lead.mul(&three_term(&d, ku, i, t)?)?.mul(&inv)?;
        out.push(IdentityCheck::new(format!("R~[{k},{i}] - R~[{k},{}]", i - 2), r[i].sub(&r[i - 2])?, rhs));
    }
    Ok(out)
}

/// The four H̃/J̃ relations for `1 <= i <= k`, each multiplied through by the power of x
/// that makes both sides polynomial in x.
pub fn htilde_identities(k: u32, cutoff: i64) -> Result<Vec<IdentityCheck>> {
    let t = Truncation::new(cutoff);
    let h = |i: i64| series_h_tilde(&SeriesParams::new(k, i, cutoff));
    let zero = TruncatedSeries::zero(t);
    let mut out = vec![IdentityCheck::new(format!("H~[{k},0] = 0"), h(0)?, zero.clone())];
    let ki = i64::from(k);
    for i in 1..=ki {
        // x^i H̃_{-i} + H̃_i = 0
        out.push(IdentityCheck::new(format!("H~[{k},-{i}] + x^-{i} H~[{k},{i}]"), h(-i)?.add(&h(i)?)?, zero.clone()));
    }
    for i in 1..=ki {
        // x^s (H̃_i - H̃_{i-2}) = x^{s+i-2} (1+x) J̃_{k-i+1}, s = max(0, 2-i)
        let s = (2 - i).max(0);
        let lo = h(i - 2)?;
        let lo_pow = s - i64::from(h_tilde_shift(i - 2));
        let lhs =
            poly(&[(1, 0, 0, s as u32, 0)], t).mul(&h(i)?)?.sub(&poly(&[(1, 0, 0, lo_pow as u32, 0)], t).mul(&lo)?)?;
        let j = series_j_tilde(&SeriesParams::new(k, ki - i + 1, cutoff))?;
        let e = (s + i - 2) as u32;
        let rhs = poly(&[(1, 0, 0, e, 0), (1, 0, 0, e + 1, 0)], t).mul(&j)?;
        out.push(IdentityCheck::new(format!("H~[{k},{i}] - H~[{k},{}]", i - 2), lhs, rhs));
    }
    for i in 1..=ki {
        let p = SeriesParams::new(k, i, cutoff);
        out.push(IdentityCheck::new(format!("J~[{k},{i}] from H~"), series_j_tilde(&p)?, series_j_tilde_via_h(&p)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_hold(checks: &[IdentityCheck]) {
        for c in checks {
            assert_eq!(c.lhs.agrees_with(&c.rhs), Ok(()), "{}", c.name);
        }
    }

    #[test]
    fn r_recurrences_k3() {
        all_hold(&qdiff_r_identities(3, 9).unwrap());
    }

    #[test]
    fn rtilde_recurrences_k3() {
        all_hold(&qdiff_rtilde_identities(3, 9).unwrap());
    }

    #[test]
    fn htilde_relations_k2() {
        all_hold(&htilde_identities(2, 8).unwrap());
    }
}
