#![allow(dead_code)]

use proptest::prelude::*;
use qpair::overpartition::{Overpartition, Part};
use qpair::series::{GaussInt, Monomial, TruncatedSeries, Truncation};

pub const CUTOFF: i64 = 8;

pub fn truncation() -> Truncation {
    Truncation::with_cap(CUTOFF, 4)
}

/// Small Laurent polynomials in a, b, x, q with Gaussian coefficients.
pub fn series() -> impl Strategy<Value = TruncatedSeries> {
    let term = (-3i64..=3, -2i64..=2, 0u32..=2, 0u32..=2, 0u32..=2, -1i64..6)
        .prop_map(|(re, im, a, b, x, q)| Monomial::new(GaussInt::new(re, im), a, b, x, q));
    prop::collection::vec(term, 0..6).prop_map(|ts| TruncatedSeries::polynomial(ts, truncation()))
}

/// Overpartitions with parts up to `max` (zero allowed when `zero`).
pub fn overpartition(max: u32, zero: bool) -> impl Strategy<Value = Overpartition> {
    let lo = u32::from(!zero);
    prop::collection::vec((lo..=max, any::<bool>()), 0..8).prop_map(|raw| {
        let mut seen = std::collections::HashSet::new();
        let parts = raw.into_iter().map(|(size, over)| Part { size, over: over && seen.insert(size) }).collect();
        Overpartition::from_unsorted(parts).expect("at most one overlined copy per size")
    })
}

/// `Ok(())` when `l` and `r` agree wherever both are known, else a description.
pub fn same(l: &TruncatedSeries, r: &TruncatedSeries) -> Result<(), String> {
    l.agrees_with(r).map_err(|m| m.to_string())
}
