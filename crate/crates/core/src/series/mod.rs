//! Truncated formal power series in `q` (Laurent in `q`) whose coefficients are
//! polynomials in `a`, `b`, `x` over the Gaussian integers.
//!
//! A series stores the exact coefficients of every monomial `a^s b^t x^m q^n` with
//! `n < q_cutoff` and `s, t, m <= var_cap`; all coefficients below `q_floor` are zero.
//! Arithmetic only ever keeps coefficients it can prove.

mod gauss;
mod json;
mod products;
mod specialize;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use gauss::GaussInt;
pub use json::SeriesJson;
pub use products::{
    geometric, pochhammer, pochhammer_inf, pochhammer_inf_inv, pochhammer_inf_step, pochhammer_inv, pochhammer_step,
    pochhammer_step_inv, q_binomial,
};
pub use specialize::{Specialization, Var, VarSub};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("var_cap mismatch: {lhs} vs {rhs}")]
    CapMismatch { lhs: u32, rhs: u32 },
    #[error("constant term {0} is not a unit of Z[i]")]
    NonUnitConstant(GaussInt),
    #[error("cannot invert: series has terms of negative q-degree")]
    NegativeValuation,
    #[error("coefficient of {at} is outside the window q in [{floor}, {cutoff}) with var_cap {cap}")]
    OutsideWindow { at: Exponents, floor: i64, cutoff: i64, cap: u32 },
    #[error("infinite product base must have positive q-degree, got {0}")]
    NonConvergentProduct(i64),
    #[error("geometric series of {0} does not converge formally")]
    NonConvergentGeometric(Exponents),
    #[error("specialization needs var_cap >= {required} (have {have}) to be exact below q^{cutoff}")]
    InsufficientCap { required: u32, have: u32, cutoff: i64 },
    #[error("specialization is not provably exact: {0}")]
    Unprovable(String),
    #[error("q_cutoff must be positive, got {0}")]
    BadCutoff(i64),
    #[error("invalid series json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, SeriesError>;

/// Exponent tuple of a monomial. Field order gives the canonical ordering
/// (q-degree first, then a, b, x).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponents {
    pub q: i64,
    pub a: u32,
    pub b: u32,
    pub x: u32,
}

impl Exponents {
    pub const fn new(a: u32, b: u32, x: u32, q: i64) -> Self {
        Self { q, a, b, x }
    }

    fn plus(self, o: Exponents) -> Self {
        Self { q: self.q + o.q, a: self.a + o.a, b: self.b + o.b, x: self.x + o.x }
    }

    fn max_var(self) -> u32 {
        self.a.max(self.b).max(self.x)
    }
}

impl fmt::Display for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{} b^{} x^{} q^{}", self.a, self.b, self.x, self.q)
    }
}

/// A single term `coeff · a^deg_a b^deg_b x^deg_x q^deg_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: GaussInt,
    pub deg_a: u32,
    pub deg_b: u32,
    pub deg_x: u32,
    pub deg_q: i64,
}

impl Monomial {
    pub fn new(coeff: impl Into<GaussInt>, deg_a: u32, deg_b: u32, deg_x: u32, deg_q: i64) -> Self {
        Self { coeff: coeff.into(), deg_a, deg_b, deg_x, deg_q }
    }

    /// `q^n` with coefficient 1.
    pub fn q_pow(n: i64) -> Self {
        Self::new(1, 0, 0, 0, n)
    }

    pub fn exponents(&self) -> Exponents {
        Exponents::new(self.deg_a, self.deg_b, self.deg_x, self.deg_q)
    }

    pub fn with_coeff(mut self, c: impl Into<GaussInt>) -> Self {
        self.coeff = c.into();
        self
    }

    pub fn neg(mut self) -> Self {
        self.coeff = -self.coeff;
        self
    }

    /// Product with `q^n`.
    pub fn shift_q(mut self, n: i64) -> Self {
        self.deg_q += n;
        self
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial {
            coeff: &self.coeff * &o.coeff,
            deg_a: self.deg_a + o.deg_a,
            deg_b: self.deg_b + o.deg_b,
            deg_x: self.deg_x + o.deg_x,
            deg_q: self.deg_q + o.deg_q,
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial {
            coeff: self.coeff.pow(e),
            deg_a: self.deg_a * e,
            deg_b: self.deg_b * e,
            deg_x: self.deg_x * e,
            deg_q: self.deg_q * i64::from(e),
        }
    }

    fn offsets(&self) -> Offsets {
        let q = self.deg_q;
        Offsets { a: i64::from(self.deg_a) - q, b: i64::from(self.deg_b) - q, x: i64::from(self.deg_x) - q }
    }
}

/// Per-variable bound `deg_v <= deg_q + offset_v` valid for every monomial of the
/// untruncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Offsets {
    pub a: i64,
    pub b: i64,
    pub x: i64,
}

impl Offsets {
    pub const ZERO: Offsets = Offsets { a: 0, b: 0, x: 0 };

    fn max(self, o: Offsets) -> Offsets {
        Offsets { a: self.a.max(o.a), b: self.b.max(o.b), x: self.x.max(o.x) }
    }

    fn plus(self, o: Offsets) -> Offsets {
        Offsets { a: self.a + o.a, b: self.b + o.b, x: self.x + o.x }
    }

    fn admits(self, e: Exponents) -> bool {
        i64::from(e.a) <= e.q + self.a && i64::from(e.b) <= e.q + self.b && i64::from(e.x) <= e.q + self.x
    }

    pub(crate) fn get(self, v: Var) -> i64 {
        match v {
            Var::A => self.a,
            Var::B => self.b,
            Var::X => self.x,
        }
    }
}

/// What is known about the a/b/x degrees of the untruncated series. Specializations
/// with non-positive q-shifts need this to decide which coefficients are exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeBound {
    /// The series is zero; every bound holds.
    Vacuous,
    Offsets(Offsets),
    Unknown,
}

impl DegreeBound {
    fn join(self, o: DegreeBound) -> DegreeBound {
        match (self, o) {
            (DegreeBound::Vacuous, x) | (x, DegreeBound::Vacuous) => x,
            (DegreeBound::Offsets(p), DegreeBound::Offsets(r)) => DegreeBound::Offsets(p.max(r)),
            _ => DegreeBound::Unknown,
        }
    }

    fn product(self, o: DegreeBound) -> DegreeBound {
        match (self, o) {
            (DegreeBound::Vacuous, _) | (_, DegreeBound::Vacuous) => DegreeBound::Vacuous,
            (DegreeBound::Offsets(p), DegreeBound::Offsets(r)) => DegreeBound::Offsets(p.plus(r)),
            _ => DegreeBound::Unknown,
        }
    }

    fn admits(self, e: Exponents) -> bool {
        match self {
            DegreeBound::Offsets(o) => o.admits(e),
            _ => true,
        }
    }
}

/// Truncation parameters shared by the series of one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Truncation {
    pub q_cutoff: i64,
    pub var_cap: u32,
}

impl Truncation {
    /// Cutoff `q_cutoff` with the default var_cap (equal to the cutoff).
    pub fn new(q_cutoff: i64) -> Self {
        Self { q_cutoff, var_cap: q_cutoff.max(0) as u32 }
    }

    pub fn with_cap(q_cutoff: i64, var_cap: u32) -> Self {
        Self { q_cutoff, var_cap }
    }

    fn holds(&self, e: Exponents) -> bool {
        e.q < self.q_cutoff && e.max_var() <= self.var_cap
    }
}

/// First coefficient where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub at: Exponents,
    pub lhs: GaussInt,
    pub rhs: GaussInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coefficient of {}: {} != {}", self.at, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    terms: BTreeMap<Exponents, GaussInt>,
    q_floor: i64,
    q_cutoff: i64,
    var_cap: u32,
    bound: DegreeBound,
    /// Every monomial of the untruncated series is stored.
    exact: bool,
}

impl TruncatedSeries {
    pub fn zero(t: Truncation) -> Self {
        Self {
            terms: BTreeMap::new(),
            q_floor: 0,
            q_cutoff: t.q_cutoff,
            var_cap: t.var_cap,
            bound: DegreeBound::Vacuous,
            exact: true,
        }
    }

    pub fn one(t: Truncation) -> Self {
        Self::constant(GaussInt::one(), t)
    }

    pub fn constant(c: impl Into<GaussInt>, t: Truncation) -> Self {
        Self::monomial(Monomial::new(c, 0, 0, 0, 0), t)
    }

    pub fn monomial(m: Monomial, t: Truncation) -> Self {
        Self::polynomial([m], t)
    }

    /// The exact polynomial `Σ terms`, truncated to `t`.
    pub fn polynomial(terms: impl IntoIterator<Item = Monomial>, t: Truncation) -> Self {
        let mut s = Self::zero(t);
        for m in terms {
            if m.coeff.is_zero() {
                continue;
            }
            let e = m.exponents();
            s.q_floor = s.q_floor.min(e.q);
            s.bound = s.bound.join(DegreeBound::Offsets(m.offsets()));
            // an exact polynomial keeps every term; only the var box truncates it
            if e.max_var() <= t.var_cap {
                *s.terms.entry(e).or_default() += &m.coeff;
            } else {
                s.exact = false;
            }
        }
        s.terms.retain(|_, c| !c.is_zero());
        if s.exact {
            s.q_cutoff = s.q_cutoff.max(s.terms.keys().map(|e| e.q + 1).max().unwrap_or(0));
        } else {
            s = s.truncate(t.q_cutoff);
        }
        s
    }

    /// Builds a series from raw parts. `bound` must hold for the untruncated series.
    pub fn from_parts(
        terms: impl IntoIterator<Item = Monomial>,
        q_floor: i64,
        t: Truncation,
        bound: DegreeBound,
    ) -> Self {
        let mut map: BTreeMap<Exponents, GaussInt> = BTreeMap::new();
        for m in terms {
            let e = m.exponents();
            if e.q >= q_floor && t.holds(e) {
                *map.entry(e).or_default() += &m.coeff;
            }
        }
        map.retain(|_, c| !c.is_zero());
        let s = Self { terms: map, q_floor, q_cutoff: t.q_cutoff, var_cap: t.var_cap, bound, exact: false };
        debug_assert!(s.terms.keys().all(|e| s.bound.admits(*e)), "degree bound violated");
        s
    }

    pub fn q_floor(&self) -> i64 {
        self.q_floor
    }

    pub fn q_cutoff(&self) -> i64 {
        self.q_cutoff
    }

    pub fn var_cap(&self) -> u32 {
        self.var_cap
    }

    pub fn truncation(&self) -> Truncation {
        Truncation { q_cutoff: self.q_cutoff, var_cap: self.var_cap }
    }

    pub fn degree_bound(&self) -> DegreeBound {
        self.bound
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Replaces the degree bound; the caller vouches for it on the untruncated series.
    /// Stored terms are checked against it.
    pub fn assert_bound(mut self, o: Offsets) -> Self {
        assert!(self.terms.keys().all(|e| o.admits(*e)), "stored terms violate the asserted degree bound {o:?}");
        self.bound = if self.terms.is_empty() && self.exact { DegreeBound::Vacuous } else { DegreeBound::Offsets(o) };
        self
    }

    /// Declares the stored terms a partial sum of a longer series that is only known
    /// below `cutoff`: truncates there and drops the exactness flag and the degree
    /// bound, which described only the partial sum.
    pub fn into_partial(self, cutoff: i64) -> Self {
        let mut s = self.truncate(self.q_cutoff.min(cutoff));
        s.exact = false;
        s.bound = DegreeBound::Unknown;
        s
    }

    /// Number of stored nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Monomials in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|(e, c)| Monomial::new(c.clone(), e.a, e.b, e.x, e.q))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exponents, &GaussInt)> {
        self.terms.iter()
    }

    /// Lowest q-degree that can carry a nonzero coefficient.
    pub fn valuation(&self) -> i64 {
        self.terms.keys().next().map_or(self.q_cutoff.max(self.q_floor), |e| e.q)
    }

    fn in_window(&self, e: Exponents) -> bool {
        e.q < self.q_cutoff && e.max_var() <= self.var_cap
    }

    /// Exact coefficient of `a^s b^t x^m q^n`; an error outside the truncation window.
    pub fn coeff(&self, s: u32, t: u32, m: u32, n: i64) -> Result<GaussInt> {
        let at = Exponents::new(s, t, m, n);
        if !self.in_window(at) {
            return Err(SeriesError::OutsideWindow {
                at,
                floor: self.q_floor,
                cutoff: self.q_cutoff,
                cap: self.var_cap,
            });
        }
        Ok(self.terms.get(&at).cloned().unwrap_or_default())
    }

    /// Sum of the coefficients of `a^s b^t q^n` over every power of `x`.
    pub fn coeff_sum_x(&self, s: u32, t: u32, n: i64) -> Result<GaussInt> {
        let probe = Exponents::new(s, t, 0, n);
        if !self.in_window(probe) {
            return Err(SeriesError::OutsideWindow {
                at: probe,
                floor: self.q_floor,
                cutoff: self.q_cutoff,
                cap: self.var_cap,
            });
        }
        let lo = Exponents::new(s, t, 0, n);
        let hi = Exponents::new(s, t, u32::MAX, n);
        Ok(self.terms.range(lo..=hi).fold(GaussInt::zero(), |acc, (_, c)| acc + c.clone()))
    }

    fn check_cap(&self, o: &Self) -> Result<()> {
        if self.var_cap != o.var_cap {
            return Err(SeriesError::CapMismatch { lhs: self.var_cap, rhs: o.var_cap });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_cap(o)?;
        let cutoff = match (self.exact, o.exact) {
            (true, true) => self.q_cutoff.max(o.q_cutoff),
            (true, false) => o.q_cutoff,
            (false, true) => self.q_cutoff,
            (false, false) => self.q_cutoff.min(o.q_cutoff),
        };
        let mut terms = BTreeMap::new();
        let mut dropped = false;
        for (e, c) in self.terms.iter().chain(o.terms.iter()) {
            if e.q >= cutoff {
                dropped = true;
                continue;
            }
            let slot: &mut GaussInt = terms.entry(*e).or_default();
            *slot += c;
        }
        terms.retain(|_, c: &mut GaussInt| !c.is_zero());
        Ok(Self {
            terms,
            q_floor: self.q_floor.min(o.q_floor),
            q_cutoff: cutoff,
            var_cap: self.var_cap,
            bound: self.bound.join(o.bound),
            exact: self.exact && o.exact && !dropped,
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        let mut s = self.clone();
        for c in s.terms.values_mut() {
            *c = -&*c;
        }
        s
    }

    pub fn scale(&self, c: &GaussInt) -> Self {
        if c.is_zero() {
            let mut z = Self::zero(self.truncation());
            z.q_floor = self.q_floor;
            return z;
        }
        let mut s = self.clone();
        for v in s.terms.values_mut() {
            *v = &*v * c;
        }
        s
    }

    /// Product with a single monomial; cheaper than a general product.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let shift = m.exponents();
        let cutoff = self.q_cutoff + shift.q;
        let mut dropped = false;
        let mut terms = BTreeMap::new();
        if !m.coeff.is_zero() {
            for (e, c) in &self.terms {
                let ne = e.plus(shift);
                if ne.max_var() > self.var_cap {
                    dropped = true;
                    continue;
                }
                terms.insert(ne, c * &m.coeff);
            }
        }
        let bound = if m.coeff.is_zero() {
            DegreeBound::Vacuous
        } else {
            self.bound.product(DegreeBound::Offsets(m.offsets()))
        };
        Self {
            terms,
            q_floor: self.q_floor + shift.q,
            q_cutoff: cutoff,
            var_cap: self.var_cap,
            bound,
            exact: self.exact && !dropped,
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check_cap(o)?;
        let cap = self.var_cap;
        // an exact operand has no unknown terms, so only the other cutoff limits the product
        let from_self = self.q_cutoff + o.valuation();
        let from_other = o.q_cutoff + self.valuation();
        let both_exact = self.exact && o.exact;
        let cutoff = match (self.exact, o.exact) {
            (false, false) => from_self.min(from_other),
            (true, false) => from_other,
            (false, true) => from_self,
            // two polynomials multiply out completely
            (true, true) => i64::MAX / 4,
        };
        let (small, large) = if self.terms.len() <= o.terms.len() { (self, o) } else { (o, self) };
        let rhs: Vec<(&Exponents, &GaussInt)> = large.terms.iter().collect();
        let mut dropped = false;

        let bits = small.max_bits() + large.max_bits() + 2 + (64 - (small.terms.len() as u64).leading_zeros() as u64);
        let terms: BTreeMap<Exponents, GaussInt> = if bits < 126 && small.max_bits() < 63 && large.max_bits() < 63 {
            let rhs_small: Vec<(Exponents, i128, i128)> = rhs
                .iter()
                .map(|(e, c)| {
                    let (re, im) = c.to_i64_pair().expect("checked by bit length");
                    (**e, i128::from(re), i128::from(im))
                })
                .collect();
            let mut acc: HashMap<Exponents, (i128, i128)> = HashMap::new();
            for (e1, c1) in &small.terms {
                let (r1, i1) = c1.to_i64_pair().expect("checked by bit length");
                let (r1, i1) = (i128::from(r1), i128::from(i1));
                let limit = cutoff - e1.q;
                for &(e2, r2, i2) in &rhs_small {
                    if e2.q >= limit {
                        dropped = true;
                        break;
                    }
                    let e = e1.plus(e2);
                    if e.max_var() > cap {
                        dropped = true;
                        continue;
                    }
                    let slot = acc.entry(e).or_insert((0, 0));
                    slot.0 += r1 * r2 - i1 * i2;
                    slot.1 += r1 * i2 + i1 * r2;
                }
            }
            acc.into_iter()
                .filter(|(_, (r, i))| *r != 0 || *i != 0)
                .map(|(e, (r, i))| (e, GaussInt::new(BigInt::from(r), BigInt::from(i))))
                .collect()
        } else {
            let mut acc: HashMap<Exponents, GaussInt> = HashMap::new();
            for (e1, c1) in &small.terms {
                let limit = cutoff - e1.q;
                for &(e2, c2) in &rhs {
                    if e2.q >= limit {
                        dropped = true;
                        break;
                    }
                    let e = e1.plus(*e2);
                    if e.max_var() > cap {
                        dropped = true;
                        continue;
                    }
                    *acc.entry(e).or_default() += &(c1 * c2);
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        };
        let cutoff = if both_exact {
            let top = terms.keys().map(|e| e.q + 1).max().unwrap_or(0);
            from_self.max(from_other).max(top)
        } else {
            cutoff
        };
        Ok(Self {
            terms,
            q_floor: self.q_floor + o.q_floor,
            q_cutoff: cutoff,
            var_cap: cap,
            bound: self.bound.product(o.bound),
            exact: self.exact && o.exact && !dropped,
        })
    }

    fn max_bits(&self) -> u64 {
        self.terms.values().map(GaussInt::bits).max().unwrap_or(0)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::one(self.truncation());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse. The constant term must be a unit and no term may have
    /// negative q-degree.
    pub fn invert(&self) -> Result<Self> {
        if self.terms.keys().any(|e| e.q < 0) {
            return Err(SeriesError::NegativeValuation);
        }
        let c0 = self.terms.get(&Exponents::default()).cloned().unwrap_or_default();
        let u_inv = c0.unit_inverse().ok_or_else(|| SeriesError::NonUnitConstant(c0.clone()))?;
        let t = Truncation { q_cutoff: self.q_cutoff, var_cap: self.var_cap };
        // s = c0 (1 - w) with w = -(s - c0)/c0, so 1/s = c0^{-1} Σ w^j
        let mut w = self.clone();
        w.terms.remove(&Exponents::default());
        let w = w.scale(&-u_inv.clone());
        let mut acc = Self::one(t);
        let mut power = Self::one(t);
        loop {
            power = power.mul(&w)?.truncate(self.q_cutoff);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        let mut out = acc.scale(&u_inv);
        out.q_cutoff = self.q_cutoff;
        out.q_floor = 0;
        out.exact = w.is_zero() && self.exact;
        out.bound = match self.bound {
            DegreeBound::Offsets(o) if o == Offsets::ZERO => DegreeBound::Offsets(Offsets::ZERO),
            DegreeBound::Vacuous => DegreeBound::Vacuous,
            _ if w.is_zero() && self.exact => DegreeBound::Offsets(Offsets::ZERO),
            _ => DegreeBound::Unknown,
        };
        Ok(out)
    }

    /// Drops every coefficient of q-degree `>= cutoff` (no-op if already lower).
    pub fn truncate(&self, cutoff: i64) -> Self {
        if cutoff >= self.q_cutoff {
            return self.clone();
        }
        let mut s = self.clone();
        let before = s.terms.len();
        s.terms.retain(|e, _| e.q < cutoff);
        s.exact = s.exact && s.terms.len() == before;
        s.q_cutoff = cutoff;
        s
    }

    /// Compares coefficients on the common window; the first disagreement in
    /// canonical order is returned.
    pub fn agrees_with(&self, o: &Self) -> std::result::Result<(), Mismatch> {
        let cutoff = self.q_cutoff.min(o.q_cutoff);
        let cap = self.var_cap.min(o.var_cap);
        let zero = GaussInt::zero();
        let keys: std::collections::BTreeSet<&Exponents> =
            self.terms.keys().chain(o.terms.keys()).filter(|e| e.q < cutoff && e.max_var() <= cap).collect();
        for e in keys {
            let l = self.terms.get(e).unwrap_or(&zero);
            let r = o.terms.get(e).unwrap_or(&zero);
            if l != r {
                return Err(Mismatch { at: *e, lhs: l.clone(), rhs: r.clone() });
            }
        }
        Ok(())
    }

    /// The part of the series with `a`-degree `s` and `b`-degree `t`, summed over `x`,
    /// as a map `n -> coefficient`.
    pub fn column(&self, s: u32, t: u32) -> BTreeMap<i64, GaussInt> {
        let mut out: BTreeMap<i64, GaussInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.a == s && e.b == t {
                *out.entry(e.q).or_default() += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub(crate) fn raw_parts(&self) -> (&BTreeMap<Exponents, GaussInt>, DegreeBound, bool) {
        (&self.terms, self.bound, self.exact)
    }

    pub(crate) fn assemble(
        terms: BTreeMap<Exponents, GaussInt>,
        q_floor: i64,
        q_cutoff: i64,
        var_cap: u32,
        bound: DegreeBound,
        exact: bool,
    ) -> Self {
        Self { terms, q_floor, q_cutoff, var_cap, bound, exact }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (name, d) in [("a", e.a), ("b", e.b), ("x", e.x)] {
                match d {
                    0 => {}
                    1 => write!(f, "{name}")?,
                    _ => write!(f, "{name}^{d}")?,
                }
            }
            if e.q != 0 {
                write!(f, "q^{}", e.q)?;
            }
        }
        write!(f, " + O(q^{})", self.q_cutoff)
    }
}

fn expect_caps<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("series operator: {e}"))
}

/// Operator forms panic on a var_cap mismatch; use the named methods to get a `Result`.
impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, o: &TruncatedSeries) -> TruncatedSeries {
        expect_caps(TruncatedSeries::add(self, o))
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, o: &TruncatedSeries) -> TruncatedSeries {
        expect_caps(TruncatedSeries::sub(self, o))
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, o: &TruncatedSeries) -> TruncatedSeries {
        expect_caps(TruncatedSeries::mul(self, o))
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::neg(self)
    }
}
