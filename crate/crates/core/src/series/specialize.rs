//! Substitutions `v -> u·q^e` (u in {0, ±1, ±i}) and `q -> q^p`, with the window of
//! coefficients that stay provably exact.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{DegreeBound, Exponents, GaussInt, Offsets, Result, SeriesError, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    A,
    B,
    X,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::A, Var::B, Var::X];

    fn degree(self, e: &Exponents) -> u32 {
        match self {
            Var::A => e.a,
            Var::B => e.b,
            Var::X => e.x,
        }
    }

    fn clear(self, e: &mut Exponents) {
        match self {
            Var::A => e.a = 0,
            Var::B => e.b = 0,
            Var::X => e.x = 0,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum VarSub {
    #[default]
    Keep,
    /// `v -> unit · q^shift`; `unit` is 0 or a unit of Z[i].
    Set { unit: GaussInt, shift: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub a: VarSub,
    pub b: VarSub,
    pub x: VarSub,
    pub q_power: u32,
}

impl Default for Specialization {
    fn default() -> Self {
        Self { a: VarSub::Keep, b: VarSub::Keep, x: VarSub::Keep, q_power: 1 }
    }
}

impl Specialization {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, v: Var, unit: impl Into<GaussInt>, shift: i64) -> Self {
        *self.slot(v) = VarSub::Set { unit: unit.into(), shift };
        self
    }

    /// `v -> 0`.
    pub fn kill(self, v: Var) -> Self {
        self.set(v, 0, 0)
    }

    pub fn q_power(mut self, p: u32) -> Self {
        self.q_power = p;
        self
    }

    fn slot(&mut self, v: Var) -> &mut VarSub {
        match v {
            Var::A => &mut self.a,
            Var::B => &mut self.b,
            Var::X => &mut self.x,
        }
    }

    pub fn get(&self, v: Var) -> &VarSub {
        match v {
            Var::A => &self.a,
            Var::B => &self.b,
            Var::X => &self.x,
        }
    }

    /// Substituted variables with a nonzero value, and their shifts.
    fn active(&self) -> Vec<(Var, i64)> {
        Var::ALL
            .into_iter()
            .filter_map(|v| match self.get(v) {
                VarSub::Set { unit, shift } if !unit.is_zero() => Some((v, *shift)),
                _ => None,
            })
            .collect()
    }

    fn validate(&self) -> Result<()> {
        if self.q_power == 0 {
            return Err(SeriesError::Unprovable("q_power must be positive".into()));
        }
        for v in Var::ALL {
            if let VarSub::Set { unit, .. } = self.get(v) {
                if !unit.is_zero() && !unit.is_unit() {
                    return Err(SeriesError::Unprovable(format!("substituted value {unit} is neither 0 nor a unit")));
                }
            }
        }
        Ok(())
    }

    fn map(&self, e: &Exponents, c: &GaussInt) -> Option<(Exponents, GaussInt)> {
        let mut out = *e;
        out.q = e.q * i64::from(self.q_power);
        let mut coeff = c.clone();
        for v in Var::ALL {
            if let VarSub::Set { unit, shift } = self.get(v) {
                let d = v.degree(e);
                if d == 0 {
                    continue;
                }
                if unit.is_zero() {
                    return None;
                }
                coeff = &coeff * &unit.pow(d);
                out.q += shift * i64::from(d);
                v.clear(&mut out);
            }
        }
        Some((out, coeff))
    }
}

struct Window {
    floor: i64,
    cutoff: i64,
    bound: DegreeBound,
}

impl TruncatedSeries {
    fn specialized_window(&self, spec: &Specialization, cap: u32) -> Result<Window> {
        let qp = i64::from(spec.q_power);
        let (terms, bound, exact) = self.raw_parts();
        let val = self.valuation();
        let cap1 = i64::from(cap) + 1;
        let active = spec.active();

        if exact {
            let mapped: Vec<Exponents> = terms.iter().filter_map(|(e, c)| spec.map(e, c)).map(|(e, _)| e).collect();
            let lo = mapped.iter().map(|e| e.q).min().unwrap_or(0);
            let hi = mapped.iter().map(|e| e.q + 1).max().unwrap_or(0);
            let bound = mapped.iter().fold(DegreeBound::Vacuous, |acc, e| {
                let o = Offsets { a: i64::from(e.a) - e.q, b: i64::from(e.b) - e.q, x: i64::from(e.x) - e.q };
                match acc {
                    DegreeBound::Offsets(p) => DegreeBound::Offsets(p.max(o)),
                    _ => DegreeBound::Offsets(o),
                }
            });
            return Ok(Window { floor: (qp * self.q_floor).min(lo), cutoff: (qp * self.q_cutoff).max(hi), bound });
        }

        match bound {
            DegreeBound::Vacuous => Ok(Window { floor: qp * self.q_floor, cutoff: qp * self.q_cutoff, bound }),
            DegreeBound::Unknown => {
                if active.iter().any(|&(_, e)| e <= 0) {
                    return Err(SeriesError::Unprovable(
                        "a substitution with non-positive q-shift needs a degree bound, and none is known".into(),
                    ));
                }
                let mut cutoff = qp * self.q_cutoff;
                for &(_, e) in &active {
                    cutoff = cutoff.min(qp * val + e * cap1);
                }
                Ok(Window { floor: qp * self.q_floor.min(val), cutoff, bound: DegreeBound::Unknown })
            }
            DegreeBound::Offsets(o) => {
                // a true monomial of q-degree n maps to degree >= slope·n - neg_mass
                let neg_shift: i64 = active.iter().filter(|(_, e)| *e < 0).map(|(_, e)| -e).sum();
                let neg_mass: i64 = active.iter().filter(|(_, e)| *e < 0).map(|(v, e)| -e * o.get(*v)).sum();
                let slope = qp - neg_shift;
                if slope < 1 {
                    return Err(SeriesError::Unprovable(format!(
                        "q_power {qp} does not exceed the total negative shift {neg_shift}"
                    )));
                }
                let floor = slope * val - neg_mass;
                let mut cutoff = slope * self.q_cutoff - neg_mass;
                for &(v, e) in &active {
                    // dropped monomials with deg_v > cap
                    let n_min = val.max(cap1 - o.get(v));
                    cutoff = cutoff.min(slope * n_min - neg_mass + e.max(0) * cap1);
                }
                let bound = if val >= 0 {
                    let keep = |v: Var| match spec.get(v) {
                        VarSub::Keep => o.get(v) + neg_mass,
                        VarSub::Set { .. } => -floor,
                    };
                    DegreeBound::Offsets(Offsets { a: keep(Var::A), b: keep(Var::B), x: keep(Var::X) })
                } else {
                    DegreeBound::Unknown
                };
                Ok(Window { floor: floor.min(qp * self.q_floor), cutoff, bound })
            }
        }
    }

    /// Applies the substitution, keeping only coefficients that are provably exact.
    pub fn specialize(&self, spec: &Specialization) -> Result<Self> {
        spec.validate()?;
        let w = self.specialized_window(spec, self.var_cap())?;
        if w.cutoff <= w.floor && !self.is_zero() {
            return Err(self.cap_error(spec, w.floor + 1));
        }
        let (terms, _, exact) = self.raw_parts();
        let mut out: BTreeMap<Exponents, GaussInt> = BTreeMap::new();
        for (e, c) in terms {
            if let Some((ne, nc)) = spec.map(e, c) {
                if ne.q < w.cutoff {
                    *out.entry(ne).or_default() += &nc;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        debug_assert!(out.keys().all(|e| e.q >= w.floor));
        Ok(Self::assemble(out, w.floor, w.cutoff, self.var_cap(), w.bound, exact))
    }

    /// As [`specialize`](Self::specialize), but insists on exactness below `q^cutoff`;
    /// the error names the var_cap that would be needed.
    pub fn specialize_to(&self, spec: &Specialization, cutoff: i64) -> Result<Self> {
        spec.validate()?;
        let w = self.specialized_window(spec, self.var_cap())?;
        if w.cutoff < cutoff {
            return Err(self.cap_error(spec, cutoff));
        }
        Ok(self.specialize(spec)?.truncate(cutoff))
    }

    fn cap_error(&self, spec: &Specialization, cutoff: i64) -> SeriesError {
        let have = self.var_cap();
        let span = (cutoff - self.valuation()).unsigned_abs() as u32 + 64;
        for cap in have + 1..=have.saturating_add(span.saturating_mul(4)) {
            match self.specialized_window(spec, cap) {
                Ok(w) if w.cutoff >= cutoff => return SeriesError::InsufficientCap { required: cap, have, cutoff },
                Ok(_) => {}
                Err(e) => return e,
            }
        }
        SeriesError::Unprovable(format!("q_cutoff {} is too small to reach q^{cutoff}", self.q_cutoff()))
    }

    /// `v -> v·q^shift`. Exactness is unaffected for nonnegative shifts.
    pub fn dilate(&self, v: Var, shift: u32) -> Self {
        let (terms, bound, exact) = self.raw_parts();
        let s = i64::from(shift);
        let mut out = BTreeMap::new();
        let mut top = self.q_cutoff();
        for (e, c) in terms {
            let mut ne = *e;
            ne.q += s * i64::from(v.degree(e));
            if ne.q >= self.q_cutoff() {
                if exact {
                    top = top.max(ne.q + 1);
                } else {
                    continue;
                }
            }
            out.insert(ne, c.clone());
        }
        Self::assemble(out, self.q_floor(), top, self.var_cap(), bound, exact)
    }
}
