//! Identity-checking suites over a parameter grid, with a serialisable report.
//!
//! Every check compares two independently computed objects (series, count tables or
//! per-weight count vectors) and records the first coefficient where they differ.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::durfee::{count_d, count_d_tilde};
use crate::frobenius::{count_c, count_c_tilde, rank_window, tally_symbols};
use crate::hypergeometric::{
    bailey_lattice_check, htilde_identities, jacobi_triple_product, multisum_d, multisum_d_tilde, q_gauss_check,
    qdiff_r_identities, qdiff_rtilde_identities, series_r, series_r_bilateral, series_r_tilde,
    series_r_tilde_bilateral, BaileyPair, HyperError, IdentityCheck, SeriesParams,
};
use crate::overpartition::{
    corollary1_check, corollary1_product, corollary2_check, corollary2_product, corollary4_check, corollary4_product,
    count_b, count_b_tilde, CorollarySides, CountTable, EnumError, UnattachedReading,
};
use crate::paths::{count_e, count_e_tilde, gamma_closed, gf_closed, gf_sum_closed, gf_sum_q_gauss, PathGf};
use crate::series::{GaussInt, Monomial, SeriesError, Specialization, TruncatedSeries, Truncation, Var};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Hyper(#[from] HyperError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("invalid grid: {0}")]
    Grid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    QdiffR,
    QdiffRtilde,
    HtildeIdentities,
    SeriesVsEnumeration,
    OddChain,
    EvenChain,
    GfPaths,
    QGauss,
    Jtp,
    Bailey,
    Corollaries,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::QdiffR,
        Suite::QdiffRtilde,
        Suite::HtildeIdentities,
        Suite::SeriesVsEnumeration,
        Suite::OddChain,
        Suite::EvenChain,
        Suite::GfPaths,
        Suite::QGauss,
        Suite::Jtp,
        Suite::Bailey,
        Suite::Corollaries,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::QdiffR => "qdiff-R",
            Suite::QdiffRtilde => "qdiff-Rtilde",
            Suite::HtildeIdentities => "htilde-identities",
            Suite::SeriesVsEnumeration => "thm12-series-vs-enum",
            Suite::OddChain => "thm3-chain",
            Suite::EvenChain => "thm4-chain",
            Suite::GfPaths => "gf-paths",
            Suite::QGauss => "q-gauss",
            Suite::Jtp => "jtp",
            Suite::Bailey => "bailey",
            Suite::Corollaries => "corollaries",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// Deliberate corruptions used to confirm that the suites can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Widens the successive-rank window by one at the top.
    RankWindow,
}

impl FromStr for Fault {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rank-window" => Ok(Fault::RankWindow),
            other => Err(VerifyError::Grid(format!("unknown fault '{other}'"))),
        }
    }
}

/// Grid for a run. `ks` and `i` narrow the default grid; suites with a fixed family of
/// parameters (corollaries, Bailey pairs) intersect it with their own.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub ks: Vec<u32>,
    pub i: Option<u32>,
    pub cutoff: i64,
    pub n_max: u32,
    pub deep: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { ks: vec![2, 3, 4], i: None, cutoff: 12, n_max: 10, deep: false, fault: None }
    }
}

impl VerifyConfig {
    /// Doubles cutoff and `n_max` when `deep` is set.
    pub fn effective(&self) -> (i64, u32) {
        if self.deep {
            (self.cutoff * 2, self.n_max * 2)
        } else {
            (self.cutoff, self.n_max)
        }
    }

    fn is(&self, range: impl Iterator<Item = u32>) -> Vec<u32> {
        range.filter(|i| self.i.is_none_or(|want| want == *i)).collect()
    }

    fn ki(&self, lo: u32, hi_of: impl Fn(u32) -> u32) -> Vec<(u32, u32)> {
        self.ks.iter().flat_map(|&k| self.is(lo..=hi_of(k)).into_iter().map(move |i| (k, i))).collect()
    }

    fn validate(&self) -> Result<(), VerifyError> {
        if self.ks.is_empty() || self.ks.iter().any(|&k| k < 2) {
            return Err(VerifyError::Grid(format!("every k must be at least 2, got {:?}", self.ks)));
        }
        if self.cutoff < 1 {
            return Err(VerifyError::Grid(format!("cutoff must be positive, got {}", self.cutoff)));
        }
        Ok(())
    }
}

/// One comparison that was run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub identity: String,
    pub params: String,
}

/// The first disagreement of a failed comparison. `at` lists the coordinates named by
/// `coordinates`: `a,b,x,q` for series, `s,t,n` for count tables, `n` for count vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub identity: String,
    pub params: String,
    pub coordinates: &'static str,
    pub at: Vec<i64>,
    pub lhs: GaussInt,
    pub rhs: GaussInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub params: VerifyConfig,
    pub checks_run: usize,
    pub checks: Vec<CheckRecord>,
    pub failures: Vec<Failure>,
    pub wall_time_ms: u128,
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per check, with the first mismatch filled in for failed ones.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("identity,params,status,at,lhs,rhs\n");
        for c in &self.checks {
            let fail = self.failures.iter().find(|f| f.identity == c.identity && f.params == c.params);
            let (status, at, lhs, rhs) = match fail {
                None => ("ok", String::new(), String::new(), String::new()),
                Some(f) => {
                    let at: Vec<String> = f.at.iter().map(i64::to_string).collect();
                    ("fail", at.join(" "), f.lhs.to_string(), f.rhs.to_string())
                }
            };
            let row = [c.identity.as_str(), &c.params, status, &at, &lhs, &rhs].map(csv_field);
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Outcome of one comparison: the check and its first mismatch, if any.
type Outcome = (CheckRecord, Option<Failure>);

struct Recorder {
    params: String,
    out: Vec<Outcome>,
}

impl Recorder {
    fn new(params: String) -> Self {
        Recorder { params, out: Vec::new() }
    }

    fn push(&mut self, identity: &str, miss: Option<(&'static str, Vec<i64>, GaussInt, GaussInt)>) {
        let record = CheckRecord { identity: identity.to_string(), params: self.params.clone() };
        let failure = miss.map(|(coordinates, at, lhs, rhs)| Failure {
            identity: identity.to_string(),
            params: self.params.clone(),
            coordinates,
            at,
            lhs,
            rhs,
        });
        self.out.push((record, failure));
    }

    fn series(&mut self, identity: &str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) {
        let miss = lhs.agrees_with(rhs).err().map(|m| {
            let e = m.at;
            ("a,b,x,q", vec![i64::from(e.a), i64::from(e.b), i64::from(e.x), e.q], m.lhs, m.rhs)
        });
        self.push(identity, miss);
    }

    fn identity(&mut self, c: &IdentityCheck) {
        self.series(&c.name, &c.lhs, &c.rhs);
    }

    fn tables(&mut self, identity: &str, lhs: &CountTable, rhs: &CountTable) {
        let miss = lhs
            .diff(rhs)
            .into_iter()
            .next()
            .map(|((s, t, n), l, r)| ("s,t,n", vec![i64::from(s), i64::from(t), i64::from(n)], l, r));
        self.push(identity, miss);
    }

    fn counts(&mut self, identity: &str, lhs: &[GaussInt], rhs: &[GaussInt]) {
        let miss = lhs
            .iter()
            .zip(rhs)
            .position(|(x, y)| x != y)
            .map(|n| ("n", vec![n as i64], lhs[n].clone(), rhs[n].clone()));
        self.push(identity, miss);
    }

    fn sides(&mut self, identity: &str, s: &CorollarySides) {
        self.counts(identity, &s.a, &s.b);
    }
}

type Cell<'a> = Box<dyn Fn() -> Result<Vec<Outcome>, VerifyError> + Send + Sync + 'a>;

fn cell<'a>(params: String, f: impl Fn(&mut Recorder) -> Result<(), VerifyError> + Send + Sync + 'a) -> Cell<'a> {
    Box::new(move || {
        let mut r = Recorder::new(params.clone());
        f(&mut r)?;
        Ok(r.out)
    })
}

/// Coefficients of `q^0..=q^n_max` at `a = b = x^0`.
fn column(s: &TruncatedSeries, n_max: u32) -> Result<Vec<GaussInt>, SeriesError> {
    (0..=n_max).map(|n| s.coeff(0, 0, 0, i64::from(n))).collect()
}

fn odd_c(k: u32, i: u32, n: u32, fault: Option<Fault>) -> Result<CountTable, EnumError> {
    match fault {
        None => count_c(k, i, n, n),
        Some(Fault::RankWindow) => {
            let (lo, hi) = rank_window(k, i, false);
            tally_symbols(n, n, move |f| f.ranks_within(lo, hi + 1))
        }
    }
}

fn even_c(k: u32, i: u32, n: u32, fault: Option<Fault>) -> Result<CountTable, EnumError> {
    match fault {
        None => count_c_tilde(k, i, n, n),
        Some(Fault::RankWindow) => {
            let (lo, hi) = rank_window(k, i, true);
            tally_symbols(n, n, move |f| f.ranks_within(lo, hi + 1))
        }
    }
}

fn cells(suite: Suite, cfg: &VerifyConfig) -> Vec<Cell<'_>> {
    let (cutoff, n_max) = cfg.effective();
    let fault = cfg.fault;
    let mut out: Vec<Cell<'_>> = Vec::new();
    match suite {
        Suite::QdiffR | Suite::QdiffRtilde | Suite::HtildeIdentities => {
            for &k in &cfg.ks {
                out.push(cell(format!("k={k}, cutoff={cutoff}"), move |r| {
                    let list = match suite {
                        Suite::QdiffR => qdiff_r_identities(k, cutoff)?,
                        Suite::QdiffRtilde => qdiff_rtilde_identities(k, cutoff)?,
                        _ => htilde_identities(k, cutoff)?,
                    };
                    list.iter().for_each(|c| r.identity(c));
                    Ok(())
                }));
            }
        }
        Suite::SeriesVsEnumeration => {
            for (k, i) in cfg.ki(1, |k| k) {
                let n = cutoff as u32;
                out.push(cell(format!("k={k}, i={i}, n<={n}"), move |r| {
                    let p = SeriesParams::new(k, i64::from(i), cutoff + 1);
                    let odd = CountTable::from_series(&series_r(&p)?, n)?;
                    r.tables("R series = B enumeration", &odd, &count_b(k, i, n, n)?);
                    let even = CountTable::from_series(&series_r_tilde(&p)?, n)?;
                    r.tables("R~ series = B~ enumeration", &even, &count_b_tilde(k, i, n, n)?);
                    Ok(())
                }));
            }
        }
        Suite::OddChain | Suite::EvenChain => {
            let even = suite == Suite::EvenChain;
            for (k, i) in cfg.ki(1, |k| k) {
                out.push(cell(format!("k={k}, i={i}, n<={n_max}"), move |r| {
                    let n = n_max;
                    let (b, c, d, e) = if even {
                        (
                            count_b_tilde(k, i, n, n)?,
                            even_c(k, i, n, fault)?,
                            count_d_tilde(k, i, n, n)?,
                            count_e_tilde(k, i, n, n)?,
                        )
                    } else {
                        (count_b(k, i, n, n)?, odd_c(k, i, n, fault)?, count_d(k, i, n, n)?, count_e(k, i, n, n)?)
                    };
                    let t = if even { "~" } else { "" };
                    r.tables(&format!("B{t} pairs = C{t} rank-bounded symbols"), &b, &c);
                    r.tables(&format!("B{t} pairs = D{t} Durfee-admissible symbols"), &b, &d);
                    r.tables(&format!("B{t} pairs = E{t} lattice paths"), &b, &e);
                    Ok(())
                }));
            }
        }
        Suite::GfPaths => {
            let peaks = if cfg.deep { 8 } else { 4 };
            for &k in &cfg.ks {
                for even in [false, true] {
                    let tag = if even { "even" } else { "odd" };
                    out.push(cell(format!("k={k}, {tag}, N<={peaks}, cutoff={cutoff}"), move |r| {
                        let t = Truncation::new(cutoff);
                        let rec = PathGf::new(k, peaks, even, t)?;
                        for big_n in 0..=peaks {
                            for i in cfg.is(1..=k) {
                                let c = gf_closed(k, i, big_n, even, t)?;
                                r.series(
                                    &format!("path gf recurrence = closed sum (i={i}, N={big_n})"),
                                    &rec.e(i, big_n),
                                    &c,
                                );
                            }
                            for i in cfg.is(0..=k - 1) {
                                let c = gamma_closed(k, i, big_n, even, t)?;
                                r.series(
                                    &format!("companion recurrence = closed sum (i={i}, N={big_n})"),
                                    &rec.gamma(i, big_n),
                                    &c,
                                );
                            }
                        }
                        for i in cfg.is(1..=k) {
                            let p = SeriesParams::new(k, i64::from(i), cutoff);
                            let bilateral = if even { series_r_tilde_bilateral(&p)? } else { series_r_bilateral(&p)? };
                            let closed = gf_sum_closed(k, i, even, t)?;
                            r.series(
                                &format!("sum over N of closed sums = bilateral series (i={i})"),
                                &closed,
                                &bilateral,
                            );
                            let gauss = gf_sum_q_gauss(k, i, even, t)?;
                            r.series(
                                &format!("q-Gauss exchange of the sum = bilateral series (i={i})"),
                                &gauss,
                                &bilateral,
                            );
                        }
                        Ok(())
                    }));
                }
            }
        }
        Suite::QGauss => {
            let reach = if cfg.deep { 8 } else { 4 };
            for n in -reach..=reach {
                out.push(cell(format!("n={n}, cutoff={cutoff}"), move |r| {
                    let (l, rhs) = q_gauss_check(n, cutoff)?;
                    r.series("q-Gauss sum = product", &l, &rhs);
                    Ok(())
                }));
            }
        }
        Suite::Jtp => {
            let zs = [
                ("1", Monomial::q_pow(0)),
                ("-1", Monomial::new(-1, 0, 0, 0, 0)),
                ("i", Monomial::new(GaussInt::i(), 0, 0, 0, 0)),
                ("q", Monomial::q_pow(1)),
                ("-q", Monomial::new(-1, 0, 0, 0, 1)),
                ("q^-1", Monomial::q_pow(-1)),
                ("q^2", Monomial::q_pow(2)),
                ("-i q^3", Monomial::new(GaussInt::new(0, -1), 0, 0, 0, 3)),
            ];
            for (label, z) in zs {
                out.push(cell(format!("z={label}, cutoff={cutoff}"), move |r| {
                    let (l, rhs) = jacobi_triple_product(&z, cutoff)?;
                    r.series("triple product: bilateral sum = product", &l, &rhs);
                    Ok(())
                }));
            }
        }
        Suite::Bailey => {
            let depth = if cfg.deep { 8 } else { 4 };
            out.push(cell(format!("n<={depth}, cutoff={cutoff}"), move |r| {
                for (name, built) in
                    [("slater B3", BaileyPair::b3(depth, cutoff)), ("slater E3", BaileyPair::e3(depth, cutoff))]
                {
                    match built {
                        Ok(_) => r.push(&format!("{name}: Bailey pair relation"), None),
                        Err(HyperError::BaileyRelation { n, mismatch }) => {
                            let e = mismatch.at;
                            r.push(
                                &format!("{name}: Bailey pair relation"),
                                Some((
                                    "n,a,b,x,q",
                                    vec![n as i64, i64::from(e.a), i64::from(e.b), i64::from(e.x), e.q],
                                    mismatch.lhs,
                                    mismatch.rhs,
                                )),
                            );
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
                Ok(())
            }));
            let lattice_cut = cutoff.min(if cfg.deep { 20 } else { 10 });
            let lattice_k =
                cfg.ks.iter().copied().filter(|&k| k <= 3).chain([1]).collect::<std::collections::BTreeSet<_>>();
            for k in lattice_k {
                for i in 0..=k {
                    out.push(cell(format!("k={k}, i={i}, cutoff={lattice_cut}"), move |r| {
                        let n = lattice_cut.max(1) as usize;
                        for (name, pair) in
                            [("B3", BaileyPair::b3(n, lattice_cut)?), ("E3", BaileyPair::e3(n, lattice_cut)?)]
                        {
                            let (l, rhs) = bailey_lattice_check(&pair, k, i, lattice_cut)?;
                            r.series(&format!("Bailey lattice transform of {name}"), &l, &rhs);
                        }
                        Ok(())
                    }));
                }
            }
            for (k, i) in cfg.ki(1, |k| k) {
                out.push(cell(format!("k={k}, i={i}, n<={n_max}"), move |r| {
                    let p = SeriesParams::new(k, i64::from(i), i64::from(n_max) + 1);
                    let d = CountTable::from_series(&multisum_d(&p)?, n_max)?;
                    r.tables("Durfee multisum = D enumeration", &d, &count_d(k, i, n_max, n_max)?);
                    let dt = CountTable::from_series(&multisum_d_tilde(&p)?, n_max)?;
                    r.tables("even Durfee multisum = D~ enumeration", &dt, &count_d_tilde(k, i, n_max, n_max)?);
                    Ok(())
                }));
            }
        }
        Suite::Corollaries => {
            // the enumerations run to cutoff, the product expansions four terms further
            let n = cutoff as u32;
            let pc = cutoff + 4;
            let pn = (pc - 1) as u32;
            for k in [2, 3] {
                out.push(cell(format!("first family, k={k}, n<={n}, product cutoff={pc}"), move |r| {
                    let s = corollary1_check(k, pn, pn)?;
                    r.counts(
                        "overpartitions avoiding multiples of 2k-1 = doubled-index conditions",
                        &s.a[..=n as usize],
                        &s.b[..=n as usize],
                    );
                    let prod = corollary1_product(k, pc)?;
                    r.counts(
                        "product expansion = overpartitions avoiding multiples of 2k-1",
                        &column(&prod, pn)?,
                        &s.a,
                    );
                    let spec = Specialization::new().set(Var::A, 1, 0).set(Var::B, 1, -1).q_power(2);
                    let bil = series_r_bilateral(&SeriesParams::new(k, i64::from(k), pc))?.specialize_to(&spec, pc)?;
                    r.series("R_{k,k} at a=1, b=1/q, q->q^2 = product", &bil, &prod);
                    r.counts("R_{k,k} at a=1, b=1/q, q->q^2 = doubled-index conditions", &column(&bil, pn)?, &s.b);
                    Ok(())
                }));
            }
            for k in [3, 4] {
                out.push(cell(format!("second family, k={k}, n<={n}, product cutoff={pc}"), move |r| {
                    let s = corollary2_check(k, n, n)?;
                    r.sides("weighted pairs at i=k-1 = pairs with even mu", &s);
                    let prod = corollary2_product(k, pc)?;
                    r.counts("product expansion = pairs with even mu", &column(&prod, n)?, &s.a);
                    let spec = Specialization::new().set(Var::A, GaussInt::i(), 0).set(Var::B, GaussInt::new(0, -1), 0);
                    let bil = series_r_tilde_bilateral(&SeriesParams::new(k, i64::from(k) - 1, pc))?
                        .specialize_to(&spec, pc)?;
                    r.series("R~_{k,k-1} at a=i, b=-i = product", &bil, &prod);
                    Ok(())
                }));
            }
            for k in [2, 3] {
                for i in 2..=k {
                    out.push(cell(format!("third family, k={k}, i={i}, n<={n}, product cutoff={pc}"), move |r| {
                        let s = corollary4_check(k, i, pn, pn, UnattachedReading::Lambda)?;
                        r.counts(
                            "restricted partition pairs = doubled-index conditions",
                            &s.a[..=n as usize],
                            &s.b[..=n as usize],
                        );
                        let prod = corollary4_product(k, i, pc)?;
                        r.counts("product expansion = restricted partition pairs", &column(&prod, pn)?, &s.a);
                        Ok(())
                    }));
                }
            }
        }
    }
    out
}

/// Runs every check of `suite` over the grid in `cfg`, cells in parallel.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    let start = Instant::now();
    let grid = cells(suite, cfg);
    let results: Vec<Vec<Outcome>> = grid.par_iter().map(|c| c()).collect::<Result<_, _>>()?;
    let mut checks = Vec::new();
    let mut failures = Vec::new();
    for (record, failure) in results.into_iter().flatten() {
        checks.push(record);
        failures.extend(failure);
    }
    failures.sort_by(|x, y| (&x.identity, &x.params, &x.at).cmp(&(&y.identity, &y.params, &y.at)));
    Ok(VerificationReport {
        suite,
        params: cfg.clone(),
        checks_run: checks.len(),
        checks,
        failures,
        wall_time_ms: start.elapsed().as_millis(),
    })
}
