//! The eight acceptance criteria, one line each. Runs as a plain binary so the summary is
//! always printed; exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rayon::prelude::*;

use qpair::durfee::{k_conjugate, ConjugationContext};
use qpair::frobenius::{enumerate_symbols, joichi_stanton, joichi_stanton_inverse, rank_window, FrobeniusSymbol};
use qpair::overpartition::{overpartitions, overpartitions_with_len, Overpartition};
use qpair::paths::{enumerate_paths, path_to_symbol, symbol_to_path, LatticePath};
use qpair::verify::{run_suite, Suite, VerifyConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn suites(list: &[Suite], cfg: VerifyConfig) -> Outcome {
    let mut checks = 0;
    for &s in list {
        let rep = run_suite(s, &cfg).map_err(|e| format!("{s}: {e}"))?;
        if let Some(f) = rep.failures.first() {
            return Err(format!(
                "{s}: {} [{}] at {}={:?}: {} != {}",
                f.identity, f.params, f.coordinates, f.at, f.lhs, f.rhs
            ));
        }
        checks += rep.checks_run;
    }
    Ok(format!("{checks} checks"))
}

fn grid(ks: &[u32], cutoff: i64, n_max: u32) -> VerifyConfig {
    VerifyConfig { ks: ks.to_vec(), cutoff, n_max, ..VerifyConfig::default() }
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn series_equal_enumeration() -> Outcome {
    suites(&[Suite::SeriesVsEnumeration], grid(&[2, 3, 4], 12, 12))
}

fn four_way_chains() -> Outcome {
    suites(&[Suite::OddChain, Suite::EvenChain], grid(&[2, 3], 12, 10))
}

fn sym(s: &str) -> FrobeniusSymbol {
    s.parse().expect("golden symbol parses")
}

fn parts(o: &str) -> Vec<u32> {
    let js = joichi_stanton(&o.parse::<Overpartition>().expect("golden row parses"));
    [js.associated.parts().to_vec(), vec![u32::MAX], js.marks].concat()
}

fn worked_examples() -> Outcome {
    let fig1 =
        LatticePath::parse_compact("2: SE NE S SE NE SE NE S NE SW NE SE; a 1 b ab 1").map_err(|e| e.to_string())?;
    ensure(fig1.major_index() == 26, || format!("first path major index {}", fig1.major_index()))?;
    let fig2 = LatticePath::parse_compact("1: NE SW NE SW NE SE NE S SE NE NE SW SE NE SW; ab ab 1 a ab ab")
        .map_err(|e| e.to_string())?;
    ensure(fig2.major_index() == 19, || format!("second path major index {}", fig2.major_index()))?;

    let ranks = sym("7',4,2',0/3',3,1,0'").successive_ranks();
    ensure(ranks == [4, 1, 2, 0], || format!("successive ranks {ranks:?}"))?;

    let fig3 = LatticePath::parse_compact(
        "2: SE SE NE NE SW SE NE NE NE S NE NE SE SE SE NE SE NE NE S SE SE E NE NE SW NE SE NE NE S SE SE; \
         ab a 1 1 b ab 1 b",
    )
    .map_err(|e| e.to_string())?;
    let f = path_to_symbol(&fig3, 5, 3).map_err(|e| e.to_string())?;
    ensure(f.to_string() == "(14,12',12,8,7',4',3',2)/(9',8',8,7',5',4',3,1)", || format!("third path gives {f}"))?;
    ensure((f.s(), f.t(), f.weight()) == (3, 4, 115), || format!("(s,t,n) = {:?}", (f.s(), f.t(), f.weight())))?;
    ensure(symbol_to_path(&f, 5, 3).ok() == Some(fig3), || "symbol does not map back to the third path".into())?;

    let sep = u32::MAX;
    ensure(parts("12,12,8',7,6,3',2,1'") == [9, 9, 6, 5, 4, 2, 1, 1, sep, 7, 5, 2], || "top row split".into())?;
    ensure(parts("14,12,10',8',6,5,3',2") == [11, 9, 8, 7, 5, 4, 3, 2, sep, 6, 3, 2], || "bottom row split".into())?;
    let pi = sym("12,12,8',7,6,3',2,1'/14,12,10',8',6,5,3',2");
    let image = ConjugationContext::new(&pi, 4).conjugate();
    ensure(image.to_string() == "(11,9,7',7,6,3',2,1')/(15,15,11',8',6,5,3',2)", || format!("4-conjugate {image}"))?;
    ensure(k_conjugate(&image, 4) == pi, || "4-conjugation does not return".into())?;
    Ok("9 goldens".into())
}

fn q_difference() -> Outcome {
    suites(&[Suite::QdiffR, Suite::QdiffRtilde, Suite::HtildeIdentities], grid(&[2, 3, 4], 12, 10))
}

fn path_generating_functions() -> Outcome {
    suites(&[Suite::GfPaths], grid(&[2, 3, 4], 12, 10))
}

fn bailey_machinery() -> Outcome {
    suites(&[Suite::Bailey], grid(&[2, 3, 4], 12, 10))
}

fn corollaries() -> Outcome {
    suites(&[Suite::Corollaries], grid(&[2, 3, 4], 12, 12))
}

fn path_round_trips() -> Result<usize, String> {
    let cells: Vec<(u32, u32, u32)> =
        (2..=4).flat_map(|k| (1..=k).flat_map(move |i| (0..=10).map(move |n| (k, i, n)))).collect();
    let counts = cells
        .par_iter()
        .map(|&(k, i, n)| {
            let (lo, hi) = rank_window(k, i, false);
            let mut done = 0;
            for p in enumerate_paths(k, i, n, false, n).map_err(|e| e.to_string())? {
                let f = path_to_symbol(&p, k, i).map_err(|e| format!("k={k} i={i}: {e}"))?;
                ensure(f.weight() == n && symbol_to_path(&f, k, i).as_ref() == Ok(&p), || {
                    format!("k={k} i={i}: path {p} does not return")
                })?;
                done += 1;
            }
            for f in enumerate_symbols(n, n).map_err(|e| e.to_string())?.iter().filter(|f| f.ranks_within(lo, hi)) {
                let p = symbol_to_path(f, k, i).map_err(|e| format!("k={k} i={i} {f}: {e}"))?;
                ensure(path_to_symbol(&p, k, i).as_ref() == Ok(f), || {
                    format!("k={k} i={i}: symbol {f} does not return")
                })?;
                done += 1;
            }
            Ok(done)
        })
        .collect::<Result<Vec<usize>, String>>()?;
    Ok(counts.iter().sum())
}

fn conjugation_sweep() -> Result<usize, String> {
    let symbols: Vec<FrobeniusSymbol> =
        (0..=10).into_par_iter().map(|n| enumerate_symbols(n, n).expect("within bound")).flatten().collect();
    symbols
        .par_iter()
        .map(|f| {
            for k in 2..=4 {
                let g = k_conjugate(f, k);
                ensure(g.weight() == f.weight() && k_conjugate(&g, k) == *f, || format!("k={k}: {f} -> {g}"))?;
            }
            Ok(())
        })
        .collect::<Result<(), String>>()?;
    Ok(symbols.len())
}

fn joichi_stanton_round_trips() -> Result<usize, String> {
    let mut rows: Vec<Overpartition> = (0..=10).flat_map(overpartitions).collect();
    rows.extend((0..=10).flat_map(|w| (1..=6).flat_map(move |len| overpartitions_with_len(w, len))));
    for o in &rows {
        let back = joichi_stanton_inverse(&joichi_stanton(o)).map_err(|e| e.to_string())?;
        ensure(&back == o, || format!("{o} returns as {back}"))?;
    }
    Ok(rows.len())
}

fn ring_laws() -> Result<usize, String> {
    let cases = 128;
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    let strategy = (common::series(), common::series(), common::series());
    runner
        .run(&strategy, |(x, y, z)| {
            let check = |l, r| common::same(&l, &r).map_err(TestCaseError::fail);
            check(&x + &y, &y + &x)?;
            check(&x * &y, &y * &x)?;
            check(&(&x * &y) * &z, &x * &(&y * &z))?;
            check(&x * &(&y + &z), &(&x * &y) + &(&x * &z))?;
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(cases as usize)
}

fn structural() -> Outcome {
    let paths = path_round_trips()?;
    let symbols = conjugation_sweep()?;
    let rows = joichi_stanton_round_trips()?;
    let cases = ring_laws()?;
    Ok(format!("{paths} path/symbol round trips, {symbols} symbols conjugated, {rows} rows split, {cases} ring cases"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 series coefficients equal pair counts", series_equal_enumeration),
        ("2 four-way count chains", four_way_chains),
        ("3 worked examples", worked_examples),
        ("4 q-difference relations", q_difference),
        ("5 path generating functions", path_generating_functions),
        ("6 Bailey pairs, lattice and multisums", bailey_machinery),
        ("7 corollary counts and products", corollaries),
        ("8 bijections, involutions and ring laws", structural),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({detail}, {secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({why}, {secs:.1}s)");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
