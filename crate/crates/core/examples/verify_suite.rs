//! Runs an identity suite on a small grid and prints the report, then repeats it with a
//! corrupted rank window to show a failure entry.

use qpair::verify::{run_suite, Fault, Suite, VerifyConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = VerifyConfig { ks: vec![2, 3], n_max: 6, ..VerifyConfig::default() };
    let report = run_suite(Suite::OddChain, &cfg)?;
    println!("{}: {} checks, passed {}", report.suite, report.checks_run, report.passed());
    print!("{}", report.to_csv());

    let broken = VerifyConfig { fault: Some(Fault::RankWindow), ..cfg };
    let report = run_suite(Suite::OddChain, &broken)?;
    let first = &report.failures[0];
    println!(
        "with the fault: {} failures, first {} [{}] at ({}) = {:?}: {} vs {}",
        report.failures.len(),
        first.identity,
        first.params,
        first.coordinates,
        first.at,
        first.lhs,
        first.rhs
    );
    Ok(())
}
