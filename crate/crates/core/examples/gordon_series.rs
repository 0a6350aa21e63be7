//! The four-variable series R_{k,i}(a, b; x; q) and the pair counts read off its coefficients.

use qpair::hypergeometric::{series_r, series_r_tilde, SeriesParams};
use qpair::overpartition::{count_b, CountTable, DEFAULT_PAIR_BOUND};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (k, i, n) = (3, 2, 6);
    let p = SeriesParams::new(k, i64::from(i), i64::from(n) + 1);
    let r = series_r(&p)?;
    println!("R_{{{k},{i}}} has {} terms below q^{}", r.iter().count(), n + 1);
    for q in 0..=i64::from(n) {
        println!("  q^{q}: a^0 b^0 coefficient (all x) = {}", r.coeff_sum_x(0, 0, q)?);
    }
    let from_series = CountTable::from_series(&r, n)?;
    let enumerated = count_b(k, i, n, DEFAULT_PAIR_BOUND)?;
    println!("series table = enumerated pairs: {}", from_series == enumerated);
    println!("total weighted count at n={n}: {}", enumerated.total(n));

    let rt = series_r_tilde(&p)?;
    println!("R~_{{{k},{i}}} at q^{n}, a^1 b^1: {}", rt.coeff_sum_x(1, 1, i64::from(n))?);
    Ok(())
}
