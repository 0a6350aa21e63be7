//! Frequencies, unattached parts and valuations of an overpartition pair, and the pairs the
//! frequency conditions admit.

use qpair::overpartition::{enumerate_pairs, Overpartition, OverpartitionPair, DEFAULT_PAIR_BOUND};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda: Overpartition = "6',4,4,3".parse()?;
    let mu: Overpartition = "6,4',4,2',2,1".parse()?;
    let pair = OverpartitionPair::new(lambda, mu)?;
    println!("pair {pair}, weight {}", pair.weight());
    for j in 1..=7 {
        println!("  j={j}: unattached {:5}  valuation {}", pair.unattached(j), pair.valuation(j));
    }
    let st = pair.stats();
    println!("s={} t={} parts={}", st.s, st.t, st.m);

    let (k, i, n) = (2, 2, 3);
    let admitted: Vec<_> =
        enumerate_pairs(n, DEFAULT_PAIR_BOUND)?.into_iter().filter(|p| p.satisfies_thm1(k, i)).collect();
    println!("pairs of {n} meeting the ({k},{i}) frequency conditions: {}", admitted.len());
    for p in &admitted {
        println!("  {p}");
    }
    Ok(())
}
