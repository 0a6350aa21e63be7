//! The three corollary families: both counting sides and the product expansion.

use qpair::overpartition::{
    corollary1_check, corollary1_product, corollary2_check, corollary4_check, corollary4_product, UnattachedReading,
    DEFAULT_PAIR_BOUND,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 8;
    let first = corollary1_check(2, n, DEFAULT_PAIR_BOUND)?;
    println!("first family k=2:  A {:?}", first.a.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("                   B agrees through n={n}: {}", first.first_mismatch().is_none());
    println!("  product: {}", corollary1_product(2, 9)?);

    let second = corollary2_check(3, n, DEFAULT_PAIR_BOUND)?;
    println!("second family k=3: weighted B {:?}", second.b.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("                   agrees: {}", second.first_mismatch().is_none());

    for reading in [UnattachedReading::Lambda, UnattachedReading::Mu] {
        let third = corollary4_check(2, 2, n, DEFAULT_PAIR_BOUND, reading)?;
        println!("third family k=2 i=2, {reading:?} reading: first mismatch {:?}", third.first_mismatch());
    }
    println!("  product: {}", corollary4_product(2, 2, 9)?);
    Ok(())
}
