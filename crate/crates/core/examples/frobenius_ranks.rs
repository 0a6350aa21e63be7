//! Successive ranks of Frobenius symbols, rank-bounded counts and the Joichi-Stanton split.

use qpair::frobenius::{count_c, joichi_stanton, joichi_stanton_inverse, FrobeniusSymbol, DEFAULT_SYMBOL_BOUND};
use qpair::overpartition::Overpartition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f: FrobeniusSymbol = "7',4,2',0/3',3,1,0'".parse()?;
    println!("{f}: weight {}, ranks {:?}", f.weight(), f.successive_ranks());

    let c = count_c(2, 2, 6, DEFAULT_SYMBOL_BOUND)?;
    println!(
        "symbols with ranks in [0, 1] by weight: {:?}",
        (0..=6).map(|n| c.total(n).to_string()).collect::<Vec<_>>()
    );

    let row: Overpartition = "12,12,8',7,6,3',2,1'".parse()?;
    let split = joichi_stanton(&row);
    println!("{row} -> associated {} marks {:?}", split.associated, split.marks);
    println!("inverse gives back the row: {}", joichi_stanton_inverse(&split)? == row);
    Ok(())
}
