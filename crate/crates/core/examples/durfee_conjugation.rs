//! Successive Durfee squares, k-conjugation of symbols and the Durfee-admissible counts.

use qpair::durfee::{count_d, durfee_squares, is_ki_admissible, k_conjugate, ConjugationContext};
use qpair::frobenius::{enumerate_symbols, FrobeniusSymbol, DEFAULT_SYMBOL_BOUND};
use qpair::partition::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = Partition::new(vec![8, 8, 7, 6, 5, 4, 4, 3, 2, 1, 1])?;
    let squares = durfee_squares(&p);
    println!("{p}: Durfee squares {:?}", squares.sizes);

    let pi: FrobeniusSymbol = "12,12,8',7,6,3',2,1'/14,12,10',8',6,5,3',2".parse()?;
    let ctx = ConjugationContext::new(&pi, 4);
    println!("pivot {}, swapped regions {} and {}", ctx.pivot, ctx.region_g1, ctx.region_g2);
    let image = k_conjugate(&pi, 4);
    println!("{pi} -> {image}");
    println!("involution: {}", k_conjugate(&image, 4) == pi);
    let small = enumerate_symbols(3, DEFAULT_SYMBOL_BOUND)?;
    let admissible: Vec<String> = small.iter().filter(|f| is_ki_admissible(f, 2, 2)).map(ToString::to_string).collect();
    println!("weight-3 symbols that are (2,2)-admissible: {}", admissible.join(" "));

    let d = count_d(3, 2, 6, DEFAULT_SYMBOL_BOUND)?;
    println!("D_(3,2) totals: {:?}", (0..=6).map(|n| d.total(n).to_string()).collect::<Vec<_>>());
    Ok(())
}
