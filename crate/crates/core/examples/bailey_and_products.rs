//! Bailey pairs, the lattice transform, the triple product and the q-Gauss sum.

use qpair::hypergeometric::{bailey_lattice_check, jacobi_triple_product, q_gauss_check, BaileyPair};
use qpair::series::{GaussInt, Monomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cutoff = 10;
    // construction checks the pair relation
    let b3 = BaileyPair::b3(cutoff as usize, cutoff)?;
    let e3 = BaileyPair::e3(cutoff as usize, cutoff)?;
    for (name, pair) in [("B3", &b3), ("E3", &e3)] {
        for (k, i) in [(2, 1), (3, 2)] {
            let (lhs, rhs) = bailey_lattice_check(pair, k, i, cutoff)?;
            println!(
                "{name} lattice k={k} i={i}: {}",
                if lhs.agrees_with(&rhs).is_ok() { "agrees" } else { "differs" }
            );
        }
    }
    let (sum, product) = jacobi_triple_product(&Monomial::new(GaussInt::i(), 0, 0, 0, 1), 16)?;
    println!("triple product at z = iq: {sum}");
    println!("  sides agree: {}", sum.agrees_with(&product).is_ok());
    let (lhs, rhs) = q_gauss_check(2, 8)?;
    println!("q-Gauss n=2 agrees: {}", lhs.agrees_with(&rhs).is_ok());
    Ok(())
}
