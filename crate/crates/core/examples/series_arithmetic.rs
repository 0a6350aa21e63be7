//! Exact truncated series: products, inverses and a substitution.

use qpair::series::{
    pochhammer_inf, pochhammer_inf_inv, pochhammer_inf_step, GaussInt, Monomial, Specialization, Truncation, Var,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = Truncation::new(12);
    // (q; q)_∞ and its inverse multiply to 1
    let euler = pochhammer_inf(&Monomial::q_pow(1), t)?;
    let partitions = pochhammer_inf_inv(&Monomial::q_pow(1), 1, t)?;
    println!("(q;q)_inf          = {euler}");
    println!("1/(q;q)_inf        = {partitions}");
    println!(
        "product is one     : {}",
        euler.mul(&partitions)?.agrees_with(&qpair::series::TruncatedSeries::one(t)).is_ok()
    );

    // (-a q; q)_∞ with a -> i
    let with_a = pochhammer_inf(&Monomial::new(-1, 1, 0, 0, 1), Truncation::with_cap(12, 12))?;
    let at_i = with_a.specialize(&Specialization::new().set(Var::A, GaussInt::i(), 0))?;
    println!("(-iq;q)_inf        = {at_i}");

    // (-q; q²)_∞ built directly, for comparison with a = q^-1, q -> q² above
    println!("(-q;q^2)_inf       = {}", pochhammer_inf_step(&Monomial::new(-1, 0, 0, 0, 1), 2, t)?);
    Ok(())
}
