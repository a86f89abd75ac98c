// Exact arithmetic in R, Q_p and F_p((t)) restricted to rationals and
// Laurent polynomials.

use lampsep::numbers::{has_norm_at_least_two, norm_compare, norm_ratio, Valuation, ValuedScalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let three_adic = Valuation::p_adic(3)?;
    let x = ValuedScalar::parse("18/5", three_adic)?;
    let y = ValuedScalar::parse("1/3", three_adic)?;
    println!("v_3(18/5) = {}, v_3(1/3) = {}", x.order().unwrap(), y.order().unwrap());
    println!("|18/5|_3 / |1/3|_3 = {}", norm_ratio(&x, &y)?);
    println!("|1/3|_3 >= 2: {}", has_norm_at_least_two(&y)?);

    let arch = Valuation::Archimedean;
    let a = ValuedScalar::parse("-7/2", arch)?;
    println!("|-7/2| vs |3|: {:?}", norm_compare(&a, &ValuedScalar::integer(3, arch)?)?);

    let t_adic = Valuation::t_adic(2)?;
    let t_inv = ValuedScalar::parse("{2; -1:1}", t_adic)?;
    let poly = ValuedScalar::parse("{2; 0:1,3:1}", t_adic)?;
    println!("t^-1 * (1 + t^3) = {}", t_inv.mul(&poly)?);
    println!("order of 1 + t^3: {}", poly.order().unwrap());
    println!("|t^-1| >= 2: {}", has_norm_at_least_two(&t_inv)?);
    match poly.inverse() {
        Ok(inv) => println!("inverse: {inv}"),
        Err(e) => println!("1 + t^3 has no inverse in the ring: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
