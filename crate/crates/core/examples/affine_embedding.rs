// The lamplighter group inside an affine group `k x| k^*`: closed form
// against the word product, the commuting conjugates, and the exhaustive
// injectivity gap.

use lampsep::groups::{conjugates_commute_check, LamplighterElement};
use lampsep::numbers::Valuation;
use lampsep::regmaps::{self, AffineEmbeddingParams, AffineMap};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (Valuation::Archimedean, "2", "1"),
        (Valuation::p_adic(3)?, "1/3", "1"),
        (Valuation::t_adic(2)?, "{2; -1:1}", "{2; 0:1}"),
    ];
    for (val, a, b) in cases {
        let params = AffineEmbeddingParams::parse(val, a, b)?;
        let x = LamplighterElement::with_lamps([-1, 0, 2], 1);
        println!("[{val}, a = {a}, b = {b}] phi({x}) = {}", regmaps::phi_affine(&x, &params)?);
        println!("  conjugates commute up to |j| = 10: {}", conjugates_commute_check(&params.d(), &params.delta(), 10)?);
        let fact = regmaps::verify_factorization(&params, 5)?;
        println!("  closed form = word product on {} elements: {}", fact.checked, fact.first_mismatch.is_none());
        let report = regmaps::verify_regular_map(&AffineMap(params.clone()), 5)?;
        println!("  injective: {}, lipschitz constant: {:?}", report.injective, report.lipschitz_constant);
        let gap = regmaps::gap_survey(&params, -3, 3)?;
        println!("  window [-3, 3]: min gap ratio {}, half bound everywhere: {}", gap.min_ratio, gap.half_bound_all);
    }
    let params = AffineEmbeddingParams::parse(Valuation::Archimedean, "2", "1")?;
    let w = regmaps::injectivity_gap(&LamplighterElement::with_lamps([2], 0), &LamplighterElement::with_lamps([0, 1], 0), &params)?;
    println!("4 against 2 + 1: j_max = {}, ratio = {}", w.j_max, w.ratio);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
