// Lamps sent to disjoint shifted copies of a permutation in
// `Sym_fin(Z) x| Z`, and the inclusion into `Z wr Z`.

use lampsep::groups::{FinitePerm, LamplighterElement};
use lampsep::regmaps::{self, SymShiftMap, WreathInclusion};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sigma = FinitePerm::cycle(&[0, 1, 2])?;
    let x = LamplighterElement::with_lamps([0, 1], 2);
    println!("phi({x}) = {}", regmaps::phi_symshift(&x, &sigma, 3)?);
    if let Err(e) = SymShiftMap::new(sigma.clone(), 2) {
        println!("step 2 rejected: {e}");
    }
    let report = regmaps::verify_regular_map(&SymShiftMap::new(sigma, 3)?, 5)?;
    println!("sym-shift: injective {}, lipschitz {}", report.injective, report.lipschitz);
    let report = regmaps::verify_regular_map(&WreathInclusion, 5)?;
    println!("Z wr Z inclusion: injective {}, lipschitz {}", report.injective, report.lipschitz);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
