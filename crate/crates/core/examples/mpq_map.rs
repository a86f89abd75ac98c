// The lamplighter group mapped into `M_{p,q} = Z[1/pq] x| Z`.

use lampsep::groups::{LamplighterElement, MpqParams};
use lampsep::regmaps::{self, MpqMap};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (p, q) in [(2, 1), (3, 2)] {
        let params = MpqParams::new(p, q)?;
        let x = LamplighterElement::with_lamps([0, 2], 1);
        println!("M_{{{p},{q}}}: phi({x}) = {}", regmaps::phi_mpq(&x, params)?);
        let report = regmaps::verify_regular_map(&MpqMap(params), 6)?;
        println!(
            "  radius 6: {} elements, {} edges, injective {}, max fibre {}, lipschitz constant {:?}",
            report.domain_size, report.edges_checked, report.injective, report.max_fiber, report.lipschitz_constant
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
