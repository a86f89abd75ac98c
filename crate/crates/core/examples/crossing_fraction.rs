// How many canonical paths of `T_1` pass through each minimum cutset.

use lampsep::separation::{self, TnDescriptor};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let desc = TnDescriptor::new(1, 2)?;
    let t1 = separation::tn_graph(desc, 100)?;
    for w in separation::minimum_cutsets(&t1)? {
        let report = separation::verify_crossing(desc, &w)?;
        println!("{:?}: {} of {} paths = {}", w.indices(), report.crossing, report.pairs, report.fraction);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
