// Sampled separation profile of `Z_2 wr Z`, printed as CSV.

use lampsep::cayley::GroupKind;
use lampsep::separation::{self, ProfileConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = ProfileConfig { radius: 8, sizes: vec![1, 2, 8, 16, 24, 64, 160, 400], samples: 3, ..ProfileConfig::default() };
    let rows = separation::sep_profile_table(&GroupKind::Lamplighter { modulus: 2 }, &config)?;
    print!("{}", separation::profile_csv(&rows));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
