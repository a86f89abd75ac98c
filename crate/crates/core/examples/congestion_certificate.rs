// Canonical paths on the boxes `T_n`, their vertex congestion, and the
// lower bound on `Cut T_n` it certifies.

use lampsep::separation::{self, TnDescriptor};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let desc = TnDescriptor::new(1, 2)?;
    let path = separation::canonical_path(desc, 2, 13)?;
    let labels: Vec<String> = path.iter().map(|&u| desc.element(u).to_string()).collect();
    println!("P(x, y) on T_1: {}", labels.join(" -> "));
    for n in 0..=2 {
        let desc = TnDescriptor::new(n, 2)?;
        let stats = separation::congestion_stats(desc, u128::MAX)?;
        let lb = separation::congestion_lower_bound(desc, &stats);
        println!(
            "T_{n}: {} vertices, max congestion {} <= {} ({}), longest path {} of {} vertices, Cut >= {}",
            stats.vertices,
            stats.max_congestion,
            stats.congestion_bound,
            stats.within_bound,
            stats.max_path_vertices,
            stats.path_vertex_limit,
            lb.cut_at_least
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
