// Exact `Cut F` by exhaustive search, next to the randomized upper bound.

use lampsep::cayley::Graph;
use lampsep::separation::{self, TnDescriptor};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k4 = Graph::unlabelled(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    let path = Graph::unlabelled(9, (1..9).map(|i| (i - 1, i)))?;
    let t1 = separation::tn_graph(TnDescriptor::new(1, 2)?, 100)?;
    for (name, g) in [("K4", &k4), ("path of 9", &path), ("T_1", &t1)] {
        let exact = separation::cut_exact(g)?;
        let heur = separation::cut_heuristic_upper(g, 16, 0);
        println!("{name}: Cut = {} via {:?}, heuristic {}", exact.cut_size, exact.cut_labels, heur.cut_size);
    }
    println!("minimum cutsets of T_1: {}", separation::minimum_cutsets(&t1)?.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
