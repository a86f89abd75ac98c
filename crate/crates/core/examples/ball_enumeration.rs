// Balls in the Cayley graph of `Z_2 wr Z`, with the closed-form word length
// checked against breadth-first distance.

use lampsep::cayley;
use lampsep::groups::{lamp_word_length, lamplighter_generators};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let gens = lamplighter_generators(2)?;
    println!("generators: {:?}", gens.names());
    for radius in 0..=6 {
        let ball = cayley::ball(&gens, radius, cayley::DEFAULT_MAX_VERTICES)?;
        let agree = ball.elements.iter().zip(&ball.depth).all(|(x, &d)| lamp_word_length(x) == d as u64);
        println!(
            "radius {radius}: {} vertices, {} edges, word length matches BFS: {agree}",
            ball.len(),
            ball.graph.edge_count()
        );
    }
    let small = cayley::ball(&gens, 2, 100)?;
    print!("{}", small.graph.to_dot("ball2"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
