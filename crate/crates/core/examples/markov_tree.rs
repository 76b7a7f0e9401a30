//! Walk the Markov tree: enumerate, mutate, descend.
//!
//! $ cargo run --example markov_tree -- 200

use ksba::markov::{degree, descent_path, enumerate_tree, markov_numbers, neighbors};
use ksba::MarkovTriple;
use num_bigint::BigInt;

fn main() -> ksba::Result<()> {
    let max: BigInt = std::env::args().nth(1).as_deref().unwrap_or("200").parse().expect("integer bound");

    for t in enumerate_tree(&max) {
        let next: Vec<String> = neighbors(&t).iter().map(ToString::to_string).collect();
        println!("{:<16} degree {}  neighbours {}", t.to_string(), degree(&t), next.join(" "));
    }

    let numbers: Vec<String> = markov_numbers(&max).iter().map(ToString::to_string).collect();
    println!("\nMarkov numbers <= {max}: {}", numbers.join(", "));

    let far = MarkovTriple::new(5, 433, 6466)?;
    let path: Vec<String> = descent_path(&far).iter().map(ToString::to_string).collect();
    println!("\ndescent from {far}: {}", path.join(" -> "));
    Ok(())
}
