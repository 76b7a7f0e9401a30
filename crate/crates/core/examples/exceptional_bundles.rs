//! Chern data of the exceptional bundle behind each Wahl stratum.
//!
//! $ cargo run --example exceptional_bundles -- 1000

use ksba::correspondence::{bundle_from_stratum, enumerate_slope_set, euler_self_pairing, slope_vector};
use ksba::markov::enumerate_tree;
use num_bigint::BigInt;
use num_traits::One;

fn main() -> ksba::Result<()> {
    let max: BigInt = std::env::args().nth(1).as_deref().unwrap_or("100").parse().expect("integer bound");

    println!("{:<18} {:>6} {:>6} {:>10} {:>10} {:>4}", "stratum", "rank", "c1", "c2", "slope", "chi");
    for t in enumerate_tree(&max) {
        for n in t.entries().iter().filter(|e| !e.is_one()) {
            let b = bundle_from_stratum(&t, n)?;
            println!(
                "{:<18} {:>6} {:>6} {:>10} {:>10} {:>4}",
                format!("{t} keep {n}"),
                b.rank,
                b.c1,
                b.c2,
                slope_vector(&b).to_string(),
                euler_self_pairing(&b)?,
            );
        }
    }

    let slopes: Vec<String> = enumerate_slope_set(&max)?.iter().map(|(_, s)| s.to_string()).collect();
    println!("\nslopes mod Z and sign: {}", slopes.join(" "));
    Ok(())
}
