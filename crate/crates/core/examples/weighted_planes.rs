//! The planes P(a^2, b^2, c^2) of Markov triples and their partial smoothings.
//!
//! $ cargo run --example weighted_planes

use ksba::markov::enumerate_tree;
use ksba::quotient::recognize_wahl;
use ksba::wps::{anticanonical_third, canonical_square, markov_plane, singular_points, type_a_surfaces};
use ksba::{MarkovTriple, WeightedPlane};
use num_bigint::BigInt;

fn main() -> ksba::Result<()> {
    let p = WeightedPlane::new(1, 2, 3)?;
    let sings: Vec<String> = singular_points(&p).iter().map(ToString::to_string).collect();
    println!("{p}: K^2 = {}, singular points {}", canonical_square(&p), sings.join(" "));

    println!();
    for t in enumerate_tree(&BigInt::from(200)) {
        let p = markov_plane(&t);
        let wahl: Vec<String> = singular_points(&p)
            .iter()
            .map(|s| format!("{s} (n={})", recognize_wahl(s).expect("Wahl").n()))
            .collect();
        println!("{:<16} K^2 = {}  -K/3 = {:<6} {}", p.to_string(), canonical_square(&p), anticanonical_third(&t), wahl.join(" "));
    }

    let t = MarkovTriple::new(1, 5, 13)?;
    println!("\npartial smoothings of {}:", markov_plane(&t));
    for s in type_a_surfaces(&t) {
        let kept: Vec<String> = s.kept.iter().map(|(_, sing, _)| sing.to_string()).collect();
        println!(
            "  smooth {:?}  keep [{}]  {} deformation parameters",
            s.smoothed,
            kept.join(", "),
            s.deformation_parameters()
        );
    }
    Ok(())
}
