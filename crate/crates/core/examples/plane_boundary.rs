//! Candidate boundary strata for degree d plane curves, gluing degrees and
//! the special boundary recognizers.
//!
//! $ cargo run --example plane_boundary -- 20

use ksba::boundary::{
    plane_boundary_catalog, recognize_special_boundary, smoothability_necessary, t1_degree,
    type_b_mn_predicates, CuspCycle, ForkData, SpecialSingularity, TypeBGluing, BOUNDARY_FORKS,
};
use ksba::numeric::rational;
use num_bigint::BigInt;

fn main() -> ksba::Result<()> {
    let d: BigInt = std::env::args().nth(1).as_deref().unwrap_or("20").parse().expect("integer degree");

    let c = plane_boundary_catalog(&d)?;
    println!("degree {d}, necessary conditions only");
    for s in &c.type_a {
        println!("  type A  {:<12} keeps {}", s.triple.to_string(), s.wahl);
    }
    for (m, n) in &c.type_b_mn {
        let p = type_b_mn_predicates(m, n)?;
        println!("  type B  ({m},{n})  degrees {}", p.degrees.describe());
    }

    println!();
    for (s1, s2, label) in [((1, 2), (1, 2), "two quadric cones"), ((-1, 6), (1, 6), "(2,3) blowup")] {
        let g = TypeBGluing::new(rational(s1.0, s1.1), rational(s2.0, s2.1), 0, vec![])?;
        println!(
            "{label:<18} T1 degree {}  smoothing {}",
            t1_degree(&g)?,
            smoothability_necessary(&g)?.as_str()
        );
    }

    println!();
    for (arms, center) in BOUNDARY_FORKS.iter().copied().chain([([2, 2, 5], 2)]) {
        let m = recognize_special_boundary(&SpecialSingularity::Fork(ForkData::new(arms, center)?));
        println!("fork {arms:?} centre {center}: {}", m.map_or("no match", |x| x.as_str()));
    }
    for cycle in [vec![3, 2, 2, 2, 2, 2, 2, 2], vec![4, 4, 4], vec![3, 3]] {
        let c = CuspCycle::new(cycle.iter().map(|&b| BigInt::from(b)).collect())?;
        let m = recognize_special_boundary(&SpecialSingularity::Cusp(c));
        println!("cusp {cycle:?}: {}", m.map_or("no match", |x| x.as_str()));
    }
    Ok(())
}
