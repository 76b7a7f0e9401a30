//! Resolve cyclic quotient singularities and pick out the Wahl ones.
//!
//! $ cargo run --example cyclic_quotients

use ksba::quotient::{
    classify, index, index_one_cover, link, milnor_invariants, recognize_wahl, resolve,
    smoothing_model,
};
use ksba::{CyclicQuotientSing, WahlData};

fn main() -> ksba::Result<()> {
    for (r, q) in [(4, 1), (7, 6), (19, 7), (25, 9), (25, 14), (49, 13)] {
        let s = CyclicQuotientSing::new(r, q)?;
        let res = resolve(&s);
        let disc: Vec<String> = res.discrepancies.iter().map(ToString::to_string).collect();
        println!(
            "{:<11} = {:<10} chain {:<14} discrepancies [{}]  index {}  {}  link {}",
            format!("1/{r}(1,{q})"),
            s.to_string(),
            res.chain.to_string(),
            disc.join(", "),
            index(&s),
            classify(&s).as_str(),
            link(&s),
        );
        if let Some(w) = recognize_wahl(&s) {
            println!("{:24} Wahl with n = {}, a = {}", "", w.n(), w.a());
        }
    }

    let w = WahlData::new(7, 3)?;
    let m = milnor_invariants(&w);
    let model = smoothing_model(&w);
    println!("\n{} = {}", w, w.singularity());
    println!("  smoothing  {} in 1/{}{:?}", model.equation(), model.order, model.weights);
    println!("  cover      {}", index_one_cover(&w));
    println!("  Milnor fibre: pi1 order {}, e = {}, Betti {:?}", m.pi1_order, m.euler, m.betti);
    Ok(())
}
