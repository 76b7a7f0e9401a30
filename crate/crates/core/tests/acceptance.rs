//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Time limits are wall-clock and pinned below.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use ksba::boundary::{
    plane_boundary_catalog, recognize_special_boundary, t1_degree, CuspCycle, ForkData,
    SpecialBoundary, SpecialSingularity, TypeBGluing,
};
use ksba::correspondence::{
    bundle_from_stratum, c2_from_formula, degree_congruence, euler_self_pairing, lattice_check,
};
use ksba::markov::{descent_path, enumerate_tree};
use ksba::numeric::{hj_evaluate, hj_expand, parse_rational, rational};
use ksba::quotient::{index, milnor_invariants, recognize_wahl, resolve};
use ksba::wps::{canonical_square, markov_plane, stratum_wahl, vertex_singularity};
use ksba::{CyclicQuotientSing, WahlData};

use common::*;

const MARKOV_LIMIT: Duration = Duration::from_secs(10);
const TYPE_A_LIMIT: Duration = Duration::from_secs(5);
const DISCREPANCY_LIMIT: Duration = Duration::from_secs(30);
const SUITE_LIMIT: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn small(n: &BigInt) -> i64 {
    n.try_into().unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    check(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

fn markov_oracle() -> Outcome {
    let start = Instant::now();
    let tree = enumerate_tree(&big(2000));
    let found: BTreeSet<[u64; 3]> = tree
        .iter()
        .map(|t| t.entries().clone().map(|e| (&e).try_into().unwrap()))
        .collect();
    for t in &tree {
        check(descent_path(t).last().is_some_and(|r| r.is_root()), || format!("{t} does not descend"))?;
    }
    let took = within(start, MARKOV_LIMIT)?;
    let brute = markov_brute_force(2000);
    check(found == brute, || format!("tree has {} triples, brute force {}", found.len(), brute.len()))?;
    Ok(format!("{} triples with max <= 2000, tree and descent in {took:.2?}", found.len()))
}

fn type_a_arithmetic() -> Outcome {
    let start = Instant::now();
    let tree = enumerate_tree(&big(1000));
    let nine = rational(9, 1);
    for t in &tree {
        let p = markov_plane(t);
        check(canonical_square(&p) == nine, || format!("K^2 != 9 for {t}"))?;
        let e = t.entries();
        for i in 0..3 {
            check(e[i].gcd(&e[(i + 1) % 3]).is_one(), || format!("{t} not pairwise coprime"))?;
            check(!(&e[i] % 3u32).is_zero(), || format!("{t} has an entry divisible by 3"))?;
            match vertex_singularity(&p, i) {
                None => check(e[i].is_one(), || format!("{t}: missing vertex {i}"))?,
                Some(s) => {
                    let w = recognize_wahl(&s).ok_or_else(|| format!("{t}: vertex {s} not Wahl"))?;
                    check(w.n() == &e[i], || format!("{t}: vertex {i} has index {}", w.n()))?;
                }
            }
        }
    }
    let took = within(start, TYPE_A_LIMIT)?;
    Ok(format!("{} planes P(a^2,b^2,c^2), max entry <= 1000, in {took:.2?}", tree.len()))
}

fn wahl_invariants() -> Outcome {
    let mut count = 0;
    for n in 2..=50i64 {
        for a in (1..n).filter(|a| a.gcd(&n) == 1) {
            let w = WahlData::new(n, a).map_err(|e| e.to_string())?;
            check(index(&w.singularity()) == big(n), || format!("index of ({n},{a})"))?;
            let m = milnor_invariants(&w);
            check(
                m.pi1_order == big(n) && m.euler.is_one() && m.betti == [big(1), big(0), big(0)],
                || format!("Milnor invariants of ({n},{a})"),
            )?;
            count += 1;
        }
    }
    let forward = wahl_chains_forward(30);
    let mut chains = BTreeSet::new();
    for n in 2..=30i64 {
        for a in (1..n).filter(|a| a.gcd(&n) == 1) {
            let c: Vec<i64> =
                resolve(&WahlData::new(n, a).unwrap().singularity()).chain.entries().iter().map(small).collect();
            chains.insert(c.clone());
            chains.insert(c.into_iter().rev().collect());
        }
    }
    check(forward == chains, || "resolution chains differ from the [4]-rooted search".into())?;
    Ok(format!("{count} Wahl singularities n <= 50; {} chains n <= 30 match the search", forward.len()))
}

fn discrepancy_suite() -> Outcome {
    let start = Instant::now();
    let zero = rational(0, 1);
    let minus_one = rational(-1, 1);
    let mut count = 0;
    for r in 2..=400i64 {
        for q in (1..r).filter(|q| q.gcd(&r) == 1) {
            let chain = hj_expand(r, q).map_err(|e| e.to_string())?;
            check(hj_evaluate(&chain) == (big(r), big(q)), || format!("round trip 1/{r}(1,{q})"))?;
            let s = CyclicQuotientSing::new(r, q).unwrap();
            let res = resolve(&s);
            check(res.discrepancies.iter().all(|a| *a > minus_one && *a <= zero), || {
                format!("discrepancy out of range for 1/{r}(1,{q})")
            })?;
            let all_zero = res.discrepancies.iter().all(Zero::is_zero);
            check(all_zero == (q == r - 1), || format!("Du Val mismatch for 1/{r}(1,{q})"))?;
            let (r0, q0) = (small(s.r()), small(s.q()));
            let oracle = discrepancy_closed_form(r0, q0, &res.chain.entries().iter().map(small).collect::<Vec<_>>());
            check(res.discrepancies == oracle, || format!("closed form differs for 1/{r}(1,{q})"))?;
            count += 1;
        }
    }
    let took = within(start, DISCREPANCY_LIMIT)?;
    Ok(format!("{count} singularities r <= 400 in {took:.2?}"))
}

fn bundle_shadow() -> Outcome {
    let mut count = 0;
    for t in enumerate_tree(&big(1000)) {
        for n in t.entries().iter().filter(|e| !e.is_one()) {
            let w = stratum_wahl(&t, n).map_err(|e| e.to_string())?;
            let b = bundle_from_stratum(&t, n).map_err(|e| format!("{t} keep {n}: {e}"))?;
            check(c2_from_formula(n, &b.c1).is_integer(), || format!("c2 not integral for {t}, {n}"))?;
            let n2 = rational(n * n, 1);
            let expected = rational(1, 2) - rational(1, 1) / (rational(2, 1) * n2);
            check(b.discriminant == expected, || format!("discriminant for {t}, {n}"))?;
            check(euler_self_pairing(&b).ok() == Some(BigInt::one()), || format!("chi != 1 for {t}, {n}"))?;
            check(lattice_check(n, &b.c1), || format!("gcd(c1,n) != 1 for {t}, {n}"))?;
            check(degree_congruence(n, w.a(), &b.c1), || format!("congruence fails for {t}, {n}"))?;
            count += 1;
        }
    }
    let t112 = ksba::MarkovTriple::new(1, 1, 2).unwrap();
    let b = bundle_from_stratum(&t112, &big(2)).map_err(|e| e.to_string())?;
    check((b.rank.clone(), b.c1.clone(), b.c2.clone()) == (big(2), big(1), big(1)), || {
        format!("(1,1,2) gives ({}, {}, {})", b.rank, b.c1, b.c2)
    })?;
    Ok(format!("{count} strata with entries <= 1000; (1,1,2) -> (2,1,1)"))
}

fn t1_fixtures() -> Outcome {
    let text = std::fs::read_to_string(fixture_path("self_intersections.json")).map_err(|e| e.to_string())?;
    let frozen: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    check(frozen == toric_fixtures(50), || "frozen fixtures differ from the toric oracle".into())?;
    let parse = |v: &serde_json::Value| parse_rational(v.as_str().unwrap()).unwrap();
    let half = parse(&frozen["ruling_p112"]);
    let basic = TypeBGluing::new(half.clone(), half, 0, vec![big(2)]).unwrap();
    check(t1_degree(&basic).ok() == Some(big(1)), || "basic gluing degree != 1".into())?;
    let pairs = frozen["mn_blowup"].as_array().unwrap();
    for p in pairs {
        let (m, n) = (p["m"].as_i64().unwrap(), p["n"].as_i64().unwrap());
        let (e, l) = (parse(&p["exceptional"]), parse(&p["line"]));
        check(e == rational(-1, m * n) && l == rational(1, m * n), || format!("fixture ({m},{n})"))?;
        let g = TypeBGluing::new(e, l, 0, vec![big(m), big(n)]).unwrap();
        check(t1_degree(&g).ok() == Some(big(0)), || format!("({m},{n}) gluing degree != 0"))?;
    }
    Ok(format!("ruling 1/2 + 1/2 -> 1; {} coprime (m,n) <= 50 -> 0", pairs.len()))
}

fn catalog_and_recognizers() -> Outcome {
    let kept = |d: i64| plane_boundary_catalog(&big(d)).map(|c| c.kept_indices());
    check(kept(4).ok() == Some(BTreeSet::from([big(2)])), || "catalog(4)".into())?;
    check(kept(5).ok() == Some(BTreeSet::from([big(2), big(5)])), || "catalog(5)".into())?;
    for d in (3..=60).step_by(3) {
        check(plane_boundary_catalog(&big(d)).is_err(), || format!("catalog({d}) accepted"))?;
    }

    let mut accepted = BTreeSet::new();
    for e1 in 2..=10u64 {
        for e2 in e1..=10 {
            for e3 in e2..=10 {
                for f in 2..=10 {
                    let data = SpecialSingularity::Fork(ForkData::new([e1, e2, e3], f).unwrap());
                    if recognize_special_boundary(&data) == Some(SpecialBoundary::ForkQuotient) {
                        accepted.insert(([e1, e2, e3], f));
                    }
                }
            }
        }
    }
    let expected = BTreeSet::from([([3, 3, 3], 4), ([2, 4, 4], 3), ([2, 3, 6], 2)]);
    check(accepted == expected, || format!("forks accepted: {accepted:?}"))?;

    let cusp = |entries: Vec<i64>| {
        let data = SpecialSingularity::Cusp(CuspCycle::new(entries.into_iter().map(big).collect()).unwrap());
        recognize_special_boundary(&data) == Some(SpecialBoundary::Cusp)
    };
    let mut positives = 0;
    let mut negatives = 0;
    for r in 1..=9usize {
        // spread the excess 9 + r - 2r = 9 - r over the first entry or two
        let mut c = vec![2i64; r];
        c[0] += 9 - r as i64;
        check(cusp(c.clone()), || format!("cusp {c:?} rejected"))?;
        if r >= 2 && 9 - r >= 2 {
            let mut c2 = vec![2i64; r];
            c2[0] += 1;
            c2[r - 1] += 8 - r as i64;
            check(cusp(c2.clone()), || format!("cusp {c2:?} rejected"))?;
            positives += 1;
        }
        positives += 1;
        for delta in [-1i64, 1] {
            let mut bad = c.clone();
            bad[0] += delta;
            if bad[0] >= 2 {
                check(!cusp(bad.clone()), || format!("cusp {bad:?} accepted"))?;
                negatives += 1;
            }
        }
    }
    check(!cusp(vec![2; 12]), || "cycle of twos accepted".into())?;
    negatives += 1;
    Ok(format!(
        "kept indices {{2}} and {{2,5}}; d = 3k rejected; forks {expected:?}; {positives} cusps accepted, {negatives} rejected"
    ))
}

fn cli_golden(suite_start: Instant) -> Outcome {
    let problems = check_golden();
    check(problems.is_empty(), || problems.join("; "))?;
    let took = within(suite_start, SUITE_LIMIT)?;
    Ok(format!(
        "{} subcommand cases, text and JSON, byte-identical reruns, schema-valid; acceptance run {took:.2?}",
        GOLDEN_CASES.len()
    ))
}

fn main() {
    let suite_start = Instant::now();
    let criteria: Vec<Criterion> = vec![
        ("1 markov oracle equivalence", Box::new(markov_oracle)),
        ("2 type A arithmetic", Box::new(type_a_arithmetic)),
        ("3 Wahl invariants", Box::new(wahl_invariants)),
        ("4 discrepancy suite", Box::new(discrepancy_suite)),
        ("5 exceptional bundle data", Box::new(bundle_shadow)),
        ("6 T1 degree on toric fixtures", Box::new(t1_fixtures)),
        ("7 plane-curve catalog and recognizers", Box::new(catalog_and_recognizers)),
        ("8 CLI determinism", Box::new(move || cli_golden(suite_start))),
    ];
    let mut failed = 0;
    for (name, f) in &criteria {
        match f() {
            Ok(detail) => println!("PASS [{name}] {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL [{name}] {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
