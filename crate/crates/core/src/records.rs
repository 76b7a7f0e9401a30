//! JSON records for the crate's values. Integers are emitted as exact JSON
//! numbers of any size; rationals as `"p/q"` strings (`"p"` when integral).
//! Object keys keep a fixed insertion order, so equal values serialize
//! byte-identically.

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::boundary::{PlaneCatalog, SpecialBoundary, SpecialSingularity, TypeBGluing};
use crate::correspondence::{euler_self_pairing, slope_vector, BundleInvariants, C1_CONVENTION};
use crate::error::Result;
use crate::markov::MarkovTriple;
use crate::numeric::Rational;
use crate::quotient::{
    classify, index, index_one_cover, link, milnor_invariants, recognize_wahl, resolve,
    smoothing_model, CyclicQuotientSing, WahlData,
};
use crate::wps::{
    boundary_divisor_strata, canonical_square, singular_points, type_a_surfaces, WeightedPlane,
};

pub fn int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal integer"))
}

pub fn ints<'a>(v: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(v.into_iter().map(int).collect())
}

pub fn rat(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn triple(t: &MarkovTriple) -> Value {
    ints(t.entries())
}

pub fn triples<'a>(ts: impl IntoIterator<Item = &'a MarkovTriple>) -> Value {
    Value::Array(ts.into_iter().map(triple).collect())
}

pub fn wahl(w: &WahlData) -> Value {
    json!({ "n": int(w.n()), "a": int(w.a()) })
}

pub fn singularity(s: &CyclicQuotientSing) -> Value {
    let res = resolve(s);
    let l = link(s);
    json!({
        "r": int(s.r()),
        "q": int(s.q()),
        "wahl": recognize_wahl(s).as_ref().map_or(Value::Null, wahl),
        "chain": ints(res.chain.entries()),
        "discrepancies": res.discrepancies.iter().map(rat).collect::<Vec<_>>(),
        "index": int(&index(s)),
        "class": classify(s).as_str(),
        "link": ints([&l.p, &l.q]),
    })
}

pub fn wahl_report(w: &WahlData) -> Value {
    let model = smoothing_model(w);
    let m = milnor_invariants(w);
    let cover = index_one_cover(w);
    json!({
        "n": int(w.n()),
        "a": int(w.a()),
        "singularity": singularity(&w.singularity()),
        "smoothing": {
            "equation": model.equation(),
            "weights": ints(&model.weights),
            "order": int(&model.order),
        },
        "milnor": {
            "pi1_order": int(&m.pi1_order),
            "euler": int(&m.euler),
            "betti": ints(&m.betti),
            "cover_euler": int(&m.cover_euler),
        },
        "cover": { "r": int(cover.r()), "q": int(cover.q()) },
    })
}

pub fn plane(p: &WeightedPlane) -> Value {
    let roots = p.markov_roots();
    let strata = roots.as_ref().map(boundary_divisor_strata).unwrap_or_default();
    json!({
        "weights": ints(p.weights()),
        "singularities": singular_points(p).iter().map(singularity).collect::<Vec<_>>(),
        "K2": rat(&canonical_square(p)),
        "markov": roots.as_ref().map_or(Value::Null, triple),
        "strata": strata.iter().map(wahl).collect::<Vec<_>>(),
    })
}

pub fn type_a_report(t: &MarkovTriple) -> Value {
    let surfaces: Vec<Value> = type_a_surfaces(t)
        .iter()
        .map(|s| {
            let kept: Vec<Value> = s
                .kept
                .iter()
                .map(|(pos, sing, w)| {
                    json!({
                        "position": pos,
                        "r": int(sing.r()),
                        "q": int(sing.q()),
                        "n": int(w.n()),
                        "a": int(w.a()),
                    })
                })
                .collect();
            json!({
                "smoothed": s.smoothed.iter().collect::<Vec<_>>(),
                "kept": kept,
                "parameters": s.deformation_parameters(),
            })
        })
        .collect();
    let p = crate::wps::markov_plane(t);
    json!({
        "triple": triple(t),
        "plane": ints(p.weights()),
        "anticanonical_third": int(&crate::wps::anticanonical_third(t)),
        "surfaces": surfaces,
        "strata": boundary_divisor_strata(t).iter().map(wahl).collect::<Vec<_>>(),
    })
}

pub fn bundle(b: &BundleInvariants, t: &MarkovTriple, a: &BigInt) -> Result<Value> {
    Ok(json!({
        "rank": int(&b.rank),
        "c1": int(&b.c1),
        "c2": int(&b.c2),
        "slope": rat(&b.slope),
        "normalized_slope": rat(&slope_vector(b)),
        "discriminant": rat(&b.discriminant),
        "chi": int(&euler_self_pairing(b)?),
        "triple": triple(t),
        "kept": int(&b.rank),
        "a": int(a),
        "c1_convention": C1_CONVENTION,
    }))
}

pub fn slopes<'a>(set: impl IntoIterator<Item = &'a (BigInt, Rational)>) -> Value {
    Value::Array(
        set.into_iter()
            .map(|(n, s)| json!({ "rank": int(n), "slope": rat(s) }))
            .collect(),
    )
}

pub fn gluing(g: &TypeBGluing) -> Result<Value> {
    use crate::boundary::{boundary_divisor_test, rational_curve_sections, smoothability_necessary, t1_degree};
    let degree = t1_degree(g)?;
    let rational_curve = g.genus == 0;
    Ok(json!({
        "self_int": [rat(&g.self_int_1), rat(&g.self_int_2)],
        "genus": g.genus,
        "orbifold_indices": ints(&g.orbifold_indices),
        "degree": int(&degree),
        "smoothability": smoothability_necessary(g)?.as_str(),
        "boundary_divisor": if rational_curve { Value::Bool(boundary_divisor_test(g)?) } else { Value::Null },
        "sections": if rational_curve { int(&rational_curve_sections(g)?) } else { Value::Null },
    }))
}

pub fn catalog(c: &PlaneCatalog) -> Value {
    let type_a: Vec<Value> = c
        .type_a
        .iter()
        .map(|s| json!({ "triple": triple(&s.triple), "n": int(s.wahl.n()), "a": int(s.wahl.a()) }))
        .collect();
    let type_b: Vec<Value> = c.type_b_mn.iter().map(|(m, n)| ints([m, n])).collect();
    json!({
        "d": int(&c.d),
        "typeA": type_a,
        "typeB_mn": type_b,
        "necessary_conditions_only": true,
    })
}

pub fn recognition(data: &SpecialSingularity, result: Option<SpecialBoundary>) -> Value {
    let mut input = Map::new();
    match data {
        SpecialSingularity::Fork(f) => {
            input.insert("fork".into(), json!({ "arms": f.arms, "center": f.center }));
        }
        SpecialSingularity::EllipticCone { degree } => {
            input.insert("cone_degree".into(), int(degree));
        }
        SpecialSingularity::Cusp(c) => {
            input.insert("cusp".into(), ints(c.entries()));
        }
    }
    json!({
        "input": Value::Object(input),
        "match": result.map_or(Value::Null, |r| Value::String(r.as_str().into())),
    })
}
