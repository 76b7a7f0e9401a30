//! Q-Gorenstein bookkeeping for two-component surfaces glued along a curve,
//! the candidate boundary strata of the moduli of plane curve pairs, and
//! numeric recognizers for three further kinds of boundary divisor.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::markov::{enumerate_tree, MarkovTriple};
use crate::numeric::{to_integer, Rational};
use crate::quotient::WahlData;
use crate::wps::boundary_divisor_strata;

/// `X = X1 u X2` glued along a smooth curve `C` with orbifold double
/// normal crossing points of the given indices along `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeBGluing {
    /// `(C^2)` on `X1`.
    pub self_int_1: Rational,
    /// `(C^2)` on `X2`.
    pub self_int_2: Rational,
    pub genus: u64,
    pub orbifold_indices: Vec<BigInt>,
}

impl TypeBGluing {
    pub fn new(
        self_int_1: Rational,
        self_int_2: Rational,
        genus: u64,
        orbifold_indices: Vec<BigInt>,
    ) -> Result<Self> {
        if orbifold_indices.iter().any(|n| !n.is_positive()) {
            return Err(Error::domain("orbifold indices must be positive"));
        }
        Ok(TypeBGluing { self_int_1, self_int_2, genus, orbifold_indices })
    }
}

/// Degree of the line bundle `T^1_QG = O_C(C1|C + C2|C)` on `C`.
pub fn t1_degree(g: &TypeBGluing) -> Result<BigInt> {
    let sum = &g.self_int_1 + &g.self_int_2;
    to_integer(&sum, "(C^2)_X1 + (C^2)_X2")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothability {
    /// `H^0(T^1) != 0` is guaranteed by the degree.
    Possible,
    /// `H^0(T^1) = 0`: every deformation is locally trivial.
    Obstructed,
    /// Depends on the line bundle, not only on its degree.
    Indeterminate,
}

impl Smoothability {
    pub fn as_str(self) -> &'static str {
        match self {
            Smoothability::Possible => "possible",
            Smoothability::Obstructed => "obstructed",
            Smoothability::Indeterminate => "indeterminate",
        }
    }
}

/// The necessary condition `H^0(T^1) != 0`, decided from the degree alone
/// where possible.
pub fn smoothability_necessary(g: &TypeBGluing) -> Result<Smoothability> {
    let d = t1_degree(g)?;
    if g.genus == 0 {
        return Ok(if d.is_negative() { Smoothability::Obstructed } else { Smoothability::Possible });
    }
    let canonical = BigInt::from(2 * g.genus) - 2;
    Ok(if d > canonical {
        Smoothability::Possible
    } else if d.is_negative() {
        Smoothability::Obstructed
    } else {
        Smoothability::Indeterminate
    })
}

/// On a rational double curve the gluing gives a boundary divisor exactly
/// when `T^1_QG = O_C`.
pub fn boundary_divisor_test(g: &TypeBGluing) -> Result<bool> {
    if g.genus != 0 {
        return Err(Error::domain(format!(
            "double curve of genus {} is not determined by its degree",
            g.genus
        )));
    }
    Ok(t1_degree(g)?.is_zero())
}

/// `h^0` of `T^1_QG` on a rational double curve, the number of versal
/// Q-Gorenstein parameters coming from the double curve.
pub fn rational_curve_sections(g: &TypeBGluing) -> Result<BigInt> {
    if g.genus != 0 {
        return Err(Error::domain("only rational double curves are handled"));
    }
    let d = t1_degree(g)?;
    Ok(if d.is_negative() { BigInt::zero() } else { d + 1 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeRule {
    /// Occurs for `d` divisible by the value.
    DivisibleBy(BigInt),
}

impl DegreeRule {
    pub fn admits(&self, d: &BigInt) -> bool {
        match self {
            DegreeRule::DivisibleBy(m) => (d % m).is_zero(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            DegreeRule::DivisibleBy(m) => format!("{m} | d"),
        }
    }
}

/// Predicates for the surface glued from the `(m, n)` weighted blowup of
/// the plane and `P(m, n, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MnPredicates {
    pub ample: bool,
    pub class_divisible_by_3: bool,
    pub degrees: DegreeRule,
}

pub fn type_b_mn_predicates(m: &BigInt, n: &BigInt) -> Result<MnPredicates> {
    if !m.is_positive() || !n.is_positive() {
        return Err(Error::domain("m and n must be positive"));
    }
    if !m.gcd(n).is_one() {
        return Err(Error::domain(format!("gcd({m}, {n}) != 1")));
    }
    let two = BigInt::from(2);
    let ample = m < &(&two * n) && n < &(&two * m);
    let class_divisible_by_3 = ((m + n) % 3u32).is_zero();
    let mn = m * n;
    let degrees = if class_divisible_by_3 {
        DegreeRule::DivisibleBy(mn)
    } else {
        DegreeRule::DivisibleBy(mn * 3u32)
    };
    Ok(MnPredicates { ample, class_divisible_by_3, degrees })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeAStratum {
    pub triple: MarkovTriple,
    pub wahl: WahlData,
}

/// Candidate boundary strata in degree `d`. Only necessary conditions are
/// applied, so this is a superset of the true boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCatalog {
    pub d: BigInt,
    pub type_a: Vec<TypeAStratum>,
    /// Coprime `(m, n)` with `m <= n`.
    pub type_b_mn: Vec<(BigInt, BigInt)>,
}

impl PlaneCatalog {
    pub fn kept_indices(&self) -> BTreeSet<BigInt> {
        self.type_a.iter().map(|s| s.wahl.n().clone()).collect()
    }
}

/// Type A strata come from Markov triples with every entry at most `d`
/// (each singularity index is then at most `d`). Type B lists the ample
/// `(m, n)` gluings with `-K` divisible by 3 and `mn | d`.
pub fn plane_boundary_catalog(d: &BigInt) -> Result<PlaneCatalog> {
    if d < &BigInt::from(4) {
        return Err(Error::domain(format!("degree {d} must be at least 4")));
    }
    if (d % 3u32).is_zero() {
        return Err(Error::domain(format!("degree {d} is divisible by 3")));
    }
    let mut type_a = Vec::new();
    for t in enumerate_tree(d) {
        for wahl in boundary_divisor_strata(&t) {
            type_a.push(TypeAStratum { triple: t.clone(), wahl });
        }
    }
    let mut type_b_mn = Vec::new();
    for m in divisors(d) {
        let rest = d / &m;
        for n in divisors(&rest) {
            if n < m || !m.gcd(&n).is_one() {
                continue;
            }
            let p = type_b_mn_predicates(&m, &n)?;
            if p.ample && p.class_divisible_by_3 && p.degrees.admits(d) && n <= *d {
                type_b_mn.push((m.clone(), n));
            }
        }
    }
    type_b_mn.sort();
    Ok(PlaneCatalog { d: d.clone(), type_a, type_b_mn })
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            let j = n / &i;
            if j != i {
                large.push(j);
            }
            small.push(i.clone());
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Minimal resolution graph: three arms `E1, E2, E3` meeting a central
/// curve `F`, given by negated self-intersections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForkData {
    pub arms: [u64; 3],
    pub center: u64,
}

impl ForkData {
    pub fn new(arms: [u64; 3], center: u64) -> Result<Self> {
        if arms.iter().chain([&center]).any(|&e| e < 2) {
            return Err(Error::domain("fork self-intersections must be at most -2"));
        }
        let mut arms = arms;
        arms.sort_unstable();
        Ok(ForkData { arms, center })
    }
}

/// Cycle of rational curves resolving a cusp, given by `-E_i^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspCycle(Vec<BigInt>);

impl CuspCycle {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("empty cusp cycle"));
        }
        if entries.iter().any(|e| e < &BigInt::from(2)) {
            return Err(Error::domain("cusp cycle entries must be at least 2"));
        }
        Ok(CuspCycle(entries))
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialSingularity {
    Fork(ForkData),
    EllipticCone { degree: BigInt },
    Cusp(CuspCycle),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialBoundary {
    /// Quotient of an elliptic cone, resolved by a fork.
    ForkQuotient,
    /// Cone over an elliptic curve of degree 9.
    EllipticCone,
    /// Cusp with `-E^2 = 9 + r`.
    Cusp,
}

impl SpecialBoundary {
    pub fn as_str(self) -> &'static str {
        match self {
            SpecialBoundary::ForkQuotient => "fork",
            SpecialBoundary::EllipticCone => "elliptic-cone",
            SpecialBoundary::Cusp => "cusp",
        }
    }
}

pub const BOUNDARY_FORKS: [([u64; 3], u64); 3] = [([3, 3, 3], 4), ([2, 4, 4], 3), ([2, 3, 6], 2)];

pub fn recognize_special_boundary(data: &SpecialSingularity) -> Option<SpecialBoundary> {
    match data {
        SpecialSingularity::Fork(f) => BOUNDARY_FORKS
            .iter()
            .any(|(arms, center)| *arms == f.arms && *center == f.center)
            .then_some(SpecialBoundary::ForkQuotient),
        SpecialSingularity::EllipticCone { degree } => {
            (*degree == BigInt::from(9)).then_some(SpecialBoundary::EllipticCone)
        }
        SpecialSingularity::Cusp(c) => {
            let total: BigInt = c.0.iter().sum();
            (total == BigInt::from(9 + c.0.len())).then_some(SpecialBoundary::Cusp)
        }
    }
}
