//! Chern data of the exceptional bundle attached to a degeneration of the
//! plane with a unique Wahl singularity, and the slope vectors of those
//! bundles.
//!
//! On the plane `K = -3H`, so `c1(F) . K = -3 c1` where `c1` is the degree
//! of `c1(F)` against the hyperplane class.
//!
//! The surface carrying the singularity is never constructed, so `c1` is
//! pinned by two necessary conditions: `-3 c1 = +-a (mod n)` and
//! `gcd(c1, n) = 1`. Among the admissible values the smallest one in
//! `(0, n]` is reported; twisting by a line bundle or dualizing changes it.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::markov::{enumerate_tree, MarkovTriple};
use crate::numeric::{modulo, rational_from_int, to_integer, Rational};
use crate::wps::stratum_wahl;

/// Tag reported alongside `c1` so consumers know which twist was chosen.
pub const C1_CONVENTION: &str = "smallest-positive";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleInvariants {
    pub rank: BigInt,
    pub c1: BigInt,
    pub c2: BigInt,
    pub slope: Rational,
    pub discriminant: Rational,
}

impl BundleInvariants {
    pub fn new(rank: impl Into<BigInt>, c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Result<Self> {
        let (rank, c1, c2) = (rank.into(), c1.into(), c2.into());
        if !rank.is_positive() {
            return Err(Error::domain(format!("rank {rank} must be positive")));
        }
        let slope = Rational::new(c1.clone(), rank.clone());
        let discriminant = discriminant(&rank, &c1, &c2);
        Ok(BundleInvariants { rank, c1, c2, slope, discriminant })
    }
}

/// `(1/n) (c2 - (n-1)/(2n) c1^2)`.
pub fn discriminant(rank: &BigInt, c1: &BigInt, c2: &BigInt) -> Rational {
    let n = rational_from_int(rank.clone());
    let c1 = rational_from_int(c1.clone());
    let c2 = rational_from_int(c2.clone());
    let two = rational_from_int(2);
    (c2 - (&n - Rational::one()) / (&two * &n) * &c1 * &c1) / n
}

/// `c2 = (n-1)/(2n) (c1^2 + n + 1)`.
pub fn c2_from_formula(n: &BigInt, c1: &BigInt) -> Rational {
    let top = (n - 1) * (c1 * c1 + n + 1);
    Rational::new(top, BigInt::from(2) * n)
}

/// `c1 . K = +-a (mod n)` with `c1 . K = -3 c1`.
pub fn degree_congruence(n: &BigInt, a: &BigInt, c1: &BigInt) -> bool {
    let lhs = modulo(&(BigInt::from(-3) * c1), n);
    lhs == modulo(a, n) || lhs == modulo(&-a, n)
}

/// `c1 / n` has order exactly `n` modulo the integral lattice.
pub fn lattice_check(n: &BigInt, c1: &BigInt) -> bool {
    c1.gcd(n).is_one()
}

/// Exceptional bundle invariants for the stratum of `t` keeping the vertex
/// of weight `kept^2` singular.
pub fn bundle_from_stratum(t: &MarkovTriple, kept: &BigInt) -> Result<BundleInvariants> {
    let w = stratum_wahl(t, kept)?;
    let (n, a) = (w.n(), w.a());
    let mut c1 = BigInt::one();
    while !(degree_congruence(n, a, &c1) && lattice_check(n, &c1)) {
        c1 += 1;
        if &c1 > n {
            return Err(Error::Internal(format!("no admissible c1 for rank {n}, a = {a}")));
        }
    }
    let c2 = to_integer(&c2_from_formula(n, &c1), "c2")
        .map_err(|e| Error::Internal(format!("{e} for rank {n}")))?;
    let b = BundleInvariants::new(n.clone(), c1, c2)?;
    let n2 = rational_from_int(n * n);
    let expected = (&n2 - Rational::one()) / (rational_from_int(2) * n2);
    if b.discriminant != expected {
        return Err(Error::Internal(format!("discriminant {} != {expected}", b.discriminant)));
    }
    Ok(b)
}

/// `chi(F, F) = n^2 (1 - 2 Delta)` on the plane.
pub fn euler_self_pairing(b: &BundleInvariants) -> Result<BigInt> {
    let n2 = rational_from_int(&b.rank * &b.rank);
    let chi = n2 * (Rational::one() - rational_from_int(2) * &b.discriminant);
    to_integer(&chi, "chi(F,F)")
}

/// Representative of `c1/n` in `[0, 1/2]` modulo integers and sign.
pub fn slope_vector(b: &BundleInvariants) -> Rational {
    normalize_slope(&b.slope)
}

pub fn normalize_slope(v: &Rational) -> Rational {
    let frac = v - v.floor();
    let flipped = Rational::one() - &frac;
    if frac.is_zero() {
        frac
    } else {
        frac.min(flipped)
    }
}

/// Normalized slope vectors of all strata of Markov triples whose entries
/// are at most `max_rank`, keyed by rank.
pub fn enumerate_slope_set(max_rank: &BigInt) -> Result<BTreeSet<(BigInt, Rational)>> {
    if max_rank < &BigInt::from(2) {
        return Err(Error::domain(format!("max rank {max_rank} must be at least 2")));
    }
    let mut out = BTreeSet::new();
    for t in enumerate_tree(max_rank) {
        for n in t.entries().iter().filter(|e| !e.is_one()) {
            let b = bundle_from_stratum(&t, n)?;
            out.insert((b.rank.clone(), slope_vector(&b)));
        }
    }
    Ok(out)
}
