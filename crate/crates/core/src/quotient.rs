//! Cyclic quotient surface singularities `1/r(1,q)`: normal forms,
//! minimal resolutions, discrepancies, index, Wahl recognition, links and
//! the Milnor fibre of a Wahl smoothing.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{
    exact_sqrt, hj_expand, mod_inverse, modulo, rational_from_int, solve_unit_tridiagonal,
    HJChain, Rational,
};

/// The germ `C^2 / (Z/r)` with action `(u, v) -> (z u, z^q v)`.
///
/// `q` is always the smaller member of `{q, q^-1 mod r}`, so two values are
/// isomorphic germs exactly when they are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicQuotientSing {
    r: BigInt,
    q: BigInt,
}

impl CyclicQuotientSing {
    pub fn new(r: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (r, q) = (r.into(), q.into());
        if r < BigInt::from(2) {
            return Err(Error::domain(format!("group order {r} must be at least 2")));
        }
        if !q.is_positive() || q >= r {
            return Err(Error::domain(format!("weight {q} not in 1..{r}")));
        }
        let inv = mod_inverse(q.clone(), r.clone())?;
        let q = q.min(inv);
        Ok(CyclicQuotientSing { r, q })
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// `q^-1 mod r`, the weight after swapping coordinates.
    pub fn dual_weight(&self) -> BigInt {
        mod_inverse(self.q.clone(), self.r.clone()).expect("q is a unit mod r")
    }
}

impl fmt::Display for CyclicQuotientSing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.r, self.q)
    }
}

/// A Wahl singularity `1/n^2(1, na - 1)` with `0 < a < n`, `gcd(a, n) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WahlData {
    n: BigInt,
    a: BigInt,
}

impl WahlData {
    pub fn new(n: impl Into<BigInt>, a: impl Into<BigInt>) -> Result<Self> {
        let (n, a) = (n.into(), a.into());
        if n < BigInt::from(2) {
            return Err(Error::domain(format!("Wahl index {n} must be at least 2")));
        }
        if !a.is_positive() || a >= n {
            return Err(Error::domain(format!("Wahl parameter {a} not in 1..{n}")));
        }
        if !a.gcd(&n).is_one() {
            return Err(Error::domain(format!("gcd({a}, {n}) != 1")));
        }
        Ok(WahlData { n, a })
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn singularity(&self) -> CyclicQuotientSing {
        let r = &self.n * &self.n;
        let q = &self.n * &self.a - 1;
        CyclicQuotientSing::new(r, q).expect("na - 1 is a unit mod n^2")
    }
}

impl fmt::Display for WahlData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, a={})", self.n, self.a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionData {
    pub chain: HJChain,
    /// Discrepancy of each exceptional curve, in chain order.
    pub discrepancies: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingClass {
    DuVal,
    LogTerminalNonDuVal,
}

impl SingClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SingClass::DuVal => "du-val",
            SingClass::LogTerminalNonDuVal => "log-terminal",
        }
    }
}

/// Topology of the Milnor fibre `M` of the Q-Gorenstein smoothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorInvariants {
    pub pi1_order: BigInt,
    pub euler: BigInt,
    /// Rational Betti numbers `b0, b1, b2`.
    pub betti: [BigInt; 3],
    /// Euler number of the Milnor fibre of the index-one cover.
    pub cover_euler: BigInt,
}

/// Lens space `L(r, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LensSpace {
    pub p: BigInt,
    pub q: BigInt,
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// `(xy = z^n + t)` inside `1/n(1, -1, a) x C_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothingModel {
    pub order: BigInt,
    /// Ambient weights reduced into `[0, n)`.
    pub weights: [BigInt; 3],
}

impl SmoothingModel {
    pub fn equation(&self) -> String {
        format!("xy = z^{} + t", self.order)
    }
}

/// Normal form of the action with weights `(a1, a2)` on `C^2 / (Z/r)`.
pub fn normalize(
    r: impl Into<BigInt>,
    a1: impl Into<BigInt>,
    a2: impl Into<BigInt>,
) -> Result<CyclicQuotientSing> {
    let (r, a1, a2) = (r.into(), a1.into(), a2.into());
    if r < BigInt::from(2) {
        return Err(Error::domain(format!("group order {r} must be at least 2")));
    }
    for w in [&a1, &a2] {
        if !w.gcd(&r).is_one() {
            return Err(Error::domain(format!(
                "weight {w} shares a factor with {r}; not an isolated cyclic quotient point"
            )));
        }
    }
    let inv = mod_inverse(a1, r.clone())?;
    let q = modulo(&(a2 * inv), &r);
    CyclicQuotientSing::new(r, q)
}

pub fn equivalent(s1: &CyclicQuotientSing, s2: &CyclicQuotientSing) -> bool {
    s1.r == s2.r && (s1.q == s2.q || modulo(&(&s1.q * &s2.q), &s1.r).is_one())
}

/// `Some((n, a))` when `s` is `1/n^2(1, na - 1)`. The stored weight `q`
/// (which is `-1 mod n` whenever its inverse is) determines `a`.
pub fn recognize_wahl(s: &CyclicQuotientSing) -> Option<WahlData> {
    let n = exact_sqrt(&s.r)?;
    let shifted: BigInt = &s.q + 1;
    if !shifted.is_multiple_of(&n) {
        return None;
    }
    WahlData::new(n.clone(), shifted / n).ok()
}

/// Minimal resolution chain and discrepancies, from the exact solve of
/// `sum_i a_i (E_i . E_j) = b_j - 2`.
pub fn resolve(s: &CyclicQuotientSing) -> ResolutionData {
    let chain = hj_expand(s.r.clone(), s.q.clone()).expect("valid normal form");
    let diag: Vec<Rational> = chain.entries().iter().map(|b| rational_from_int(-b)).collect();
    let rhs: Vec<Rational> = chain.entries().iter().map(|b| rational_from_int(b - 2)).collect();
    let discrepancies =
        solve_unit_tridiagonal(&diag, &rhs).expect("HJ intersection matrix is negative definite");
    ResolutionData { chain, discrepancies }
}

pub fn classify(s: &CyclicQuotientSing) -> SingClass {
    if modulo(&(&s.q + 1), &s.r).is_zero() {
        SingClass::DuVal
    } else {
        SingClass::LogTerminalNonDuVal
    }
}

/// Least `N` with `N K` Cartier: `r / gcd(r, q + 1)`.
pub fn index(s: &CyclicQuotientSing) -> BigInt {
    &s.r / s.r.gcd(&(&s.q + 1))
}

/// The `A_{n-1}` point `1/n(1, n-1)` covering a Wahl singularity.
pub fn index_one_cover(w: &WahlData) -> CyclicQuotientSing {
    CyclicQuotientSing::new(w.n.clone(), &w.n - 1).expect("n >= 2")
}

pub fn milnor_invariants(w: &WahlData) -> MilnorInvariants {
    // M is the free Z/n quotient of the A_{n-1} Milnor fibre, a bouquet of
    // n - 1 two-spheres.
    let cover_euler = BigInt::one() + (&w.n - 1);
    let euler = &cover_euler / &w.n;
    MilnorInvariants {
        pi1_order: w.n.clone(),
        euler,
        betti: [BigInt::one(), BigInt::zero(), BigInt::zero()],
        cover_euler,
    }
}

pub fn link(s: &CyclicQuotientSing) -> LensSpace {
    LensSpace { p: s.r.clone(), q: s.q.clone() }
}

pub fn smoothing_model(w: &WahlData) -> SmoothingModel {
    SmoothingModel {
        order: w.n.clone(),
        weights: [
            modulo(&BigInt::one(), &w.n),
            modulo(&BigInt::from(-1), &w.n),
            modulo(&w.a, &w.n),
        ],
    }
}

/// Whether `chain` arises from `[4]` by repeatedly applying
/// `[b1..bk] -> [2, b1, .., bk + 1]` or `[b1 + 1, .., bk, 2]`.
///
/// Runs the recursion backwards; at most one inverse step applies at each
/// stage, so this is a linear scan.
pub fn is_wahl_chain(chain: &HJChain) -> bool {
    let two = BigInt::from(2);
    let mut v: Vec<BigInt> = chain.entries().to_vec();
    loop {
        if v.len() == 1 {
            return v[0] == BigInt::from(4);
        }
        let k = v.len() - 1;
        if v[0] == two && v[k] > two {
            v.remove(0);
            let last = v.len() - 1;
            v[last] -= 1;
        } else if v[k] == two && v[0] > two {
            v.pop();
            v[0] -= 1;
        } else {
            return false;
        }
    }
}
