//! Exact integer and rational helpers shared by the rest of the crate.
//!
//! Integers are `BigInt` everywhere in the public surface. Rationals are
//! `num_rational::BigRational`, which keeps values in lowest terms with a
//! positive denominator, so `==` is structural.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn rational_from_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `p/q` or `p` (optional leading minus). Decimals are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::domain(format!("not an exact fraction: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = parse_int(num).map_err(|_| bad())?;
    let den = parse_int(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::domain(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

pub fn parse_int(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::domain(format!("not an integer: {s:?}")));
    }
    BigInt::from_str(s).map_err(|_| Error::domain(format!("not an integer: {s:?}")))
}

/// Integer value of `x`, or `NonIntegral` naming what was being computed.
pub fn to_integer(x: &Rational, what: &str) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} = {x}")))
    }
}

/// `x` reduced into `[0, m)`.
pub fn modulo(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

/// Inverse of `x` modulo `m`, in `[1, m - 1]`.
pub fn mod_inverse(x: impl Into<BigInt>, m: impl Into<BigInt>) -> Result<BigInt> {
    let (x, m) = (x.into(), m.into());
    if m < BigInt::from(2) {
        return Err(Error::domain(format!("modulus {m} must be at least 2")));
    }
    let eg = modulo(&x, &m).extended_gcd(&m);
    if !eg.gcd.is_one() {
        return Err(Error::domain(format!("{x} is not invertible modulo {m}")));
    }
    Ok(modulo(&eg.x, &m))
}

/// Exact square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Chain of Hirzebruch-Jung entries `b_1, ..., b_k`, all at least 2.
///
/// Represents `b_1 - 1/(b_2 - 1/(... - 1/b_k))`. For the singularity
/// `1/r(1,q)` the entries are the negated self-intersections of the
/// exceptional curves of the minimal resolution, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HJChain(Vec<BigInt>);

impl HJChain {
    pub fn new<I, T>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let entries: Vec<BigInt> = entries.into_iter().map(Into::into).collect();
        if entries.is_empty() {
            return Err(Error::domain("empty continued-fraction chain"));
        }
        if let Some(b) = entries.iter().find(|b| **b < BigInt::from(2)) {
            return Err(Error::domain(format!("chain entry {b} is below 2")));
        }
        Ok(HJChain(entries))
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> HJChain {
        HJChain(self.0.iter().rev().cloned().collect())
    }

    pub fn is_all_twos(&self) -> bool {
        self.0.iter().all(|b| *b == BigInt::from(2))
    }
}

impl fmt::Display for HJChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

/// Hirzebruch-Jung expansion of `r/q` for coprime `0 < q < r`.
pub fn hj_expand(r: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<HJChain> {
    let (r, q) = (r.into(), q.into());
    if !q.is_positive() || q >= r {
        return Err(Error::domain(format!("need 0 < q < r, got r = {r}, q = {q}")));
    }
    if !r.gcd(&q).is_one() {
        return Err(Error::domain(format!("gcd({r}, {q}) != 1")));
    }
    let mut entries = Vec::new();
    let (mut num, mut den) = (r, q);
    while den.is_positive() {
        let b = num.div_ceil(&den);
        let rem = &b * &den - &num;
        entries.push(b);
        num = den;
        den = rem;
    }
    Ok(HJChain(entries))
}

/// The reduced fraction `(r, q)` a chain represents.
pub fn hj_evaluate(chain: &HJChain) -> (BigInt, BigInt) {
    let mut it = chain.0.iter().rev();
    let mut num = it.next().cloned().unwrap_or_else(BigInt::one);
    let mut den = BigInt::one();
    for b in it {
        let next = b * &num - &den;
        den = num;
        num = next;
    }
    (num, den)
}

/// Solves `M x = rhs` for a symmetric tridiagonal `M` with the given diagonal
/// and unit off-diagonal, by exact Gaussian elimination. `None` when a pivot
/// vanishes.
pub fn solve_unit_tridiagonal(diag: &[Rational], rhs: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(diag.len(), rhs.len());
    let n = diag.len();
    let mut pivots: Vec<Rational> = Vec::with_capacity(n);
    let mut reduced: Vec<Rational> = Vec::with_capacity(n);
    for i in 0..n {
        let (p, y) = if i == 0 {
            (diag[0].clone(), rhs[0].clone())
        } else {
            let m = pivots[i - 1].recip();
            (&diag[i] - &m, &rhs[i] - &reduced[i - 1] * &m)
        };
        if p.is_zero() {
            return None;
        }
        pivots.push(p);
        reduced.push(y);
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let tail = if i + 1 < n { x[i + 1].clone() } else { Rational::zero() };
        x[i] = (&reduced[i] - tail) / &pivots[i];
    }
    Some(x)
}
