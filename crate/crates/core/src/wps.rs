//! Weighted projective planes and the normal degenerations of the plane
//! obtained from `P(a^2, b^2, c^2)` by partial Q-Gorenstein smoothing.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::markov::MarkovTriple;
use crate::numeric::{exact_sqrt, Rational};
use crate::quotient::{normalize, recognize_wahl, CyclicQuotientSing, WahlData};

/// Weights `(w0, w1, w2)`, sorted ascending and pairwise coprime.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedPlane([BigInt; 3]);

impl WeightedPlane {
    pub fn new(w0: impl Into<BigInt>, w1: impl Into<BigInt>, w2: impl Into<BigInt>) -> Result<Self> {
        let mut w = [w0.into(), w1.into(), w2.into()];
        if w.iter().any(|x| !x.is_positive()) {
            return Err(Error::domain("weights must be positive"));
        }
        w.sort();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if !w[i].gcd(&w[j]).is_one() {
                return Err(Error::domain(format!(
                    "weights {} and {} are not coprime; only well-formed planes are handled",
                    w[i], w[j]
                )));
            }
        }
        Ok(WeightedPlane(w))
    }

    pub fn weights(&self) -> &[BigInt; 3] {
        &self.0
    }

    /// The Markov triple `(a, b, c)` when the weights are `(a^2, b^2, c^2)`.
    pub fn markov_roots(&self) -> Option<MarkovTriple> {
        let roots: Option<Vec<BigInt>> = self.0.iter().map(exact_sqrt).collect();
        let [a, b, c]: [BigInt; 3] = roots?.try_into().ok()?;
        MarkovTriple::new(a, b, c).ok()
    }
}

impl fmt::Display for WeightedPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

pub fn markov_plane(t: &MarkovTriple) -> WeightedPlane {
    let [a, b, c] = t.entries();
    WeightedPlane::new(a * a, b * b, c * c).expect("Markov entries are pairwise coprime")
}

/// The quotient singularity at coordinate vertex `i`, if `w_i > 1`.
pub fn vertex_singularity(p: &WeightedPlane, i: usize) -> Option<CyclicQuotientSing> {
    let w = &p.0;
    if w[i].is_one() {
        return None;
    }
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    Some(normalize(w[i].clone(), w[j].clone(), w[k].clone()).expect("well-formed plane"))
}

/// Singular points of `p`, sorted by `(r, q)`.
pub fn singular_points(p: &WeightedPlane) -> Vec<CyclicQuotientSing> {
    let mut v: Vec<_> = (0..3).filter_map(|i| vertex_singularity(p, i)).collect();
    v.sort();
    v
}

/// `K^2 = (w0 + w1 + w2)^2 / (w0 w1 w2)`.
pub fn canonical_square(p: &WeightedPlane) -> Rational {
    let [w0, w1, w2] = &p.0;
    let s = w0 + w1 + w2;
    Rational::new(&s * &s, w0 * w1 * w2)
}

/// The degree `abc` of `-K/3` on `P(a^2, b^2, c^2)`.
pub fn anticanonical_third(t: &MarkovTriple) -> BigInt {
    let [a, b, c] = t.entries();
    let abc = a * b * c;
    assert_eq!(a * a + b * b + c * c, BigInt::from(3) * &abc, "{t} is not a Markov triple");
    abc
}

/// A Q-Gorenstein deformation of `P(a^2, b^2, c^2)` smoothing the singular
/// vertices listed in `smoothed` (positions into the sorted triple).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeASurface {
    pub triple: MarkovTriple,
    pub smoothed: BTreeSet<usize>,
    /// Remaining singularities, as `(position, singularity, Wahl data)`.
    pub kept: Vec<(usize, CyclicQuotientSing, WahlData)>,
}

impl TypeASurface {
    /// One Q-Gorenstein parameter per remaining Wahl point; there are no
    /// equisingular deformations or local-to-global obstructions.
    pub fn deformation_parameters(&self) -> usize {
        self.kept.len()
    }

    pub fn is_plane(&self) -> bool {
        self.kept.is_empty()
    }
}

fn singular_positions(t: &MarkovTriple) -> Vec<usize> {
    (0..3).filter(|&i| !t.entries()[i].is_one()).collect()
}

fn vertex_wahl(t: &MarkovTriple, i: usize) -> (CyclicQuotientSing, WahlData) {
    let s = vertex_singularity(&markov_plane(t), i).expect("entry > 1");
    let w = recognize_wahl(&s)
        .unwrap_or_else(|| panic!("vertex singularity {s} of {t} is not of Wahl type"));
    (s, w)
}

/// All `2^k` partial smoothings, `k` the number of entries above 1. Ordered
/// by the bitmask of smoothed positions.
pub fn type_a_surfaces(t: &MarkovTriple) -> Vec<TypeASurface> {
    let positions = singular_positions(t);
    let singular: Vec<_> = positions.iter().map(|&i| (i, vertex_wahl(t, i))).collect();
    (0u32..1 << positions.len())
        .map(|mask| {
            let mut smoothed = BTreeSet::new();
            let mut kept = Vec::new();
            for (bit, (i, (s, w))) in singular.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    smoothed.insert(*i);
                } else {
                    kept.push((*i, s.clone(), w.clone()));
                }
            }
            TypeASurface { triple: t.clone(), smoothed, kept }
        })
        .collect()
}

/// Codimension-one boundary strata: one per entry above 1, keeping only
/// that vertex singular.
pub fn boundary_divisor_strata(t: &MarkovTriple) -> Vec<WahlData> {
    singular_positions(t).into_iter().map(|i| vertex_wahl(t, i).1).collect()
}

/// Wahl data of the vertex of weight `n^2` in `P(a^2, b^2, c^2)`.
pub fn stratum_wahl(t: &MarkovTriple, n: &BigInt) -> Result<WahlData> {
    if n.is_one() || !t.contains(n) {
        return Err(Error::domain(format!("{n} is not an entry of {t} greater than 1")));
    }
    let i = t.entries().iter().position(|e| e == n).expect("contained");
    Ok(vertex_wahl(t, i).1)
}
