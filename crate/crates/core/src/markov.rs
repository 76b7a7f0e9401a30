//! Solutions of the Markov equation `a^2 + b^2 + c^2 = 3abc` and the
//! mutation tree rooted at `(1,1,1)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

pub fn is_markov(a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    a * a + b * b + c * c == BigInt::from(3) * a * b * c
}

/// A positive solution of the Markov equation, stored sorted ascending.
///
/// Ordering is lexicographic on the sorted entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkovTriple([BigInt; 3]);

impl MarkovTriple {
    /// Validates and sorts. Besides the equation, pairwise coprimality and
    /// the absence of factors of 3 are checked rather than assumed.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        let mut v = [a.into(), b.into(), c.into()];
        if v.iter().any(|x| !x.is_positive()) {
            return Err(Error::domain("Markov entries must be positive"));
        }
        v.sort();
        if !is_markov(&v[0], &v[1], &v[2]) {
            return Err(Error::domain(format!(
                "({}, {}, {}) does not satisfy a^2 + b^2 + c^2 = 3abc",
                v[0], v[1], v[2]
            )));
        }
        let t = MarkovTriple(v);
        t.check_arithmetic()?;
        Ok(t)
    }

    pub fn root() -> Self {
        MarkovTriple([BigInt::one(), BigInt::one(), BigInt::one()])
    }

    pub fn entries(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn max_entry(&self) -> &BigInt {
        &self.0[2]
    }

    pub fn is_root(&self) -> bool {
        self.0[2].is_one()
    }

    pub fn contains(&self, n: &BigInt) -> bool {
        self.0.contains(n)
    }

    fn check_arithmetic(&self) -> Result<()> {
        let three = BigInt::from(3);
        for i in 0..3 {
            if (&self.0[i] % &three) == BigInt::from(0) {
                return Err(Error::Internal(format!("{self} has an entry divisible by 3")));
            }
            for j in i + 1..3 {
                if !self.0[i].gcd(&self.0[j]).is_one() {
                    return Err(Error::Internal(format!("{self} is not pairwise coprime")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MarkovTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Replaces the entry at `position` of the sorted triple by
/// `3 * (product of the other two) - entry`.
pub fn mutate(t: &MarkovTriple, position: usize) -> Result<MarkovTriple> {
    if position > 2 {
        return Err(Error::domain(format!("mutation position {position} not in 0..=2")));
    }
    let mut v = t.0.clone();
    let others: BigInt = (0..3).filter(|&i| i != position).map(|i| &t.0[i]).product();
    v[position] = BigInt::from(3) * others - &v[position];
    v.sort();
    Ok(MarkovTriple(v))
}

/// One step toward the root: mutate the largest entry.
pub fn parent(t: &MarkovTriple) -> Result<MarkovTriple> {
    if t.is_root() {
        return Err(Error::domain("(1, 1, 1) is the root and has no parent"));
    }
    mutate(t, 2)
}

/// Distinct sorted triples one mutation away from `t`.
pub fn neighbors(t: &MarkovTriple) -> BTreeSet<MarkovTriple> {
    (0..3).map(|p| mutate(t, p).expect("position in range")).collect()
}

/// Degree of `t` in the mutation graph on sorted representatives.
pub fn degree(t: &MarkovTriple) -> usize {
    neighbors(t).len()
}

/// Path of parents from `t` down to the root, starting with `t`.
pub fn descent_path(t: &MarkovTriple) -> Vec<MarkovTriple> {
    let mut path = vec![t.clone()];
    while let Some(last) = path.last().filter(|x| !x.is_root()) {
        let next = parent(last).expect("non-root");
        path.push(next);
    }
    path
}

/// All Markov triples with largest entry at most `max_entry`, reached by
/// breadth-first mutation from the root.
pub fn enumerate_tree(max_entry: &BigInt) -> BTreeSet<MarkovTriple> {
    let mut seen = BTreeSet::new();
    let root = MarkovTriple::root();
    if *max_entry < BigInt::one() {
        return seen;
    }
    let mut queue = VecDeque::from([root.clone()]);
    seen.insert(root);
    while let Some(t) = queue.pop_front() {
        for n in neighbors(&t) {
            if n.max_entry() <= max_entry && !seen.contains(&n) {
                seen.insert(n.clone());
                queue.push_back(n);
            }
        }
    }
    seen
}

/// Sorted Markov numbers at most `max_entry`.
pub fn markov_numbers(max_entry: &BigInt) -> BTreeSet<BigInt> {
    enumerate_tree(max_entry)
        .into_iter()
        .flat_map(|t| t.0.into_iter())
        .collect()
}
