//! Exact combinatorics of degenerations of the projective plane.
//!
//! The crate covers Markov triples and their mutation tree, cyclic quotient
//! and Wahl singularities, the weighted projective planes `P(a^2, b^2, c^2)`
//! with their partial smoothings, the Chern data of the associated
//! exceptional bundles, and candidate boundary strata for the moduli of
//! plane curve pairs. All arithmetic is exact; integers are `BigInt`.

pub mod boundary;
pub mod cli;
pub mod correspondence;
pub mod error;
pub mod markov;
pub mod numeric;
pub mod quotient;
pub mod records;
pub mod wps;

pub use error::{Error, Result};
pub use markov::MarkovTriple;
pub use numeric::{HJChain, Rational};
pub use quotient::{CyclicQuotientSing, WahlData};
pub use wps::WeightedPlane;
