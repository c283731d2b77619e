//! Finite abstract convexity spaces and weak ε-nets.
//!
//! The crate computes the combinatorial invariants of a finite convexity
//! space (Radon number, Helly number and VC dimension of its half-spaces),
//! builds weak ε-nets with a recursive Helly-point / δ-packing construction,
//! and certifies lower bounds on net size through disjointness-graph
//! colourings and Kneser graphs. Every construction is checked against exact
//! brute-force oracles in [`oracle`].
//!
//! Measures are generic over [`Scalar`]; the aliases below fix the exact
//! rational instantiation used throughout the CLI and the tests.

pub mod error;
pub mod format;
pub mod lowerbound;
pub mod measure;
pub mod netbuild;
pub mod oracle;
pub mod params;
pub mod set;
pub mod space;
pub mod spaces;

pub use error::{Error, Result};
pub use measure::{parse_rational, Distribution, Scalar};
pub use set::PointSet;
pub use space::{ConvexFamily, ConvexitySpace, GroundSet};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Fixed-width rational scalar; faster, but may overflow on deep recursions.
pub type Rational64 = num_rational::Rational64;

pub type ExactDistribution = Distribution<Rational>;
pub type FloatDistribution = Distribution<f64>;
pub type ExactWeakNet = netbuild::WeakNet<Rational>;
pub type ExactNetParams = netbuild::NetParams<Rational>;
pub type ExactCertificate = lowerbound::LowerBoundCertificate<Rational>;
