//! Matroids, morphisms of matroids, flag matroids and their Tutte-type
//! polynomials, together with exact certificates for the Lorentzian property
//! and M♮-concavity of set functions.
//!
//! Ground sets are always `{1..n}` in documents and on the command line; the
//! library indexes elements from zero, so element `i` of the API is printed as
//! `i + 1`. Subsets are bitmasks ([`Subset`]).
//!
//! The crate is organised by concern:
//!
//! * [`matroid`]: rank oracles for the concrete backings, duals, minors,
//!   truncations and derived structure (circuits, flats, axiom checks).
//! * [`morphism`]: morphisms and quotients, bases of a morphism, saturated
//!   delta-matroids, Higgs lifts and geometric duals of embedded graphs.
//! * [`tutte`]: flag matroids and the multivariate, Las Vergnas and homogeneous
//!   Tutte polynomials, basis generating polynomials and parameter limits.
//! * [`lorentzian`]: M-convexity, exact eigenvalue sign counts, the Lorentzian
//!   certificate, ultra-log-concavity and a floating-point log-concavity probe.
//! * [`convex`]: set functions, their Tutte polynomials and M♮-concavity.
//! * [`io`]: canonical JSON documents and the bundled example fixtures.

pub mod config;
pub mod convex;
mod error;
pub mod io;
pub mod lorentzian;
pub mod matroid;
pub mod morphism;
pub mod poly;
pub mod random;
pub mod rational;
mod subset;
pub mod tutte;

pub use error::{Error, Result};
pub use matroid::{Graph, Matroid};
pub use morphism::MatroidMorphism;
pub use poly::{HomogeneousPolynomial, Polynomial};
pub use rational::Rational;
pub use subset::Subset;
pub use tutte::FlagMatroid;
