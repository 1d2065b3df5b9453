//! Exact classification of the uniform algebras `A_alpha` on the 2-torus.
//!
//! `A_alpha` is the closed algebra of continuous functions on `T^2` whose
//! Fourier coefficients vanish at every lattice point `(m, n)` with
//! `m + alpha*n < 0`. For a quadratic irrational `alpha` this crate
//!
//! * computes the generator of the cyclic group of matrices `A` for which
//!   composition with the monomial map of `A` is an automorphism, by solving
//!   Pell-type equations ([`autgroup`], [`pell`]);
//! * decides isometric isomorphism `A_alpha ~ A_beta` from continued fractions
//!   and produces exactly verified witness matrices ([`iso`]);
//! * compares the automorphism groups `T^2 x| Z` through bounded GL(2, Z)
//!   conjugacy ([`iso`]);
//! * checks all of the above on trigonometric polynomials ([`fourier`]).
//!
//! Exact code is generic over an integer scalar (see [`scalar::IntScalar`]);
//! the aliases below fix `BigInt`, which is what the CLI uses.

pub mod autgroup;
pub mod cli;
pub mod fourier;
pub mod iso;
pub mod matrix;
pub mod pell;
pub mod quad;
pub mod scalar;

pub use num_bigint::BigInt;

pub type Quad = quad::QuadraticIrrational<BigInt>;
pub type FieldElement = quad::Surd<BigInt>;
pub type Matrix = matrix::GlMatrix<BigInt>;
pub type Pell = pell::PellSolution<BigInt>;
pub type Torus = autgroup::TorusPoint<BigInt>;
pub type Element = autgroup::AutElement<BigInt>;
pub type Poly = fourier::TrigPoly<f64>;
