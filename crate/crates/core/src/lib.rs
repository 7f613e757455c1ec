//! Averages of characteristic polynomials for random matrix ensembles attached
//! to compact symmetric spaces.
//!
//! The library builds the orthogonal polynomial families that diagonalize the
//! relevant eigenvalue densities (Macdonald, Jack and Schur polynomials for the
//! type A circular ensembles, Heckman-Opdam Jacobi polynomials for the BC
//! ensembles), evaluates the closed-form averages, moments and large-n
//! asymptotics attached to each ensemble in the catalog, and verifies every
//! identity against independent oracles: exact constant-term extraction,
//! torus/Gauss-Jacobi quadrature, Toeplitz determinants and Metropolis Monte
//! Carlo.
//!
//! Modules map onto the major subsystems:
//! - [`algebra`]: exact rationals, multivariate rational functions, Laurent polynomials
//! - [`partitions`]: partition combinatorics and dominance orders
//! - [`symfun`]: type A symmetric functions, Macdonald/Jack engines, hypergeometric series
//! - [`bcjacobi`]: BC orbit monomials, Heckman-Opdam Jacobi polynomials, dual Cauchy checks
//! - [`specialfun`]: gamma, q-gamma, Pochhammer and the moment constants
//! - [`numerics`]: torus quadrature, Gauss-Jacobi rules, Toeplitz determinants
//! - [`montecarlo`]: Metropolis sampling on the n-torus with batch-means errors
//! - [`ensembles`]: the ensemble catalog, closed forms and the verification harness
//! - [`szego`]: strong Szego limit theorem, both sides

pub mod algebra;
pub mod partitions;
pub mod specialfun;
pub mod symfun;
pub mod numerics;
pub mod bcjacobi;
pub mod montecarlo;
pub mod ensembles;
pub mod szego;

pub use algebra::{LaurentPolynomial, RationalFunction, Scalar};
pub use partitions::Partition;
