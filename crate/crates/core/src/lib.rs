//! Gelfand-Tsetlin polytopes of unitary coadjoint orbits.
//!
//! An orbit `O_λ` of `n × n` Hermitian matrices with spectrum `λ` maps onto a
//! convex polytope by recording the eigenvalues of every leading principal
//! block. This crate computes that map and the polytope's combinatorics, and
//! inverts it by building a matrix for any point. The edges at a good vertex
//! give a lower bound for the Gromov width of the orbit.
//!
//! Numerical routines are generic over [`Real`] (`f32`, `f64`); combinatorial
//! ones are generic over [`Exact`] rationals. The aliases below fix the usual
//! choices.

pub mod cli;
pub mod error;
pub mod gtpolytope;
pub mod gtsystem;
pub mod hermitian;
pub mod io;
pub mod random;
pub mod reconstruct;
pub mod scalar;
pub mod skeleton;
pub mod svg;
pub mod verify;

pub use error::{Error, Result};
pub use gtpolytope::{gromov_lower_bound, hrep, EmbeddingReport, GtPolytope};
pub use gtsystem::{gt_map, gt_of_diagonal, orbit_spec, project_to_diagonal, GtPattern, OrbitSpec};
pub use hermitian::{HermitianMatrix, Spectrum};
pub use reconstruct::{reconstruct_matrix, solve_arrow, ArrowSolution};
pub use scalar::{Exact, Real, Scalar};
pub use skeleton::{skeleton_graph, sphere_point, trace_edge, SkeletonGraph, SpherePoint};

pub type Rational = num_rational::BigRational;
pub type RationalSpectrum = Spectrum<Rational>;
pub type RationalPattern = GtPattern<Rational>;
pub type RationalPolytope = GtPolytope<Rational>;
pub type RationalReport = EmbeddingReport<Rational>;
pub type Pattern64 = GtPattern<f64>;
pub type Hermitian64 = HermitianMatrix<f64>;
pub type Hermitian32 = HermitianMatrix<f32>;
