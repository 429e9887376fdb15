//! Exact lattice-point counts in translated graphical zonotopes, sphere
//! counts of non-integral partition posets, equivariant characters and the
//! Hitchin support data derived from them.
//!
//! The numeric kernels are generic over an exact integer type (see
//! [`scalar::ExactInt`]); the aliases below fix the common choices.

pub mod equivariant;
pub mod error;
pub mod graphs;
pub mod hitchin;
pub mod lattice;
pub mod partition;
pub mod polynomial;
pub mod posets;
pub mod scalar;
pub mod zonotopes;

pub use error::{Error, Result};
pub use graphs::{GraphSpec, Multigraph, Permutation};
pub use partition::{IntPartition, SetPartition};

/// Rationals over machine integers.
pub type Rational = num_rational::Ratio<i64>;
/// Rationals over arbitrary-precision integers.
pub type BigRational = num_rational::Ratio<num_bigint::BigInt>;
/// Zonotope with machine-integer coordinates.
pub type Zonotope = zonotopes::Zonotope<i64>;
/// Zonotope with arbitrary-precision coordinates.
pub type BigZonotope = zonotopes::Zonotope<num_bigint::BigInt>;
pub type QuasiPolynomial = zonotopes::QuasiPolynomial<i64>;
pub type CharacterVector = equivariant::CharacterVector<i64>;
pub type Polynomial = polynomial::Poly<i64>;
pub type TuttePolynomial = polynomial::BivariatePoly<i64>;
