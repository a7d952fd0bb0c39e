//! Exact computer algebra for the smash product on permutations, descent
//! classes, symmetric functions, and quasi-symmetric functions.
//!
//! Four graded connected Hopf algebras are covered, each with its classical
//! products and coproducts and with a second "smash" structure that
//! interpolates between them degree by degree:
//!
//! * [`perm_algebra`]: sums of permutations of all sizes;
//! * [`nsym`]: descent classes `X[a1,...,ar]` indexed by compositions;
//! * [`sym`]: complete homogeneous products `h[l1,...,lk]` indexed by
//!   partitions, with Schur expansions;
//! * [`qsym`]: monomial quasi-symmetric functions `M[a1,...,ar]`, dual to the
//!   descent classes.
//!
//! All coefficients are exact big integers. [`tensor_oracle`] provides an
//! independent model, permutations acting on tensor-power words, used by the
//! verification suites in [`verify`].

pub mod alphabet;
pub mod combinatorics;
pub mod error;
pub mod expr;
pub mod formal;
pub mod nsym;
pub mod perm_algebra;
pub mod qsym;
pub mod sym;
pub mod tables;
pub mod tensor_oracle;
pub mod verify;

pub use error::{Error, Result};
