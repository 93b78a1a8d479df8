//! Generalized Frobenius numbers for semigroups of totally positive algebraic
//! integers in totally real number fields.
//!
//! The crate works entirely in exact arithmetic. Field elements are integer
//! coordinate vectors over a user supplied integral basis, real embeddings are
//! realized by Sturm-isolated roots of the defining polynomial, and every real
//! quantity (embeddings, heights, bounds) is carried as a rational
//! [`Enclosure`] that is certified to contain the true value.
//!
//! Module map:
//!
//! | module         | contents                                                   |
//! |----------------|------------------------------------------------------------|
//! | [`nf`]         | number fields, integral bases, element arithmetic, traces  |
//! | [`embeddings`] | root isolation, certified embeddings, sign certification   |
//! | [`heights`]    | inhomogeneous Weil height `H_K` and threshold comparison   |
//! | [`measures`]   | the minor measures `D(α)` and `M(α, β)` with cross-checks  |
//! | [`semigroup`]  | generator validation, cone tests, representation search    |
//! | [`frobenius`]  | the upper bound, classical `d = 1` oracle, lower search    |
//! | [`cli`]        | problem files, command dispatch and JSON reports           |
//!
//! ```
//! use frobnf::nf::NumberField;
//! use frobnf::measures::d_measure;
//!
//! let field = NumberField::from_spec(&[-2, 0, 1], &[vec![1, 0], vec![0, 1]]).unwrap();
//! let alpha = field.elements(&[&[1, 0], &[4, 1], &[6, 2]]).unwrap();
//! assert_eq!(d_measure(&alpha).unwrap(), 9.into());
//! assert_eq!(field.discriminant(), &8.into());
//! ```

pub mod cli;
pub mod embeddings;
mod error;
pub mod frobenius;
pub mod heights;
pub mod interval;
pub mod linalg;
pub mod lp;
pub mod measures;
pub mod nf;
pub mod poly;
pub mod semigroup;

pub use embeddings::RootSystem;
pub use error::{Error, Result};
pub use interval::Enclosure;
pub use nf::{FieldElement, NumberField};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Number of interval halvings allowed before a certified decision gives up.
pub const DEFAULT_PRECISION_CAP: u32 = 256;
