//! Coverings over topological tori and their application to Klein's
//! resolvent problem.
//!
//! A covering of `T^n` is determined up to equivalence by the kernel
//! `A ⊆ Z^n` of its monodromy. From the Smith form of `A` the crate reads the
//! normal form `ξ_1^s × ξ_{m_1} × … × ξ_{m_t} × ξ_∞^r`, the minimal dimension
//! `t + r` of a space the covering can be induced from, and a nonvanishing
//! cup-product class certifying that lower bound.
//!
//! All exact routines are generic over [`Scalar`]; the aliases below fix the
//! scalar to [`BigInt`].
//!
//! ```
//! use toruscover::{klein, torus_cover, RadicalSystem, Radical};
//!
//! // √x + √y needs two parameters, √x + ∛y only one.
//! let two = RadicalSystem::new(2, vec![Radical::parse("1,0:2")?, Radical::parse("0,1:2")?])?;
//! let one = RadicalSystem::new(2, vec![Radical::parse("1,0:2")?, Radical::parse("0,1:3")?])?;
//! assert_eq!(klein::essential_dimension(&two), 2);
//! assert_eq!(torus_cover::classify(&klein::radical_kernel(&one)).m, vec![6.into()]);
//! # Ok::<(), toruscover::Error>(())
//! ```

pub mod abgroup;
pub mod charclass;
pub mod error;
pub mod klein;
pub mod lattice_core;
pub mod permcover;
pub mod scalar;
pub mod torus_cover;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use permcover::{PermAction, Permutation};
pub use scalar::Scalar;

pub type IntMatrix = lattice_core::Matrix<BigInt>;
pub type SmithDecomposition = lattice_core::SmithDecomposition<BigInt>;
pub type Lattice = lattice_core::Lattice<BigInt>;
pub type AbelianGroup = abgroup::AbelianGroup<BigInt>;
pub type TorusCovering = torus_cover::TorusCovering<BigInt>;
pub type NormalForm = torus_cover::NormalForm<BigInt>;
pub type CohomologyClass = charclass::CohomologyClass<BigInt>;
pub type Radical = klein::Radical<BigInt>;
pub type RadicalSystem = klein::RadicalSystem<BigInt>;
pub type LinearFlag = klein::LinearFlag<BigInt>;
