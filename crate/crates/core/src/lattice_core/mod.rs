//! Exact integer linear algebra: Hermite and Smith normal forms, lattice
//! membership and containment, and kernels of congruence systems.

mod hnf;
mod lattice;
mod matrix;
mod smith;

pub use hnf::{hermite_normal_form, left_kernel};
pub use lattice::{congruence_kernel, lattice_contains, lattice_equal, Lattice};
pub use matrix::Matrix;
pub use smith::{smith_normal_form, SmithDecomposition};
