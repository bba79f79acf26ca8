//! Coverings over the torus `T^n`, identified with the kernel `A ⊆ Z^n` of
//! their monodromy homomorphism.
//!
//! Two coverings are equivalent exactly when their kernels agree, so the
//! kernel is all this module stores. Every covering is equivalent to
//! `ξ_1^s × ξ_{m_1} × … × ξ_{m_t} × ξ_∞^r` where `ξ_m` is `z ↦ z^m` on the
//! circle and `ξ_∞` is the universal cover, and it can be induced from a
//! covering over a `k`-dimensional space exactly when `k >= t + r`.

use std::fmt;

use crate::abgroup::{quotient_structure, AbelianGroup};
use crate::error::{Error, Result};
use crate::lattice_core::{left_kernel, smith_normal_form, Lattice, Matrix};
use crate::permcover::{kernel_lattice, PermAction};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusCovering<T> {
    kernel: Lattice<T>,
}

/// `(s, [m_1, …, m_t], r)` with `m_1 | … | m_t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm<T> {
    pub s: usize,
    pub m: Vec<T>,
    pub r: usize,
}

impl<T: Scalar> NormalForm<T> {
    pub fn dim(&self) -> usize {
        self.s + self.m.len() + self.r
    }

    pub fn min_inducing_dim(&self) -> usize {
        self.m.len() + self.r
    }
}

impl<T: Scalar> fmt::Display for NormalForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.s > 0 {
            parts.push(format!("ξ_1^{}", self.s));
        }
        parts.extend(self.m.iter().map(|m| format!("ξ_{m}")));
        if self.r > 0 {
            parts.push(format!("ξ_∞^{}", self.r));
        }
        if parts.is_empty() {
            write!(f, "(covering of T^0)")
        } else {
            write!(f, "{}", parts.join(" × "))
        }
    }
}

impl<T: Scalar> TorusCovering<T> {
    pub fn new(n: usize, kernel: Lattice<T>) -> Result<Self> {
        if kernel.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: kernel.ambient_dim() });
        }
        Ok(TorusCovering { kernel })
    }

    pub fn from_kernel(kernel: Lattice<T>) -> Self {
        TorusCovering { kernel }
    }

    /// Degree-1 covering.
    pub fn trivial(n: usize) -> Self {
        TorusCovering { kernel: Lattice::full(n) }
    }

    /// `ξ_∞^n`
    pub fn universal(n: usize) -> Self {
        TorusCovering { kernel: Lattice::zero(n) }
    }

    /// `ξ_{m_1} × … × ξ_{m_n}` with the factors in the given order.
    pub fn product_of_powers(exponents: &[T]) -> Self {
        TorusCovering { kernel: Lattice::from_generators(&Matrix::diagonal(exponents)) }
    }

    pub fn dim(&self) -> usize {
        self.kernel.ambient_dim()
    }

    pub fn kernel(&self) -> &Lattice<T> {
        &self.kernel
    }

    /// `Z^n / A`
    pub fn monodromy_group(&self) -> AbelianGroup<T> {
        quotient_structure(self.dim(), &self.kernel).expect("kernel lives in Z^n")
    }
}

pub fn from_perm_action<T: Scalar>(action: &PermAction, cap: usize) -> Result<TorusCovering<T>> {
    Ok(TorusCovering { kernel: kernel_lattice(action, cap)? })
}

pub fn classify<T: Scalar>(c: &TorusCovering<T>) -> NormalForm<T> {
    let snf = smith_normal_form(c.kernel.basis());
    let mut s = 0;
    let mut m = Vec::new();
    for d in snf.diagonal() {
        if d.is_one() {
            s += 1;
        } else if !d.is_zero() {
            m.push(d);
        }
    }
    let r = c.dim() - s - m.len();
    NormalForm { s, m, r }
}

pub fn min_inducing_dim<T: Scalar>(c: &TorusCovering<T>) -> usize {
    classify(c).min_inducing_dim()
}

pub fn is_inducible_from<T: Scalar>(c: &TorusCovering<T>, k: usize) -> bool {
    k >= min_inducing_dim(c)
}

pub fn is_equivalent<T: Scalar>(c1: &TorusCovering<T>, c2: &TorusCovering<T>) -> Result<bool> {
    c1.kernel.equals(&c2.kernel)
}

/// Connected-cover domination: `c1` dominates `c2` iff `A_1 ⊆ A_2`.
pub fn dominates<T: Scalar>(c1: &TorusCovering<T>, c2: &TorusCovering<T>) -> Result<bool> {
    c2.kernel.contains(&c1.kernel)
}

/// The covering induced along the torus map `T^a → T^n` whose action on
/// `π_1` sends the `i`-th generator to row `i` of `map` (an `a x n` matrix).
pub fn induced_by_map<T: Scalar>(c: &TorusCovering<T>, map: &Matrix<T>) -> Result<TorusCovering<T>> {
    if map.cols() != c.dim() {
        return Err(Error::ShapeMismatch(format!(
            "torus map has {} columns, covering lives over T^{}",
            map.cols(),
            c.dim()
        )));
    }
    // (y, z) with y·F = z·A
    let neg = c.kernel.basis().map(|x| -x.clone());
    let kernel = left_kernel(&map.vstack(&neg)?);
    let first: Vec<usize> = (0..map.rows()).collect();
    Ok(TorusCovering { kernel: Lattice::from_generators(&kernel.select_cols(&first)) })
}

/// Pullback along the connected covering torus whose fundamental group is
/// the full-rank sublattice `h`, in coordinates of the canonical basis of `h`.
pub fn pullback<T: Scalar>(c: &TorusCovering<T>, h: &Lattice<T>) -> Result<TorusCovering<T>> {
    if h.ambient_dim() != c.dim() {
        return Err(Error::DimensionMismatch { expected: c.dim(), found: h.ambient_dim() });
    }
    if !h.is_full_rank() {
        return Err(Error::NotFullRank { rank: h.rank(), dim: h.ambient_dim() });
    }
    induced_by_map(c, h.basis())
}

/// Monodromy group `outer / inner` of the covering between the tori with
/// fundamental groups `inner ⊆ outer`.
pub fn tower_stage_group<T: Scalar>(outer: &Lattice<T>, inner: &Lattice<T>) -> Result<AbelianGroup<T>> {
    if !outer.contains(inner)? {
        return Err(Error::NotContained("tower stage is not a sublattice of the previous stage".into()));
    }
    let coords = (0..inner.rank())
        .map(|i| outer.coordinates(inner.basis().row(i)).map(|c| c.expect("contained")))
        .collect::<Result<Vec<_>>>()?;
    quotient_structure(outer.rank(), &Lattice::from_rows(coords, outer.rank())?)
}

/// Lower bound `max(0, k - Σ k_i)` on the monodromy rank of a pullback along
/// a tower whose stages are induced from spaces of dimensions `k_i`.
pub fn tower_rank_bound(k: usize, dims: &[usize]) -> usize {
    k.saturating_sub(dims.iter().sum())
}
