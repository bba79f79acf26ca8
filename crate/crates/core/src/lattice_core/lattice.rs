use crate::error::{Error, Result};
use crate::lattice_core::{hermite_normal_form, left_kernel, Matrix};
use crate::scalar::Scalar;

/// A subgroup of `Z^n`, stored by its canonical Hermite basis so that two
/// lattices are equal exactly when their stored bases are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice<T> {
    ambient_dim: usize,
    basis: Matrix<T>,
}

impl<T: Scalar> Lattice<T> {
    /// The lattice spanned by the rows of `generators`.
    pub fn from_generators(generators: &Matrix<T>) -> Self {
        let (h, _) = hermite_normal_form(generators);
        let nonzero: Vec<usize> = (0..h.rows()).filter(|&i| !h.row_is_zero(i)).collect();
        Lattice { ambient_dim: generators.cols(), basis: h.select_rows(&nonzero) }
    }

    pub fn from_rows(rows: Vec<Vec<T>>, ambient_dim: usize) -> Result<Self> {
        Ok(Self::from_generators(&Matrix::from_rows(rows, ambient_dim)?))
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R], ambient_dim: usize) -> Self {
        Self::from_generators(&Matrix::from_i64(rows, ambient_dim))
    }

    pub fn zero(n: usize) -> Self {
        Lattice { ambient_dim: n, basis: Matrix::zeros(0, n) }
    }

    pub fn full(n: usize) -> Self {
        Lattice { ambient_dim: n, basis: Matrix::identity(n) }
    }

    /// `factor * Z^n`
    pub fn scaled(n: usize, factor: T) -> Self {
        Self::from_generators(&Matrix::diagonal(&vec![factor; n]))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Canonical basis, one lattice vector per row.
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    /// `[Z^n : L]`, or `None` when the index is infinite.
    pub fn index(&self) -> Option<T> {
        if !self.is_full_rank() {
            return None;
        }
        // Hermite basis of a full-rank lattice is upper triangular
        Some((0..self.ambient_dim).fold(T::one(), |acc, i| acc * self.basis[(i, i)].clone()))
    }

    /// Integer coordinates of `v` in the canonical basis, if `v` is a lattice vector.
    pub fn coordinates(&self, v: &[T]) -> Result<Option<Vec<T>>> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: v.len() });
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        let mut col = 0;
        for i in 0..self.rank() {
            let pivot_col =
                (col..self.ambient_dim).find(|&j| !self.basis[(i, j)].is_zero()).expect("canonical rows are nonzero");
            if rest[col..pivot_col].iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
            let pivot = &self.basis[(i, pivot_col)];
            let (q, r) = rest[pivot_col].div_rem(pivot);
            if !r.is_zero() {
                return Ok(None);
            }
            for (j, x) in rest.iter_mut().enumerate().skip(pivot_col) {
                *x = x.clone() - q.clone() * self.basis[(i, j)].clone();
            }
            coords.push(q);
            col = pivot_col + 1;
        }
        Ok(if rest.iter().all(|x| x.is_zero()) { Some(coords) } else { None })
    }

    pub fn contains_vector(&self, v: &[T]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// True iff `other ⊆ self`.
    pub fn contains(&self, other: &Lattice<T>) -> Result<bool> {
        self.check_dim(other)?;
        for i in 0..other.rank() {
            if !self.contains_vector(other.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of lattices; errors on ambient dimension mismatch.
    pub fn equals(&self, other: &Lattice<T>) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.basis == other.basis)
    }

    pub fn intersection(&self, other: &Lattice<T>) -> Result<Lattice<T>> {
        self.check_dim(other)?;
        let neg = other.basis.map(|x| -x.clone());
        let kernel = left_kernel(&self.basis.vstack(&neg)?);
        let first: Vec<usize> = (0..self.rank()).collect();
        let coeffs = kernel.select_cols(&first);
        Ok(Lattice::from_generators(&coeffs.checked_mul(&self.basis)?))
    }

    pub fn sum(&self, other: &Lattice<T>) -> Result<Lattice<T>> {
        self.check_dim(other)?;
        Ok(Lattice::from_generators(&self.basis.vstack(&other.basis)?))
    }

    fn check_dim(&self, other: &Lattice<T>) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }
}

/// `L1 ⊇ L2`
pub fn lattice_contains<T: Scalar>(l1: &Lattice<T>, l2: &Lattice<T>) -> Result<bool> {
    l1.contains(l2)
}

pub fn lattice_equal<T: Scalar>(l1: &Lattice<T>, l2: &Lattice<T>) -> Result<bool> {
    l1.equals(l2)
}

/// `{u ∈ Z^n : u·a_j ≡ 0 (mod m_j) for every row a_j of A}`.
pub fn congruence_kernel<T: Scalar>(a: &Matrix<T>, moduli: &[T]) -> Result<Lattice<T>> {
    if moduli.len() != a.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: moduli.len() });
    }
    if let Some(m) = moduli.iter().find(|m| *m < &T::one()) {
        return Err(Error::InvalidModulus(m.to_string(), 1));
    }
    let n = a.cols();
    // (u, z) with u·A^T = z·diag(m)
    let neg_moduli: Vec<T> = moduli.iter().map(|m| -m.clone()).collect();
    let system = a.transpose().vstack(&Matrix::diagonal(&neg_moduli))?;
    let kernel = left_kernel(&system);
    let first: Vec<usize> = (0..n).collect();
    Ok(Lattice::from_generators(&kernel.select_cols(&first)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type L = Lattice<BigInt>;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn containment_examples() {
        let even = L::from_i64(&[[2, 0], [0, 2]], 2);
        assert!(lattice_contains(&L::full(2), &even).unwrap());
        assert!(!lattice_contains(&L::from_i64(&[[3, 0]], 2), &L::from_i64(&[[2, 0]], 2)).unwrap());
        assert!(lattice_contains(&even, &L::zero(2)).unwrap());
        assert!(lattice_contains(&L::full(3), &even).is_err());
    }

    #[test]
    fn equality_example() {
        let a = L::from_i64(&[[1, 1], [0, 2]], 2);
        let b = L::from_i64(&[[2, 0], [1, 1]], 2);
        assert!(lattice_equal(&a, &b).unwrap());
        // membership in a bounded box agrees as well
        for x in -5..=5 {
            for y in -5..=5 {
                assert_eq!(a.contains_vector(&v(&[x, y])).unwrap(), b.contains_vector(&v(&[x, y])).unwrap());
            }
        }
    }

    #[test]
    fn congruence_examples() {
        let id = Matrix::<BigInt>::identity(2);
        let k = congruence_kernel(&id, &v(&[2, 3])).unwrap();
        assert_eq!(k, L::from_i64(&[[2, 0], [0, 3]], 2));

        let k = congruence_kernel(&Matrix::from_i64(&[[1, 1]], 2), &v(&[2])).unwrap();
        assert_eq!(k, L::from_i64(&[[1, 1], [0, 2]], 2));
        // enumeration of residues mod 2
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(k.contains_vector(&v(&[x, y])).unwrap(), (x + y) % 2 == 0);
            }
        }

        let k = congruence_kernel(&Matrix::from_i64(&[[5, 7, 1], [2, 2, 9]], 3), &v(&[1, 1])).unwrap();
        assert_eq!(k, L::full(3));

        let k = congruence_kernel(&Matrix::<BigInt>::zeros(0, 3), &[]).unwrap();
        assert_eq!(k, L::full(3));
    }

    #[test]
    fn congruence_rejects_bad_moduli() {
        let id = Matrix::<BigInt>::identity(2);
        assert!(matches!(congruence_kernel(&id, &v(&[2])), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(congruence_kernel(&id, &v(&[2, 0])), Err(Error::InvalidModulus(..))));
    }

    #[test]
    fn index_and_coordinates() {
        let l = L::from_i64(&[[2, 0], [0, 3]], 2);
        assert_eq!(l.index(), Some(BigInt::from(6)));
        assert_eq!(L::from_i64(&[[2, 0]], 2).index(), None);
        assert_eq!(L::full(0).index(), Some(BigInt::from(1)));
        let h = L::from_i64(&[[2, 0], [0, 1]], 2);
        assert_eq!(h.coordinates(&v(&[4, 3])).unwrap(), Some(v(&[2, 3])));
        assert_eq!(h.coordinates(&v(&[3, 3])).unwrap(), None);
    }

    #[test]
    fn intersection_and_sum() {
        let a = L::from_i64(&[[2, 0], [0, 1]], 2);
        let b = L::from_i64(&[[1, 0], [0, 2]], 2);
        assert_eq!(a.intersection(&b).unwrap(), L::from_i64(&[[2, 0], [0, 2]], 2));
        assert_eq!(a.sum(&b).unwrap(), L::full(2));
        assert_eq!(
            L::scaled(1, BigInt::from(4)).intersection(&L::scaled(1, BigInt::from(6))).unwrap(),
            L::scaled(1, BigInt::from(12))
        );
    }
}
