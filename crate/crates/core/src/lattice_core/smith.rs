use crate::lattice_core::Matrix;
use crate::scalar::{ext_gcd, Scalar};

/// `U * source * V = D` with `U`, `V` unimodular and `D` diagonal.
///
/// The diagonal is nonnegative, nonzero entries precede zero ones, and each
/// entry divides the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub source: Matrix<T>,
}

impl<T: Scalar> SmithDecomposition<T> {
    /// The `min(rows, cols)` diagonal entries of `D`.
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Number of nonzero diagonal entries, i.e. the rank of the source.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Checks every defining property exactly. Used as a certificate in tests.
    pub fn verify(&self) -> bool {
        let one = T::one();
        let product = match self.u.checked_mul(&self.source).and_then(|m| m.checked_mul(&self.v)) {
            Ok(p) => p,
            Err(_) => return false,
        };
        if product != self.d {
            return false;
        }
        let unimodular = |m: &Matrix<T>| m.determinant().map(|d| d.abs() == one).unwrap_or(false);
        if !unimodular(&self.u) || !unimodular(&self.v) {
            return false;
        }
        for i in 0..self.d.rows() {
            for j in 0..self.d.cols() {
                if i != j && !self.d[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        let diag = self.diagonal();
        if diag.iter().any(|d| d.is_negative()) {
            return false;
        }
        // d_i | d_{i+1}; with 0 | 0 only, this also forces zeros last.
        diag.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) })
    }
}

/// Coefficients `[x, y, r, s]` of a unimodular 2x2 step sending `(p, b)` to `(g, 0)`.
/// When `p | b` the pivot is kept as is, so the outer loop cannot cycle.
fn eliminator<T: Scalar>(p: &T, b: &T) -> [T; 4] {
    if b.is_multiple_of(p) {
        return [T::one(), T::zero(), -(b.clone() / p.clone()), T::one()];
    }
    let (g, x, y) = ext_gcd(p, b);
    [x, y, -(b.clone() / g.clone()), p.clone() / g]
}

/// Smith normal form by gcd-based row and column elimination.
pub fn smith_normal_form<T: Scalar>(a: &Matrix<T>) -> SmithDecomposition<T> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let [x, y, r, s] = eliminator(&d[(t, t)], &d[(i, t)]);
                d.combine_rows(t, i, [&x, &y, &r, &s]);
                u.combine_rows(t, i, [&x, &y, &r, &s]);
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let [x, y, r, s] = eliminator(&d[(t, t)], &d[(t, j)]);
                d.combine_cols(t, j, [&x, &y, &r, &s]);
                v.combine_cols(t, j, [&x, &y, &r, &s]);
            }
            if (t + 1..rows).any(|i| !d[(i, t)].is_zero()) {
                continue;
            }
            // the pivot must divide the whole trailing block
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = T::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { u, d, v, source: a.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;

    fn diag(a: &M) -> Vec<i64> {
        let s = smith_normal_form(a);
        assert!(s.verify(), "certificate failed for {a}");
        s.diagonal().iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn coprime_diagonal_merges() {
        assert_eq!(diag(&M::from_i64(&[[2, 0], [0, 3]], 2)), vec![1, 6]);
    }

    #[test]
    fn equal_diagonal_kept() {
        assert_eq!(diag(&M::from_i64(&[[2, 0], [0, 2]], 2)), vec![2, 2]);
    }

    #[test]
    fn zero_matrix_untouched() {
        let z = M::zeros(2, 2);
        let s = smith_normal_form(&z);
        assert_eq!(s.d, z);
        assert_eq!(s.u, M::identity(2));
        assert_eq!(s.v, M::identity(2));
    }

    #[test]
    fn rectangular_and_degenerate_shapes() {
        assert_eq!(diag(&M::from_i64(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]], 3)), vec![2, 6, 12]);
        assert_eq!(diag(&M::from_i64(&[[0, 4], [0, 6], [0, 0]], 2)), vec![2, 0]);
        assert!(diag(&M::zeros(0, 3)).is_empty());
        assert!(diag(&M::zeros(3, 0)).is_empty());
        assert_eq!(diag(&M::from_i64(&[[-5]], 1)), vec![5]);
    }
}
