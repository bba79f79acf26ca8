use crate::lattice_core::Matrix;
use crate::scalar::{ext_gcd, Scalar};

/// Row-style Hermite normal form with its unimodular transform.
///
/// Returns `(H, U)` with `U * A = H`. Nonzero rows of `H` come first, each
/// pivot is positive and strictly right of the pivot above it, and the
/// entries above a pivot lie in `[0, pivot)`. Zero rows sit at the bottom.
pub fn hermite_normal_form<T: Scalar>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let rows = a.rows();
    let mut h = a.clone();
    let mut u = Matrix::identity(rows);
    let mut pivot_row = 0;
    for col in 0..a.cols() {
        if pivot_row == rows {
            break;
        }
        for i in pivot_row + 1..rows {
            if h[(i, col)].is_zero() {
                continue;
            }
            let p = h[(pivot_row, col)].clone();
            let b = h[(i, col)].clone();
            let (g, x, y) = ext_gcd(&p, &b);
            let r = -(b / g.clone());
            let s = p / g;
            h.combine_rows(pivot_row, i, [&x, &y, &r, &s]);
            u.combine_rows(pivot_row, i, [&x, &y, &r, &s]);
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let pivot = h[(pivot_row, col)].clone();
        for i in 0..pivot_row {
            let q = h[(i, col)].div_floor(&pivot);
            let neg = -q;
            h.add_row_multiple(i, pivot_row, &neg);
            u.add_row_multiple(i, pivot_row, &neg);
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Basis of the left kernel `{y : y * M = 0}` as the rows of the result.
pub fn left_kernel<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let (h, u) = hermite_normal_form(m);
    let zero_rows: Vec<usize> = (0..h.rows()).filter(|&i| h.row_is_zero(i)).collect();
    u.select_rows(&zero_rows)
}
