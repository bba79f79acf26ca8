//! Degree-`k` cup-product classes in `H^k(T^n, Z_m)`.
//!
//! `H^*(T^n, Z_m)` is the exterior algebra on `n` degree-one generators, so a
//! cup product of `k` degree-one classes has, on each `k`-subset `S` of the
//! generators, the coefficient `det(vectors restricted to S) mod m`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice_core::{smith_normal_form, Matrix};
use crate::scalar::Scalar;
use crate::torus_cover::{classify, TorusCovering};

/// Dense class over all `C(n, k)` subsets in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyClass<T> {
    n: usize,
    k: usize,
    modulus: T,
    coeffs: Vec<T>,
}

/// All `k`-subsets of `{0, …, n-1}`, lexicographically.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

impl<T: Scalar> CohomologyClass<T> {
    /// Coefficients are reduced into `[0, m)`.
    pub fn new(n: usize, k: usize, modulus: T, coeffs: Vec<T>) -> Result<Self> {
        check_modulus(&modulus)?;
        if k > n {
            return Err(Error::ShapeMismatch(format!("degree {k} exceeds torus dimension {n}")));
        }
        let expected = subsets(n, k).len();
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: coeffs.len() });
        }
        let coeffs = coeffs.iter().map(|c| c.modulo(&modulus)).collect();
        Ok(CohomologyClass { n, k, modulus, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &T {
        &self.modulus
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    /// `(subset, coefficient)` pairs with 1-based subsets, lexicographic.
    pub fn entries(&self) -> Vec<(Vec<usize>, T)> {
        subsets(self.n, self.k)
            .into_iter()
            .zip(&self.coeffs)
            .map(|(s, c)| (s.iter().map(|x| x + 1).collect(), c.clone()))
            .collect()
    }

    /// Coefficient on a 1-based subset given in increasing order.
    pub fn coefficient(&self, subset: &[usize]) -> Option<&T> {
        let zero_based: Vec<usize> = subset.iter().map(|x| x.wrapping_sub(1)).collect();
        subsets(self.n, self.k).iter().position(|s| *s == zero_based).map(|i| &self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<T: Scalar> fmt::Display for CohomologyClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .entries()
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| {
                let e: Vec<String> = s.iter().map(|i| format!("e{i}")).collect();
                format!("{c}·{}", if e.is_empty() { "1".into() } else { e.join("∧") })
            })
            .collect();
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        write!(f, "{body} in H^{}(T^{}, Z_{})", self.k, self.n, self.modulus)
    }
}

fn check_modulus<T: Scalar>(m: &T) -> Result<()> {
    if *m < T::of(2) {
        return Err(Error::InvalidModulus(m.to_string(), 2));
    }
    Ok(())
}

/// Cup product of the degree-one classes given by `vectors` (each a list of
/// values on the `n` loop generators).
pub fn wedge<T: Scalar>(n: usize, vectors: &[Vec<T>], modulus: &T) -> Result<CohomologyClass<T>> {
    check_modulus(modulus)?;
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: v.len() });
    }
    let k = vectors.len();
    if k > n {
        return Err(Error::ShapeMismatch(format!("{k} vectors in dimension {n}")));
    }
    let m = Matrix::from_rows(vectors.to_vec(), n)?;
    let coeffs = subsets(n, k)
        .iter()
        .map(|s| m.select_cols(s).determinant().map(|d| d.modulo(modulus)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyClass { n, k, modulus: modulus.clone(), coeffs })
}

/// The degree-one classes whose cup product is the obstruction: the
/// coordinate projections `Z^n → Z^n/A → Z_m` onto the last `t + r` Smith
/// coordinates, valued on each generator.
pub fn obstruction_vectors<T: Scalar>(c: &TorusCovering<T>) -> Result<(T, Vec<Vec<T>>)> {
    let form = classify(c);
    let k = form.min_inducing_dim();
    if k == 0 {
        return Err(Error::TrivialCovering);
    }
    let modulus = form.m.first().cloned().unwrap_or_else(|| T::of(2));
    // U·B·V = D, so x ∈ A iff x·V lies in the row space of D
    let v = smith_normal_form(c.kernel().basis()).v;
    let n = c.dim();
    let vectors = (n - k..n).map(|l| v.col_vec(l).iter().map(|x| x.modulo(&modulus)).collect()).collect();
    Ok((modulus, vectors))
}

/// `w(ξ) ∈ H^k(T^n, Z_m)` with `k` the minimal inducing dimension and `m`
/// the smallest invariant factor (2 when the monodromy is free).
pub fn obstruction_class<T: Scalar>(c: &TorusCovering<T>) -> Result<(T, CohomologyClass<T>)> {
    let (modulus, vectors) = obstruction_vectors(c)?;
    let class = wedge(c.dim(), &vectors, &modulus)?;
    Ok((modulus, class))
}

/// Pullback along the torus map `T^a → T^n` whose action on `π_1` sends the
/// `i`-th generator of `T^a` to row `i` of `map`.
pub fn pullback_class<T: Scalar>(w: &CohomologyClass<T>, map: &Matrix<T>) -> Result<CohomologyClass<T>> {
    if map.cols() != w.n {
        return Err(Error::ShapeMismatch(format!("torus map has {} columns, class lives on T^{}", map.cols(), w.n)));
    }
    let a = map.rows();
    if w.k > a {
        return Ok(CohomologyClass { n: a, k: w.k, modulus: w.modulus.clone(), coeffs: Vec::new() });
    }
    let sources = subsets(w.n, w.k);
    let coeffs = subsets(a, w.k)
        .iter()
        .map(|t| {
            let rows = map.select_rows(t);
            let mut acc = T::zero();
            for (s, c) in sources.iter().zip(&w.coeffs) {
                if c.is_zero() {
                    continue;
                }
                acc = acc + c.clone() * rows.select_cols(s).determinant()?;
            }
            Ok(acc.modulo(&w.modulus))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyClass { n: a, k: w.k, modulus: w.modulus.clone(), coeffs })
}
