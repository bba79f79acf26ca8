use std::fmt;

use crate::error::{Error, Result};
use crate::lattice_core::{congruence_kernel, Matrix};
use crate::permcover::{is_even_only, PermAction, Permutation, DEFAULT_CAP};
use crate::scalar::Scalar;
use crate::torus_cover::{from_perm_action, min_inducing_dim, TorusCovering};

/// The multivalued monomial `x^{a/m}` on the algebraic torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Radical<T> {
    pub exponents: Vec<T>,
    pub index: T,
}

impl<T: Scalar> Radical<T> {
    pub fn new(exponents: Vec<T>, index: T) -> Result<Self> {
        if index < T::one() {
            return Err(Error::InvalidModulus(index.to_string(), 1));
        }
        Ok(Radical { exponents, index })
    }

    /// Parses `"a_1,…,a_n:m"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::ShapeMismatch(format!("radical {s:?} is not of the form a1,...,an:m"));
        let (exps, index) = s.split_once(':').ok_or_else(bad)?;
        let index = index.trim().parse::<T>().map_err(|_| bad())?;
        let exponents = if exps.trim().is_empty() {
            Vec::new()
        } else {
            exps.split(',').map(|e| e.trim().parse::<T>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?
        };
        Self::new(exponents, index)
    }
}

impl<T: Scalar> fmt::Display for Radical<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<String> = self.exponents.iter().map(|e| e.to_string()).collect();
        write!(f, "{}:{}", exps.join(","), self.index)
    }
}

/// A finite set of monomial radicals in `n` torus variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadicalSystem<T> {
    n: usize,
    radicals: Vec<Radical<T>>,
}

impl<T: Scalar> RadicalSystem<T> {
    pub fn new(n: usize, radicals: Vec<Radical<T>>) -> Result<Self> {
        if let Some(r) = radicals.iter().find(|r| r.exponents.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: r.exponents.len() });
        }
        Ok(RadicalSystem { n, radicals })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn radicals(&self) -> &[Radical<T>] {
        &self.radicals
    }
}

/// Kernel of the monodromy of the radical system.
///
/// The loop `γ_u` multiplies `x^{a/m}` by `exp(2πi (u·a)/m)`, so it fixes
/// every branch iff `u·a_j ≡ 0 (mod m_j)` for all `j`.
pub fn radical_kernel<T: Scalar>(rs: &RadicalSystem<T>) -> TorusCovering<T> {
    let exps =
        Matrix::from_rows(rs.radicals.iter().map(|r| r.exponents.clone()).collect(), rs.n).expect("validated lengths");
    let moduli: Vec<T> = rs.radicals.iter().map(|r| r.index.clone()).collect();
    TorusCovering::from_kernel(congruence_kernel(&exps, &moduli).expect("validated moduli"))
}

pub fn essential_dimension<T: Scalar>(rs: &RadicalSystem<T>) -> usize {
    min_inducing_dim(&radical_kernel(rs))
}

/// Whether a tower of extensions of the given dimensions can dominate the function.
pub fn tower_feasible<T: Scalar>(rs: &RadicalSystem<T>, dims: &[usize]) -> bool {
    dims.iter().sum::<usize>() >= essential_dimension(rs)
}

/// Lower bound for the universal degree-`n` function, with the radical
/// system it is certified by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalBound<T> {
    pub bound: usize,
    /// Coordinates `a_1…a_k, s_1…s_k` and, for odd degree, `a_{k+1}`.
    pub coordinates: Vec<String>,
    /// `√s_i` for each `i`.
    pub certificate: RadicalSystem<T>,
}

/// `⌊n/2⌋`, certified by the roots `a_i ± √s_i` (plus `a_{k+1}` for odd `n`).
pub fn universal_lower_bound<T: Scalar>(n: usize) -> Result<UniversalBound<T>> {
    if n == 0 {
        return Err(Error::ShapeMismatch("degree must be at least 1".into()));
    }
    let k = n / 2;
    let dim = 2 * k + n % 2;
    let mut coordinates: Vec<String> =
        (1..=k).map(|i| format!("a{i}")).chain((1..=k).map(|i| format!("s{i}"))).collect();
    if n % 2 == 1 {
        coordinates.push(format!("a{}", k + 1));
    }
    let radicals = (0..k)
        .map(|i| {
            let mut e = vec![T::zero(); dim];
            e[k + i] = T::one();
            Radical::new(e, T::of(2))
        })
        .collect::<Result<Vec<_>>>()?;
    let certificate = RadicalSystem::new(dim, radicals)?;
    assert_eq!(essential_dimension(&certificate), k, "certificate rank");
    Ok(UniversalBound { bound: k, coordinates, certificate })
}

/// Lower bound when the square root of the discriminant is adjoined,
/// certified by an action realized by even permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalDiscBound {
    pub bound: usize,
    /// Loop generators `s_1, t_1, s_2, t_2, …`.
    pub loops: Vec<String>,
    pub certificate: PermAction,
}

/// `2⌊n/4⌋`. Block `i` holds the roots `a_i ± √s_i ± √t_i ± b_i√(s_i t_i)`;
/// the loop around `s_i` flips `√s_i` and `√(s_i t_i)`, the loop around
/// `t_i` flips `√t_i` and `√(s_i t_i)`. Roots beyond the last full block are
/// single-valued.
pub fn universal_disc_lower_bound(n: usize) -> Result<UniversalDiscBound> {
    if n == 0 {
        return Err(Error::ShapeMismatch("degree must be at least 1".into()));
    }
    let blocks = n / 4;
    let mut gens = Vec::with_capacity(2 * blocks);
    let mut loops = Vec::with_capacity(2 * blocks);
    for i in 0..blocks {
        let w = 4 * i;
        gens.push(Permutation::from_cycles(n, &[&[w, w + 1], &[w + 2, w + 3]])?);
        gens.push(Permutation::from_cycles(n, &[&[w, w + 2], &[w + 1, w + 3]])?);
        loops.push(format!("s{}", i + 1));
        loops.push(format!("t{}", i + 1));
    }
    let certificate = PermAction::new(n, gens)?;
    let bound = 2 * blocks;
    assert!(is_even_only(certificate.generators()));
    let covering: TorusCovering<num_bigint::BigInt> = from_perm_action(&certificate, DEFAULT_CAP)?;
    assert_eq!(min_inducing_dim(&covering), bound, "certificate rank");
    Ok(UniversalDiscBound { bound, loops, certificate })
}
