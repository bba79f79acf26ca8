//! Finitely generated abelian groups `Z^n / L`: invariant factors and rank.
//!
//! Torsion factors are kept in increasing divisibility order `m_1 | m_2 | …`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice_core::{smith_normal_form, Lattice};
use crate::scalar::Scalar;

/// Largest group [`minimal_generators_bruteforce`] will materialize.
pub const BRUTEFORCE_ORDER_CAP: usize = 512;

/// `Z_{m_1} ⊕ … ⊕ Z_{m_t} ⊕ Z^r` with `m_1 | … | m_t` and every `m_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup<T> {
    torsion: Vec<T>,
    free_rank: usize,
}

impl<T: Scalar> AbelianGroup<T> {
    pub fn new(torsion: Vec<T>, free_rank: usize) -> Result<Self> {
        let two = T::of(2);
        if let Some(m) = torsion.iter().find(|m| **m < two) {
            return Err(Error::InvalidModulus(m.to_string(), 2));
        }
        if let Some(w) = torsion.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::ShapeMismatch(format!("invariant factors {} and {} do not divide", w[0], w[1])));
        }
        Ok(AbelianGroup { torsion, free_rank })
    }

    pub fn trivial() -> Self {
        AbelianGroup { torsion: Vec::new(), free_rank: 0 }
    }

    pub fn torsion(&self) -> &[T] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<T> {
        self.is_finite().then(|| self.torsion.iter().fold(T::one(), |acc, m| acc * m.clone()))
    }

    /// Minimal number of cyclic summands.
    pub fn rank(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    /// `dim_{Z_p} (G ⊗ Z_p)`.
    pub fn rank_mod_p(&self, p: &T) -> Result<usize> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(self.free_rank + self.torsion.iter().filter(|m| m.is_multiple_of(p)).count())
    }
}

impl<T: Scalar> fmt::Display for AbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|m| format!("Z_{m}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn is_prime<T: Scalar>(p: &T) -> bool {
    let two = T::of(2);
    if *p < two {
        return false;
    }
    let mut d = two;
    while d.clone() * d.clone() <= *p {
        if p.is_multiple_of(&d) {
            return false;
        }
        d = d + T::one();
    }
    true
}

/// Invariant-factor decomposition of `Z^n / L`, read off the Smith diagonal
/// of the basis of `L`.
pub fn quotient_structure<T: Scalar>(n: usize, lattice: &Lattice<T>) -> Result<AbelianGroup<T>> {
    if lattice.ambient_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: lattice.ambient_dim() });
    }
    let snf = smith_normal_form(lattice.basis());
    let diag = snf.diagonal();
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag.into_iter().filter(|d| *d > T::one()).collect();
    Ok(AbelianGroup { torsion, free_rank: n - nonzero })
}

pub fn rank<T: Scalar>(group: &AbelianGroup<T>) -> usize {
    group.rank()
}

pub fn rank_mod_p<T: Scalar>(group: &AbelianGroup<T>, p: &T) -> Result<usize> {
    group.rank_mod_p(p)
}

/// Smallest size of a generating set, found by exhaustive search.
///
/// The group is materialized as tuples under componentwise addition. Level
/// `i` of the search holds every subgroup generated by `i` elements; level
/// `i + 1` adjoins every element to every level-`i` subgroup. The answer is
/// the first level containing the whole group. This never consults the
/// invariant factors beyond building the element set.
pub fn minimal_generators_bruteforce<T: Scalar>(group: &AbelianGroup<T>) -> Result<usize> {
    if !group.is_finite() {
        return Err(Error::InfiniteGroup);
    }
    let order = group.order().expect("finite");
    let cap = T::of_usize(BRUTEFORCE_ORDER_CAP);
    if order > cap {
        return Err(Error::GroupTooLarge { order: order.to_string(), cap: BRUTEFORCE_ORDER_CAP });
    }
    let moduli: Vec<usize> = group.torsion.iter().map(|m| m.to_usize().expect("small modulus")).collect();
    let table = Elements::new(&moduli);
    let size = table.len();
    let whole = Subgroup::full(size);

    let mut level: HashSet<Subgroup> = HashSet::from([Subgroup::singleton(size, 0)]);
    for depth in 0.. {
        if level.contains(&whole) {
            return Ok(depth);
        }
        let mut next = HashSet::new();
        for h in &level {
            // ⟨H, g⟩ only depends on the coset g + H
            let mut seen = h.clone();
            for g in 0..size {
                if seen.contains(g) {
                    continue;
                }
                let joined = table.adjoin(h, g);
                for x in 0..size {
                    if h.contains(x) {
                        seen.insert(table.add(x, g));
                    }
                }
                next.insert(joined);
            }
        }
        level = next;
    }
    unreachable!()
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Subgroup(Vec<u64>);

impl Subgroup {
    fn empty(size: usize) -> Self {
        Subgroup(vec![0; size.div_ceil(64)])
    }

    fn singleton(size: usize, x: usize) -> Self {
        let mut s = Self::empty(size);
        s.insert(x);
        s
    }

    fn full(size: usize) -> Self {
        let mut s = Self::empty(size);
        (0..size).for_each(|x| s.insert(x));
        s
    }

    fn contains(&self, x: usize) -> bool {
        self.0[x / 64] >> (x % 64) & 1 == 1
    }

    fn insert(&mut self, x: usize) {
        self.0[x / 64] |= 1 << (x % 64);
    }
}

/// Mixed-radix indexing of `Z_{m_1} × … × Z_{m_t}`.
struct Elements {
    moduli: Vec<usize>,
    size: usize,
}

impl Elements {
    fn new(moduli: &[usize]) -> Self {
        Elements { moduli: moduli.to_vec(), size: moduli.iter().product() }
    }

    fn len(&self) -> usize {
        self.size
    }

    fn add(&self, mut a: usize, mut b: usize) -> usize {
        let (mut out, mut stride) = (0, 1);
        for &m in &self.moduli {
            out += ((a % m + b % m) % m) * stride;
            a /= m;
            b /= m;
            stride *= m;
        }
        out
    }

    fn adjoin(&self, h: &Subgroup, g: usize) -> Subgroup {
        let members: Vec<usize> = (0..self.size).filter(|&x| h.contains(x)).collect();
        let mut out = h.clone();
        let mut shift = g;
        while !out.contains(shift) {
            for &x in &members {
                out.insert(self.add(x, shift));
            }
            shift = self.add(shift, g);
        }
        out
    }
}

/// Ranks of `A = M/L`, `B = Z^n/L`, `C = Z^n/M` in `0 → A → B → C → 0`.
pub fn exact_sequence_ranks<T: Scalar>(n: usize, l: &Lattice<T>, m: &Lattice<T>) -> Result<(usize, usize, usize)> {
    for x in [l, m] {
        if x.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: x.ambient_dim() });
        }
    }
    if !m.contains(l)? {
        return Err(Error::NotContained("L is not a sublattice of M".into()));
    }
    let coords = (0..l.rank())
        .map(|i| m.coordinates(l.basis().row(i)).map(|c| c.expect("L ⊆ M")))
        .collect::<Result<Vec<_>>>()?;
    let in_m = Lattice::from_rows(coords, m.rank())?;
    let a = quotient_structure(m.rank(), &in_m)?;
    let b = quotient_structure(n, l)?;
    let c = quotient_structure(n, m)?;
    Ok((a.rank(), b.rank(), c.rank()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type G = AbelianGroup<BigInt>;
    type L = Lattice<BigInt>;

    fn group(torsion: &[i64], free: usize) -> G {
        G::new(torsion.iter().map(|&m| BigInt::from(m)).collect(), free).unwrap()
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_structure(2, &L::from_i64(&[[2, 0], [0, 3]], 2)).unwrap(), group(&[6], 0));
        assert_eq!(quotient_structure(2, &L::from_i64(&[[2, 0], [0, 2]], 2)).unwrap(), group(&[2, 2], 0));
        assert_eq!(quotient_structure(3, &L::zero(3)).unwrap(), group(&[], 3));
        assert!(quotient_structure(2, &L::zero(3)).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&group(&[2, 2], 0)), 2);
        assert_eq!(rank(&group(&[6], 0)), 1);
        assert_eq!(rank(&group(&[2, 4], 1)), 3);
        assert_eq!(rank(&G::trivial()), 0);
    }

    #[test]
    fn rank_mod_p_examples() {
        let g = group(&[2, 4], 1);
        assert_eq!(rank_mod_p(&g, &BigInt::from(2)).unwrap(), 3);
        assert_eq!(rank_mod_p(&g, &BigInt::from(3)).unwrap(), 1);
        assert_eq!(rank_mod_p(&group(&[6], 0), &BigInt::from(2)).unwrap(), 1);
        assert_eq!(rank_mod_p(&g, &BigInt::from(4)), Err(Error::NotPrime("4".into())));
        assert!(rank_mod_p(&g, &BigInt::from(1)).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(minimal_generators_bruteforce(&group(&[2, 2], 0)).unwrap(), 2);
        assert_eq!(minimal_generators_bruteforce(&group(&[6], 0)).unwrap(), 1);
        assert_eq!(minimal_generators_bruteforce(&group(&[2, 2, 2], 0)).unwrap(), 3);
        assert_eq!(minimal_generators_bruteforce(&G::trivial()).unwrap(), 0);
        assert_eq!(minimal_generators_bruteforce(&group(&[2], 1)), Err(Error::InfiniteGroup));
        assert!(matches!(
            minimal_generators_bruteforce(&group(&[1024], 0)),
            Err(Error::GroupTooLarge { cap: 512, .. })
        ));
    }

    #[test]
    fn invalid_groups_rejected() {
        assert!(G::new(vec![BigInt::from(1)], 0).is_err());
        assert!(G::new(vec![BigInt::from(2), BigInt::from(3)], 0).is_err());
    }

    #[test]
    fn exact_sequence_examples() {
        let four = L::from_i64(&[[4]], 1);
        let two = L::from_i64(&[[2]], 1);
        assert_eq!(exact_sequence_ranks(1, &four, &two).unwrap(), (1, 1, 1));
        let even = L::from_i64(&[[2, 0], [0, 2]], 2);
        assert_eq!(exact_sequence_ranks(2, &even, &L::full(2)).unwrap(), (2, 2, 0));
        assert_eq!(exact_sequence_ranks(2, &L::zero(2), &L::zero(2)).unwrap(), (0, 2, 2));
        assert!(matches!(exact_sequence_ranks(1, &two, &four), Err(Error::NotContained(_))));
    }

    #[test]
    fn display() {
        assert_eq!(group(&[2, 6], 2).to_string(), "Z_2 + Z_6 + Z^2");
        assert_eq!(G::trivial().to_string(), "0");
    }
}
