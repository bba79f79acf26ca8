//! Monodromy of a torus covering as `n` commuting permutations of a finite
//! fiber, one per loop generator of `π_1(T^n) = Z^n`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice_core::{Lattice, Matrix};
use crate::scalar::Scalar;

/// Default bound on the number of group elements any enumeration may visit.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A bijection of `{0, …, f-1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut hit = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || hit[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            hit[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(size: usize) -> Self {
        Permutation { images: (0..size).collect() }
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[0, 1], [2, 3]]`.
    pub fn from_cycles(size: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..size).collect();
        let mut touched = HashSet::new();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= size || !touched.insert(x) {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?}")));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.size(), other.size());
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// `self^k` for any integer `k`.
    pub fn pow<T: Scalar>(&self, k: &T) -> Permutation {
        let e = k.modulo(&T::of_usize(self.order())).to_usize().expect("reduced exponent");
        let mut out = Permutation::identity(self.size());
        for _ in 0..e {
            out = self.compose(&out);
        }
        out
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Images of the torus generators `γ_1, …, γ_n` in the symmetric group of the fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermAction {
    fiber_size: usize,
    generators: Vec<Permutation>,
}

impl PermAction {
    pub fn new(fiber_size: usize, generators: Vec<Permutation>) -> Result<Self> {
        if fiber_size == 0 {
            return Err(Error::InvalidPermutation("fiber must be nonempty".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.size() != fiber_size) {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} acts on {} points, fiber has {fiber_size}",
                g.size()
            )));
        }
        Ok(PermAction { fiber_size, generators })
    }

    /// Parses generators from one-line notation; all must share one size.
    pub fn from_images(images: Vec<Vec<usize>>, fiber_size: usize) -> Result<Self> {
        let gens = images.into_iter().map(Permutation::new).collect::<Result<Vec<_>>>()?;
        Self::new(fiber_size, gens)
    }

    pub fn fiber_size(&self) -> usize {
        self.fiber_size
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Torus dimension `n`.
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// `g_1^{v_1} ⋯ g_n^{v_n}`
    pub fn evaluate<T: Scalar>(&self, v: &[T]) -> Result<Permutation> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        Ok(self
            .generators
            .iter()
            .zip(v)
            .fold(Permutation::identity(self.fiber_size), |acc, (g, k)| g.pow(k).compose(&acc)))
    }

    fn first_noncommuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !self.generators[i].commutes_with(&self.generators[j]))
    }
}

pub fn check_commuting(action: &PermAction) -> bool {
    action.first_noncommuting_pair().is_none()
}

/// `{v ∈ Z^n : g_1^{v_1} ⋯ g_n^{v_n} = id}`.
///
/// Breadth-first search over the generated group records one exponent vector
/// per element; whenever a generator step lands on a known element the
/// difference of the two vectors is a relation. Those relations together with
/// `diag(ord g_i)` span the kernel. `cap` bounds the number of group elements
/// visited.
pub fn kernel_lattice<T: Scalar>(action: &PermAction, cap: usize) -> Result<Lattice<T>> {
    if let Some((i, j)) = action.first_noncommuting_pair() {
        return Err(Error::NonCommuting(i, j));
    }
    let n = action.dim();
    let orders: Vec<T> = action.generators.iter().map(|g| T::of_usize(g.order())).collect();
    let mut lattice = Lattice::from_generators(&Matrix::diagonal(&orders));

    let identity = Permutation::identity(action.fiber_size);
    let mut discrete_log: HashMap<Permutation, Vec<i64>> = HashMap::from([(identity.clone(), vec![0; n])]);
    let mut queue = VecDeque::from([identity]);
    while let Some(elem) = queue.pop_front() {
        let exps = discrete_log[&elem].clone();
        for (i, g) in action.generators.iter().enumerate() {
            let next = g.compose(&elem);
            let mut next_exps = exps.clone();
            next_exps[i] += 1;
            match discrete_log.get(&next) {
                Some(known) => {
                    let relation: Vec<T> = next_exps.iter().zip(known).map(|(a, b)| T::of(a - b)).collect();
                    if !lattice.contains_vector(&relation)? {
                        let extended = lattice.basis().vstack(&Matrix::from_rows(vec![relation], n)?)?;
                        lattice = Lattice::from_generators(&extended);
                    }
                }
                None => {
                    if discrete_log.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    discrete_log.insert(next.clone(), next_exps);
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(lattice)
}

/// Orbits of the generated group, each sorted, ordered by smallest point.
pub fn orbits(action: &PermAction) -> Vec<Vec<usize>> {
    let mut seen = vec![false; action.fiber_size];
    let mut out = Vec::new();
    for start in 0..action.fiber_size {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for g in &action.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    stack.push(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Every element of the group generated by `gens`, sorted by one-line notation.
pub fn group_closure(fiber_size: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    if let Some(g) = gens.iter().find(|g| g.size() != fiber_size) {
        return Err(Error::InvalidPermutation(format!("{g} does not act on {fiber_size} points")));
    }
    let identity = Permutation::identity(fiber_size);
    let mut seen = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(elem) = queue.pop_front() {
        for g in gens {
            let next = g.compose(&elem);
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::CapExceeded { cap });
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Even generators generate an even group, so checking generators suffices.
pub fn is_even_only(gens: &[Permutation]) -> bool {
    gens.iter().all(Permutation::is_even)
}
