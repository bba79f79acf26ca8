use crate::abgroup::quotient_structure;
use crate::error::{Error, Result};
use crate::lattice_core::Matrix;
use crate::permcover::{group_closure, is_even_only, kernel_lattice, PermAction, Permutation, DEFAULT_CAP};
use crate::scalar::Scalar;

/// Largest `n` for which [`flag_stabilizer`] searches all of `S_n`.
pub const FLAG_DIM_CAP: usize = 8;

/// A strictly decreasing chain of subspaces of `C^n`. Step `j` is cut out by
/// the equations of steps `0..=j` together; each equation `c` means
/// `Σ c_i z_i = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFlag<T> {
    n: usize,
    steps: Vec<Matrix<T>>,
}

impl<T: Scalar> LinearFlag<T> {
    pub fn new(n: usize, steps: Vec<Vec<Vec<T>>>) -> Result<Self> {
        let steps = steps.into_iter().map(|s| Matrix::from_rows(s, n)).collect::<Result<Vec<_>>>()?;
        let mut span = Span::new(n);
        for (j, step) in steps.iter().enumerate() {
            let before = span.rank();
            for i in 0..step.rows() {
                span.insert(step.row(i));
            }
            if span.rank() == before {
                return Err(Error::InvalidFlag(format!("step {j} does not shrink the subspace")));
            }
        }
        Ok(LinearFlag { n, steps })
    }

    pub fn from_i64(n: usize, steps: &[&[&[i64]]]) -> Result<Self> {
        let steps = steps.iter().map(|s| s.iter().map(|eq| eq.iter().map(|&c| T::of(c)).collect()).collect()).collect();
        Self::new(n, steps)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Equations added at each step.
    pub fn steps(&self) -> &[Matrix<T>] {
        &self.steps
    }

    /// Dimension of each subspace in the chain, after the ambient space.
    pub fn dimensions(&self) -> Vec<usize> {
        let mut span = Span::new(self.n);
        self.steps
            .iter()
            .map(|s| {
                (0..s.rows()).for_each(|i| span.insert(s.row(i)));
                self.n - span.rank()
            })
            .collect()
    }

    fn spans(&self) -> Vec<Span<T>> {
        let mut span = Span::new(self.n);
        self.steps
            .iter()
            .map(|s| {
                (0..s.rows()).for_each(|i| span.insert(s.row(i)));
                span.clone()
            })
            .collect()
    }
}

/// Rational row space kept in fraction-free echelon form.
#[derive(Debug, Clone)]
struct Span<T> {
    n: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> Span<T> {
    fn new(n: usize) -> Self {
        Span { n, rows: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `v` minus its component in the span, scaled to a primitive integer vector.
    fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut v = v.to_vec();
        for (pc, row) in &self.rows {
            if v[*pc].is_zero() {
                continue;
            }
            let (p, c) = (row[*pc].clone(), v[*pc].clone());
            v = v.iter().zip(row).map(|(x, r)| p.clone() * x.clone() - c.clone() * r.clone()).collect();
            let g = v.iter().fold(T::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                v = v.into_iter().map(|x| x / g.clone()).collect();
            }
        }
        v
    }

    fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    fn insert(&mut self, v: &[T]) {
        debug_assert_eq!(v.len(), self.n);
        let r = self.reduce(v);
        if let Some(pc) = r.iter().position(|x| !x.is_zero()) {
            self.rows.push((pc, r));
        }
    }
}

/// Every `σ ∈ S_n`, acting by permuting coordinates, that maps each subspace
/// of the flag onto itself; sorted by one-line notation.
pub fn flag_stabilizer<T: Scalar>(flag: &LinearFlag<T>) -> Result<Vec<Permutation>> {
    let n = flag.n;
    if n > FLAG_DIM_CAP {
        return Err(Error::FlagTooLarge { n, cap: FLAG_DIM_CAP });
    }
    let spans = flag.spans();
    // cumulative equations per step
    let mut systems: Vec<Vec<Vec<T>>> = Vec::new();
    let mut acc = Vec::new();
    for step in &flag.steps {
        acc.extend(step.to_rows());
        systems.push(acc.clone());
    }

    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        // z ↦ σz moves coordinate i to σ(i); the image of {Ez = 0} is cut
        // out by E with column j taken from σ^{-1}(j).
        let inv = Permutation::new(perm.clone()).expect("bijection").inverse();
        let stable = systems.iter().zip(&spans).all(|(eqs, span)| {
            eqs.iter().all(|eq| {
                let moved: Vec<T> = (0..n).map(|j| eq[inv.apply(j)].clone()).collect();
                span.contains(&moved)
            })
        });
        if stable {
            out.push(Permutation::new(perm.clone()).expect("bijection"));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Rank of the (abelian) stabilizer and whether it consists of even permutations.
pub fn flag_rank<T: Scalar>(flag: &LinearFlag<T>) -> Result<(usize, bool)> {
    let n = flag.n;
    let group = flag_stabilizer(flag)?;
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span = vec![Permutation::identity(n)];
    for g in &group {
        if span.binary_search(g).is_err() {
            gens.push(g.clone());
            span = group_closure(n, &gens, DEFAULT_CAP)?;
        }
    }
    let abelian = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)));
    if !abelian {
        return Err(Error::NonAbelian { order: group.len() });
    }
    let action = PermAction::new(n.max(1), if n == 0 { Vec::new() } else { gens.clone() })?;
    let relations = kernel_lattice::<T>(&action, DEFAULT_CAP)?;
    let structure = quotient_structure(action.dim(), &relations)?;
    Ok((structure.rank(), is_even_only(&gens)))
}

fn unit_difference<T: Scalar>(n: usize, i: usize, j: usize) -> Vec<T> {
    let mut e = vec![T::zero(); n];
    e[i] = T::one();
    e[j] = -T::one();
    e
}

/// Appends single-equation steps that strictly shrink the last subspace:
/// `z_i = z_{i+1}` for consecutive coordinates, then `z_1 = 0`.
fn complete<T: Scalar>(n: usize, mut steps: Vec<Vec<Vec<T>>>) -> Vec<Vec<Vec<T>>> {
    let mut span = Span::new(n);
    steps.iter().flatten().for_each(|eq| span.insert(eq));
    let mut candidates: Vec<Vec<T>> = (0..n.saturating_sub(1)).map(|i| unit_difference(n, i, i + 1)).collect();
    if n > 0 {
        let mut first = vec![T::zero(); n];
        first[0] = T::one();
        candidates.push(first);
    }
    for eq in candidates {
        if !span.contains(&eq) {
            span.insert(&eq);
            steps.push(vec![eq]);
        }
    }
    steps
}

/// `z_1=z_2 ⊃ +{z_3=z_4} ⊃ …` over all `⌊n/2⌋` pairs, completed to a point.
/// The stabilizer swaps within pairs, giving `Z_2^{⌊n/2⌋}`.
pub fn pairing_flag<T: Scalar>(n: usize) -> LinearFlag<T> {
    let steps = (0..n / 2).map(|i| vec![unit_difference(n, 2 * i, 2 * i + 1)]).collect();
    LinearFlag::new(n, complete(n, steps)).expect("pairing flag is strictly decreasing")
}

/// Per quadruple `(w, x, y, z)`: `w+x = y+z`, then `w = y, x = z`. Each
/// quadruple is then collapsed by `w = x` and pinned by `w = 0`, and leftover
/// coordinates are pinned one at a time. Every step stays invariant under
/// both double transpositions of a block and nothing else moves, so the
/// stabilizer is `(Z_2^2)^{⌊n/4⌋}`.
pub fn quadruple_flag<T: Scalar>(n: usize) -> LinearFlag<T> {
    let mut steps = Vec::new();
    for b in 0..n / 4 {
        let w = 4 * b;
        let mut sum = vec![T::zero(); n];
        sum[w] = T::one();
        sum[w + 1] = T::one();
        sum[w + 2] = -T::one();
        sum[w + 3] = -T::one();
        steps.push(vec![sum]);
        steps.push(vec![unit_difference(n, w, w + 2), unit_difference(n, w + 1, w + 3)]);
    }
    for b in 0..n / 4 {
        steps.push(vec![unit_difference(n, 4 * b, 4 * b + 1)]);
    }
    let pinned = (0..n / 4).map(|b| 4 * b).chain(4 * (n / 4)..n);
    for i in pinned {
        let mut e = vec![T::zero(); n];
        e[i] = T::one();
        steps.push(vec![e]);
    }
    LinearFlag::new(n, steps).expect("quadruple flag is strictly decreasing")
}
