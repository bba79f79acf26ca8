#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use toruscover::{BigInt, IntMatrix, Lattice, PermAction, Permutation};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, lo: i64, hi: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| big(rng.gen_range(lo..=hi)))
}

/// Random upper-triangular full-rank basis whose diagonal product is at most `max_index`.
pub fn random_full_rank(rng: &mut StdRng, n: usize, max_index: i64) -> IntMatrix {
    let mut diag = vec![1i64; n];
    for _ in 0..4 * n {
        let i = rng.gen_range(0..n);
        let f = rng.gen_range(1..=3);
        if diag.iter().product::<i64>() * f <= max_index {
            diag[i] *= f;
        }
    }
    IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            big(diag[i])
        } else if j > i {
            big(rng.gen_range(0..diag[j]))
        } else {
            big(0)
        }
    })
}

/// A random sublattice of `m`: integer combinations of its basis.
pub fn random_sublattice(rng: &mut StdRng, m: &Lattice, max_coeff: i64) -> Lattice {
    let rows = rng.gen_range(0..=m.rank() + 1);
    let coeffs = random_matrix(rng, rows, m.rank(), -max_coeff, max_coeff);
    Lattice::from_generators(&(&coeffs * m.basis()))
}

/// Random unimodular `n x n` matrix as a product of elementary operations.
pub fn random_unimodular(rng: &mut StdRng, n: usize) -> IntMatrix {
    let mut p = IntMatrix::identity(n);
    if n < 2 {
        return p;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        match rng.gen_range(0..3) {
            0 => p.swap_rows(i, j),
            1 => p.negate_row(i),
            _ => p.add_row_multiple(i, j, &big(rng.gen_range(-2..=2))),
        }
    }
    p
}

/// `n` commuting permutations: translations of `Z_{c_1} × … × Z_{c_b}`
/// acting regularly on each of `orbits` copies of the group.
pub fn random_commuting_action(rng: &mut StdRng, n: usize, cyclic: &[usize], orbits: usize) -> PermAction {
    let size: usize = cyclic.iter().product();
    let encode = |digits: &[usize]| {
        digits.iter().zip(cyclic).fold((0, 1), |(acc, stride), (d, c)| (acc + d * stride, stride * c)).0
    };
    let decode = |mut x: usize| {
        cyclic
            .iter()
            .map(|c| {
                let d = x % c;
                x /= c;
                d
            })
            .collect::<Vec<_>>()
    };
    let shifts: Vec<Vec<Vec<usize>>> =
        (0..orbits).map(|_| (0..n).map(|_| cyclic.iter().map(|&c| rng.gen_range(0..c)).collect()).collect()).collect();
    let gens = (0..n)
        .map(|g| {
            let mut images = Vec::with_capacity(size * orbits);
            for (o, orbit_shifts) in shifts.iter().enumerate() {
                for x in 0..size {
                    let moved: Vec<usize> =
                        decode(x).iter().zip(&orbit_shifts[g]).zip(cyclic).map(|((d, s), c)| (d + s) % c).collect();
                    images.push(o * size + encode(&moved));
                }
            }
            Permutation::new(images).unwrap()
        })
        .collect();
    PermAction::new(size * orbits, gens).unwrap()
}

pub fn random_permutation(rng: &mut StdRng, size: usize) -> Permutation {
    let mut images: Vec<usize> = (0..size).collect();
    for i in (1..size).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Permutation::new(images).unwrap()
}

/// Determinant by cofactor expansion, independent of the library's elimination.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return big(1);
    }
    let mut total = big(0);
    for j in 0..n {
        if m[0][j] == big(0) {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][j].clone() * cofactor_det(&minor);
        total = if j % 2 == 0 { total + term } else { total - term };
    }
    total
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out.sort();
    out
}
