mod common;

use common::{big, cofactor_det, combinations};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use toruscover::lattice_core::{
    congruence_kernel, hermite_normal_form, lattice_contains, lattice_equal, smith_normal_form,
};
use toruscover::{BigInt, IntMatrix, Lattice};

fn matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-bound..=bound, r * c)
            .prop_map(move |xs| IntMatrix::from_fn(r, c, |i, j| big(xs[i * c + j])))
    })
}

/// Determinantal divisors: `d_1 ⋯ d_i = gcd of all i x i minors`.
fn invariant_factors_by_minors(a: &IntMatrix) -> Vec<BigInt> {
    let rows = a.to_rows();
    let mut prev = big(1);
    let mut out = Vec::new();
    for k in 1..=a.rows().min(a.cols()) {
        let mut g = big(0);
        for rs in combinations(a.rows(), k) {
            for cs in combinations(a.cols(), k) {
                let minor: Vec<Vec<BigInt>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect()).collect();
                g = g.gcd(&cofactor_det(&minor));
            }
        }
        if g.is_zero() {
            out.extend(std::iter::repeat_n(big(0), a.rows().min(a.cols()) - k + 1));
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn is_canonical_hnf(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..h.rows() {
        match (0..h.cols()).find(|&j| !h[(i, j)].is_zero()) {
            None => seen_zero = true,
            Some(p) => {
                if seen_zero || last_pivot.is_some_and(|lp| p <= lp) || !h[(i, p)].is_positive() {
                    return false;
                }
                for above in 0..i {
                    if h[(above, p)].is_negative() || h[(above, p)] >= h[(i, p)] {
                        return false;
                    }
                }
                last_pivot = Some(p);
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_certificate(a in matrix_strategy(5, 9)) {
        let s = smith_normal_form(&a);
        prop_assert!(s.verify());
        prop_assert_eq!(&(&(&s.u * &a) * &s.v), &s.d);
    }

    #[test]
    fn smith_matches_determinantal_divisors(a in matrix_strategy(4, 6)) {
        prop_assert_eq!(smith_normal_form(&a).diagonal(), invariant_factors_by_minors(&a));
    }

    #[test]
    fn hermite_certificate_and_idempotence(a in matrix_strategy(5, 9)) {
        let (h, u) = hermite_normal_form(&a);
        prop_assert_eq!(&(&u * &a), &h);
        prop_assert!(u.determinant().unwrap().abs().is_one());
        prop_assert!(is_canonical_hnf(&h));
        prop_assert_eq!(hermite_normal_form(&h).0, h.clone());
        prop_assert!(lattice_equal(&Lattice::from_generators(&a), &Lattice::from_generators(&h)).unwrap());
    }

    #[test]
    fn equality_is_mutual_containment(a in matrix_strategy(3, 4), b in matrix_strategy(3, 4)) {
        prop_assume!(a.cols() == b.cols());
        let (l1, l2) = (Lattice::from_generators(&a), Lattice::from_generators(&b));
        let both = lattice_contains(&l1, &l2).unwrap() && lattice_contains(&l2, &l1).unwrap();
        prop_assert_eq!(lattice_equal(&l1, &l2).unwrap(), both);
        // a lattice always equals itself written in a different basis
        let doubled = Lattice::from_generators(&a.vstack(&a).unwrap());
        prop_assert!(lattice_equal(&l1, &doubled).unwrap());
    }

    #[test]
    fn generic_scalar_agrees_with_bigint(xs in proptest::collection::vec(-9i64..=9, 9)) {
        let small = toruscover::lattice_core::Matrix::<i64>::from_fn(3, 3, |i, j| xs[3 * i + j]);
        let wide = IntMatrix::from_fn(3, 3, |i, j| big(xs[3 * i + j]));
        let ds: Vec<BigInt> = smith_normal_form(&small).diagonal().into_iter().map(BigInt::from).collect();
        prop_assert_eq!(ds, smith_normal_form(&wide).diagonal());
    }
}

fn satisfies(a: &IntMatrix, moduli: &[BigInt], v: &[BigInt]) -> bool {
    (0..a.rows()).all(|j| {
        let dot = a.row(j).iter().zip(v).fold(big(0), |acc, (x, y)| acc + x * y);
        dot.is_multiple_of(&moduli[j])
    })
}

#[test]
fn congruence_kernel_membership_matches_congruences() {
    let mut rng = common::rng(7);
    use rand::Rng;
    for _ in 0..150 {
        let n = rng.gen_range(1..=3);
        let q = rng.gen_range(0..=3);
        let a = common::random_matrix(&mut rng, q, n, -5, 5);
        let moduli: Vec<BigInt> = (0..q).map(|_| big(rng.gen_range(1..=6))).collect();
        let l = congruence_kernel(&a, &moduli).unwrap();
        let product: BigInt = moduli.iter().product();
        // contains (∏ m_j) Z^n
        assert!(l.contains(&Lattice::scaled(n, product.clone())).unwrap());
        // random lattice vectors satisfy every congruence
        for _ in 0..100 {
            let c: Vec<BigInt> = (0..l.rank()).map(|_| big(rng.gen_range(-5..=5))).collect();
            let v = l.basis().left_apply(&c).unwrap();
            assert!(satisfies(&a, &moduli, &v));
        }
        // exhaustive over residues of Z^n / (∏ m_j) Z^n
        let p: i64 = (&product).try_into().unwrap();
        if p.pow(n as u32) <= 10_000 {
            let mut digits = vec![0i64; n];
            loop {
                let v: Vec<BigInt> = digits.iter().map(|&d| big(d)).collect();
                assert_eq!(l.contains_vector(&v).unwrap(), satisfies(&a, &moduli, &v));
                let Some(i) = (0..n).find(|&i| digits[i] + 1 < p) else { break };
                digits[i] += 1;
                digits[..i].iter_mut().for_each(|d| *d = 0);
            }
        }
    }
}

#[test]
fn congruence_kernel_with_unit_moduli_is_everything() {
    let a = IntMatrix::from_i64(&[[3, -7, 2], [1, 1, 1]], 3);
    assert_eq!(congruence_kernel(&a, &[big(1), big(1)]).unwrap(), Lattice::full(3));
}

#[test]
fn intersection_is_largest_common_sublattice() {
    let mut rng = common::rng(11);
    for _ in 0..100 {
        let a = Lattice::from_generators(&common::random_matrix(&mut rng, 2, 2, -4, 4));
        let b = Lattice::from_generators(&common::random_matrix(&mut rng, 2, 2, -4, 4));
        let i = a.intersection(&b).unwrap();
        assert!(a.contains(&i).unwrap() && b.contains(&i).unwrap());
        for x in -6..=6 {
            for y in -6..=6 {
                let v = [big(x), big(y)];
                let both = a.contains_vector(&v).unwrap() && b.contains_vector(&v).unwrap();
                assert_eq!(i.contains_vector(&v).unwrap(), both);
            }
        }
    }
}
