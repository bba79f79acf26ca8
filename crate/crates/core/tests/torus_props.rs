mod common;

use common::big;
use rand::Rng;
use toruscover::abgroup::quotient_structure;
use toruscover::torus_cover::{
    classify, dominates, induced_by_map, is_equivalent, min_inducing_dim, pullback, tower_rank_bound, tower_stage_group,
};
use toruscover::{Lattice, TorusCovering};

fn random_covering(rng: &mut rand::rngs::StdRng, n: usize) -> TorusCovering {
    let rows = rng.gen_range(0..=n + 1);
    TorusCovering::from_kernel(Lattice::from_generators(&common::random_matrix(rng, rows, n, -4, 4)))
}

#[test]
fn normal_form_is_invariant_under_change_of_basis() {
    let mut rng = common::rng(21);
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let c = random_covering(&mut rng, n);
        let p = common::random_unimodular(&mut rng, n);
        let moved = TorusCovering::from_kernel(Lattice::from_generators(&(c.kernel().basis() * &p)));
        assert_eq!(classify(&c), classify(&moved));
        let nf = classify(&c);
        assert_eq!(nf.dim(), n);
        let g = quotient_structure(n, c.kernel()).unwrap();
        assert_eq!(min_inducing_dim(&c), g.rank());
        assert_eq!(nf.m, g.torsion());
        assert_eq!(nf.r, g.free_rank());
    }
}

#[test]
fn domination_is_monotone_in_inducing_dimension() {
    let mut rng = common::rng(22);
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let c2 = random_covering(&mut rng, n);
        let sub = common::random_sublattice(&mut rng, c2.kernel(), 3);
        let c1 = TorusCovering::from_kernel(sub);
        assert!(dominates(&c1, &c2).unwrap());
        // Z^n / A_2 is a quotient of Z^n / A_1
        assert!(min_inducing_dim(&c2) <= min_inducing_dim(&c1));
        let both = dominates(&c2, &c1).unwrap();
        assert_eq!(is_equivalent(&c1, &c2).unwrap(), both);
    }
}

#[test]
fn pullback_along_tower_respects_rank_bound() {
    let mut rng = common::rng(23);
    for _ in 0..150 {
        let n = rng.gen_range(1..=3);
        let c = random_covering(&mut rng, n);
        let mut stage = Lattice::full(n);
        let mut dims = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let step = common::random_full_rank(&mut rng, n, 6);
            let next = Lattice::from_generators(&(&step * stage.basis()));
            dims.push(tower_stage_group(&stage, &next).unwrap().rank());
            stage = next;
        }
        let pulled = pullback(&c, &stage).unwrap();
        let bound = tower_rank_bound(min_inducing_dim(&c), &dims);
        assert!(min_inducing_dim(&pulled) >= bound);
    }
}

#[test]
fn induced_kernel_is_preimage() {
    let mut rng = common::rng(24);
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let a = rng.gen_range(1..=3);
        let c = random_covering(&mut rng, n);
        let f = common::random_matrix(&mut rng, a, n, -3, 3);
        let induced = induced_by_map(&c, &f).unwrap();
        for _ in 0..40 {
            let y: Vec<_> = (0..a).map(|_| big(rng.gen_range(-4..=4))).collect();
            let image = f.left_apply(&y).unwrap();
            assert_eq!(induced.kernel().contains_vector(&y).unwrap(), c.kernel().contains_vector(&image).unwrap());
        }
    }
}

#[test]
fn pullback_requires_full_rank() {
    let c = TorusCovering::universal(2);
    assert!(pullback(&c, &Lattice::from_i64(&[[2, 0]], 2)).is_err());
    let id = pullback(&c, &Lattice::full(2)).unwrap();
    assert!(is_equivalent(&id, &c).unwrap());
}
