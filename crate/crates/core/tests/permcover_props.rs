mod common;

use common::big;
use rand::Rng;
use std::collections::HashSet;
use toruscover::abgroup::quotient_structure;
use toruscover::permcover::{check_commuting, group_closure, is_even_only, kernel_lattice, orbits, DEFAULT_CAP};
use toruscover::{BigInt, Lattice, PermAction, Permutation};

fn random_action(rng: &mut rand::rngs::StdRng) -> PermAction {
    let n = rng.gen_range(1..=3);
    let factors = rng.gen_range(1..=2);
    let cyclic: Vec<usize> = (0..factors).map(|_| rng.gen_range(1..=4)).collect();
    let copies = rng.gen_range(1..=2);
    common::random_commuting_action(rng, n, &cyclic, copies)
}

/// Naive closure: repeatedly multiply by generators until nothing new appears.
fn naive_closure(action: &PermAction) -> HashSet<Permutation> {
    let mut seen = HashSet::from([Permutation::identity(action.fiber_size())]);
    let mut frontier: Vec<Permutation> = seen.iter().cloned().collect();
    while let Some(p) = frontier.pop() {
        for g in action.generators() {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen
}

#[test]
fn kernel_lattice_is_exactly_the_trivial_words() {
    let mut rng = common::rng(3);
    for _ in 0..120 {
        let action = random_action(&mut rng);
        assert!(check_commuting(&action));
        let l: Lattice = kernel_lattice(&action, DEFAULT_CAP).unwrap();
        for row in l.basis().to_rows() {
            assert!(action.evaluate(&row).unwrap().is_identity());
        }
        for _ in 0..50 {
            let v: Vec<BigInt> = (0..action.dim()).map(|_| big(rng.gen_range(-6..=6))).collect();
            assert_eq!(action.evaluate(&v).unwrap().is_identity(), l.contains_vector(&v).unwrap(), "{v:?}");
        }
    }
}

#[test]
fn quotient_order_is_group_order() {
    let mut rng = common::rng(4);
    for _ in 0..120 {
        let action = random_action(&mut rng);
        let l: Lattice = kernel_lattice(&action, DEFAULT_CAP).unwrap();
        let g = quotient_structure(action.dim(), &l).unwrap();
        let naive = naive_closure(&action);
        let closure = group_closure(action.fiber_size(), action.generators(), DEFAULT_CAP).unwrap();
        assert_eq!(closure.len(), naive.len());
        assert_eq!(g.order().unwrap(), big(naive.len() as i64));
    }
}

#[test]
fn evenness_matches_closure() {
    let mut rng = common::rng(8);
    for _ in 0..200 {
        let size = rng.gen_range(1..=6);
        let gens: Vec<Permutation> =
            (0..rng.gen_range(0..=2)).map(|_| common::random_permutation(&mut rng, size)).collect();
        let closure = group_closure(size, &gens, DEFAULT_CAP).unwrap();
        assert_eq!(is_even_only(&gens), closure.iter().all(Permutation::is_even));
    }
}

#[test]
fn orbits_partition_the_fiber() {
    let mut rng = common::rng(9);
    for _ in 0..100 {
        let action = random_action(&mut rng);
        let mut points: Vec<usize> = orbits(&action).concat();
        points.sort();
        assert_eq!(points, (0..action.fiber_size()).collect::<Vec<_>>());
    }
}

#[test]
fn cap_is_enforced() {
    let action = PermAction::from_images(vec![vec![1, 2, 3, 4, 0]], 5).unwrap();
    assert!(kernel_lattice::<BigInt>(&action, 3).is_err());
    assert_eq!(kernel_lattice::<i64>(&action, 5).unwrap(), toruscover::lattice_core::Lattice::<i64>::scaled(1, 5));
}
