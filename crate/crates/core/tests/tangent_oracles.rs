mod common;

use arlex::construct::almost_revlex_ci;
use arlex::linalg::{dense_rank, sparse_rank_with, to_dense, PivotOrder};
use arlex::tangent::oracle::{audit, DEFAULT_STEP_CAP};
use arlex::tangent::{tangent_dim, TangentSystem};
use common::{hom_dim, stable_artinian};

#[test]
fn enumeration_counts() {
    // order ideals of size exactly k in two variables are the partitions of k
    let all = common::artinian_ideals(2, 6);
    let mut by_size = [0usize; 7];
    for j in &all {
        by_size[j.colength().unwrap() as usize] += 1;
    }
    assert_eq!(by_size[1..], [1, 2, 3, 5, 7, 11]);
    // plane partitions of 1..=5
    let all = common::artinian_ideals(3, 5);
    let mut by_size = [0usize; 6];
    for j in &all {
        by_size[j.colength().unwrap() as usize] += 1;
    }
    assert_eq!(by_size[1..], [1, 3, 6, 13, 24]);
}

#[test]
fn hom_oracle_matches_on_small_stable_ideals() {
    for n in 1..=3 {
        for j in stable_artinian(n, 10) {
            let r = tangent_dim(&j).unwrap();
            assert_eq!(r.tangent_dim, hom_dim(&j), "{j}");
        }
    }
}

#[test]
fn hom_oracle_matches_golden_ideals() {
    for d in [
        vec![2, 2, 2],
        vec![3, 3, 3],
        vec![2, 2, 2, 2],
        vec![3, 4, 4],
    ] {
        let j = almost_revlex_ci(d.len(), &d).unwrap();
        assert_eq!(tangent_dim(&j).unwrap().tangent_dim, hom_dim(&j), "{d:?}");
    }
}

#[test]
fn full_reduction_oracle_on_small_stable_ideals() {
    for n in 1..=2 {
        for j in stable_artinian(n, 8) {
            assert!(audit(&j, DEFAULT_STEP_CAP).unwrap(), "{j}");
        }
    }
}

#[test]
fn rank_independent_of_pivot_order() {
    for d in [vec![2, 2, 2], vec![2, 3, 3], vec![2, 2, 2, 2]] {
        let sys = TangentSystem::build(&almost_revlex_ci(d.len(), &d).unwrap()).unwrap();
        let mut reversed = sys.rows().to_vec();
        reversed.reverse();
        let a = sys.rank();
        assert_eq!(sparse_rank_with(&reversed, PivotOrder::Last), a);
        assert_eq!(sparse_rank_with(sys.rows(), PivotOrder::Last), a);
        assert_eq!(dense_rank(to_dense(sys.rows(), sys.param_count())), a);
    }
}

fn check_sandwich(j: &arlex::MonomialIdeal) {
    let sys = TangentSystem::build(j).unwrap();
    let r = sys.report().unwrap();
    assert!(
        r.lower_bound <= r.tangent_dim && r.tangent_dim <= r.upper_bound,
        "{j}: {r:?}"
    );
    assert!(sys.border_columns_vanish(), "{j}");
}

#[test]
fn sandwich_and_vanishing_columns_on_small_stable_ideals() {
    for n in 1..=3 {
        for j in stable_artinian(n, 12) {
            check_sandwich(&j);
        }
    }
}

#[test]
fn sandwich_on_ci_ideals_up_to_colength_200() {
    for d in [
        vec![2, 2, 2],
        vec![2, 2, 3],
        vec![2, 3, 3],
        vec![3, 3, 3],
        vec![2, 2, 2, 2],
        vec![2, 2, 2, 3],
        vec![3, 4, 4],
        vec![2, 2, 5, 5],
        vec![4, 5, 7],
    ] {
        check_sandwich(&almost_revlex_ci(d.len(), &d).unwrap());
    }
}

#[test]
fn full_reduction_oracle_in_three_variables() {
    let ideals = stable_artinian(3, 12);
    assert!(ideals.len() > 50);
    for j in ideals {
        assert!(audit(&j, DEFAULT_STEP_CAP).unwrap(), "{j}");
    }
}

#[test]
fn sandwich_on_random_borel_ideals() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let mut tested = 0;
    while tested < 60 {
        let n = rng.gen_range(2..=4);
        let seeds: Vec<arlex::Term> = (0..rng.gen_range(1..4))
            .map(|_| arlex::Term::new((0..n).map(|_| rng.gen_range(0..4)).collect()))
            .collect();
        let j = common::borel_ideal(n, &seeds, rng.gen_range(2..8));
        if j.colength().unwrap() > 200 {
            continue;
        }
        check_sandwich(&j);
        if j.colength().unwrap() <= 60 {
            assert_eq!(tangent_dim(&j).unwrap().tangent_dim, hom_dim(&j), "{j}");
        }
        tested += 1;
    }
}
