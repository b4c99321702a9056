use linfty_core::bch::{self, enumerate_trees};
use linfty_core::dupont::{dupont_s, whitney_p};
use linfty_core::io::fixtures;
use linfty_core::linfty::{koszul_sign, GVector};
use linfty_core::mc::Solver;
use linfty_core::rational::factorial;
use linfty_core::sample::{form_of_degree, mc_element, rng, vector_of_degree};
use linfty_core::simplicial::SimplicialMap;
use linfty_core::Rational;
use num_traits::One;
use proptest::prelude::*;

fn form(seed: u64, n: usize, k: usize) -> linfty_core::Form {
    form_of_degree(n, k, 3, 3, &mut rng(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_squares_to_zero(seed in any::<u64>(), n in 1usize..=3, k in 0usize..=3) {
        prop_assert!(form(seed, n, k).d().d().is_zero());
    }

    #[test]
    fn leibniz_rule(seed in any::<u64>(), n in 1usize..=3, k in 0usize..=2, l in 0usize..=2) {
        let a = form(seed, n, k);
        let b = form(seed.wrapping_add(1), n, l);
        let lhs = a.wedge(&b).unwrap().d();
        let sign = if k % 2 == 1 { -Rational::one() } else { Rational::one() };
        let rhs = &a.d().wedge(&b).unwrap() + &a.wedge(&b.d()).unwrap().scale(&sign);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_is_graded_commutative(seed in any::<u64>(), n in 1usize..=3, k in 0usize..=2, l in 0usize..=2) {
        let a = form(seed, n, k);
        let b = form(seed.wrapping_add(7), n, l);
        let sign = if (k * l) % 2 == 1 { -Rational::one() } else { Rational::one() };
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().scale(&sign));
    }

    #[test]
    fn dupont_contraction_on_random_forms(seed in any::<u64>(), n in 1usize..=2, k in 0usize..=2) {
        let f = form(seed, n, k);
        let lhs = &dupont_s(&f).unwrap().d() + &dupont_s(&f.d()).unwrap();
        prop_assert_eq!(lhs, &f - &whitney_p(&f).unwrap());
        prop_assert!(dupont_s(&dupont_s(&f).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn pullback_commutes_with_d(seed in any::<u64>(), n in 1usize..=3, k in 0usize..=2, face in 0usize..=3) {
        let map = SimplicialMap::face(n, face.min(n)).unwrap();
        let f = form(seed, n, k);
        prop_assert_eq!(f.d().pullback(&map).unwrap(), f.pullback(&map).unwrap().d());
    }

    #[test]
    fn koszul_sign_is_multiplicative(
        degrees in proptest::collection::vec(-3i32..=3, 1..6),
        shuffle_seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let len = degrees.len();
        let mut r = rng(shuffle_seed);
        let mut sigma: Vec<usize> = (0..len).collect();
        let mut tau: Vec<usize> = (0..len).collect();
        sigma.shuffle(&mut r);
        tau.shuffle(&mut r);
        let composite: Vec<usize> = sigma.iter().map(|&q| tau[q]).collect();
        let moved: Vec<i32> = tau.iter().map(|&p| degrees[p]).collect();
        let lhs = koszul_sign(&composite, &degrees).unwrap();
        let rhs = koszul_sign(&tau, &degrees).unwrap().to_i64() * koszul_sign(&sigma, &moved).unwrap().to_i64();
        prop_assert_eq!(lhs.to_i64(), rhs);
    }

    #[test]
    fn bianchi_identity(seed in any::<u64>(), which in 0usize..4) {
        let name = ["dglie01", "dg_pair", "linfty_tree", "abelian_delta"][which];
        let alg = fixtures::get(name);
        let alpha = vector_of_degree(&alg, 1, &mut rng(seed));
        prop_assert!(alg.bianchi_residual(&alpha).unwrap().is_zero());
    }

    #[test]
    fn twisting_preserves_jacobi(seed in any::<u64>(), which in 0usize..3) {
        let name = ["dglie01", "dg_pair", "linfty_tree"][which];
        let alg = fixtures::get(name);
        let solver = Solver::new(&alg).unwrap();
        let mu = mc_element(&solver, 2, &mut rng(seed)).unwrap();
        prop_assert!(alg.twist(&mu).unwrap().check_jacobi(4).passed());
    }

    #[test]
    fn self_composition_edge_vanishes(seed in any::<u64>(), which in 0usize..3) {
        let name = ["heisenberg", "dglie01", "ut4"][which];
        let alg = fixtures::get(name);
        let solver = Solver::new(&alg).unwrap();
        let x = vector_of_degree(&alg, 0, &mut rng(seed));
        prop_assert!(bch::rho2(&solver, &GVector::zero(), &x, &x, &GVector::zero()).unwrap().is_zero());
    }
}

#[test]
fn tree_coefficients_sum_to_recursive_tree_count() {
    for k in 1..=8u64 {
        let total: num_bigint::BigInt = enumerate_trees(k as usize).unwrap().into_iter().map(|t| t.coefficient).sum();
        assert_eq!(total, factorial(k - 1), "k={k}");
    }
}
