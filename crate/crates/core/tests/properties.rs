use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use superkit::enveloping::{ghost_criterion, CoinvariantSpace, Pbw, PbwOrder, Side, Strategy as Rewrite};
use superkit::families::{build_gl, build_osp1, build_sl, build_toy_odd_semisimple};
use superkit::linalg::{in_span, rat, span_dimension, zero_vector, RatMatrix, RatVector};
use superkit::reps::{ds_functor, is_module_semisimple, tensor_dims};
use superkit::roots::{find_cartan, root_decomposition};
use superkit::superalgebra::LieSuperalgebra;
use superkit::verify::{
    exhaustive_semisimple_oracle, gl_coordinates, jordan_test_matrix, random_gl11_module, random_toy_module,
};

fn small_algebra(which: usize) -> LieSuperalgebra {
    match which % 2 {
        0 => build_osp1(1),
        _ => build_gl(1, 1),
    }
}

fn word(dim: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..dim, 0..6)
}

fn order(odd_first: bool) -> PbwOrder {
    if odd_first {
        PbwOrder::OddFirst
    } else {
        PbwOrder::EvenFirst
    }
}

fn rational_coords(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(250))]

    #[test]
    fn rewriting_is_confluent(which in 0usize..2, w in word(5), odd_first: bool) {
        let g = small_algebra(which);
        let w: Vec<usize> = w.into_iter().map(|i| i % g.dim()).collect();
        let engine = Pbw::new(&g, order(odd_first));
        prop_assert_eq!(
            engine.normal_form_with(&w, Rewrite::Leftmost),
            engine.normal_form_with(&w, Rewrite::Rightmost)
        );
    }

    #[test]
    fn multiplication_is_associative(which in 0usize..2, a in word(5), b in word(5), c in word(5)) {
        let g = small_algebra(which);
        let engine = Pbw::new(&g, PbwOrder::OddFirst);
        let nf = |w: &[usize]| engine.normal_form(&w.iter().map(|i| i % g.dim()).collect::<Vec<_>>());
        let (x, y, z) = (nf(&a), nf(&b), nf(&c));
        prop_assert_eq!(
            engine.multiply(&engine.multiply(&x, &y), &z),
            engine.multiply(&x, &engine.multiply(&y, &z))
        );
    }

    #[test]
    fn counit_is_multiplicative(which in 0usize..2, a in word(5), b in word(5), s in -3i64..=3, t in -3i64..=3) {
        let g = small_algebra(which);
        let engine = Pbw::new(&g, PbwOrder::EvenFirst);
        let nf = |w: &[usize], c: i64| {
            let x = engine.normal_form(&w.iter().map(|i| i % g.dim()).collect::<Vec<_>>());
            x.add(&engine.one().scale(&rat(c)))
        };
        let (x, y) = (nf(&a, s), nf(&b, t));
        prop_assert_eq!(engine.multiply(&x, &y).counit(), x.counit() * y.counit());
    }

    #[test]
    fn antipode_squares_to_identity(which in 0usize..2, a in word(5), odd_first: bool) {
        let g = small_algebra(which);
        let engine = Pbw::new(&g, order(odd_first));
        let x = engine.normal_form(&a.iter().map(|i| i % g.dim()).collect::<Vec<_>>());
        prop_assert_eq!(engine.antipode(&engine.antipode(&x)), x);
    }

    #[test]
    fn antipode_reverses_products_with_sign(which in 0usize..2, a in word(5), b in word(5)) {
        let g = small_algebra(which);
        let engine = Pbw::new(&g, PbwOrder::OddFirst);
        let a: Vec<usize> = a.iter().map(|i| i % g.dim()).collect();
        let b: Vec<usize> = b.iter().map(|i| i % g.dim()).collect();
        let odd = |w: &[usize]| w.iter().filter(|&&i| g.parity(i).is_odd()).count();
        let sign = if odd(&a) % 2 == 1 && odd(&b) % 2 == 1 { rat(-1) } else { rat(1) };
        let (x, y) = (engine.normal_form(&a), engine.normal_form(&b));
        let lhs = engine.antipode(&engine.multiply(&x, &y));
        let rhs = engine.multiply(&engine.antipode(&y), &engine.antipode(&x)).scale(&sign);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_transfer_is_an_involution(which in 0usize..3, coords in rational_coords(16), left: bool) {
        let g = match which { 0 => build_osp1(1), 1 => build_gl(1, 1), _ => build_toy_odd_semisimple() };
        let space = CoinvariantSpace::new(&g, if left { Side::Left } else { Side::Right });
        let v: RatVector = coords.iter().take(space.dim()).map(|&c| rat(c)).collect();
        let w = space.element(v).unwrap();
        let there = space.antipode_transfer(&w);
        let back = CoinvariantSpace::new(&g, space.side().other()).antipode_transfer(&there);
        prop_assert_eq!(back, w);
    }

    #[test]
    fn cone_membership_is_conjugation_invariant(odd in rational_coords(4), a in rational_coords(4), d in 1i64..=3) {
        // gl(2|1): odd entries sit in row/column 3.
        let g = build_gl(2, 1);
        let mut m = RatMatrix::zeros(3, 3);
        m[(0, 2)] = rat(odd[0]);
        m[(1, 2)] = rat(odd[1]);
        m[(2, 0)] = rat(odd[2]);
        m[(2, 1)] = rat(odd[3]);
        let mut p = RatMatrix::zeros(3, 3);
        p[(0, 0)] = rat(a[0]);
        p[(0, 1)] = rat(a[1]);
        p[(1, 0)] = rat(a[2]);
        p[(1, 1)] = rat(a[3]);
        p[(2, 2)] = rat(d);
        prop_assume!(p.is_invertible());
        let conj = &(&p * &m) * &p.inverse().unwrap();
        let u = gl_coordinates(&g, &m);
        let v = gl_coordinates(&g, &conj);
        prop_assert_eq!(g.in_g1ss(&u).unwrap(), g.in_g1ss(&v).unwrap());
    }

    #[test]
    fn root_spaces_partition_the_algebra(which in 0usize..4, seed in 0u64..1000) {
        let g = match which { 0 => build_osp1(2), 1 => build_sl(2, 1), 2 => build_gl(2, 1), _ => build_gl(1, 1) };
        let cartan = find_cartan(&g, seed).unwrap();
        let datum = root_decomposition(&g, &cartan).unwrap();
        prop_assert_eq!(datum.total_dim(), g.dim());
        let all: Vec<RatVector> = datum.roots.iter().flat_map(|r| r.basis.clone()).collect();
        prop_assert_eq!(span_dimension(&all), g.dim());
        for r in &datum.roots {
            for v in &r.basis {
                let homogeneous = if r.parity.is_odd() { g.is_odd_element(v) } else { g.is_even_element(v) };
                prop_assert!(homogeneous);
            }
        }
    }

    #[test]
    fn ds_is_additive_and_multiplicative(seed: u64, toy: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, u) = if toy {
            let g = build_toy_odd_semisimple();
            let u = g.basis_vector(g.index_of("u").unwrap());
            (g, u)
        } else {
            let g = build_gl(1, 1);
            let mut u = zero_vector(g.dim());
            u[g.index_of("E12").unwrap()] = rat(1);
            u[g.index_of("E21").unwrap()] = rat(1);
            (g, u)
        };
        let gen = |rng: &mut ChaCha8Rng| if toy { random_toy_module(&g, rng) } else { random_gl11_module(&g, rng) };
        let (m, n) = (gen(&mut rng), gen(&mut rng));
        let dm = ds_functor(&g, &u, &m).unwrap().dims();
        let dn = ds_functor(&g, &u, &n).unwrap().dims();
        let sum = ds_functor(&g, &u, &m.direct_sum(&n)).unwrap().dims();
        prop_assert_eq!(sum, (dm.0 + dn.0, dm.1 + dn.1));
        let prod = ds_functor(&g, &u, &m.tensor(&n)).unwrap().dims();
        prop_assert_eq!(prod, tensor_dims(dm, dn));
    }

    #[test]
    fn radical_test_matches_submodule_oracle(seed: u64) {
        let g = build_toy_odd_semisimple();
        let m = random_toy_module(&g, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(is_module_semisimple(&g, &m).unwrap(), exhaustive_semisimple_oracle(&m));
    }

    #[test]
    fn semisimple_element_matches_jordan_form(seed: u64) {
        let (m, truth) = jordan_test_matrix(&mut ChaCha8Rng::seed_from_u64(seed));
        let g = build_gl(m.rows(), 0);
        prop_assert_eq!(g.is_semisimple_element(&gl_coordinates(&g, &m)).unwrap(), truth);
    }
}

#[test]
fn antipode_carries_invariants_between_sides() {
    for g in [build_osp1(1), build_osp1(2), build_gl(1, 1), build_sl(2, 1), build_toy_odd_semisimple()] {
        let left = CoinvariantSpace::new(&g, Side::Left);
        let right = CoinvariantSpace::new(&g, Side::Right);
        let inv = left.invariants();
        assert_eq!(inv.len(), right.invariants().len(), "{}", g.name());
        for v in inv {
            let w = left.antipode_transfer(&left.element(v).unwrap());
            assert!(right.is_invariant(&w), "{}", g.name());
            assert!(!w.is_zero());
        }
    }
}

/// For a non-semisimple algebra the ghost lies in `u` applied to the
/// coinvariant space, for the cone witness `u`.
#[test]
fn ghost_is_divisible_by_a_cone_witness() {
    let cases: Vec<(LieSuperalgebra, &[&str])> =
        vec![(build_gl(1, 1), &["E12", "E21"]), (build_sl(2, 1), &["E13", "E31"]), (build_toy_odd_semisimple(), &["u"])];
    for (g, labels) in cases {
        let mut u = zero_vector(g.dim());
        for l in labels {
            u[g.index_of(l).unwrap()] = rat(1);
        }
        assert!(g.in_g1ss(&u).unwrap());
        let ghost = ghost_criterion(&g).ghost.expect("invariant exists");
        let space = CoinvariantSpace::new(&g, Side::Left);
        let action = space.as_module().act(&u);
        let image: Vec<RatVector> = (0..action.cols()).map(|c| action.column(c)).collect();
        assert!(in_span(&image, &ghost.v.coords), "{}", g.name());
    }
}
