use proptest::prelude::*;

use preproj::gfan::{g_matrix_presentations, g_vector};
use preproj::ideal::{ideal_product, slice};
use preproj::scalar::Fp;
use preproj::tilt::stt_pair;
use preproj::{parse_quiver, DynkinQuiver, PreprojSystem, RationalSystem};

fn system(code: &str) -> RationalSystem {
    RationalSystem::new(&parse_quiver(code).unwrap()).unwrap()
}

fn random_word(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 0..14)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn length_adds_means_ideals_multiply(a in random_word(4), b in random_word(4)) {
        let sys = system("D4");
        let u = sys.weyl.from_word(&a).unwrap();
        let v = sys.weyl.from_word(&b).unwrap();
        let uv = sys.weyl.multiply(&u, &v);
        prop_assume!(uv.length() == u.length() + v.length());
        let product = ideal_product(&sys.algebra, &sys.ideal_of(&u), &sys.ideal_of(&v));
        prop_assert_eq!(product, (*sys.ideal_of(&uv)).clone());
    }

    #[test]
    fn longer_elements_give_smaller_ideals(a in random_word(3), i in 0usize..3) {
        let sys = system("A3");
        let w = sys.weyl.from_word(&a).unwrap();
        let v = sys.weyl.left_mul(i, &w);
        let (small, big) = if v.length() > w.length() { (v, w) } else { (w, v) };
        prop_assert!(sys.ideal_of(&small).is_subspace_of(&sys.ideal_of(&big)));
        prop_assert!(sys.ideal_of(&small).dim() < sys.ideal_of(&big).dim());
    }

    #[test]
    fn prime_and_rational_dimensions_agree(a in random_word(4)) {
        let q = parse_quiver("D4").unwrap();
        let rat = RationalSystem::new(&q).unwrap();
        let fp: PreprojSystem<Fp> = PreprojSystem::new(&q).unwrap();
        let w = rat.weyl.from_word(&a).unwrap();
        let r = rat.ideal_of(&w);
        let p = fp.ideal_of(&w);
        prop_assert_eq!(rat.rep(&r).dims().to_vec(), fp.rep(&p).dims().to_vec());
        prop_assert_eq!(
            g_matrix_presentations(&rat, &w).unwrap(),
            g_matrix_presentations(&fp, &w).unwrap()
        );
    }

    #[test]
    fn projector_columns(a in random_word(3)) {
        let sys = system("A3");
        let w = sys.weyl.from_word(&a).unwrap();
        let ideal = sys.ideal_of(&w);
        for i in 0..3 {
            if slice(&sys.algebra, &ideal, i).is_zero() {
                let g = g_vector(&sys, &w, i).unwrap();
                let mut expected = vec![0; 3];
                expected[sys.nakayama.sigma[i]] = -1;
                prop_assert_eq!(g, expected);
            }
        }
    }

    #[test]
    fn d4_samples_are_support_tau_tilting(a in random_word(4)) {
        let sys = system("D4");
        let w = sys.weyl.from_word(&a).unwrap();
        prop_assert!(stt_pair(&sys, &w).is_ok());
        prop_assert!(sys.dual_dim_check(&w));
    }
}

#[test]
fn other_orientations_agree() {
    // A3 with both arrows into the middle vertex, D4 with the centre as a source
    let quivers = [
        DynkinQuiver::new(3, vec![(0, 1), (2, 1)]).unwrap(),
        DynkinQuiver::new(4, vec![(1, 0), (1, 2), (1, 3)]).unwrap(),
    ];
    let expected = [24, 192];
    for (q, count) in quivers.iter().zip(expected) {
        let sys = RationalSystem::new(q).unwrap();
        let els = sys.weyl.enumerate();
        assert_eq!(els.len(), count);
        for w in &els {
            assert_eq!(g_matrix_presentations(&sys, w).unwrap(), *w.canonical());
        }
    }
}

#[test]
fn a2_s1_s2_is_simple_at_vertex_one() {
    let sys = system("A2");
    let w = sys.weyl.from_word(&[0, 1]).unwrap();
    let ideal = sys.ideal_of(&w);
    assert_eq!(ideal.dim(), 1);
    assert_eq!(sys.rep(&ideal).dims(), &[1, 0]);
}
