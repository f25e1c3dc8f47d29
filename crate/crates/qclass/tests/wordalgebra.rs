use proptest::prelude::*;
use qclass::rootdata::{kostant_count, BlockStructure, RootSystem};
use qclass::scalars::{Field, GaussRat, QField, Qq};
use qclass::wordalgebra::{phi_words, psi_words, words_of_weight, Algebra, Sign, Tower};

fn alg(n: usize) -> Algebra<Qq> {
    Algebra::new(RootSystem::new(n), Qq::q())
}

fn factorial(k: i64) -> u64 {
    (1..=k as u64).product()
}

#[test]
fn pbw_dimensions_match_kostant() {
    for (n, depth) in [(2usize, 8usize), (3, 6)] {
        let a = alg(n);
        let t = Tower::new(a.clone(), Sign::F, depth, vec![]);
        let all = a.rs.positive_roots();
        for beta in t.weights() {
            let w = a.rs.from_simple_coords(beta);
            assert_eq!(
                t.dim(beta).unwrap() as u64,
                kostant_count(&a.rs, &w, &all),
                "n={n} beta={beta:?}"
            );
        }
    }
}

#[test]
fn word_counts_are_multinomial() {
    for beta in [vec![3i64, 1], vec![2, 2], vec![1, 2, 1], vec![0, 3, 1]] {
        let words = words_of_weight(&beta);
        let expected = factorial(beta.iter().sum()) / beta.iter().map(|&c| factorial(c)).product::<u64>();
        assert_eq!(words.len() as u64, expected, "{beta:?}");
    }
}

#[test]
fn sp4_serre_quotients() {
    let a = alg(2);
    for (beta, words, ideal) in [([2i64, 1], 3, 0), ([3, 1], 4, 1), ([2, 2], 6, 2)] {
        let s = a.serre_slice(Sign::F, &beta, 6).unwrap();
        assert_eq!((s.word_dim(), s.ideal_dim()), (words, ideal), "{beta:?}");
        let t = Tower::new(a.clone(), Sign::F, 4, vec![]);
        assert_eq!(s.quotient_dim(), t.dim(&beta).unwrap());
    }
}

#[test]
fn sp4_f_delta_explicit_form() {
    let a = alg(2);
    let b = BlockStructure::parse(2, ";1,1").unwrap();
    let fd = a.delta_vectors(&b).f_delta;
    let c = Qq::q_pow(2).add(&Qq::q_pow(-2));
    let expected = a.add(&a.sub(&a.word(Sign::F, &[0, 0, 1]), &a.scale(&a.word(Sign::F, &[0, 1, 0]), &c)), &a.word(Sign::F, &[1, 0, 0]));
    assert_eq!(fd, expected);
}

#[test]
fn f_delta_forms_agree_in_the_serre_quotient() {
    for (n, blocks) in [(2, ";1,1"), (3, ";1,2"), (3, ";2,1")] {
        let a = alg(n);
        let b = BlockStructure::parse(n, blocks).unwrap();
        let t = Tower::new(a.clone(), Sign::F, 2 * b.p + 1, vec![]);
        let fd = t.vector_of(&a.delta_vectors(&b).f_delta).unwrap();
        assert_eq!(fd, t.vector_of(&a.f_delta_chain(&b)).unwrap(), "{blocks}");
        assert_eq!(fd, t.vector_of(&a.f_delta_mirrored(&b)).unwrap(), "{blocks}");
    }
}

#[test]
fn phi_and_psi_words() {
    let b = BlockStructure::parse(3, ";1,2").unwrap();
    assert_eq!(phi_words(&b), vec![vec![0, 1, 2, 1, 0], vec![1, 2, 0, 1, 0], vec![2, 1, 0, 1, 0]]);
    let b = BlockStructure::parse(3, ";2,1").unwrap();
    assert_eq!(psi_words(&b).unwrap(), vec![vec![0, 1], vec![1]]);
    assert!(psi_words(&BlockStructure::parse(3, "1;1,1").unwrap()).is_err());
}

fn word_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 1..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn q_commutator_jacobi(x in word_strategy(3), y in word_strategy(3), z in word_strategy(3),
                           ka in -2i64..3, kb in -2i64..3, kc in -2i64..3, r in 1i64..5) {
        let a = alg(3);
        let (x, y, z) = (a.word(Sign::F, &x), a.word(Sign::F, &y), a.word(Sign::F, &z));
        let sa = Qq::q_pow(ka);
        let sb = Qq::q_pow(kb).mul(&Qq::from_gauss(&GaussRat::from_int(r)));
        let sc = Qq::q_pow(kc);
        let lhs = a.q_commutator(&x, &a.q_commutator(&y, &z, &sa), &sb);
        let r1 = a.q_commutator(&a.q_commutator(&x, &y, &sc), &z, &sa.mul(&sb).div(&sc));
        let r2 = a.scale(&a.q_commutator(&y, &a.q_commutator(&x, &z, &sb.div(&sc)), &sa.div(&sc)), &sc);
        prop_assert_eq!(lhs, a.add(&r1, &r2));
    }

    #[test]
    fn tower_dims_match_kostant_on_random_weights(c in prop::collection::vec(0i64..3, 3)) {
        let a = alg(3);
        prop_assume!(c.iter().sum::<i64>() <= 5);
        let t = Tower::new(a.clone(), Sign::E, 5, vec![]);
        let w = a.rs.from_simple_coords(&c);
        prop_assert_eq!(t.dim(&c).unwrap() as u64, kostant_count(&a.rs, &w, &a.rs.positive_roots()));
    }
}
