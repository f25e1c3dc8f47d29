use qclass::rootdata::{BlockStructure, RootSystem, WeightAssignment, random_unit};
use qclass::scalars::{Field, QField, Qq, Qq1};
use qclass::verma::{expand_in_phis, verify_dimensions, Module, ModuleSpec, Variant, VermaError};
use qclass::wordalgebra::{phi_words, Sign};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CASES: &[(usize, &str)] = &[(2, ";1,1"), (3, ";1,2"), (3, ";2,1"), (3, "1;1,1")];

fn module(n: usize, blocks: &str, variant: Variant, depth: usize) -> (BlockStructure, Module<Qq>) {
    let b = BlockStructure::parse(n, blocks).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let weights = WeightAssignment::specialized(&b, &mut rng, None);
    let spec = ModuleSpec { blocks: b.clone(), weights, variant, depth };
    (b, Module::new(&spec).unwrap())
}

fn depth_for(n: usize) -> usize {
    if n == 2 { 6 } else { 5 }
}

#[test]
fn chevalley_relations_hold_on_every_slice() {
    for &(n, s) in CASES {
        for variant in [Variant::HatM, Variant::M] {
            let (_, m) = module(n, s, variant, depth_for(n));
            for beta in m.tower.weights().to_vec() {
                let h: i64 = beta.iter().sum();
                for i in 0..n {
                    for j in 0..n {
                        if h + 1 <= m.depth() as i64 {
                            assert!(m.check_commutator(i, j, &beta).unwrap(), "{s} {variant:?} {beta:?} [e{i},f{j}]");
                        }
                    }
                }
                if h + 4 <= m.depth() as i64 {
                    assert!(m.check_serre(Sign::F, &beta).unwrap());
                }
                assert!(m.check_serre(Sign::E, &beta).unwrap(), "{s} {variant:?} e-Serre at {beta:?}");
            }
        }
    }
}

#[test]
fn slice_dimensions_match_partition_counts() {
    for &(n, s) in CASES {
        for variant in [Variant::HatM, Variant::M] {
            let (b, m) = module(n, s, variant, depth_for(n));
            let bad = verify_dimensions(&m, &b, variant);
            assert!(bad.is_empty(), "{s} {variant:?}: {bad:?}");
        }
    }
}

#[test]
fn highest_weight_vector_is_annihilated_by_levi_lowering() {
    let (b, m) = module(3, "1;1,1", Variant::HatM, 3);
    for i in b.levi_simple() {
        let (_, v) = m.word_vector(&[i]).unwrap();
        assert!(v.iter().all(|x| x.is_zero()));
    }
    let (_, v) = m.word_vector(&[b.alpha_index()]).unwrap();
    assert!(v.iter().any(|x| !x.is_zero()));
}

#[test]
fn f_delta_v_is_singular_for_kappa_weight() {
    for &(n, s) in CASES {
        let (b, m) = module(n, s, Variant::HatM, 2 * b_p(n, s) + 1);
        let fd = m.alg().delta_vectors(&b).f_delta;
        let (beta, v) = m.vector_of(&fd).unwrap();
        assert!(v.iter().any(|x| !x.is_zero()));
        for i in 0..n {
            let (_, e) = m.e_word(&[i], &beta).unwrap();
            let w = e.mul_vec(&v);
            assert!(w.iter().all(|x| x.is_zero()), "{s}: e_{i} f_delta v != 0");
        }
        let sing = m.singular_vectors(&beta).unwrap();
        assert_eq!(sing.len(), 1, "{s}");
    }
}

fn b_p(n: usize, s: &str) -> usize {
    BlockStructure::parse(n, s).unwrap().p
}

#[test]
fn generic_weight_obstruction_factor() {
    // With q^{(λ,α)} = t free, e_α f_δ v = (t^{-1} q^{-p} + t q^p) X with X free of t.
    for &(n, s) in CASES {
        let b = BlockStructure::parse(n, s).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let t = Qq1::var(1);
        let z: Vec<Qq1> = (0..b.ell()).map(|_| Qq1::from_gauss(&random_unit(&mut rng))).collect();
        let weights = WeightAssignment::new(&b, z, qclass::rootdata::MBlock::Generic(t.clone()));
        let spec = ModuleSpec { blocks: b.clone(), weights, variant: Variant::HatM, depth: 2 * b.p + 1 };
        let m = Module::new(&spec).unwrap();
        let fd = m.alg().delta_vectors(&b).f_delta;
        let (beta, v) = m.vector_of(&fd).unwrap();
        let a = b.alpha_index();
        let (_, e) = m.e_word(&[a], &beta).unwrap();
        let w = e.mul_vec(&v);
        let p = b.p as i64;
        let factor = t.inv().unwrap().mul(&Qq1::q_pow(-p)).add(&t.mul(&Qq1::q_pow(p)));
        let x: Vec<Qq1> = w.iter().map(|c| c.div(&factor)).collect();
        assert!(x.iter().any(|c| !c.is_zero()), "{s}");
        assert!(x.iter().all(|c| c.depends_on_q_only()), "{s}: {x:?}");
        for i in (0..n).filter(|&i| i != a) {
            let (_, e) = m.e_word(&[i], &beta).unwrap();
            assert!(e.mul_vec(&v).iter().all(|c| c.is_zero()));
        }
    }
}

#[test]
fn m_requires_kappa_weight() {
    let b = BlockStructure::parse(2, ";1,1").unwrap();
    let weights = WeightAssignment::<Qq1>::new(&b, vec![], qclass::rootdata::MBlock::Generic(Qq1::var(1)));
    let spec = ModuleSpec { blocks: b, weights, variant: Variant::M, depth: 3 };
    assert!(matches!(Module::new(&spec), Err(VermaError::NotKappa)));
}

#[test]
fn lowering_chains_vanish() {
    // f_{α_k} f_{α_i} … f_{α_1} v = 0 for k ≠ i+1, letters renumbered from α.
    for &(n, s) in CASES {
        let (b, m) = module(n, s, Variant::HatM, 2 * b_p(n, s) + 2);
        let a = b.alpha_index();
        let p = b.p;
        for i in 1..=p {
            for k in 2..=p + 1 {
                let mut word = vec![a + k - 1];
                word.extend((a..a + i).rev());
                let (_, v) = m.word_vector(&word).unwrap();
                if k == i + 1 {
                    assert!(v.iter().any(|x| !x.is_zero()), "{s} i={i} k={k}");
                } else {
                    assert!(v.iter().all(|x| x.is_zero()), "{s} i={i} k={k}");
                }
            }
        }
    }
}

#[test]
fn slice_below_delta_is_one_dimensional() {
    for &(n, s) in CASES {
        let (b, m) = module(n, s, Variant::HatM, 2 * b_p(n, s) + 1);
        let a = b.alpha_index();
        let mut word: Vec<usize> = (a + 1..n - 1).collect();
        word.push(n - 1);
        word.extend((a + 1..n - 1).rev());
        word.push(a);
        let (beta, v) = m.word_vector(&word).unwrap();
        let rs = m.rs();
        let target = rs.simple_coords(&qclass::rootdata::sub(&b.delta(), &b.alpha())).unwrap();
        assert_eq!(beta, target);
        assert_eq!(m.dim(&beta).unwrap(), 1, "{s}");
        assert!(!v[0].is_zero());
    }
}

#[test]
fn f_delta_expands_over_all_phis_with_nonzero_first_coefficient() {
    for &(n, s) in CASES {
        let (b, m) = module(n, s, Variant::HatM, 2 * b_p(n, s) + 1);
        let all: Vec<usize> = (1..=b.p + 1).collect();
        let e = expand_in_phis(&m, &b, &all).unwrap().expect("solvable");
        assert_eq!(e.rank, b.p + 1, "{s}");
        assert!(!e.coefficients[0].is_zero(), "{s}");
    }
}

#[test]
fn phi_labels_for_small_case() {
    let b = BlockStructure::parse(3, ";1,2").unwrap();
    let w = phi_words(&b);
    assert_eq!(w, vec![vec![0, 1, 2, 1, 0], vec![1, 2, 0, 1, 0], vec![2, 1, 0, 1, 0]]);
}

#[test]
fn e_action_on_free_verma_respects_relations() {
    let rs = RootSystem::new(2);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let values: Vec<Qq> = (0..2).map(|_| Qq::from_gauss(&random_unit(&mut rng))).collect();
    let m = Module::free(rs, values, 5).unwrap();
    for beta in m.tower.weights().to_vec() {
        if beta.iter().sum::<i64>() < 5 {
            for i in 0..2 {
                for j in 0..2 {
                    assert!(m.check_commutator(i, j, &beta).unwrap());
                }
            }
        }
    }
}

#[test]
fn f_delta_is_not_in_span_of_phis_without_first() {
    for &(n, s) in CASES {
        let (b, m) = module(n, s, Variant::HatM, 2 * b_p(n, s) + 1);
        let rest: Vec<usize> = (2..=b.p + 1).collect();
        assert!(expand_in_phis(&m, &b, &rest).unwrap().is_none(), "{s}");
    }
}
