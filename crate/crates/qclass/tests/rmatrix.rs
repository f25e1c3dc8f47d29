use qclass::linalg::Matrix;
use qclass::rmatrix::*;
use qclass::rootdata::{random_unit, BlockStructure, RootSystem, WeightAssignment};
use qclass::scalars::{Field, GaussRat, QField, Qq};
use qclass::verma::{Module, ModuleSpec, Variant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn delta_pair(v: &VectorRep<Qq>) -> Vec<Matrix<Qq>> {
    let id = Matrix::identity(v.dim);
    let mut out = Vec::new();
    for i in 0..v.n() {
        let k = v.k(i);
        let kinv = k.inverse().unwrap();
        out.push(v.e[i].kron(&id).add(&k.kron(&v.e[i])));
        out.push(v.f[i].kron(&kinv).add(&id.kron(&v.f[i])));
        out.push(k.kron(&k));
    }
    out
}

#[test]
fn vector_representation_relations() {
    for n in [2, 3] {
        let v = VectorRep::<Qq>::new(n);
        assert!(v.failed_relations().is_empty(), "{:?}", v.failed_relations());
        for m in v.e.iter().chain(&v.f) {
            assert!(m.entries().iter().all(|x| x.is_constant()));
        }
    }
}

#[test]
fn vector_representation_examples() {
    let v = VectorRep::<Qq>::new(3);
    let w = |a: usize| {
        let mut x = vec![Qq::zero(); 6];
        x[a] = Qq::one();
        x
    };
    assert_eq!(v.e[0].mul_vec(&w(1)), w(0));
    for j in [0, 2, 3, 4] {
        assert!(v.e[0].mul_vec(&w(j)).iter().all(|x| x.is_zero()));
    }
    assert_eq!(v.k(0).mul_vec(&w(0)), vec![Qq::q(), Qq::zero(), Qq::zero(), Qq::zero(), Qq::zero(), Qq::zero()]);
}

#[test]
fn explicit_r_diagonal_and_yang_baxter() {
    for n in [2, 3] {
        let v = VectorRep::<Qq>::new(n);
        let r = explicit_r(&v);
        let d = v.dim;
        for i in 0..d {
            for j in 0..d {
                let e = (i == j) as i64 - (j == v.prime(i)) as i64;
                let k = i * d + j;
                assert_eq!(*r.get(k, k), Qq::q_pow(e));
            }
        }
        assert!(yang_baxter_holds(&r, d), "n={n}");
    }
}

#[test]
fn explicit_r_semiclassical_limit_is_standard_r() {
    for n in [2, 3] {
        let v = VectorRep::<Qq>::new(n);
        let r = explicit_r(&v);
        let id = Matrix::<Qq>::identity(r.rows);
        let limit = r.map(|x| Qq::from_base(&x.classical_limit().unwrap()));
        assert_eq!(limit, id);
        let deriv: Vec<GaussRat> = r.entries().iter().map(|x| x.h_derivative().unwrap()).collect();
        let expected = classical_r(&v);
        assert_eq!(deriv.as_slice(), expected.entries());
    }
}

#[test]
fn s_is_invariant_with_three_eigenvalues_and_kappa_eigenline() {
    for n in [2, 3] {
        let v = VectorRep::<Qq>::new(n);
        let s = flip::<Qq>(v.dim).mul(&explicit_r(&v));
        for x in delta_pair(&v) {
            assert_eq!(s.mul(&x), x.mul(&s));
        }
        let k = kappa(&v);
        assert_eq!(k.rank(), 1);
        assert_eq!(k.mul(&k), k);
        for x in delta_pair(&v) {
            assert_eq!(x.mul(&k), k.mul(&x));
        }
        let eig = monomial_eigenvalues(&s, 2 * n as i64 + 2);
        assert_eq!(eig.len(), 3, "{eig:?}");
        assert!(product_of_shifts(&s, &eig).is_zero());
        let sk = s.mul(&k);
        let c = proportionality(&sk, &k).expect("κ is an eigenline of S");
        assert_eq!(proportionality(&k.mul(&s), &k), Some(c.clone()));
        assert!(eig.contains(&c));
        assert_eq!(c, Qq::q_pow(-(2 * n as i64) - 1).neg());
    }
}

#[test]
fn quasi_r_calibrates_against_explicit_r() {
    for n in [2, 3] {
        let v = VectorRep::<Qq>::new(n);
        let theta = QuasiR::<Qq>::new(RootSystem::new(n), 2 * n - 1).unwrap();
        assert!(theta.theta(&vec![0; n]).unwrap().is_identity());
        let rhat = theta.on_vector_pair(&v);
        let c = proportionality(&rhat, &explicit_r(&v)).expect("calibration");
        assert_eq!(c, Qq::one());
        // (π⊗π)(R_21 R) = c² P R P R.
        let p = flip::<Qq>(v.dim);
        let r21 = p.mul(&rhat).mul(&p);
        let r = explicit_r(&v);
        assert_eq!(r21.mul(&rhat), p.mul(&r).mul(&p).mul(&r).scale(&c.mul(&c)));
    }
}

#[test]
fn verma_e_action_splits_into_skew_derivations() {
    let rs = RootSystem::new(2);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let values: Vec<Qq> = (0..2).map(|_| Qq::from_gauss(&random_unit(&mut rng))).collect();
    let m = Module::free(rs.clone(), values, 5).unwrap();
    let (r, rp) = skew_derivations(&m.tower);
    for beta in m.tower.weights().to_vec() {
        for i in 0..2 {
            if beta[i] == 0 {
                continue;
            }
            let mut up = beta.clone();
            up[i] -= 1;
            let d = rs.d(i);
            let a = m.q_weight(&rs.simple[i], &up);
            let b = m.q_weight(&rs.simple[i], &vec![0, 0]).inv().unwrap();
            let expected = r[i]
                .at(&beta)
                .unwrap()
                .scale(&a)
                .sub(&rp[i].at(&beta).unwrap().scale(&b))
                .scale(&Qq::q_pow(d).sub(&Qq::q_pow(-d)).inv().unwrap());
            assert_eq!(m.e(i, &beta).unwrap(), expected);
        }
    }
}

fn kappa_module(n: usize, blocks: &str, variant: Variant, depth: usize) -> Module<Qq> {
    let b = BlockStructure::parse(n, blocks).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let weights = WeightAssignment::specialized(&b, &mut rng, None);
    Module::new(&ModuleSpec { blocks: b, weights, variant, depth }).unwrap()
}

#[test]
fn q_commutes_with_coproduct_and_has_top_eigenvalue() {
    let n = 2;
    let m = kappa_module(n, ";1,1", Variant::HatM, 4);
    let v = VectorRep::<Qq>::new(n);
    let theta = QuasiR::new(RootSystem::new(n), 2 * n - 1).unwrap();
    let t = TensorModel::new(&m, &v, &theta);
    let top = t.slice(1, &[0, 0]).unwrap();
    assert_eq!(top.dim, 1);
    let q0 = t.q_on_slice(&top).unwrap();
    let mu1 = Qq::q_pow(-2).neg();
    assert_eq!(*q0.get(0, 0), mu1);
    let rs = m.rs().clone();
    for gamma in rs.cone_up_to(3) {
        let s = t.slice(1, &gamma).unwrap();
        let q = t.q_on_slice(&s).unwrap();
        for i in 0..n {
            let mut up = gamma.clone();
            up[i] += 1;
            if up.iter().sum::<i64>() <= 4 {
                let s2 = t.slice(1, &up).unwrap();
                let q2 = t.q_on_slice(&s2).unwrap();
                let f = t.delta_f(i, &s, &s2).unwrap();
                assert_eq!(q2.mul(&f), f.mul(&q), "f_{i} at {gamma:?}");
                let e = t.delta_e(i, &s2, &s).unwrap();
                assert_eq!(q.mul(&e), e.mul(&q2), "e_{i} at {up:?}");
            }
        }
    }
}
