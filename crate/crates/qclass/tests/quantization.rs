use qclass::quantization::*;
use qclass::report::{Check, Status};
use qclass::rmatrix::{QuasiR, TensorModel, VectorRep};
use qclass::rootdata::{mu_parameters, BlockStructure, WeightAssignment};
use qclass::scalars::{Field, GaussRat, QField, Qq};
use qclass::verma::{Module, ModuleSpec, Variant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Setup {
    b: BlockStructure,
    w: WeightAssignment<Qq>,
    hat: Module<Qq>,
    m: Module<Qq>,
    v: VectorRep<Qq>,
    theta: QuasiR<Qq>,
}

fn setup(n: usize, blocks: &str, depth: usize) -> Setup {
    let b = BlockStructure::parse(n, blocks).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let w = WeightAssignment::specialized(&b, &mut rng, None);
    let mk = |variant| Module::new(&ModuleSpec { blocks: b.clone(), weights: w.clone(), variant, depth }).unwrap();
    let hat = mk(Variant::HatM);
    let m = mk(Variant::M);
    let v = VectorRep::new(n);
    let theta = QuasiR::new(b.roots.clone(), 2 * n - 1).unwrap();
    Setup { b, w, hat, m, v, theta }
}

fn all_pass(checks: &[Check]) {
    for c in checks {
        assert_eq!(c.status, Status::Pass, "{c:?}");
    }
}

#[test]
fn eigenvalue_lists_for_sp4() {
    let b = BlockStructure::parse(2, ";1,1").unwrap();
    let w = WeightAssignment::<Qq>::symbolic(&b, false);
    let hat = eigenvalues_hatm(&b, &w).unwrap();
    let m = eigenvalues_m(&b, &w).unwrap();
    let q = Qq::q_pow;
    assert_eq!(hat, vec![q(-2).neg(), q(-6).neg(), q(-2)]);
    assert_eq!(m, vec![q(-2).neg(), q(-2)]);
    let lim: Vec<GaussRat> = m.iter().map(|x| x.classical_limit().unwrap()).collect();
    assert_eq!(lim, vec![GaussRat::from_int(-1), GaussRat::one()]);
    assert_eq!(hat[1].classical_limit().unwrap(), GaussRat::from_int(-1));
}

#[test]
fn eigenvalue_formula_matches_nu_roots() {
    for (n, s) in [(2, ";1,1"), (3, ";1,2"), (3, ";2,1"), (3, "1;1,1")] {
        let b = BlockStructure::parse(n, s).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let w = WeightAssignment::<Qq>::specialized(&b, &mut rng, None);
        let mut from_nu: Vec<String> = nu_list(&b).iter().map(|nu| format!("{:?}", root_for_nu(&b.roots, &w, nu))).collect();
        let mut listed: Vec<String> = eigenvalues_hatm(&b, &w).unwrap().iter().map(|x| format!("{x:?}")).collect();
        from_nu.sort();
        listed.sort();
        assert_eq!(from_nu, listed, "{s}");
        assert_eq!(mu_parameters(&b, &w).unwrap().len(), b.ell() + 2);
    }
}

#[test]
fn character_limits_to_classical_traces() {
    for (n, s) in [(2, ";1,1"), (3, ";1,2"), (3, "1;1,1")] {
        let b = BlockStructure::parse(n, s).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let w = WeightAssignment::<Qq>::specialized(&b, &mut rng, None);
        let mu0: Vec<GaussRat> = mu_parameters(&b, &w).unwrap().iter().map(|x| x.classical_limit().unwrap()).collect();
        for k in 1..=2 * n as i64 {
            let chi = character_value(&b, &w, k).unwrap();
            assert_eq!(chi.classical_limit().unwrap(), classical_trace(&b, &mu0, k), "{s} k={k}");
        }
    }
}

#[test]
fn sp4_spectral_trace_reflection_filtration() {
    let s = setup(2, ";1,1", 6);
    let ws_m = Workspace::new(TensorModel::new(&s.m, &s.v, &s.theta));
    let ws_h = Workspace::new(TensorModel::new(&s.hat, &s.v, &s.theta));
    let t = std::time::Instant::now();
    let rm = eigenvalues_m(&s.b, &s.w).unwrap();
    let rh = eigenvalues_hatm(&s.b, &s.w).unwrap();
    all_pass(&verify_min_poly(&ws_m, &rm, 6, anchors::MINPOLY_M, "M").unwrap());
    all_pass(&verify_min_poly(&ws_h, &rh, 6, anchors::EIGEN_HATM, "hatM").unwrap());
    all_pass(&[verify_not_annihilated(&ws_h, &rm, 6, anchors::EIGEN_HATM, "hatM not killed by M roots").unwrap()]);
    all_pass(&[verify_invariance(&ws_m, 6).unwrap(), verify_spectral_consistency(&ws_h, &s.w, 6).unwrap()]);
    eprintln!("spectral {:?}", t.elapsed());
    all_pass(&verify_qtrace(&ws_m, &s.b, &s.w, 4, 3).unwrap());
    eprintln!("qtrace {:?}", t.elapsed());
    all_pass(&verify_reflection(&ws_m, 4).unwrap());
    eprintln!("reflection {:?}", t.elapsed());
    all_pass(&verify_filtration(&ws_m, &s.b, &s.w, 6).unwrap());
    eprintln!("filtration {:?}", t.elapsed());
}

fn full_case(n: usize, blocks: &str, depth: usize, refl: usize, trace_h: usize) {
    let s = setup(n, blocks, depth);
    let ws_m = Workspace::new(TensorModel::new(&s.m, &s.v, &s.theta));
    let ws_h = Workspace::new(TensorModel::new(&s.hat, &s.v, &s.theta));
    let t = std::time::Instant::now();
    let rm = eigenvalues_m(&s.b, &s.w).unwrap();
    let rh = eigenvalues_hatm(&s.b, &s.w).unwrap();
    all_pass(&verify_min_poly(&ws_m, &rm, depth, anchors::MINPOLY_M, "M").unwrap());
    eprintln!("{blocks} minpoly M {:?}", t.elapsed());
    all_pass(&verify_min_poly(&ws_h, &rh, depth, anchors::EIGEN_HATM, "hatM").unwrap());
    eprintln!("{blocks} minpoly hatM {:?}", t.elapsed());
    all_pass(&[verify_invariance(&ws_m, depth).unwrap(), verify_spectral_consistency(&ws_h, &s.w, depth).unwrap()]);
    eprintln!("{blocks} invariance {:?}", t.elapsed());
    all_pass(&verify_qtrace(&ws_m, &s.b, &s.w, 2 * n as u32, trace_h).unwrap());
    eprintln!("{blocks} qtrace {:?}", t.elapsed());
    all_pass(&verify_filtration(&ws_m, &s.b, &s.w, depth).unwrap());
    eprintln!("{blocks} filtration {:?}", t.elapsed());
    all_pass(&verify_reflection(&ws_m, refl).unwrap());
    eprintln!("{blocks} reflection {:?}", t.elapsed());
}

#[test]
#[ignore]
fn sp6_cases_probe() {
    for b in [";1,2", ";2,1", "1;1,1"] {
        full_case(3, b, 6, 3, 1);
    }
}

#[test]
#[ignore]
fn sp4_depth8_probe() {
    full_case(2, ";1,1", 8, 5, 5);
}
