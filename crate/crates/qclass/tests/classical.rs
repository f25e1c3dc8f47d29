use proptest::prelude::*;
use qclass::classical::*;
use qclass::rootdata::{BlockStructure, MBlock, WeightAssignment};
use qclass::scalars::{Field, GaussRat, Qq};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn int(v: i64) -> GaussRat {
    GaussRat::from_int(v)
}

fn sp(n: usize, blocks: &str, mu: Vec<GaussRat>) -> ClassSpec {
    ClassSpec::sp(BlockStructure::parse(n, blocks).unwrap(), mu).unwrap()
}

fn all_pass(checks: &[qclass::report::Check]) {
    for c in checks {
        assert_eq!(c.status, qclass::report::Status::Pass, "{c:?}");
    }
}

#[test]
fn gl_kernel_dimensions() {
    let two_three = ClassSpec::gl(vec![(int(2), 1), (int(3), 1)]).unwrap();
    assert_eq!(jacobian_kernel_dim(&two_three, None), 2);
    let mult = ClassSpec::gl(vec![(int(2), 2), (int(5), 1)]).unwrap();
    assert_eq!(jacobian_kernel_dim(&mult, None), 4);
    let scalar = ClassSpec::gl(vec![(int(7), 3)]).unwrap();
    assert_eq!(jacobian_kernel_dim(&scalar, None), 0);
    assert!(ClassSpec::gl(vec![(int(1), 1), (int(1), 2)]).is_err());
}

#[test]
fn gl_differential_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let spec = ClassSpec::gl(vec![(int(2), 2), (GaussRat::from_frac(-1, 3), 1), (int(4), 1)]).unwrap();
    all_pass(&verify_class(&spec, &mut rng));
}

#[test]
fn sp_kernel_dimensions() {
    assert_eq!(jacobian_kernel_dim(&sp(2, ";1,1", vec![]), None), 4);
    assert_eq!(jacobian_kernel_dim(&sp(3, ";1,2", vec![]), None), 8);
    assert_eq!(jacobian_kernel_dim(&sp(3, ";2,1", vec![]), None), 8);
    assert_eq!(jacobian_kernel_dim(&sp(3, "1;1,1", vec![int(4)]), None), 14);
}

#[test]
fn sp_initial_points() {
    let o = sp(2, ";1,1", vec![]).initial_point();
    assert_eq!(o.entries().iter().step_by(5).cloned().collect::<Vec<_>>(), vec![int(-1), int(1), int(1), int(-1)]);
    let d = sp(3, ";1,2", vec![]).diagonal();
    assert_eq!(d, vec![int(-1), int(1), int(1), int(1), int(1), int(-1)]);
    let d = sp(3, "1;1,1", vec![int(4)]).diagonal();
    assert_eq!(d, vec![int(4), int(-1), int(1), int(1), int(-1), GaussRat::from_frac(1, 4)]);
}

#[test]
fn sp_checks_pass() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for spec in [sp(2, ";1,1", vec![]), sp(3, ";1,2", vec![]), sp(3, ";2,1", vec![]), sp(3, "1;1,1", vec![int(4)])] {
        all_pass(&verify_class(&spec, &mut rng));
    }
}

#[test]
fn trace_example() {
    let o = sp(3, "1;1,1", vec![int(4)]).initial_point();
    assert_eq!(trace_power(&o, 1), GaussRat::from_frac(17, 4));
    assert_eq!(trace_power(&o, 2), GaussRat::from_frac(16 * 16 + 1 + 16 * 4, 16));
}

#[test]
fn symplectic_points_rejected_when_eigenvalues_collide() {
    let b = BlockStructure::parse(3, "1;1,1").unwrap();
    assert!(ClassSpec::sp(b.clone(), vec![int(1)]).is_err());
    assert!(ClassSpec::sp(b.clone(), vec![int(-1)]).is_err());
    assert!(ClassSpec::sp(b, vec![]).is_err());
}

#[test]
fn repeated_root_enlarges_the_kernel() {
    let spec = sp(2, ";1,1", vec![]);
    let doubled = [int(-1), int(-1), int(1)];
    assert!(kernel_dim_for_roots(&spec, &doubled, None) > spec.orbit_dim());
}

#[test]
fn bridge_with_integer_z() {
    let b = BlockStructure::parse(3, "1;1,1").unwrap();
    let w = WeightAssignment::<Qq>::new(&b, vec![Qq::from_int(2)], MBlock::Kappa);
    all_pass(&verify_bridge(&b, &w).unwrap());
    let b = BlockStructure::parse(2, ";1,1").unwrap();
    let w = WeightAssignment::<Qq>::new(&b, vec![], MBlock::Kappa);
    all_pass(&verify_bridge(&b, &w).unwrap());
}

#[test]
fn parse_class_strings() {
    let g = ClassSpec::parse("gl", "2:2,1/3:1").unwrap();
    assert_eq!(g.diagonal(), vec![int(2), int(2), GaussRat::from_frac(1, 3)]);
    let s = ClassSpec::parse("sp", "4:1,-1:2,1:2,1/4:1").unwrap();
    assert_eq!(s, sp(3, "1;1,1", vec![int(4)]));
    let s = ClassSpec::parse("sp", "-1:2,1:4").unwrap();
    assert_eq!(s, sp(3, ";1,2", vec![]));
    assert!(ClassSpec::parse("sp", "4:1,-1:2,1:2").is_err());
    assert!(ClassSpec::parse("sp", "-1:1,1:2").is_err());
    assert!(ClassSpec::parse("so", "1:1").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gl_kernel_matches_orbit_dimension(mults in prop::collection::vec(1usize..3, 1..4), seed in 0u64..1000) {
        let eigen: Vec<_> = mults.iter().enumerate().map(|(i, &k)| (int(i as i64 * 3 - 2), k)).collect();
        let spec = ClassSpec::gl(eigen).unwrap();
        let n = spec.size();
        let expected = n * n - mults.iter().map(|k| k * k).sum::<usize>();
        prop_assert_eq!(jacobian_kernel_dim(&spec, None), expected);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert!(verify_class(&spec, &mut rng).iter().all(|c| c.status == qclass::report::Status::Pass));
    }

    #[test]
    fn sp_kernel_is_conjugation_invariant(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = sp(2, ";1,1", vec![]);
        let g = random_symplectic(2, &mut rng);
        prop_assert_eq!(jacobian_kernel_dim(&spec, Some(&g)), 4);
    }
}
