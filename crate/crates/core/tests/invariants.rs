use cayley_core::exact::Matrix;
use cayley_core::orbits::{orbit_report, LinearGroupAction};
use cayley_core::polarity::rep_polar_test;
use cayley_core::repcheck::classical::{diagonal, Classical};
use cayley_core::samplers::Sampler;
use cayley_core::symmetry::named;
use proptest::prelude::*;

fn two_copies(g: Classical) -> LinearGroupAction {
    let ops: Vec<Matrix> = g.basis().iter().map(|x| diagonal(x, 2)).collect();
    LinearGroupAction::euclidean(g.name(), 2 * g.module_dim(), &ops).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn standard_modules_are_polar(seed in 0u64..1000, n in 3usize..6) {
        let g = Classical::So(n);
        let act = LinearGroupAction::euclidean(g.name(), n, &g.basis()).unwrap();
        let v = rep_polar_test(&act, &mut Sampler::new(seed, 13)).unwrap();
        prop_assert!(v.polar);
        prop_assert_eq!(v.cohomogeneity, 1);
    }

    #[test]
    fn real_pairs_are_not_polar(seed in 0u64..1000, n in 3usize..5) {
        let act = two_copies(Classical::So(n));
        let v = rep_polar_test(&act, &mut Sampler::new(seed, 13)).unwrap();
        prop_assert!(!v.polar);
        prop_assert_eq!(v.cohomogeneity, 3);
        prop_assert!(v.violation.unwrap().recheck(&act.gram));
    }

    #[test]
    fn unitary_pairs_are_not_polar(seed in 0u64..1000, n in 2usize..4) {
        let act = two_copies(Classical::U(n));
        let v = rep_polar_test(&act, &mut Sampler::new(seed, 13)).unwrap();
        prop_assert!(!v.polar);
        prop_assert_eq!(v.cohomogeneity, 4);
        prop_assert!(v.violation.unwrap().recheck(&act.gram));
    }

    #[test]
    fn f4_orbits_are_the_whole_plane(seed in 0u64..1000) {
        let q = Sampler::new(seed, 13).chart_point();
        let f4 = named::f4().unwrap();
        let r = orbit_report(&f4, &q, None);
        prop_assert_eq!(r.orbit_dim, 16);
        prop_assert_eq!(r.isotropy_dim, 36);
        prop_assert_eq!(r.slice_dim, 0);
    }

    #[test]
    fn spin9_orbits_are_points_spheres_or_principal(seed in 0u64..1000) {
        let q = Sampler::new(seed, 13).chart_point();
        let d = orbit_report(&named::spin9().unwrap(), &q, None).orbit_dim;
        prop_assert!([0, 8, 15].contains(&d), "orbit dim {}", d);
    }
}

#[test]
fn orbit_reports_round_trip_through_json() {
    let q = Sampler::new(7, 13).chart_point();
    let r = orbit_report(&named::g2().unwrap(), &q, None);
    let back: cayley_core::orbits::OrbitReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(back.point, r.point);
    assert_eq!(back.orbit_dim, r.orbit_dim);
}
