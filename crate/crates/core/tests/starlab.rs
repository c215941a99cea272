use jordanian::hopf::Family;
use jordanian::starlab::{
    check_ode_oracles, check_star_properties, closed_forms, coproduct_consistency, k_inverse, k_map, ode_oracle,
    star_kernel, wave_packet_star, GaussianPacket, OdeTarget, StarParams,
};
use jordanian::Report;
use proptest::prelude::*;
use proptest::test_runner::FileFailurePersistence;

const US: [f64; 6] = [0.0, 0.25, 0.5, 0.75, 1.0, 2.0];

fn assert_all(reports: &[Report]) {
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(ToString::to_string).collect();
    assert!(failed.is_empty(), "failed checks:\n{}", failed.join("\n"));
}

#[test]
fn closed_forms_agree_with_the_ode() {
    let mut reports = vec![];
    for u in US {
        for kappa in [1.0, 2.5] {
            let p = StarParams::new(u, kappa, vec![1.0, 0.0]).unwrap();
            reports.extend(check_ode_oracles(&p, 100, 42, 1e-9));
        }
    }
    let lightlike = StarParams::new(0.3, 1.0, vec![1.0, 1.0]).unwrap();
    reports.extend(check_ode_oracles(&lightlike, 100, 7, 1e-9));
    assert_all(&reports);
}

#[test]
fn kernel_properties() {
    let mut reports = vec![];
    for u in US {
        let p = StarParams::timelike(u, 1.0, 2).unwrap();
        reports.push(check_star_properties(&p, 100, 42, 1e-9));
    }
    let three = StarParams::new(0.4, 3.0, vec![1.0, 0.5, -0.25]).unwrap();
    reports.push(check_star_properties(&three, 100, 3, 1e-9));
    assert_all(&reports);
}

#[test]
fn amplitude_is_four_fifths_and_matches_the_q_equation() {
    let p = StarParams::timelike(0.5, 1.0, 2).unwrap();
    let (k, q) = ([1.0f64, 0.0], [1.0f64, 0.0]);
    let out = star_kernel(&p, &k, &q, Family::R).unwrap();
    assert!((out.amplitude - 0.8).abs() < 1e-12);

    let kinv = k_inverse(&p, &k).unwrap();
    let with_q = ode_oracle(&p, OdeTarget::Q, &kinv, &q, 16).unwrap()[0];
    let without = ode_oracle(&p, OdeTarget::Q, &kinv, &[0.0, 0.0], 16).unwrap()[0];
    assert!(((without - with_q).exp() - 0.8).abs() < 1e-10);
}

#[test]
fn boundary_values() {
    let p = StarParams::timelike(0.3, 1.0, 2).unwrap();
    let k = [0.2f64, -0.1];
    let g = ode_oracle(&p, OdeTarget::G, &k, &[0.0, 0.0], 16).unwrap();
    let q0 = ode_oracle(&p, OdeTarget::Q, &k, &[0.0, 0.0], 16).unwrap();
    assert_eq!(g, q0);
    let cf = closed_forms(&p, &[0.0, 0.7], &[0.1, 0.1]).unwrap();
    assert_eq!(cf.k, vec![0.0, 0.7]);
    assert_eq!(cf.g_log, 0.0);
    let l = star_kernel(&StarParams::timelike(0.0, 1.0, 2).unwrap(), &k, &[0.3, 0.4], Family::L).unwrap();
    assert!((l.dvec[0] - (0.2 + (1.0 - 0.2) * 0.3)).abs() < 1e-15);
    assert_eq!(l.g_log, 0.0);
}

#[test]
fn symbolic_coproduct_matches_to_the_truncation_order() {
    let (k, q) = ([0.11, -0.07], [-0.09, 0.05]);
    let mut reports = vec![];
    for order in [4, 6] {
        for family in [Family::L, Family::R] {
            let p = StarParams::timelike(0.5, 1.0, 2).unwrap();
            reports.push(coproduct_consistency(&p, family, &k, &q, order));
        }
        let p = StarParams::timelike(0.25, 1.0, 2).unwrap();
        reports.push(coproduct_consistency(&p, Family::R, &k, &q, order));
    }
    assert_all(&reports);
    assert!(reports.iter().all(|r| r.detail.as_deref().is_some_and(|d| d.starts_with("residual ratio"))));

    let f0 = coproduct_consistency(&StarParams::timelike(0.0, 1.0, 2).unwrap(), Family::F0, &k, &q, 4);
    assert!(f0.passed(), "{f0}");
    assert!(f0.detail.unwrap().contains("terminates"));
}

#[test]
fn narrow_packet_acts_through_the_kernel() {
    let p = StarParams::timelike(0.5, 4.0, 1).unwrap();
    let f = GaussianPacket::new(vec![0.2], vec![0.3]).unwrap();
    let q0 = 0.4;
    let g = GaussianPacket::new(vec![q0], vec![1e-5]).unwrap();
    let x = [0.7];
    let star = wave_packet_star(&p, Family::R, &f, &g, &x, 24).unwrap();

    let rule = gauss_quad::GaussHermite::new(std::num::NonZeroUsize::new(40).unwrap());
    let mut direct = num_complex::Complex64::new(0.0, 0.0);
    for (t, w) in rule.nodes().zip(rule.weights()) {
        let k = 0.2 + std::f64::consts::SQRT_2 * 0.3 * t;
        let kern = star_kernel(&p, &[k], &[q0], Family::R).unwrap();
        direct += num_complex::Complex64::from_polar(w * kern.amplitude, kern.dvec[0] * x[0]);
    }
    direct /= std::f64::consts::PI.sqrt();
    assert!((star - direct).norm() < 1e-6, "{star} vs {direct}");

    let l_end = wave_packet_star(&StarParams::timelike(0.0, 10.0, 1).unwrap(), Family::R, &f, &f, &x, 16).unwrap();
    let r_end = wave_packet_star(&StarParams::timelike(1.0, 10.0, 1).unwrap(), Family::R, &f, &f, &x, 16).unwrap();
    assert!((l_end - r_end).norm() > 1e-6);
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: Some(Box::new(FileFailurePersistence::Direct("proptest-regressions/starlab.txt"))),
        ..ProptestConfig::default()
    })]

    #[test]
    fn k_inverse_round_trip(u in -0.5f64..1.5, a in -0.2f64..0.2, b in -0.2f64..0.2) {
        let p = StarParams::timelike(u, 1.0, 2).unwrap();
        let k = [a, b];
        if let Ok(kk) = k_map(&p, &k) {
            let back = k_inverse(&p, &kk).unwrap();
            prop_assert!((back[0] - a).abs() <= 1e-12 * (1.0 + a.abs()));
            prop_assert!((back[1] - b).abs() <= 1e-12 * (1.0 + b.abs()));
        }
    }

    #[test]
    fn kernel_is_associative(u in 0.0f64..1.0, m in proptest::array::uniform6(-0.25f64..0.25)) {
        let p = StarParams::timelike(u, 1.0, 2).unwrap();
        let (k, q, r) = ([m[0], m[1]], [m[2], m[3]], [m[4], m[5]]);
        let d = |a: &[f64], b: &[f64]| star_kernel(&p, a, b, Family::R).unwrap();
        let left = d(&d(&k, &q).dvec, &r);
        let right = d(&k, &d(&q, &r).dvec);
        for i in 0..2 {
            prop_assert!((left.dvec[i] - right.dvec[i]).abs() < 1e-12);
        }
    }
}
