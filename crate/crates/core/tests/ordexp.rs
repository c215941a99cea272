use jordanian::hopf::Family;
use jordanian::ncalg::parse_rational;
use jordanian::ordexp::{
    brute_force_expand, check_ordered_exp_1d, check_ordered_exp, check_q_boundary, interpolating_phi,
    normal_ordered_exp, phi_series, random_cubics, solve_j_series, PolynomialRealization,
};
use jordanian::weyl::Realization;
use jordanian::{Config, Report, Q};
use num_rational::BigRational;
use num_traits::{One, Zero};

fn r(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

fn assert_all(reports: &[Report]) {
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(ToString::to_string).collect();
    assert!(failed.is_empty(), "failed checks:\n{}", failed.join("\n"));
}

#[test]
fn constant_phi_shifts_the_momentum() {
    let real = PolynomialRealization::one_dimensional(&[Q::one()], 5);
    let phi = phi_series(&real, &[Q::one()]);
    let j = solve_j_series(&real, &[Q::one()]);
    assert_eq!(phi.components[0].len(), 1);
    assert_eq!(j[0].len(), 2);
    assert_eq!(brute_force_expand(&real, &[Q::one()]), normal_ordered_exp(&phi));
}

#[test]
fn interpolating_phi_at_half() {
    let report = check_ordered_exp_1d(&interpolating_phi(&r("1/2")), 8);
    assert!(report.passed(), "{report}");
}

#[test]
fn interpolating_phi_over_the_grid() {
    let reports: Vec<Report> =
        ["0", "1/4", "3/4", "1", "2"].iter().map(|u| check_ordered_exp_1d(&interpolating_phi(&r(u)), 6)).collect();
    assert_all(&reports);
}

#[test]
fn random_cubics_satisfy_the_one_dimensional_identity() {
    let reports: Vec<Report> = random_cubics(10, 42).iter().map(|phi| check_ordered_exp_1d(phi, 8)).collect();
    assert_all(&reports);
}

#[test]
fn zero_phi_is_trivial() {
    let report = check_ordered_exp_1d(&[Q::zero()], 4);
    assert!(report.passed(), "{report}");
}

#[test]
fn right_realization_in_two_dimensions() {
    let u = r("1/2");
    let kappa = BigRational::one();
    let cfg = Config::timelike(2, 5).unwrap();
    let real = Realization::closed_form(Family::R, Some(&u), &cfg).unwrap();
    let poly = PolynomialRealization::from_realization(&real, &kappa, 5);
    assert!(poly.chi.iter().any(|c| !c.is_zero()));
    let reports = vec![
        check_ordered_exp(&poly, "R", Some(&u)),
        check_q_boundary(&poly, &u, &cfg.v, &kappa),
    ];
    assert_all(&reports);
}

#[test]
fn left_realization_has_no_phase() {
    let u = r("1/4");
    let kappa = r("3/2");
    let cfg = Config::timelike(2, 4).unwrap();
    let real = Realization::closed_form(Family::L, Some(&u), &cfg).unwrap();
    let poly = PolynomialRealization::from_realization(&real, &kappa, 4);
    assert!(poly.chi.iter().all(|c| c.is_zero()));
    let report = check_ordered_exp(&poly, "L", Some(&u));
    assert!(report.passed(), "{report}");
}

#[test]
fn q_boundary_detects_the_wrong_parameter() {
    let kappa = BigRational::one();
    let cfg = Config::timelike(2, 3).unwrap();
    let real = Realization::closed_form(Family::R, Some(&r("1/2")), &cfg).unwrap();
    let poly = PolynomialRealization::from_realization(&real, &kappa, 3);
    assert!(!check_q_boundary(&poly, &r("1/3"), &cfg.v, &kappa).passed());
    assert!(check_q_boundary(&poly, &r("1/2"), &cfg.v, &kappa).passed());
}
