use jordanian::hopf::{build_twist, Family};
use jordanian::ncalg::parse_rational;
use jordanian::weyl::{
    check_commutators, check_coordinate_closure, check_jacobi, check_left_right_realizations,
    check_realization, commutator_parameter, coordinate, embed_u, xhats_from_twist, Realization,
};
use jordanian::{Config, Report, WElement, Q};
use num_rational::BigRational;

fn grid() -> Vec<BigRational> {
    ["0", "1/4", "1/2", "3/4", "1", "2"].iter().map(|s| parse_rational(s).unwrap()).collect()
}

fn assert_all(reports: &[Report]) {
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(ToString::to_string).collect();
    assert!(failed.is_empty(), "failed checks:\n{}", failed.join("\n"));
}

#[test]
fn realizations_match_closed_forms() {
    let cfg = Config::timelike(2, 6).unwrap();
    let mut reports = vec![check_realization(Family::F0, None, &cfg), check_realization(Family::F1, None, &cfg)];
    for u in grid() {
        reports.push(check_realization(Family::L, Some(&u), &cfg));
        reports.push(check_realization(Family::R, Some(&u), &cfg));
    }
    assert_all(&reports);
}

#[test]
fn lightlike_direction() {
    let v = ["1", "1"].iter().map(|s| parse_rational(s).unwrap()).collect();
    let cfg = Config::new(2, 5, v).unwrap();
    let u = parse_rational("2/5").unwrap();
    let mut reports = vec![];
    for fam in [Family::L, Family::R] {
        reports.push(check_realization(fam, Some(&u), &cfg));
        let xhat = xhats_from_twist(&build_twist(fam, Some(&u), &cfg).unwrap(), &cfg).unwrap();
        reports.extend(check_commutators(&xhat, &u, &cfg, fam.name()));
    }
    reports.extend(check_left_right_realizations(&u, &cfg).unwrap());
    assert_all(&reports);
}

#[test]
fn commutators_for_every_family() {
    let cfg = Config::timelike(2, 6).unwrap();
    let mut reports = vec![];
    for fam in Family::ALL {
        let us = if fam.is_parametric() { grid() } else { vec![parse_rational("0").unwrap()] };
        for u in &us {
            let f = build_twist(fam, Some(u), &cfg).unwrap();
            let xhat = xhats_from_twist(&f, &cfg).unwrap();
            reports.push(check_coordinate_closure(&xhat, &cfg, fam.name(), f.u()));
            reports.push(check_jacobi(&xhat, &cfg, fam.name(), f.u()));
            if fam != Family::LR {
                let u = commutator_parameter(&f).unwrap();
                reports.extend(check_commutators(&xhat, &u, &cfg, fam.name()));
            }
        }
    }
    assert_all(&reports);
}

#[test]
fn left_and_right_differ_by_chi() {
    let cfg = Config::timelike(2, 6).unwrap();
    let mut reports = vec![];
    for u in grid() {
        reports.extend(check_left_right_realizations(&u, &cfg).unwrap());
    }
    assert_all(&reports);
}

#[test]
fn pure_weyl_form_keeps_the_commutators() {
    let cfg = Config::timelike(3, 4).unwrap();
    let u = parse_rational("1/2").unwrap();
    let mut reports = vec![];
    for fam in [Family::L, Family::R] {
        let xhat = Realization::closed_form(fam, Some(&u), &cfg).unwrap().to_xhat();
        reports.extend(check_commutators(&xhat, &u, &cfg, fam.name()));
    }
    assert_all(&reports);
}

#[test]
fn zero_direction_is_undeformed() {
    let cfg = Config::new(2, 4, vec![BigRational::from_integer(0.into()); 2]).unwrap();
    let u = parse_rational("1/2").unwrap();
    let xhat = xhats_from_twist(&build_twist(Family::R, Some(&u), &cfg).unwrap(), &cfg).unwrap();
    for (mu, x) in xhat.iter().enumerate() {
        assert_eq!(*x, coordinate(2, 4, mu));
        for nu in 0..2 {
            let p = embed_u(&cfg.momentum::<Q>(nu));
            let expected = if mu == nu { WElement::scalar(2, 4, -Q::i()) } else { WElement::zero(2, 4) };
            assert_eq!(p.commutator(x), expected);
        }
    }
}
