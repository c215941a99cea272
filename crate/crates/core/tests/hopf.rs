use jordanian::hopf::checks::{
    check_closed_forms, check_cocycle, check_family_relation, check_gauge_equivalence, check_hopf_axioms,
    check_inverse, check_left_right, check_normalization, check_r_symmetry,
};
use jordanian::hopf::rmatrix::{check_classical_part, check_cybe, check_qybe, check_r_relations, r_matrix};
use jordanian::hopf::star::{
    check_majid, check_majid_dagger, check_majid_kappa_flip, check_star_structures, check_unitary,
};
use jordanian::hopf::{build_twist, Family};
use jordanian::ncalg::parse_rational;
use jordanian::{Config, Report};
use num_rational::BigRational;

fn grid() -> Vec<BigRational> {
    ["0", "1/4", "1/2", "3/4", "1", "2"].iter().map(|s| parse_rational(s).unwrap()).collect()
}

fn assert_all(reports: &[Report]) {
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(ToString::to_string).collect();
    assert!(failed.is_empty(), "failed checks:\n{}", failed.join("\n"));
}

#[test]
fn reductions_at_the_ends_of_the_families() {
    let cfg = Config::timelike(2, 6).unwrap();
    let zero = parse_rational("0").unwrap();
    let one = parse_rational("1").unwrap();
    let f0 = build_twist(Family::F0, None, &cfg).unwrap();
    let f1 = build_twist(Family::F1, None, &cfg).unwrap();
    for fam in [Family::L, Family::R] {
        assert_eq!(build_twist(fam, Some(&zero), &cfg).unwrap().element, f0.element);
        assert_eq!(build_twist(fam, Some(&one), &cfg).unwrap().element, f1.element);
    }
}

#[test]
fn twist_invariants_over_the_grid() {
    let cfg = Config::timelike(2, 6).unwrap();
    let mut reports = vec![];
    for fam in Family::ALL {
        let us = if fam.is_parametric() { grid() } else { vec![parse_rational("0").unwrap()] };
        for u in &us {
            let f = build_twist(fam, Some(u), &cfg).unwrap();
            reports.push(check_inverse(&f));
            reports.push(check_normalization(&f));
            reports.push(check_cocycle(&f, cfg.triple_order));
        }
    }
    assert_all(&reports);
}

#[test]
fn closed_forms_and_axioms() {
    let cfg = Config::timelike(2, 6).unwrap();
    let mut reports = vec![];
    for fam in Family::ALL {
        let us = if fam.is_parametric() { grid() } else { vec![parse_rational("0").unwrap()] };
        for u in &us {
            reports.push(check_closed_forms(fam, Some(u), &cfg));
            let f = build_twist(fam, Some(u), &cfg).unwrap();
            reports.extend(check_hopf_axioms(&f, &cfg));
        }
    }
    assert_all(&reports);
}

#[test]
fn left_right_relations() {
    let cfg = Config::timelike(2, 6).unwrap();
    let mut reports = vec![];
    for u in grid() {
        reports.extend(check_left_right(&u, &cfg));
        reports.extend(check_family_relation(&u, &cfg));
        reports.push(check_r_relations(&u, &cfg));
        reports.push(check_gauge_equivalence(Family::L, &u, &cfg));
        reports.push(check_gauge_equivalence(Family::R, &u, &cfg));
        reports.push(check_gauge_equivalence(Family::LR, &u, &cfg));
    }
    assert_all(&reports);
    let quarter = check_left_right(&parse_rational("1/4").unwrap(), &cfg);
    assert_eq!(quarter[1].first_residual_order, Some(2));
}

#[test]
fn r_matrices() {
    let cfg = Config::timelike(2, 6).unwrap();
    let mut reports = vec![];
    for fam in [Family::L, Family::R, Family::LR] {
        for u in grid() {
            let f = build_twist(fam, Some(&u), &cfg).unwrap();
            let r = r_matrix(&f);
            reports.push(check_qybe(&r, 3, fam.name(), Some(&u)));
            reports.push(check_classical_part(&r, &cfg, fam.name(), Some(&u)));
            reports.push(check_cybe(&r.classical_part, fam.name(), Some(&u)));
            reports.push(check_r_symmetry(&f));
        }
    }
    assert_all(&reports);
}

#[test]
fn real_forms() {
    let cfg = Config::timelike(2, 6).unwrap();
    let mut reports = vec![];
    for fam in [Family::F0, Family::F1] {
        reports.push(check_unitary(&build_twist(fam, None, &cfg).unwrap(), &cfg));
    }
    for u in grid() {
        reports.push(check_unitary(&build_twist(Family::LR, Some(&u), &cfg).unwrap(), &cfg));
        reports.extend(check_star_structures(&u, &cfg));
        for fam in [Family::L, Family::R] {
            reports.push(check_majid_kappa_flip(&build_twist(fam, Some(&u), &cfg).unwrap(), &cfg));
        }
    }
    let half = parse_rational("1/2").unwrap();
    for fam in [Family::L, Family::R] {
        let f = build_twist(fam, Some(&half), &cfg).unwrap();
        reports.push(check_majid(&f, &cfg));
        reports.push(check_majid_dagger(&f, &cfg, 3));
    }
    assert_all(&reports);

    for u in ["1/4", "3/4"] {
        let u = parse_rational(u).unwrap();
        for fam in [Family::L, Family::R] {
            let rep = check_majid(&build_twist(fam, Some(&u), &cfg).unwrap(), &cfg);
            assert!(!rep.passed());
            assert_eq!(rep.first_residual_order, Some(1));
        }
    }
}
