use num_rational::BigRational;

use super::twist::{build_twist, omega_deviation, Family, Twist};
use crate::ncalg::ops::{embed, flip};
use crate::ncalg::{analytic, Config};
use crate::report::Report;
use crate::{UTensor, UTensor3};

/// `R = F^tau F^-1` and its `1/kappa` coefficient.
#[derive(Clone, Debug)]
pub struct RMatrix {
    pub element: UTensor,
    pub classical_part: UTensor,
}

pub fn r_matrix(f: &Twist) -> RMatrix {
    let element = &flip(&f.element) * &f.inverse;
    let classical_part = element.grade_part(1);
    RMatrix { element, classical_part }
}

/// `kappa^-1 (D ⊗ P - P ⊗ D)`.
pub fn expected_classical_part(cfg: &Config) -> UTensor {
    use super::twist::p_over_kappa;
    use crate::ncalg::ops::tensor;
    let p = p_over_kappa(cfg);
    let d = cfg.dilatation();
    &tensor(&d, &p) - &tensor(&p, &d)
}

fn legs(t: &UTensor) -> (UTensor3, UTensor3, UTensor3) {
    (embed(t, [0, 1]), embed(t, [0, 2]), embed(t, [1, 2]))
}

/// `R12 R13 R23 = R23 R13 R12` in the triple tensor power.
pub fn check_qybe(r: &RMatrix, triple_order: u32, family: &str, u: Option<&BigRational>) -> Report {
    let (r12, r13, r23) = legs(&r.element.truncated(triple_order));
    let lhs = &(&r12 * &r13) * &r23;
    let rhs = &(&r23 * &r13) * &r12;
    Report::new("qybe", family, u, triple_order).expect_equal(&lhs, &rhs)
}

/// `[r12, r13] + [r12, r23] + [r13, r23] = 0`.
pub fn cybe_residual(r: &UTensor) -> UTensor3 {
    let (r12, r13, r23) = legs(r);
    &(&r12.commutator(&r13) + &r12.commutator(&r23)) + &r13.commutator(&r23)
}

pub fn check_cybe(r: &UTensor, family: &str, u: Option<&BigRational>) -> Report {
    let residual = cybe_residual(r);
    let zero = UTensor3::zero(r.dim(), r.order());
    Report::new("cybe", family, u, r.order()).expect_equal(&residual, &zero)
}

/// Classical part equals `kappa^-1 (D ⊗ P - P ⊗ D)`, is flip-antisymmetric,
/// and `R` starts with the unit.
pub fn check_classical_part(r: &RMatrix, cfg: &Config, family: &str, u: Option<&BigRational>) -> Report {
    let cp = &r.classical_part;
    Report::new("r-classical-part", family, u, cfg.order)
        .expect_equal(cp, &expected_classical_part(cfg))
        .expect_equal(&flip(cp), &-cp)
        .expect(r.element.grade_part(0).is_one())
}

/// `R_L = Omega^-1 R_R Omega` and `R_LR = sqrt(Omega) R_L sqrt(Omega)^-1`.
pub fn check_r_relations(u: &BigRational, cfg: &Config) -> Report {
    let build = |fam| build_twist(fam, Some(u), cfg).expect("valid configuration");
    let (rl, rr, rlr) = (r_matrix(&build(Family::L)), r_matrix(&build(Family::R)), r_matrix(&build(Family::LR)));
    let dev = omega_deviation(cfg, u);
    let omega = analytic::one_plus(&dev);
    let omega_inv = analytic::inv1p(&dev).expect("grade >= 1");
    let root = analytic::sqrt1p(&dev).expect("grade >= 1");
    let root_inv = analytic::inverse(&root).expect("unit leading term");
    let lhs1 = &(&omega_inv * &rr.element) * &omega;
    let lhs2 = &(&root * &rl.element) * &root_inv;
    Report::new("r-relations", "L/R/LR", Some(u), cfg.order)
        .expect_equal(&rl.element, &lhs1)
        .expect_equal(&rlr.element, &lhs2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::twist::ratio;

    #[test]
    fn f0_classical_part() {
        let cfg = Config::timelike(2, 3).unwrap();
        let r = r_matrix(&build_twist(Family::F0, None, &cfg).unwrap());
        assert_eq!(r.classical_part, expected_classical_part(&cfg));
    }

    #[test]
    fn cybe_of_jordanian_r() {
        let cfg = Config::timelike(2, 2).unwrap();
        assert!(check_cybe(&expected_classical_part(&cfg), "F0", None).passed());
    }

    #[test]
    fn r_relations_quarter() {
        let cfg = Config::timelike(2, 4).unwrap();
        assert!(check_r_relations(&ratio(1, 4), &cfg).passed());
    }
}
