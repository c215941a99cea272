use num_rational::BigRational;
use num_traits::One;

use super::structure::{twisted_and_closed, twisted_antipode_with, twisted_coproduct, Generator, HopfData};
use super::twist::{
    build_twist, coboundary_conjugate, coboundary_element, omega_deviation, p_over_kappa, rational, ratio,
    Family, Twist,
};
use crate::ncalg::ops::{
    antipode_on_leg, counit, counit_on_leg, coproduct_on_leg, embed, flip, map_leg, multiply_legs, tensor,
};
use crate::ncalg::{analytic, Config};
use crate::report::Report;
use crate::{UElement, UTensor, UTensor3, Q};

fn label(f: &Twist) -> (String, Option<BigRational>) {
    (f.label(), f.u().cloned())
}

/// `F F^-1 = F^-1 F = 1 ⊗ 1`.
pub fn check_inverse(f: &Twist) -> Report {
    let (fam, u) = label(f);
    let one = UTensor::one(f.dim(), f.order());
    Report::new("twist-inverse", fam, u.as_ref(), f.order())
        .expect_equal(&(&f.element * &f.inverse), &one)
        .expect_equal(&(&f.inverse * &f.element), &one)
}

/// `(eps ⊗ id)F = (id ⊗ eps)F = 1`.
pub fn check_normalization(f: &Twist) -> Report {
    let (fam, u) = label(f);
    let one = UElement::one(f.dim(), f.order());
    let left: UElement = counit_on_leg(&f.element, 0);
    let right: UElement = counit_on_leg(&f.element, 1);
    Report::new("normalization", fam, u.as_ref(), f.order())
        .expect_equal(&left, &one)
        .expect_equal(&right, &one)
}

/// The two sides of the 2-cocycle condition
/// `(F ⊗ 1)(Delta ⊗ id)F = (1 ⊗ F)(id ⊗ Delta)F`.
pub fn cocycle_sides(t: &UTensor, triple_order: u32) -> (UTensor3, UTensor3) {
    let t = t.truncated(triple_order);
    let f12: UTensor3 = embed(&t, [0, 1]);
    let f23: UTensor3 = embed(&t, [1, 2]);
    let lhs = &f12 * &coproduct_on_leg::<_, 2, 3>(&t, 0);
    let rhs = &f23 * &coproduct_on_leg::<_, 2, 3>(&t, 1);
    (lhs, rhs)
}

pub fn check_cocycle_tensor(t: &UTensor, triple_order: u32, family: &str, u: Option<&BigRational>) -> Report {
    let (lhs, rhs) = cocycle_sides(t, triple_order);
    Report::new("cocycle", family, u, triple_order).expect_equal(&lhs, &rhs)
}

pub fn check_cocycle(f: &Twist, triple_order: u32) -> Report {
    let (fam, u) = label(f);
    check_cocycle_tensor(&f.element, triple_order, &fam, u.as_ref())
}

/// Coassociativity, counit and antipode axioms of `(Delta^F, eps, S^F)` on
/// every generator.
pub fn check_hopf_axioms(f: &Twist, cfg: &Config) -> Vec<Report> {
    let (fam, u) = label(f);
    let u = u.as_ref();
    let data = HopfData::from_twist(f, cfg);
    let (sl, sr) = f.antipode_factors();
    let triple = cfg.triple_order;
    let ft = f.truncated(triple);

    let mut coassoc = Report::new("coassociativity", fam.clone(), u, triple);
    let mut counit_rep = Report::new("counit-axiom", fam.clone(), u, cfg.order);
    let mut antipode_rep = Report::new("antipode-axiom", fam.clone(), u, cfg.order);
    for (z, delta) in data.generators.iter().zip(&data.coproducts) {
        let z_el = z.element(cfg);
        let dt = delta.truncated(triple);
        let f12: UTensor3 = embed(&ft.element, [0, 1]);
        let f12_inv: UTensor3 = embed(&ft.inverse, [0, 1]);
        let f23: UTensor3 = embed(&ft.element, [1, 2]);
        let f23_inv: UTensor3 = embed(&ft.inverse, [1, 2]);
        let left = &(&f12 * &coproduct_on_leg::<_, 2, 3>(&dt, 0)) * &f12_inv;
        let right = &(&f23 * &coproduct_on_leg::<_, 2, 3>(&dt, 1)) * &f23_inv;
        coassoc = coassoc.expect_equal(&left, &right);

        let l: UElement = counit_on_leg(delta, 0);
        let r: UElement = counit_on_leg(delta, 1);
        counit_rep = counit_rep.expect_equal(&l, &z_el).expect_equal(&r, &z_el);

        let eps = UElement::scalar(cfg.dim, cfg.order, counit(&z_el)[0].clone());
        let s_left = map_leg(delta, 0, |m| {
            twisted_antipode_with(&sl, &sr, &UElement::term(cfg.dim, cfg.order, 0, [m.clone()], Q::from(1)))
        });
        let s_right = map_leg(delta, 1, |m| {
            twisted_antipode_with(&sl, &sr, &UElement::term(cfg.dim, cfg.order, 0, [m.clone()], Q::from(1)))
        });
        antipode_rep = antipode_rep
            .expect_equal(&multiply_legs(&s_left), &eps)
            .expect_equal(&multiply_legs(&s_right), &eps);
    }
    vec![coassoc, counit_rep, antipode_rep]
}

/// Twist conjugation against the closed forms for every generator.
pub fn check_closed_forms(family: Family, u: Option<&BigRational>, cfg: &Config) -> Report {
    let u = if family.is_parametric() { u } else { None };
    let (twisted, closed) = twisted_and_closed(family, u, cfg).expect("valid configuration");
    let mut rep = Report::new("closed-form-hopf", family.name(), u, cfg.order);
    for i in 0..twisted.generators.len() {
        rep = rep
            .expect_equal(&twisted.coproducts[i], &closed.coproducts[i])
            .expect_equal(&twisted.antipodes[i], &closed.antipodes[i]);
    }
    rep
}

/// Momenta coproducts and antipodes agree between `L` and `R`; the
/// dilatation coproducts differ exactly when `u(1-u) != 0`.
pub fn check_left_right(u: &BigRational, cfg: &Config) -> Vec<Report> {
    let fl = build_twist(Family::L, Some(u), cfg).expect("valid configuration");
    let fr = build_twist(Family::R, Some(u), cfg).expect("valid configuration");
    let (dl, dr) = (HopfData::from_twist(&fl, cfg), HopfData::from_twist(&fr, cfg));
    let mut same = Report::new("lr-momenta-equal", "L/R", Some(u), cfg.order);
    for mu in 0..cfg.dim {
        let z = Generator::Momentum(mu);
        same = same
            .expect_equal(dl.coproduct(z), dr.coproduct(z))
            .expect_equal(dl.antipode(z), dr.antipode(z));
    }
    let degenerate = (u * (BigRational::one() - u)) == ratio(0, 1);
    let z = Generator::Dilatation;
    let diff = Report::new("lr-dilatation-differs", "L/R", Some(u), cfg.order);
    let diff = if degenerate {
        diff.expect_equal(dl.coproduct(z), dr.coproduct(z))
            .with_detail("u(1-u) = 0, coproducts coincide")
    } else {
        diff.expect_different(dl.coproduct(z), dr.coproduct(z))
    };
    vec![same, diff]
}

/// `F_R^-1 = F_L^-1 Omega^-1`, `F_LR^-1 = F_L^-1 Omega^-1/2 = F_R^-1 Omega^1/2`
/// and `exp((u/kappa) PD) exp(-(u/kappa) DP) = 1 + (u/kappa) P`.
pub fn check_family_relation(u: &BigRational, cfg: &Config) -> Vec<Report> {
    let build = |fam| build_twist(fam, Some(u), cfg).expect("valid configuration");
    let (fl, fr, flr) = (build(Family::L), build(Family::R), build(Family::LR));
    let dev = omega_deviation(cfg, u);
    let omega_inv = analytic::inv1p(&dev).expect("grade >= 1");
    let root = analytic::sqrt1p(&dev).expect("grade >= 1");
    let root_inv = analytic::inverse(&root).expect("unit leading term");
    let lr = Report::new("family-relation-lr", "L/R", Some(u), cfg.order)
        .expect_equal(&fr.inverse, &(&fl.inverse * &omega_inv));
    let sqrt = Report::new("family-relation-sqrt", "LR", Some(u), cfg.order)
        .expect_equal(&flr.inverse, &(&fl.inverse * &root_inv))
        .expect_equal(&flr.inverse, &(&fr.inverse * &root));

    let p = p_over_kappa(cfg);
    let d = cfg.dilatation::<Q>();
    let cu = rational(u);
    let lhs = &analytic::exp(&(&p * &d).scale(&cu)).expect("grade >= 1")
        * &analytic::exp(&-(&d * &p).scale(&cu)).expect("grade >= 1");
    let rhs = analytic::one_plus(&p.scale(&cu));
    let expo = Report::new("exponential-identity", "L/R", Some(u), cfg.order).expect_equal(&lhs, &rhs);
    vec![lr, sqrt, expo]
}

/// `(alpha ⊗ alpha)(Delta^{F_omega}(alpha^-1(Z))) = Delta^F(Z)` with
/// `alpha(Z) = omega Z omega^-1`, for `F = F0` and the coboundary of the
/// family, plus agreement of the coboundary construction with the direct one.
pub fn check_gauge_equivalence(family: Family, u: &BigRational, cfg: &Config) -> Report {
    let f0 = build_twist(Family::F0, None, cfg).expect("valid configuration");
    let omega = coboundary_element(cfg, family, u);
    let omega_inv = analytic::inverse(&omega).expect("unit leading term");
    let f_omega = coboundary_conjugate(&f0, &omega).expect("invertible");
    let direct = build_twist(family, Some(u), cfg).expect("valid configuration");
    let mut rep = Report::new("gauge-equivalence", family.name(), Some(u), cfg.order)
        .expect_equal(&f_omega.element, &direct.element)
        .expect_equal(&f_omega.inverse, &direct.inverse);
    let ww = tensor(&omega, &omega);
    let ww_inv = tensor(&omega_inv, &omega_inv);
    for z in Generator::all(cfg.dim) {
        let z = z.element(cfg);
        let pulled = &(&omega_inv * &z) * &omega;
        let lhs = &(&ww * &twisted_coproduct(&f_omega, &pulled)) * &ww_inv;
        rep = rep.expect_equal(&lhs, &twisted_coproduct(&f0, &z));
    }
    rep
}

/// The `1/kappa` coefficient of `F` equals its flip-antisymmetric part.
pub fn is_r_symmetric(f: &Twist) -> bool {
    let first = f.element.grade_part(1);
    first == -flip(&first)
}

/// Passes when the twist is `r`-symmetric exactly at `u = 1/2`.
pub fn check_r_symmetry(f: &Twist) -> Report {
    let (fam, u) = label(f);
    let half = u.as_ref() == Some(&ratio(1, 2));
    let sym = is_r_symmetric(f);
    let mut rep = Report::new("r-symmetry", fam, u.as_ref(), f.order())
        .expect(sym == half)
        .with_detail(if sym { "r-symmetric" } else { "not r-symmetric" });
    rep.max_terms = f.element.grade_part(1).len();
    rep
}

/// The undeformed antipode on both legs.
pub fn antipode_both(t: &UTensor) -> UTensor {
    antipode_on_leg(&antipode_on_leg(t, 0), 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ad_hoc_tensor_fails_cocycle_at_order_two() {
        let cfg = Config::timelike(2, 4).unwrap();
        let p = cfg.p_along_v::<Q>();
        let t = &UTensor::one(2, 4) + &tensor(&p, &p).kappa_shift(1);
        let rep = check_cocycle_tensor(&t, 4, "ad-hoc", None);
        assert!(!rep.passed());
        assert_eq!(rep.first_residual_order, Some(2));
    }

    #[test]
    fn f0_passes_cocycle() {
        let cfg = Config::timelike(2, 4).unwrap();
        let f = build_twist(Family::F0, None, &cfg).unwrap();
        assert!(check_cocycle(&f, 4).passed());
        assert!(check_normalization(&f).passed());
    }

    #[test]
    fn exponential_identity_at_order_three() {
        let cfg = Config::timelike(2, 3).unwrap();
        let reps = check_family_relation(&ratio(1, 3), &cfg);
        assert!(reps.iter().all(Report::passed), "{reps:?}");
    }
}
