use num_rational::BigRational;

use super::checks::antipode_both;
use super::structure::{twisted_antipode, twisted_coproduct, Generator};
use super::twist::{build_twist, ratio, Family, Twist};
use crate::ncalg::ops::{conjugate, flip, kappa_flip};
use crate::ncalg::Config;
use crate::report::Report;
use crate::{UElement, UTensor, Q};

/// `F^{*⊗*} = F^-1`.
pub fn check_unitary(f: &Twist, cfg: &Config) -> Report {
    let shift = cfg.dilatation_shift();
    Report::new("unitarity", f.label(), f.u(), f.order()).expect_equal(&conjugate(&f.element, shift), &f.inverse)
}

/// The chain of `*`-identities linking the `L` and `R` families at `u`:
/// `F_L^{*⊗*} = F_R^-1`, `[Delta_L(Z)]^{*⊗*} = Delta_R(Z*)` and
/// `[S_{L,u}(Z)]* = S_{R,1-u}(Z*)|_{-kappa}`.
pub fn check_star_structures(u: &BigRational, cfg: &Config) -> Vec<Report> {
    let shift = cfg.dilatation_shift();
    let build = |fam, u: &BigRational| build_twist(fam, Some(u), cfg).expect("valid configuration");
    let fl = build(Family::L, u);
    let fr = build(Family::R, u);
    let fr_dual = build(Family::R, &(ratio(1, 1) - u));

    let twist = Report::new("star-twist-l-r", "L/R", Some(u), cfg.order)
        .expect_equal(&conjugate(&fl.element, shift), &fr.inverse);
    let mut coproducts = Report::new("star-coproduct-l-r", "L/R", Some(u), cfg.order);
    let mut antipodes = Report::new("star-antipode-l-r", "L/R", Some(u), cfg.order);
    for z in Generator::all(cfg.dim) {
        let (x, x_star) = (z.element(cfg), z.star(cfg));
        coproducts = coproducts.expect_equal(
            &conjugate(&twisted_coproduct(&fl, &x), shift),
            &twisted_coproduct(&fr, &x_star),
        );
        antipodes = antipodes.expect_equal(
            &conjugate(&twisted_antipode(&fl, &x), shift),
            &kappa_flip(&twisted_antipode(&fr_dual, &x_star)),
        );
    }
    vec![twist, coproducts, antipodes]
}

/// `(S ⊗ S)(F^{*⊗*})`.
pub fn majid_lhs(f: &Twist, cfg: &Config) -> UTensor {
    antipode_both(&conjugate(&f.element, cfg.dilatation_shift()))
}

/// The Majid condition `(S ⊗ S)(F^{*⊗*}) = F^tau`; a failure reports the
/// lowest order of the residual.
pub fn check_majid(f: &Twist, cfg: &Config) -> Report {
    Report::new("majid", f.label(), f.u(), f.order()).expect_equal(&majid_lhs(f, cfg), &flip(&f.element))
}

/// The Majid condition holds exactly when `u = 1/2`.
pub fn check_majid_selectivity(f: &Twist, cfg: &Config) -> Report {
    let raw = check_majid(f, cfg);
    let half = f.u() == Some(&ratio(1, 2));
    let mut rep = Report::new("majid-selectivity", f.label(), f.u(), f.order()).expect(raw.passed() == half);
    rep.first_residual_order = raw.first_residual_order;
    rep.max_terms = raw.max_terms;
    rep
}

/// `(S ⊗ S)(F^{*⊗*})` equals `F|_{-kappa}` for every `u`.
pub fn check_majid_kappa_flip(f: &Twist, cfg: &Config) -> Report {
    Report::new("majid-kappa-flip", f.label(), f.u(), f.order())
        .expect_equal(&majid_lhs(f, cfg), &kappa_flip(&f.element))
}

/// Images `X^dagger = -S^F(X*)` of the generators `P_0, ..., P_{n-1}, D`.
pub fn dagger_images(f: &Twist, cfg: &Config) -> Vec<UElement> {
    Generator::all(cfg.dim)
        .into_iter()
        .map(|z| -twisted_antipode(f, &z.star(cfg)))
        .collect()
}

/// Extends generator images to an antilinear anti-homomorphism:
/// `(c P^a D^b)^dagger = conj(c) (D^dagger)^b (P^dagger)^a`.
pub fn dagger_extend(x: &UElement, images: &[UElement]) -> UElement {
    let dim = x.dim();
    let mut out = UElement::zero(dim, x.order());
    for (g, [m], c) in x.iter() {
        let mut term = UElement::scalar(dim, x.order(), crate::ncalg::Coefficient::conj(c)).kappa_shift(g);
        for _ in 0..m.d {
            term = &term * &images[dim];
        }
        for (mu, &e) in m.p.iter().enumerate() {
            for _ in 0..e {
                term = &term * &images[mu];
            }
        }
        out = &out + &term;
    }
    out
}

fn words(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| (0..alphabet).map(move |a| w.iter().copied().chain([a]).collect()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// The dagger `X -> -S^F(X*)` is an involution compatible with the defining
/// relations, checked on every word of length at most `max_len` in the
/// generators.
pub fn check_majid_dagger(f: &Twist, cfg: &Config, max_len: usize) -> Report {
    let images = dagger_images(f, cfg);
    let gens: Vec<UElement> = Generator::all(cfg.dim).iter().map(|z| z.element(cfg)).collect();
    let d = cfg.dim;
    let mut rep = Report::new("majid-dagger", f.label(), f.u(), f.order());
    // [P_mu, D] = P_mu  =>  D^dagger P_mu^dagger - P_mu^dagger D^dagger = P_mu^dagger
    for mu in 0..d {
        let lhs = images[d].commutator(&images[mu]);
        rep = rep.expect_equal(&lhs, &images[mu]);
        for nu in 0..d {
            rep = rep.expect_equal(&images[mu].commutator(&images[nu]), &UElement::zero(d, f.order()));
        }
    }
    for w in words(d + 1, max_len) {
        let word = w.iter().fold(UElement::one(d, f.order()), |acc, &i| &acc * &gens[i]);
        let once = dagger_extend(&word, &images);
        rep = rep.expect_equal(&dagger_extend(&once, &images), &word);
    }
    rep
}

/// `D^dagger = -D + (P/2kappa)(1 + P/2kappa)^-1` at `u = 1/2`.
pub fn expected_dilatation_dagger(cfg: &Config) -> UElement {
    use super::twist::p_over_kappa;
    use crate::ncalg::analytic;
    let half_p = p_over_kappa(cfg).scale(&Q::real(ratio(1, 2)));
    let inv = analytic::inv1p(&half_p).expect("grade >= 1");
    &(&half_p * &inv) - &cfg.dilatation()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dilatation_dagger_at_half() {
        let cfg = Config::timelike(2, 5).unwrap();
        let f = build_twist(Family::L, Some(&ratio(1, 2)), &cfg).unwrap();
        let images = dagger_images(&f, &cfg);
        assert_eq!(images[2], expected_dilatation_dagger(&cfg));
        assert_eq!(images[0], cfg.momentum(0));
    }

    #[test]
    fn majid_fails_away_from_half() {
        let cfg = Config::timelike(2, 4).unwrap();
        let f = build_twist(Family::L, Some(&ratio(1, 4)), &cfg).unwrap();
        let rep = check_majid(&f, &cfg);
        assert!(!rep.passed());
        assert_eq!(rep.first_residual_order, Some(1));
        assert!(check_majid_kappa_flip(&f, &cfg).passed());
    }
}
