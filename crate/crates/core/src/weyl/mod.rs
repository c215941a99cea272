//! Noncommutative coordinates `x̂^mu` realized in the Weyl-dilatation
//! algebra, obtained from a twist by acting with its inverse on `x^mu`.

pub mod algebra;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use algebra::{coordinate, embed_u, is_dilatation_free, substitute_dilatation, WMonomial, WSeries};

use crate::hopf::twist::{p_over_kappa, rational};
use crate::hopf::{build_twist, Family, Origin, Twist};
use crate::ncalg::{AlgebraError, Config, UMonomial};
use crate::report::Report;
use crate::{UElement, WElement, Q};

/// Action of `P^a D^b` on `x^mu`: `D` fixes it, `P_nu` maps it to
/// `-i delta`, anything of higher `P`-degree kills it.
fn act_on_coordinate(m: &UMonomial, mu: usize, dim: usize, order: u32) -> WElement {
    match m.p_degree() {
        0 => coordinate(dim, order, mu),
        1 if m.p[mu] == 1 => WElement::scalar(dim, order, -Q::i()),
        _ => WElement::zero(dim, order),
    }
}

/// `sum (f̄1 ▷ x^mu) f̄2` over `F^-1 = sum f̄1 ⊗ f̄2`, at the twist's own order.
pub fn xhat_raw(f: &Twist, mu: usize) -> WElement {
    let (dim, order) = (f.dim(), f.order());
    let mut out = WElement::zero(dim, order);
    for (g, [a, b], c) in f.inverse.iter() {
        let left = act_on_coordinate(a, mu, dim, order);
        if left.is_zero() {
            continue;
        }
        let right = WElement::term(dim, order, g, WMonomial::from_u(b), c.clone());
        out = &out + &(&left * &right);
    }
    out
}

/// `x̂^mu` from a family twist, rebuilt one order higher to make sure the
/// result has stopped changing.
pub fn xhat_from_twist(f: &Twist, mu: usize, cfg: &Config) -> Result<WElement, AlgebraError> {
    let Origin::Family { family, u } = &f.origin else {
        return Err(AlgebraError::Unsupported("stabilization needs a family twist".into()));
    };
    if mu >= f.dim() {
        return Err(AlgebraError::DimensionMismatch { left: mu + 1, right: f.dim() });
    }
    let lower = xhat_raw(f, mu);
    let upper_cfg = cfg.with_order(f.order() + 1)?;
    let upper = xhat_raw(&build_twist(*family, u.as_ref(), &upper_cfg)?, mu);
    if lower.same_terms(&upper) {
        Ok(lower)
    } else {
        Err(AlgebraError::NotStabilized { lower: f.order(), upper: f.order() + 1 })
    }
}

/// All coordinates `x̂^0 .. x̂^{n-1}` of a family twist.
pub fn xhats_from_twist(f: &Twist, cfg: &Config) -> Result<Vec<WElement>, AlgebraError> {
    (0..f.dim()).map(|mu| xhat_from_twist(f, mu, cfg)).collect()
}

/// The parameter value at which a family's realization is evaluated:
/// `F0` is `L` at `u = 0` and `F1` is `R` at `u = 1`.
fn resolve(family: Family, u: Option<&BigRational>) -> Result<(Family, BigRational), AlgebraError> {
    match family {
        Family::F0 => Ok((Family::L, BigRational::zero())),
        Family::F1 => Ok((Family::R, BigRational::one())),
        Family::L | Family::R => Ok((family, u.ok_or(AlgebraError::MissingParameter(family.name()))?.clone())),
        Family::LR => Err(AlgebraError::Unsupported("no closed-form realization for the LR family".into())),
    }
}

/// `(x^mu + (i/kappa) v^mu (1-u) D)(1 + u P/kappa)`, plus
/// `i u(1-u) kappa^-2 v^mu P` for the `R` family.
pub fn closed_form_xhat(family: Family, u: Option<&BigRational>, mu: usize, cfg: &Config) -> Result<WElement, AlgebraError> {
    let (family, u) = resolve(family, u)?;
    let (dim, order) = (cfg.dim, cfg.order);
    let one_minus_u = BigRational::one() - &u;
    let p = embed_u(&p_over_kappa(cfg));
    let d = embed_u(&cfg.dilatation::<Q>());
    let vi = Q::i() * rational(&cfg.v[mu]);
    let left = &coordinate(dim, order, mu) + &d.scale(&(vi.clone() * rational(&one_minus_u))).kappa_shift(1);
    let right = &WElement::one(dim, order) + &p.scale(&rational(&u));
    let mut out = &left * &right;
    if family == Family::R {
        out = &out + &p.scale(&(vi * rational(&(&u * &one_minus_u)))).kappa_shift(1);
    }
    Ok(out)
}

/// `x̂^mu = x^alpha phi_alpha^mu(P) + chi^mu(P)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    /// `phi[alpha][mu]`.
    pub phi: Vec<Vec<UElement>>,
    pub chi: Vec<UElement>,
}

impl Realization {
    /// Reads `phi` and `chi` off coordinates, after trading `D` for
    /// `i x^alpha P_alpha`.
    pub fn from_xhat(xhat: &[WElement]) -> Result<Self, AlgebraError> {
        let dim = xhat.len();
        let order = xhat.first().map_or(0, WElement::order);
        let mut phi = vec![vec![UElement::zero(dim, order); dim]; dim];
        let mut chi = vec![UElement::zero(dim, order); dim];
        for (mu, x) in xhat.iter().enumerate() {
            if x.dim() != dim {
                return Err(AlgebraError::DimensionMismatch { left: x.dim(), right: dim });
            }
            for (g, m, c) in substitute_dilatation(x).iter() {
                let key = [UMonomial { p: m.p.clone(), d: 0 }];
                match m.x_degree() {
                    0 => chi[mu].add_term(g, key, c.clone()),
                    1 => {
                        let alpha = m.x.iter().position(|&e| e == 1).expect("degree one");
                        phi[alpha][mu].add_term(g, key, c.clone());
                    }
                    _ => {
                        return Err(AlgebraError::Unsupported(
                            "coordinate is not linear in x after removing D".into(),
                        ))
                    }
                }
            }
        }
        Ok(Realization { phi, chi })
    }

    /// `phi_alpha^mu = (delta - ((1-u)/kappa) v^mu P_alpha)(1 + u P/kappa)`,
    /// with `chi^mu = i u(1-u) kappa^-2 v^mu P` for `R` and `chi = 0` for `L`.
    pub fn closed_form(family: Family, u: Option<&BigRational>, cfg: &Config) -> Result<Self, AlgebraError> {
        let (family, u) = resolve(family, u)?;
        let dim = cfg.dim;
        let one_minus_u = BigRational::one() - &u;
        let p = p_over_kappa(cfg);
        let right = &cfg.one::<Q>() + &p.scale(&rational(&u));
        let phi = (0..dim)
            .map(|alpha| {
                let p_alpha = cfg.momentum::<Q>(alpha).kappa_shift(1);
                (0..dim)
                    .map(|mu| {
                        let delta = if alpha == mu { cfg.one() } else { UElement::zero(dim, cfg.order) };
                        let shift = p_alpha.scale(&rational(&(&one_minus_u * &cfg.v[mu])));
                        &(&delta - &shift) * &right
                    })
                    .collect()
            })
            .collect();
        let chi = (0..dim)
            .map(|mu| match family {
                Family::R => p.scale(&(Q::i() * rational(&(&u * &one_minus_u * &cfg.v[mu])))).kappa_shift(1),
                _ => UElement::zero(dim, cfg.order),
            })
            .collect();
        Ok(Realization { phi, chi })
    }

    pub fn dim(&self) -> usize {
        self.chi.len()
    }

    /// The coordinates in the pure Weyl algebra, `D`-free.
    pub fn to_xhat(&self) -> Vec<WElement> {
        let dim = self.dim();
        (0..dim)
            .map(|mu| {
                let mut out = embed_u(&self.chi[mu]);
                for alpha in 0..dim {
                    let order = self.chi[mu].order();
                    out = &out + &(&coordinate(dim, order, alpha) * &embed_u(&self.phi[alpha][mu]));
                }
                out
            })
            .collect()
    }
}

/// The parameter entering `[P_mu, x̂^nu]` for a twist.
pub fn commutator_parameter(f: &Twist) -> Option<BigRational> {
    match f.family()? {
        Family::F0 => Some(BigRational::zero()),
        Family::F1 => Some(BigRational::one()),
        _ => f.u().cloned(),
    }
}

/// `[x̂^mu, x̂^nu] = (i/kappa)(v^mu x̂^nu - v^nu x̂^mu)`.
pub fn check_coordinate_closure(xhat: &[WElement], cfg: &Config, family: &str, u: Option<&BigRational>) -> Report {
    let mut rep = Report::new("xhat-kappa-minkowski", family, u, cfg.order);
    for mu in 0..xhat.len() {
        for nu in mu + 1..xhat.len() {
            let lhs = xhat[mu].commutator(&xhat[nu]);
            let rhs = (&xhat[nu].scale(&rational(&cfg.v[mu])) - &xhat[mu].scale(&rational(&cfg.v[nu])))
                .scale(&Q::i())
                .kappa_shift(1);
            rep = rep.expect_equal(&lhs, &rhs);
        }
    }
    rep
}

/// `[P_mu, x̂^nu] = (-i delta + (i/kappa) v^nu (1-u) P_mu)(1 + u P/kappa)`.
pub fn check_momentum_commutators(xhat: &[WElement], u: &BigRational, cfg: &Config, family: &str) -> Report {
    let dim = xhat.len();
    let order = cfg.order;
    let one_minus_u = BigRational::one() - u;
    let right = &WElement::one(dim, order) + &embed_u(&p_over_kappa(cfg)).scale(&rational(u));
    let mut rep = Report::new("xhat-momentum", family, Some(u), order);
    for mu in 0..dim {
        let p_mu = embed_u(&cfg.momentum::<Q>(mu));
        for (nu, x) in xhat.iter().enumerate() {
            let delta = if mu == nu { WElement::scalar(dim, order, -Q::i()) } else { WElement::zero(dim, order) };
            let shift = p_mu.scale(&(Q::i() * rational(&(&one_minus_u * &cfg.v[nu])))).kappa_shift(1);
            let rhs = &(&delta + &shift) * &right;
            rep = rep.expect_equal(&p_mu.commutator(x), &rhs);
        }
    }
    rep
}

/// Both commutator families for a realization at parameter `u`.
pub fn check_commutators(xhat: &[WElement], u: &BigRational, cfg: &Config, family: &str) -> Vec<Report> {
    vec![
        check_coordinate_closure(xhat, cfg, family, Some(u)),
        check_momentum_commutators(xhat, u, cfg, family),
    ]
}

/// `x̂_R - x̂_L = i u(1-u) kappa^-2 v^mu P`, with the two families giving
/// identical commutators.
pub fn check_left_right_realizations(u: &BigRational, cfg: &Config) -> Result<Vec<Report>, AlgebraError> {
    let xl = xhats_from_twist(&build_twist(Family::L, Some(u), cfg)?, cfg)?;
    let xr = xhats_from_twist(&build_twist(Family::R, Some(u), cfg)?, cfg)?;
    let chi = Realization::closed_form(Family::R, Some(u), cfg)?.chi;
    let mut difference = Report::new("xhat-chi-difference", "L/R", Some(u), cfg.order);
    let mut same = Report::new("xhat-l-r-commutators", "L/R", Some(u), cfg.order);
    for mu in 0..cfg.dim {
        difference = difference.expect_equal(&(&xr[mu] - &xl[mu]), &embed_u(&chi[mu]));
        for nu in 0..cfg.dim {
            same = same.expect_equal(&xl[mu].commutator(&xl[nu]), &xr[mu].commutator(&xr[nu]));
            let p = embed_u(&cfg.momentum::<Q>(nu));
            same = same.expect_equal(&p.commutator(&xl[mu]), &p.commutator(&xr[mu]));
        }
    }
    Ok(vec![difference, same])
}

/// `[[a, b], c] + [[b, c], a] + [[c, a], b] = 0` for `(x̂^mu, x̂^nu, P_rho)`.
pub fn check_jacobi(xhat: &[WElement], cfg: &Config, family: &str, u: Option<&BigRational>) -> Report {
    let dim = xhat.len();
    let zero = WElement::zero(dim, cfg.order);
    let mut rep = Report::new("xhat-jacobi", family, u, cfg.order);
    for mu in 0..dim {
        for nu in 0..dim {
            for rho in 0..dim {
                let (a, b, c) = (&xhat[mu], &xhat[nu], &embed_u(&cfg.momentum::<Q>(rho)));
                let sum = &(&a.commutator(b).commutator(c) + &b.commutator(c).commutator(a))
                    + &c.commutator(a).commutator(b);
                rep = rep.expect_equal(&sum, &zero);
            }
        }
    }
    rep
}

/// `xhat_from_twist` against the closed form for every coordinate.
pub fn check_realization(family: Family, u: Option<&BigRational>, cfg: &Config) -> Report {
    let mut rep = Report::new("xhat-closed-form", family.name(), u, cfg.order);
    let f = match build_twist(family, u, cfg) {
        Ok(f) => f,
        Err(e) => return rep.expect(false).with_detail(e.to_string()),
    };
    for mu in 0..cfg.dim {
        match (xhat_from_twist(&f, mu, cfg), closed_form_xhat(family, u, mu, cfg)) {
            (Ok(lhs), Ok(rhs)) => rep = rep.expect_equal(&lhs, &rhs),
            (Err(e), _) | (_, Err(e)) => return rep.expect(false).with_detail(e.to_string()),
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::twist::ratio;

    #[test]
    fn f0_realization() {
        let cfg = Config::timelike(2, 4).unwrap();
        let f = build_twist(Family::F0, None, &cfg).unwrap();
        let x0 = xhat_from_twist(&f, 0, &cfg).unwrap();
        let d = embed_u(&cfg.dilatation::<Q>()).scale(&Q::i()).kappa_shift(1);
        assert_eq!(x0, &coordinate(2, 4, 0) + &d);
        assert_eq!(xhat_from_twist(&f, 1, &cfg).unwrap(), coordinate(2, 4, 1));
    }

    #[test]
    fn realization_round_trip() {
        let cfg = Config::timelike(2, 4).unwrap();
        let u = ratio(1, 3);
        let f = build_twist(Family::R, Some(&u), &cfg).unwrap();
        let xhat = xhats_from_twist(&f, &cfg).unwrap();
        let r = Realization::from_xhat(&xhat).unwrap();
        assert_eq!(r, Realization::closed_form(Family::R, Some(&u), &cfg).unwrap());
        let pure: Vec<_> = xhat.iter().map(substitute_dilatation).collect();
        assert_eq!(r.to_xhat(), pure);
    }

    #[test]
    fn coboundary_twists_are_not_stabilized() {
        let cfg = Config::timelike(1, 2).unwrap();
        let f = build_twist(Family::F0, None, &cfg).unwrap();
        let g = crate::hopf::coboundary_conjugate(&f, &cfg.one()).unwrap();
        assert!(matches!(xhat_from_twist(&g, 0, &cfg), Err(AlgebraError::Unsupported(_))));
    }
}
