use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::ncalg::ops::{coproduct, flip, kappa_flip, tensor};
use crate::ncalg::{analytic, AlgebraError, Config};
use crate::{UElement, UTensor, Q};

/// The twist families: the two Jordanian twists, the `u`-families obtained
/// from `F0` by the coboundaries `exp(-(u/kappa) DP)`, `exp(-(u/kappa) PD)`
/// and `exp(-(u/2kappa)(DP + PD))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    F0,
    F1,
    L,
    R,
    LR,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::F0, Family::F1, Family::L, Family::R, Family::LR];

    pub fn is_parametric(self) -> bool {
        matches!(self, Family::L | Family::R | Family::LR)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::F0 => "F0",
            Family::F1 => "F1",
            Family::L => "L",
            Family::R => "R",
            Family::LR => "LR",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "F0" => Ok(Family::F0),
            "F1" => Ok(Family::F1),
            "L" | "FL" => Ok(Family::L),
            "R" | "FR" => Ok(Family::R),
            "LR" | "FLR" => Ok(Family::LR),
            _ => Err(AlgebraError::Parse(format!("unknown twist family `{s}`"))),
        }
    }
}

/// Where a twist came from.
#[derive(Clone, Debug, PartialEq)]
pub enum Origin {
    Family { family: Family, u: Option<BigRational> },
    Coboundary { base: Box<Origin>, omega: UElement },
}

/// A twist `F` together with `F^-1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Twist {
    pub element: UTensor,
    pub inverse: UTensor,
    pub origin: Origin,
}

impl Twist {
    pub fn order(&self) -> u32 {
        self.element.order()
    }

    pub fn dim(&self) -> usize {
        self.element.dim()
    }

    pub fn family(&self) -> Option<Family> {
        match &self.origin {
            Origin::Family { family, .. } => Some(*family),
            Origin::Coboundary { .. } => None,
        }
    }

    pub fn u(&self) -> Option<&BigRational> {
        match &self.origin {
            Origin::Family { u, .. } => u.as_ref(),
            Origin::Coboundary { .. } => None,
        }
    }

    pub fn label(&self) -> String {
        match &self.origin {
            Origin::Family { family, .. } => family.to_string(),
            Origin::Coboundary { .. } => "coboundary".into(),
        }
    }

    pub fn truncated(&self, order: u32) -> Twist {
        Twist {
            element: self.element.truncated(order),
            inverse: self.inverse.truncated(order),
            origin: self.origin.clone(),
        }
    }

    /// `mu((1 ⊗ S)F)` and `mu((S ⊗ 1)F^-1)`, the two factors of the twisted
    /// antipode.
    pub fn antipode_factors(&self) -> (UElement, UElement) {
        use crate::ncalg::ops::{antipode_on_leg, multiply_legs};
        (
            multiply_legs(&antipode_on_leg(&self.element, 1)),
            multiply_legs(&antipode_on_leg(&self.inverse, 0)),
        )
    }
}

pub(crate) fn rational(c: &BigRational) -> Q {
    Q::real(c.clone())
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `P/kappa` with `P = v^alpha P_alpha`.
pub fn p_over_kappa(cfg: &Config) -> UElement {
    cfg.p_along_v::<Q>().kappa_shift(1)
}

/// `-ln(1 - P/kappa)`.
pub fn jordanian_log(cfg: &Config) -> UElement {
    let x = -p_over_kappa(cfg);
    -analytic::log1p(&x).expect("P/kappa has grade 1")
}

/// The generator `A` of the coboundary `omega = exp(-A)` of a `u`-family.
pub fn coboundary_generator(cfg: &Config, family: Family, u: &BigRational) -> UElement {
    let p = p_over_kappa(cfg);
    let d = cfg.dilatation::<Q>();
    let a = match family {
        Family::L => &d * &p,
        Family::R => &p * &d,
        Family::LR => (&(&d * &p) + &(&p * &d)).scale(&rational(&ratio(1, 2))),
        Family::F0 | Family::F1 => UElement::zero(cfg.dim, cfg.order),
    };
    a.scale(&rational(u))
}

/// `omega` with `F_{fam,u} = (omega^-1 ⊗ omega^-1) F0 Delta(omega)`.
pub fn coboundary_element(cfg: &Config, family: Family, u: &BigRational) -> UElement {
    analytic::exp(&-coboundary_generator(cfg, family, u)).expect("grade >= 1")
}

fn f0(cfg: &Config) -> (UTensor, UTensor) {
    let ld = tensor(&jordanian_log(cfg), &cfg.dilatation());
    let element = analytic::exp(&ld).expect("grade >= 1");
    let inverse = analytic::exp(&-ld).expect("grade >= 1");
    (element, inverse)
}

/// Builds a twist as the product of exponentials, with the inverse taken
/// factor by factor in reverse order.
pub fn build_twist(family: Family, u: Option<&BigRational>, cfg: &Config) -> Result<Twist, AlgebraError> {
    cfg.validate()?;
    let (f0, f0_inv) = f0(cfg);
    let (element, inverse) = match family {
        Family::F0 => (f0, f0_inv),
        Family::F1 => (kappa_flip(&flip(&f0)), kappa_flip(&flip(&f0_inv))),
        Family::L | Family::R | Family::LR => {
            let u = u.ok_or(AlgebraError::MissingParameter(family.name()))?;
            let a = coboundary_generator(cfg, family, u);
            let one = cfg.one::<Q>();
            let a_sum = &tensor(&a, &one) + &tensor(&one, &a);
            let a_delta = coproduct(&a);
            let exp = |x: &UTensor| analytic::exp(x).expect("grade >= 1");
            let element = &(&exp(&a_sum) * &f0) * &exp(&-&a_delta);
            let inverse = &(&exp(&a_delta) * &f0_inv) * &exp(&-&a_sum);
            (element, inverse)
        }
    };
    let u = if family.is_parametric() { u.cloned() } else { None };
    Ok(Twist { element, inverse, origin: Origin::Family { family, u } })
}

/// `F_omega = (omega^-1 ⊗ omega^-1) F Delta(omega)`.
pub fn coboundary_conjugate(f: &Twist, omega: &UElement) -> Result<Twist, AlgebraError> {
    let omega = omega.with_order(f.order());
    let omega_inv = analytic::inverse(&omega)?;
    let element = &(&tensor(&omega_inv, &omega_inv) * &f.element) * &coproduct(&omega);
    let inverse = &(&coproduct(&omega_inv) * &f.inverse) * &tensor(&omega, &omega);
    Ok(Twist {
        element,
        inverse,
        origin: Origin::Coboundary { base: Box::new(f.origin.clone()), omega },
    })
}

/// `Omega = 1 ⊗ 1 + u(1-u)/kappa^2 P ⊗ P` minus the unit, i.e. the
/// deviation fed to `inv1p` and `sqrt1p`.
pub fn omega_deviation(cfg: &Config, u: &BigRational) -> UTensor {
    let p = p_over_kappa(cfg);
    let w = u * (BigRational::one() - u);
    tensor(&p, &p).scale(&rational(&w))
}
