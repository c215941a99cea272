use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use super::twist::{build_twist, omega_deviation, p_over_kappa, rational, ratio, Family, Twist};
use crate::ncalg::ops::{antipode, coproduct, tensor};
use crate::ncalg::{analytic, AlgebraError, Config};
use crate::{UElement, UTensor, Q};

/// A generator of `g`: a momentum `P_mu` or the dilatation `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Momentum(usize),
    Dilatation,
}

impl Generator {
    pub fn all(dim: usize) -> Vec<Generator> {
        (0..dim).map(Generator::Momentum).chain([Generator::Dilatation]).collect()
    }

    pub fn element(self, cfg: &Config) -> UElement {
        match self {
            Generator::Momentum(mu) => cfg.momentum(mu),
            Generator::Dilatation => cfg.dilatation(),
        }
    }

    /// `Z*` under the configured conjugation.
    pub fn star(self, cfg: &Config) -> UElement {
        match self {
            Generator::Momentum(mu) => cfg.momentum(mu),
            Generator::Dilatation => {
                let shift = UElement::scalar(cfg.dim, cfg.order, Q::from(cfg.dilatation_shift()));
                &shift - &cfg.dilatation::<Q>()
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Momentum(mu) => write!(f, "P{mu}"),
            Generator::Dilatation => f.write_str("D"),
        }
    }
}

impl FromStr for Generator {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "D" {
            return Ok(Generator::Dilatation);
        }
        s.strip_prefix('P')
            .and_then(|i| i.parse().ok())
            .map(Generator::Momentum)
            .ok_or_else(|| AlgebraError::Parse(format!("unknown generator `{s}`")))
    }
}

/// `Delta^F(X) = F Delta(X) F^-1`.
pub fn twisted_coproduct(f: &Twist, x: &UElement) -> UTensor {
    &(&f.element * &coproduct(&x.with_order(f.order()))) * &f.inverse
}

/// `S^F(X) = mu((1 ⊗ S)F) S(X) mu((S ⊗ 1)F^-1)`.
pub fn twisted_antipode(f: &Twist, x: &UElement) -> UElement {
    let (left, right) = f.antipode_factors();
    twisted_antipode_with(&left, &right, x)
}

pub(crate) fn twisted_antipode_with(left: &UElement, right: &UElement, x: &UElement) -> UElement {
    &(left * &antipode(&x.with_order(left.order()))) * right
}

/// Coproduct and antipode of every generator.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub generators: Vec<Generator>,
    pub coproducts: Vec<UTensor>,
    pub antipodes: Vec<UElement>,
}

impl HopfData {
    pub fn from_twist(f: &Twist, cfg: &Config) -> HopfData {
        let generators = Generator::all(cfg.dim);
        let (left, right) = f.antipode_factors();
        let coproducts = generators.iter().map(|z| twisted_coproduct(f, &z.element(cfg))).collect();
        let antipodes = generators
            .iter()
            .map(|z| twisted_antipode_with(&left, &right, &z.element(cfg)))
            .collect();
        HopfData { generators, coproducts, antipodes }
    }

    pub fn coproduct(&self, z: Generator) -> &UTensor {
        &self.coproducts[self.index(z)]
    }

    pub fn antipode(&self, z: Generator) -> &UElement {
        &self.antipodes[self.index(z)]
    }

    fn index(&self, z: Generator) -> usize {
        self.generators.iter().position(|g| *g == z).expect("generator of this dimension")
    }
}

/// The rational functions of `P/kappa` entering the closed forms.
struct Shapes {
    one: UElement,
    p: UElement,
    u: BigRational,
}

impl Shapes {
    fn new(cfg: &Config, u: &BigRational) -> Self {
        Shapes { one: cfg.one(), p: p_over_kappa(cfg), u: u.clone() }
    }

    /// `1 + c P/kappa`.
    fn linear(&self, c: &BigRational) -> UElement {
        &self.one + &self.p.scale(&rational(c))
    }

    fn inv(&self, x: &UElement) -> UElement {
        analytic::inverse(x).expect("unit leading term")
    }

    /// `1 + u P/kappa`.
    fn plus_u(&self) -> UElement {
        self.linear(&self.u)
    }

    /// `1 - (1-u) P/kappa`.
    fn minus_one_minus_u(&self) -> UElement {
        self.linear(&(&self.u - BigRational::one()))
    }

    /// `1 - (1-2u) P/kappa`.
    fn minus_one_minus_2u(&self) -> UElement {
        self.linear(&(&self.u * ratio(2, 1) - BigRational::one()))
    }

    fn sqrt(&self, x: &UElement) -> UElement {
        analytic::sqrt1p(&analytic::minus_one(x)).expect("unit leading term")
    }
}

/// Expands the rational and square-root closed forms of `Delta^F(Z)` for a
/// family at parameter `u` (`F0` and `F1` are `L` at `u = 0` and `R` at
/// `u = 1`).
pub fn closed_form_coproduct(
    family: Family,
    u: Option<&BigRational>,
    z: Generator,
    cfg: &Config,
) -> Result<UTensor, AlgebraError> {
    let (family, u) = resolve(family, u)?;
    let s = Shapes::new(cfg, &u);
    let om_dev = omega_deviation(cfg, &u);
    let omega = analytic::one_plus(&om_dev);
    let omega_inv = analytic::inv1p(&om_dev)?;
    Ok(match z {
        Generator::Momentum(mu) => {
            if mu >= cfg.dim {
                return Err(AlgebraError::Unsupported(format!("momentum index {mu}")));
            }
            let p_mu = cfg.momentum::<Q>(mu);
            let numerator = &tensor(&p_mu, &s.plus_u()) + &tensor(&s.minus_one_minus_u(), &p_mu);
            &numerator * &omega_inv
        }
        Generator::Dilatation => {
            let d = cfg.dilatation::<Q>();
            let bracket = &tensor(&d, &s.inv(&s.plus_u())) + &tensor(&s.inv(&s.minus_one_minus_u()), &d);
            match family {
                Family::L => &bracket * &omega,
                Family::R => &omega * &bracket,
                _ => {
                    let root = analytic::sqrt1p(&om_dev)?;
                    &(&root * &bracket) * &root
                }
            }
        }
    })
}

/// Closed form of `S^F(Z)`.
pub fn closed_form_antipode(
    family: Family,
    u: Option<&BigRational>,
    z: Generator,
    cfg: &Config,
) -> Result<UElement, AlgebraError> {
    let (family, u) = resolve(family, u)?;
    let s = Shapes::new(cfg, &u);
    let a = s.minus_one_minus_2u();
    let b = s.plus_u();
    let c = s.minus_one_minus_u();
    Ok(match z {
        Generator::Momentum(mu) => {
            if mu >= cfg.dim {
                return Err(AlgebraError::Unsupported(format!("momentum index {mu}")));
            }
            -(&cfg.momentum::<Q>(mu) * &s.inv(&a))
        }
        Generator::Dilatation => {
            let d = cfg.dilatation::<Q>();
            let (left, right) = match family {
                Family::L => (&a * &s.inv(&b), b),
                Family::R => (c.clone(), &a * &s.inv(&c)),
                _ => (
                    s.sqrt(&(&(&c * &s.inv(&b)) * &a)),
                    s.sqrt(&(&(&b * &s.inv(&c)) * &a)),
                ),
            };
            -(&(&left * &d) * &right)
        }
    })
}

fn resolve(family: Family, u: Option<&BigRational>) -> Result<(Family, BigRational), AlgebraError> {
    match family {
        Family::F0 => Ok((Family::L, ratio(0, 1))),
        Family::F1 => Ok((Family::R, ratio(1, 1))),
        _ => u.cloned().map(|u| (family, u)).ok_or(AlgebraError::MissingParameter(family.name())),
    }
}

/// `Delta^F` and `S^F` for one family, computed both ways.
pub fn twisted_and_closed(
    family: Family,
    u: Option<&BigRational>,
    cfg: &Config,
) -> Result<(HopfData, HopfData), AlgebraError> {
    let f = build_twist(family, u, cfg)?;
    let twisted = HopfData::from_twist(&f, cfg);
    let generators = Generator::all(cfg.dim);
    let coproducts = generators
        .iter()
        .map(|z| closed_form_coproduct(family, u, *z, cfg))
        .collect::<Result<_, _>>()?;
    let antipodes = generators
        .iter()
        .map(|z| closed_form_antipode(family, u, *z, cfg))
        .collect::<Result<_, _>>()?;
    Ok((twisted, HopfData { generators, coproducts, antipodes }))
}
