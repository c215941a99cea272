use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::coeff::Coefficient;
use super::error::AlgebraError;
use super::monomial::UMonomial;
use super::Element;

/// Which conjugation the dilatation gets: `D* = -D` (abstract Lie algebra)
/// or `D* = -D - n`, the variant compatible with the differential-operator
/// realization `D = x^mu d_mu` in `n` dimensions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum DilatationConjugation {
    #[default]
    Abstract,
    RealizationShifted,
}

/// Dimension, truncation and the deformation direction `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub dim: usize,
    pub order: u32,
    pub triple_order: u32,
    pub v: Vec<BigRational>,
    pub signature: Vec<i8>,
    pub conjugation: DilatationConjugation,
}

pub const DEFAULT_ORDER: u32 = 6;
pub const DEFAULT_TRIPLE_ORDER: u32 = 4;

fn mostly_plus(dim: usize) -> Vec<i8> {
    (0..dim).map(|i| if i == 0 { -1 } else { 1 }).collect()
}

impl Config {
    /// Validated configuration with the mostly-plus signature `(-,+,...,+)`.
    pub fn new(dim: usize, order: u32, v: Vec<BigRational>) -> Result<Self, AlgebraError> {
        let cfg = Self {
            dim,
            order,
            triple_order: DEFAULT_TRIPLE_ORDER.min(order),
            v,
            signature: mostly_plus(dim),
            conjugation: DilatationConjugation::Abstract,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// `v = (1, 0, ..., 0)`.
    pub fn timelike(dim: usize, order: u32) -> Result<Self, AlgebraError> {
        let mut v = vec![BigRational::zero(); dim];
        if let Some(v0) = v.first_mut() {
            *v0 = BigRational::one();
        }
        Self::new(dim, order, v)
    }

    pub fn with_order(&self, order: u32) -> Result<Self, AlgebraError> {
        let mut cfg = self.clone();
        cfg.order = order;
        cfg.triple_order = cfg.triple_order.min(order);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_triple_order(mut self, triple_order: u32) -> Result<Self, AlgebraError> {
        self.triple_order = triple_order;
        self.validate()?;
        Ok(self)
    }

    pub fn with_signature(mut self, signature: Vec<i8>) -> Result<Self, AlgebraError> {
        self.signature = signature;
        self.validate()?;
        Ok(self)
    }

    pub fn with_conjugation(mut self, conjugation: DilatationConjugation) -> Self {
        self.conjugation = conjugation;
        self
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        let bad = |m: String| Err(AlgebraError::InvalidConfig(m));
        if self.dim == 0 {
            return bad("dimension must be at least 1".into());
        }
        if self.order == 0 {
            return bad("truncation order must be at least 1".into());
        }
        if self.triple_order > self.order {
            return bad(format!(
                "triple order {} exceeds truncation order {}",
                self.triple_order, self.order
            ));
        }
        if self.v.len() != self.dim {
            return bad(format!("v has {} components, expected {}", self.v.len(), self.dim));
        }
        if self.signature.len() != self.dim || self.signature.iter().any(|s| s.abs() != 1) {
            return bad("signature must be a +-1 pattern of length n".into());
        }
        let v2 = self.v_squared();
        let allowed = [-1, 0, 1].map(|k| BigRational::from_integer(BigInt::from(k)));
        if !allowed.contains(&v2) {
            return bad(format!("v^2 = {v2} must be -1, 0 or 1"));
        }
        Ok(())
    }

    pub fn v_squared(&self) -> BigRational {
        self.v
            .iter()
            .zip(&self.signature)
            .map(|(c, &s)| c * c * BigRational::from_integer(BigInt::from(s)))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn one<C: Coefficient>(&self) -> Element<C> {
        Element::one(self.dim, self.order)
    }

    pub fn momentum<C: Coefficient>(&self, mu: usize) -> Element<C> {
        Element::term(self.dim, self.order, 0, [UMonomial::momentum(self.dim, mu)], C::one())
    }

    pub fn dilatation<C: Coefficient>(&self) -> Element<C> {
        Element::term(self.dim, self.order, 0, [UMonomial::dilatation(self.dim)], C::one())
    }

    /// `P = v^alpha P_alpha`.
    pub fn p_along_v<C: Coefficient>(&self) -> Element<C> {
        let mut out = Element::zero(self.dim, self.order);
        for (mu, c) in self.v.iter().enumerate() {
            out.add_term(0, [UMonomial::momentum(self.dim, mu)], C::from_rational(c));
        }
        out
    }

    /// The shift `c` in `D* = -D + c`.
    pub fn dilatation_shift(&self) -> i64 {
        match self.conjugation {
            DilatationConjugation::Abstract => 0,
            DilatationConjugation::RealizationShifted => -(self.dim as i64),
        }
    }
}

impl Default for Config {
    fn default() -> Self {
        Self::timelike(2, DEFAULT_ORDER).expect("default configuration is valid")
    }
}
