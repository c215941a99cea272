//! Floating-point plane-wave star products: the closed forms of `K`,
//! `K^-1`, `J`, `g`, `Q`, `D` and `G`, and an RK4 oracle for the ODEs they
//! solve.

pub mod checks;
pub mod ode;
pub mod packet;

use num_traits::Float;
use serde::Serialize;
use thiserror::Error;

use crate::hopf::Family;

pub use checks::{check_ode_oracles, check_star_properties, coproduct_consistency, sample_momenta};
pub use ode::{ode_oracle, OdeSolution, OdeTarget};
pub use packet::{wave_packet_star, GaussianPacket};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StarError {
    #[error("domain violation: {0} must be positive")]
    Domain(&'static str),

    #[error("RK4 step halving did not converge after {steps} steps")]
    NonConvergence { steps: usize },

    #[error("packet tail mass {mass:.3e} lies outside the domain-guard region")]
    TailMass { mass: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// `u`, `kappa` and the direction `v`; the dimension is `v.len()`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StarParams<T> {
    pub u: T,
    pub kappa: T,
    pub v: Vec<T>,
}

impl<T: Float> StarParams<T> {
    pub fn new(u: T, kappa: T, v: Vec<T>) -> Result<Self, StarError> {
        if !u.is_finite() {
            return Err(StarError::InvalidParams("u must be finite".into()));
        }
        if kappa == T::zero() || !kappa.is_finite() {
            return Err(StarError::InvalidParams("kappa must be finite and nonzero".into()));
        }
        if v.is_empty() || v.iter().any(|x| !x.is_finite()) {
            return Err(StarError::InvalidParams("v must be a nonempty finite vector".into()));
        }
        Ok(StarParams { u, kappa, v })
    }

    /// `v = (1, 0, ..., 0)`.
    pub fn timelike(u: T, kappa: T, n: usize) -> Result<Self, StarError> {
        let mut v = vec![T::zero(); n];
        if let Some(first) = v.first_mut() {
            *first = T::one();
        }
        Self::new(u, kappa, v)
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    /// `v . k / kappa`.
    pub fn along(&self, k: &[T]) -> T {
        dot(&self.v, k) / self.kappa
    }

    fn weight(&self) -> T {
        self.u * (T::one() - self.u)
    }

    fn check_dim(&self, k: &[T]) -> Result<(), StarError> {
        if k.len() == self.dim() && k.iter().all(|x| x.is_finite()) {
            Ok(())
        } else {
            Err(StarError::InvalidParams(format!("momentum must have {} finite components", self.dim())))
        }
    }
}

pub fn dot<T: Float>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

fn c<T: Float>(x: f64) -> T {
    T::from(x).expect("representable constant")
}

fn positive<T: Float>(x: T, what: &'static str) -> Result<T, StarError> {
    if x > T::zero() && x.is_finite() {
        Ok(x)
    } else {
        Err(StarError::Domain(what))
    }
}

/// `(e^A - 1)/A`, with a Taylor series near the removable singularity.
pub fn expm1_ratio<T: Float>(a: T) -> T {
    if a.abs() >= c(1e-4) {
        a.exp_m1() / a
    } else {
        let terms = [1.0, 1.0 / 2.0, 1.0 / 6.0, 1.0 / 24.0, 1.0 / 120.0, 1.0 / 720.0];
        terms.iter().rev().fold(T::zero(), |acc, &t| acc * a + c(t))
    }
}

/// `ln((1 + u a)/(1 - (1-u) a)) / a`, continued to `a = 0`.
pub fn log_ratio<T: Float>(u: T, a: T) -> T {
    let w = T::one() - u;
    if a.abs() >= c(1e-4) {
        ((u * a).ln_1p() - (-(w * a)).ln_1p()) / a
    } else {
        // sum_m [(-1)^(m+1) u^m + w^m] a^(m-1) / m
        let mut acc = T::zero();
        let mut pow_a = T::one();
        for m in 1..=6i32 {
            let sign = if m % 2 == 1 { T::one() } else { -T::one() };
            acc = acc + (sign * u.powi(m) + w.powi(m)) * pow_a / c(f64::from(m));
            pow_a = pow_a * a;
        }
        acc
    }
}

fn scaled<T: Float>(k: &[T], s: T) -> Vec<T> {
    k.iter().map(|&x| x * s).collect()
}

/// `K(k) = k (e^A - 1)/A / ((1-u) e^A + u)`, `A = v.k/kappa`.
pub fn k_map<T: Float>(p: &StarParams<T>, k: &[T]) -> Result<Vec<T>, StarError> {
    p.check_dim(k)?;
    let a = p.along(k);
    let denom = positive((T::one() - p.u) * a.exp() + p.u, "(1-u) e^(v.k/kappa) + u")?;
    Ok(scaled(k, expm1_ratio(a) / denom))
}

/// `K^-1(k) = k ln((1 + u a)/(1 - (1-u) a)) / a`, `a = v.k/kappa`.
pub fn k_inverse<T: Float>(p: &StarParams<T>, k: &[T]) -> Result<Vec<T>, StarError> {
    p.check_dim(k)?;
    let a = p.along(k);
    positive(T::one() + p.u * a, "1 + u v.k/kappa")?;
    positive(T::one() - (T::one() - p.u) * a, "1 - (1-u) v.k/kappa")?;
    Ok(scaled(k, log_ratio(p.u, a)))
}

/// `J(k, q)` from `K(k)`.
pub fn j_map<T: Float>(p: &StarParams<T>, k: &[T], q: &[T]) -> Result<Vec<T>, StarError> {
    p.check_dim(q)?;
    let kk = k_map(p, k)?;
    combine(p, &kk, q)
}

/// `[k (1 + u b) + (1 - (1-u) a) q] / (1 + u(1-u) a b)` with `a = v.k/kappa`,
/// `b = v.q/kappa`: the common shape of `J` and `D`.
fn combine<T: Float>(p: &StarParams<T>, k: &[T], q: &[T]) -> Result<Vec<T>, StarError> {
    let (a, b) = (p.along(k), p.along(q));
    let denom = positive(T::one() + p.weight() * a * b, "1 + u(1-u)(v.k)(v.q)/kappa^2")?;
    let left = T::one() + p.u * b;
    let right = T::one() - (T::one() - p.u) * a;
    Ok(k.iter().zip(q).map(|(&x, &y)| (x * left + right * y) / denom).collect())
}

/// `g(k) = i gLog(k)`, `gLog = ln(u e^{-(1-u)A} + (1-u) e^{uA})`.
pub fn g_log<T: Float>(p: &StarParams<T>, k: &[T]) -> Result<T, StarError> {
    p.check_dim(k)?;
    let a = p.along(k);
    let w = T::one() - p.u;
    Ok(positive(p.u * (-w * a).exp() + w * (p.u * a).exp(), "u e^(-(1-u)A) + (1-u) e^(uA)")?.ln())
}

/// `Q(k, q) = i qLog(k, q)`.
pub fn q_log<T: Float>(p: &StarParams<T>, k: &[T], q: &[T]) -> Result<T, StarError> {
    p.check_dim(k)?;
    p.check_dim(q)?;
    let (a, b) = (p.along(k), p.along(q));
    let w = T::one() - p.u;
    let arg = p.u * (T::one() - w * b) * (-w * a).exp() + w * (T::one() + p.u * b) * (p.u * a).exp();
    Ok(positive(arg, "Q logarithm argument")?.ln())
}

/// Closed-form values at one pair of momenta.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedForms<T> {
    pub k: Vec<T>,
    pub k_inverse: Vec<T>,
    pub j: Vec<T>,
    pub g_log: T,
    pub q_log: T,
}

pub fn closed_forms<T: Float>(p: &StarParams<T>, k: &[T], q: &[T]) -> Result<ClosedForms<T>, StarError> {
    Ok(ClosedForms {
        k: k_map(p, k)?,
        k_inverse: k_inverse(p, k)?,
        j: j_map(p, k, q)?,
        g_log: g_log(p, k)?,
        q_log: q_log(p, k, q)?,
    })
}

/// `e^{ikx} * e^{iqx} = e^{-gLog} e^{i D(k,q) x}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlaneWaveProduct<T> {
    pub dvec: Vec<T>,
    pub g_log: T,
    pub amplitude: T,
}

/// `D(k, q)` and, for the `R` family, `gLog = ln(1 + u(1-u)(v.k)(v.q)/kappa^2)`.
pub fn star_kernel<T: Float>(
    p: &StarParams<T>,
    k: &[T],
    q: &[T],
    family: Family,
) -> Result<PlaneWaveProduct<T>, StarError> {
    p.check_dim(k)?;
    p.check_dim(q)?;
    let dvec = combine(p, k, q)?;
    let g_log = match family {
        Family::R => (p.weight() * p.along(k) * p.along(q)).ln_1p(),
        Family::L => T::zero(),
        other => return Err(StarError::InvalidParams(format!("no plane-wave kernel for family {other}"))),
    };
    Ok(PlaneWaveProduct { dvec, g_log, amplitude: (-g_log).exp() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(u: f64) -> StarParams<f64> {
        StarParams::timelike(u, 1.0, 2).unwrap()
    }

    #[test]
    fn amplitude_at_half() {
        let out = star_kernel(&params(0.5), &[1.0, 0.3], &[1.0, -2.0], Family::R).unwrap();
        assert!((out.amplitude - 0.8).abs() < 1e-12);
    }

    #[test]
    fn small_argument_branches_agree() {
        for u in [0.0, 0.3, 2.0] {
            for a in [0.99e-4, 1.01e-4, -0.99e-4, -1.01e-4] {
                let series_side = expm1_ratio(a);
                assert!((series_side - a.exp_m1() / a).abs() < 1e-13);
                let w = 1.0 - u;
                let direct = ((u * a).ln_1p() - (-(w * a)).ln_1p()) / a;
                assert!((log_ratio(u, a) - direct).abs() < 1e-10, "u={u} a={a}");
            }
        }
    }

    #[test]
    fn guard_boundary_is_an_error() {
        // 1 - (1-u) a = 0 at a = 2 for u = 1/2
        let err = k_inverse(&params(0.5), &[2.0, 0.0]).unwrap_err();
        assert_eq!(err, StarError::Domain("1 - (1-u) v.k/kappa"));
        let err = star_kernel(&params(2.0), &[1.0, 0.0], &[0.5, 0.0], Family::R).unwrap_err();
        assert!(matches!(err, StarError::Domain(_)));
    }

    #[test]
    fn ends_of_the_family_have_no_phase() {
        for u in [0.0, 1.0] {
            assert_eq!(g_log(&params(u), &[0.2, 0.1]).unwrap(), 0.0);
        }
    }

    #[test]
    fn single_precision() {
        let p = StarParams::<f32>::timelike(0.5, 1.0, 2).unwrap();
        let k = [0.2f32, -0.1];
        let back = k_inverse(&p, &k_map(&p, &k).unwrap()).unwrap();
        assert!((back[0] - k[0]).abs() < 1e-6);
    }
}
