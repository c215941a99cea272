//! Power-series calculus on nilpotent (grade >= 1) arguments.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::coeff::Coefficient;
use super::error::AlgebraError;
use super::monomial::Basis;
use super::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalyticKind {
    Exp,
    Log1p,
    Inv1p,
    Sqrt1p,
}

fn coefficients(kind: AnalyticKind, n: u32) -> Vec<BigRational> {
    let int = |k: i64| BigRational::from_integer(BigInt::from(k));
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut c = BigRational::one();
    for m in 0..=n {
        let value = match kind {
            AnalyticKind::Exp => {
                if m > 0 {
                    c /= int(i64::from(m));
                }
                c.clone()
            }
            AnalyticKind::Log1p if m == 0 => BigRational::zero(),
            AnalyticKind::Log1p => {
                let sign = if m % 2 == 1 { 1 } else { -1 };
                BigRational::new(BigInt::from(sign), BigInt::from(m))
            }
            AnalyticKind::Inv1p => int(if m % 2 == 0 { 1 } else { -1 }),
            AnalyticKind::Sqrt1p => {
                // binom(1/2, m) = binom(1/2, m-1) * (1/2 - m + 1) / m
                if m > 0 {
                    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
                    c = c * (half - int(i64::from(m) - 1)) / int(i64::from(m));
                }
                c.clone()
            }
        };
        out.push(value);
    }
    out
}

/// `f(a)` for `f` in {exp, log(1+.), 1/(1+.), sqrt(1+.)}, summed by Horner's
/// scheme up to the truncation order.
pub fn analytic<C: Coefficient, K: Basis>(
    kind: AnalyticKind,
    a: &Series<C, K>,
) -> Result<Series<C, K>, AlgebraError> {
    match a.min_grade() {
        None => {
            let zero_value = if kind == AnalyticKind::Log1p { C::zero() } else { C::one() };
            return Ok(Series::scalar(a.dim(), a.order(), zero_value));
        }
        Some(0) => return Err(AlgebraError::NonNilpotentArgument),
        Some(_) => {}
    }
    let n = a.order() / a.min_grade().unwrap_or(1);
    let coeffs = coefficients(kind, n);
    let mut acc = Series::scalar(a.dim(), a.order(), C::from_rational(&coeffs[n as usize]));
    for c in coeffs[..n as usize].iter().rev() {
        acc = &acc * a;
        acc.add_term(0, K::unit(a.dim()), C::from_rational(c));
    }
    Ok(acc)
}

pub fn exp<C: Coefficient, K: Basis>(a: &Series<C, K>) -> Result<Series<C, K>, AlgebraError> {
    analytic(AnalyticKind::Exp, a)
}

pub fn log1p<C: Coefficient, K: Basis>(a: &Series<C, K>) -> Result<Series<C, K>, AlgebraError> {
    analytic(AnalyticKind::Log1p, a)
}

pub fn inv1p<C: Coefficient, K: Basis>(a: &Series<C, K>) -> Result<Series<C, K>, AlgebraError> {
    analytic(AnalyticKind::Inv1p, a)
}

pub fn sqrt1p<C: Coefficient, K: Basis>(a: &Series<C, K>) -> Result<Series<C, K>, AlgebraError> {
    analytic(AnalyticKind::Sqrt1p, a)
}

/// Inverse of an element whose grade-0 part is a nonzero multiple of the unit.
pub fn inverse<C: Coefficient, K: Basis>(x: &Series<C, K>) -> Result<Series<C, K>, AlgebraError> {
    let c0 = x.constant_term();
    let c0_inv = c0.try_inverse().ok_or(AlgebraError::NotInvertible)?;
    let unit = Series::scalar(x.dim(), x.order(), c0.clone());
    let rest = (x - &unit).scale(&c0_inv);
    if rest.min_grade() == Some(0) {
        return Err(AlgebraError::NotInvertible);
    }
    Ok(inv1p(&rest)?.scale(&c0_inv))
}

/// `1 + a` for a deviation `a`.
pub fn one_plus<C: Coefficient, K: Basis>(a: &Series<C, K>) -> Series<C, K> {
    let mut out = a.clone();
    out.add_term(0, K::unit(a.dim()), C::one());
    out
}

/// `x - 1`, the deviation of an element from the unit.
pub fn minus_one<C: Coefficient, K: Basis>(x: &Series<C, K>) -> Series<C, K> {
    let mut out = x.clone();
    out.add_term(0, K::unit(x.dim()), -C::one());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::coeff::GaussianRational as Q;
    use crate::ncalg::monomial::UMonomial;
    use crate::ncalg::ops::tensor;
    use crate::ncalg::{Config, Element, Tensor};

    fn pp(u: BigRational, order: u32) -> Tensor<Q> {
        let cfg = Config::timelike(1, order).unwrap();
        let p = cfg.momentum::<Q>(0);
        tensor(&p, &p).kappa_shift(2).scale(&Q::real(u.clone() * (BigRational::one() - u)))
    }

    #[test]
    fn geometric_series_of_pp() {
        let u = BigRational::new(1.into(), 4.into());
        let x = pp(u.clone(), 4);
        let w = u.clone() * (BigRational::one() - u);
        let p = |e: u16| UMonomial::new(&[e], 0);
        let expected = Tensor::<Q>::from_terms(
            1,
            4,
            [
                (0, [p(0), p(0)], Q::from(1)),
                (2, [p(1), p(1)], Q::real(-w.clone())),
                (4, [p(2), p(2)], Q::real(w.clone() * w)),
            ],
        );
        assert_eq!(inv1p(&x).unwrap(), expected);
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert!(exp(&Element::<Q>::zero(2, 6)).unwrap().is_one());
    }

    #[test]
    fn log_inverts_exp() {
        let cfg = Config::timelike(1, 5).unwrap();
        let a = tensor(&cfg.momentum::<Q>(0), &cfg.dilatation()).kappa_shift(1);
        let back = log1p(&minus_one(&exp(&a).unwrap())).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn grade_zero_argument_is_rejected() {
        let cfg = Config::timelike(1, 3).unwrap();
        assert_eq!(exp(&cfg.momentum::<Q>(0)), Err(AlgebraError::NonNilpotentArgument));
    }

    #[test]
    fn sqrt_squares_back() {
        let x = pp(BigRational::new(1.into(), 3.into()), 6);
        let s = sqrt1p(&x).unwrap();
        assert_eq!(&s * &s, one_plus(&x));
    }
}
