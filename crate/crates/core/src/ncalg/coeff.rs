//! Coefficient rings for the series algebras.
//!
//! Everything in [`crate::ncalg`] and [`crate::weyl`] is generic over a
//! [`Coefficient`]. The exact instance is [`GaussianRational`]; the
//! floating-point instances are `Complex<f32>` and `Complex<f64>`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::error::AlgebraError;

/// A commutative coefficient ring containing the Gaussian rationals.
///
/// `conj` is complex conjugation and is what makes the `*`-operation
/// antilinear.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &BigRational) -> Self;

    fn from_integer(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn imaginary_unit() -> Self;

    fn conj(&self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn try_inverse(&self) -> Option<Self>;

    fn to_complex64(&self) -> Complex<f64>;

    /// `i^k` for `k` taken mod 4.
    fn i_pow(k: u32) -> Self {
        match k % 4 {
            0 => Self::one(),
            1 => Self::imaginary_unit(),
            2 => -Self::one(),
            _ => -Self::imaginary_unit(),
        }
    }
}

/// Exact complex rational `re + i·im`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

/// Canonical text: `a/b`, `a/b+c/di` or `a/b-c/di`; the real part is always
/// written, denominators always present.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, &self.re)?;
        if !self.im.is_zero() {
            if self.im.is_negative() {
                f.write_str("-")?;
                write_ratio(f, &-self.im.clone())?;
            } else {
                f.write_str("+")?;
                write_ratio(f, &self.im)?;
            }
            f.write_str("i")?;
        }
        Ok(())
    }
}

/// Parses `a`, `a/b`, `-a/b` or a terminating decimal `-a.bc` as an exact
/// rational.
pub fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("invalid rational `{s}`"));
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let digits = format!("{}{frac}", int.trim_start_matches(['-', '+']));
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let n = if negative { -n } else { n };
        return Ok(BigRational::new(n, num_traits::pow(BigInt::from(10), frac.len())));
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for GaussianRational {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(s)?));
        };
        // Split at the sign that separates the real and imaginary parts; a
        // leading sign belongs to the first number.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(at) => {
                let re = parse_rational(&body[..at])?;
                let im_txt = &body[at..];
                let im_txt = im_txt.strip_prefix('+').unwrap_or(im_txt);
                let im = if im_txt == "-" || im_txt.is_empty() {
                    BigRational::from_integer(if im_txt == "-" { -1 } else { 1 }.into())
                } else {
                    parse_rational(im_txt)?
                };
                Ok(Self::new(re, im))
            }
            None => {
                let im = match body {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    b => parse_rational(b)?,
                };
                Ok(Self::new(BigRational::zero(), im))
            }
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::real(self.re * rhs.re);
        }
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.try_inverse().expect("division by zero Gaussian rational")
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        Self::real(r)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::real(BigRational::from_integer(n.into()))
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Numerator or denominator too large for a direct conversion.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl Coefficient for GaussianRational {
    fn from_rational(r: &BigRational) -> Self {
        Self::real(r.clone())
    }

    fn imaginary_unit() -> Self {
        Self::i()
    }

    fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    fn to_complex64(&self) -> Complex<f64> {
        Complex::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }
}

impl<T> Coefficient for Complex<T>
where
    T: Float + FromPrimitive + fmt::Debug + Send + Sync,
{
    fn from_rational(r: &BigRational) -> Self {
        Complex::new(T::from_f64(ratio_to_f64(r)).unwrap_or_else(T::nan), T::zero())
    }

    fn imaginary_unit() -> Self {
        Complex::i()
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Complex::inv(self))
        }
    }

    fn to_complex64(&self) -> Complex<f64> {
        Complex::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn display_and_parse_agree() {
        for z in [
            GaussianRational::new(q(1, 2), q(0, 1)),
            GaussianRational::new(q(-3, 4), q(5, 7)),
            GaussianRational::new(q(0, 1), q(-1, 1)),
            GaussianRational::new(q(7, 1), q(-2, 9)),
        ] {
            let text = z.to_string();
            assert_eq!(text.parse::<GaussianRational>().unwrap(), z, "{text}");
        }
        assert_eq!(GaussianRational::new(q(-3, 4), q(5, 7)).to_string(), "-3/4+5/7i");
        assert_eq!("i".parse::<GaussianRational>().unwrap(), GaussianRational::i());
        assert_eq!("-i".parse::<GaussianRational>().unwrap(), -GaussianRational::i());
        assert_eq!("3".parse::<GaussianRational>().unwrap(), GaussianRational::from(3));
    }

    #[test]
    fn inverse_and_conjugation() {
        let z = GaussianRational::new(q(1, 2), q(3, 1));
        assert_eq!(z.clone() * z.try_inverse().unwrap(), GaussianRational::one());
        assert_eq!(z.conj().conj(), z);
        assert!(GaussianRational::zero().try_inverse().is_none());
        assert_eq!(GaussianRational::i_pow(3), -GaussianRational::i());
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(parse_rational("1/0").is_err());
        assert!("1/2+x".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_rational("0.25").unwrap(), q(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), q(-3, 2));
        assert_eq!(parse_rational("-0.5").unwrap(), q(-1, 2));
        assert!(parse_rational("1.").is_err());
        assert!(parse_rational("1.2e3").is_err());
    }
}
