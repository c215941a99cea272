//! PBW monomials of `U(g)`, `g = {P_mu, D}`, and the [`Basis`] abstraction
//! shared with the Weyl algebra.

use std::fmt;
use std::hash::Hash;

use smallvec::SmallVec;

use super::error::AlgebraError;

pub type Exponents = SmallVec<[u16; 4]>;

/// A normal-ordered basis of an associative algebra.
///
/// `product` writes the normal-ordered expansion of `self * rhs` as triples
/// `(basis element, integer weight, power of i)`.
pub trait Basis: Clone + Ord + Hash + fmt::Debug + Send + Sync {
    fn unit(dim: usize) -> Self;
    fn dim(&self) -> usize;
    fn is_unit(&self) -> bool;
    fn product(&self, rhs: &Self, out: &mut Vec<(Self, i64, u32)>);
    fn write_text(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    fn parse_text(s: &str, dim: usize) -> Result<Self, AlgebraError>;
}

pub(crate) fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for j in 0..k {
        acc = acc * i64::from(n - j) / i64::from(j + 1);
    }
    acc
}

pub(crate) fn checked_pow(base: i64, exp: u32) -> i64 {
    base.checked_pow(exp).expect("integer weight overflow in normal ordering")
}

/// `P^a D^b` with `a` a multi-index over `P_0 .. P_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UMonomial {
    pub p: Exponents,
    pub d: u16,
}

impl UMonomial {
    pub fn one(dim: usize) -> Self {
        Self { p: SmallVec::from_elem(0, dim), d: 0 }
    }

    pub fn momentum(dim: usize, mu: usize) -> Self {
        let mut m = Self::one(dim);
        m.p[mu] = 1;
        m
    }

    pub fn dilatation(dim: usize) -> Self {
        Self { p: SmallVec::from_elem(0, dim), d: 1 }
    }

    pub fn new(p: &[u16], d: u16) -> Self {
        Self { p: p.iter().copied().collect(), d }
    }

    pub fn p_degree(&self) -> u32 {
        self.p.iter().map(|&e| u32::from(e)).sum()
    }

    pub(crate) fn product_weighted(&self, rhs: &Self, out: &mut Vec<(Self, i64)>) {
        // D^b P^c = P^c (D - |c|)^b
        let shift = i64::from(rhs.p_degree());
        let b = u32::from(self.d);
        let p: Exponents = self.p.iter().zip(&rhs.p).map(|(a, c)| a + c).collect();
        if shift == 0 || b == 0 {
            out.push((Self { p, d: self.d + rhs.d }, 1));
            return;
        }
        for j in 0..=b {
            let w = binomial(b, j) * checked_pow(-shift, b - j);
            out.push((Self { p: p.clone(), d: j as u16 + rhs.d }, w));
        }
    }
}

impl fmt::Debug for UMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Basis::write_text(self, f)
    }
}

impl Basis for UMonomial {
    fn unit(dim: usize) -> Self {
        Self::one(dim)
    }

    fn dim(&self) -> usize {
        self.p.len()
    }

    fn is_unit(&self) -> bool {
        self.d == 0 && self.p.iter().all(|&e| e == 0)
    }

    fn product(&self, rhs: &Self, out: &mut Vec<(Self, i64, u32)>) {
        let mut tmp = Vec::new();
        self.product_weighted(rhs, &mut tmp);
        out.extend(tmp.into_iter().map(|(m, w)| (m, w, 0)));
    }

    fn write_text(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mu, e) in self.p.iter().enumerate() {
            write!(f, "P{mu}^{e} ")?;
        }
        write!(f, "D^{}", self.d)
    }

    fn parse_text(s: &str, dim: usize) -> Result<Self, AlgebraError> {
        let mut m = Self::one(dim);
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = split_power(tok)?;
            if name == "D" {
                m.d = exp;
            } else if let Some(idx) = name.strip_prefix('P') {
                let mu = parse_index(idx, dim, tok)?;
                m.p[mu] = exp;
            } else {
                return Err(AlgebraError::Parse(format!("unknown factor `{tok}`")));
            }
        }
        Ok(m)
    }
}

pub(crate) fn split_power(tok: &str) -> Result<(&str, u16), AlgebraError> {
    match tok.split_once('^') {
        Some((name, e)) => {
            let e = e
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("bad exponent in `{tok}`")))?;
            Ok((name, e))
        }
        None => Ok((tok, 1)),
    }
}

pub(crate) fn parse_index(idx: &str, dim: usize, tok: &str) -> Result<usize, AlgebraError> {
    let mu: usize = idx
        .parse()
        .map_err(|_| AlgebraError::Parse(format!("bad index in `{tok}`")))?;
    if mu >= dim {
        return Err(AlgebraError::Parse(format!("index out of range in `{tok}`")));
    }
    Ok(mu)
}

/// Tensor legs multiply independently.
impl<const L: usize> Basis for [UMonomial; L] {
    fn unit(dim: usize) -> Self {
        std::array::from_fn(|_| UMonomial::one(dim))
    }

    fn dim(&self) -> usize {
        self[0].dim()
    }

    fn is_unit(&self) -> bool {
        self.iter().all(Basis::is_unit)
    }

    fn product(&self, rhs: &Self, out: &mut Vec<(Self, i64, u32)>) {
        let mut acc: Vec<(Self, i64)> = vec![(Self::unit(self.dim()), 1)];
        let mut leg_terms = Vec::new();
        for leg in 0..L {
            leg_terms.clear();
            self[leg].product_weighted(&rhs[leg], &mut leg_terms);
            if leg_terms.len() == 1 {
                let (m, w) = &leg_terms[0];
                for (k, acc_w) in acc.iter_mut() {
                    k[leg] = m.clone();
                    *acc_w *= w;
                }
                continue;
            }
            let mut next = Vec::with_capacity(acc.len() * leg_terms.len());
            for (k, acc_w) in &acc {
                for (m, w) in &leg_terms {
                    let mut k2 = k.clone();
                    k2[leg] = m.clone();
                    next.push((k2, acc_w * w));
                }
            }
            acc = next;
        }
        out.extend(acc.into_iter().map(|(k, w)| (k, w, 0)));
    }

    fn write_text(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊗ ")?;
            }
            Basis::write_text(m, f)?;
        }
        Ok(())
    }

    fn parse_text(s: &str, dim: usize) -> Result<Self, AlgebraError> {
        let parts: Vec<&str> = s.split('⊗').collect();
        if parts.len() != L {
            return Err(AlgebraError::Parse(format!(
                "expected {L} tensor legs, found {} in `{s}`",
                parts.len()
            )));
        }
        let mut legs = Self::unit(dim);
        for (leg, part) in legs.iter_mut().zip(parts) {
            *leg = UMonomial::parse_text(part, dim)?;
        }
        Ok(legs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(24, 12), 2_704_156);
    }

    #[test]
    fn d_squared_times_p() {
        // D^2 P = P (D - 1)^2
        let mut out = Vec::new();
        UMonomial::new(&[0], 2).product_weighted(&UMonomial::new(&[1], 0), &mut out);
        out.sort();
        assert_eq!(
            out,
            vec![
                (UMonomial::new(&[1], 0), 1),
                (UMonomial::new(&[1], 1), -2),
                (UMonomial::new(&[1], 2), 1),
            ]
        );
    }
}
