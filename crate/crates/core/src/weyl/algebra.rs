//! The Weyl-dilatation algebra on `{x^mu, P_mu, D}` with
//! `[P_mu, x^nu] = -i delta`, `[D, x^mu] = x^mu`, `[P_mu, D] = P_mu`.

use std::fmt;

use smallvec::SmallVec;

use crate::ncalg::monomial::{binomial, checked_pow, parse_index, split_power, Exponents};
use crate::ncalg::{AlgebraError, Basis, Coefficient, Series, UMonomial};

/// `x^alpha P^a D^b`, normal ordered with `x` left, `P` middle, `D` right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WMonomial {
    pub x: Exponents,
    pub p: Exponents,
    pub d: u16,
}

pub type WSeries<C> = Series<C, WMonomial>;

impl WMonomial {
    pub fn one(dim: usize) -> Self {
        WMonomial { x: SmallVec::from_elem(0, dim), p: SmallVec::from_elem(0, dim), d: 0 }
    }

    pub fn coordinate(dim: usize, mu: usize) -> Self {
        let mut m = Self::one(dim);
        m.x[mu] = 1;
        m
    }

    pub fn from_u(m: &UMonomial) -> Self {
        WMonomial { x: SmallVec::from_elem(0, m.p.len()), p: m.p.clone(), d: m.d }
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn p_degree(&self) -> u32 {
        self.p.iter().map(|&e| u32::from(e)).sum()
    }
}

impl fmt::Debug for WMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Basis::write_text(self, f)
    }
}

/// All multi-indices `beta <= bound` componentwise.
fn sub_indices(bound: &[u16]) -> Vec<Exponents> {
    let mut out: Vec<Exponents> = vec![SmallVec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |j| {
                    let mut v = prefix.clone();
                    v.push(j);
                    v
                })
            })
            .collect();
    }
    out
}

fn factorial(n: u16) -> i64 {
    (1..=i64::from(n)).product()
}

impl Basis for WMonomial {
    fn unit(dim: usize) -> Self {
        Self::one(dim)
    }

    fn dim(&self) -> usize {
        self.x.len()
    }

    fn is_unit(&self) -> bool {
        self.d == 0 && self.x.iter().chain(&self.p).all(|&e| e == 0)
    }

    /// `(x^a1 P^b1 D^c1)(x^a2 P^b2 D^c2)`: move `D^c1` right through
    /// `x^a2 P^b2` (it becomes `(D + |a2| - |b2|)^c1`), then `P^b1` through
    /// `x^a2` with `P^b x^a = sum_beta binom(b,beta) binom(a,beta) beta! (-i)^|beta| x^(a-beta) P^(b-beta)`.
    fn product(&self, rhs: &Self, out: &mut Vec<(Self, i64, u32)>) {
        let t = i64::from(rhs.x_degree()) - i64::from(rhs.p_degree());
        let c1 = u32::from(self.d);
        let d_terms: Vec<(u16, i64)> = if c1 == 0 || t == 0 {
            vec![(self.d + rhs.d, 1)]
        } else {
            (0..=c1)
                .map(|j| (j as u16 + rhs.d, binomial(c1, j) * checked_pow(t, c1 - j)))
                .collect()
        };
        let bound: Exponents = self.p.iter().zip(&rhs.x).map(|(b, a)| *b.min(a)).collect();
        for beta in sub_indices(&bound) {
            let mut w: i64 = 1;
            let mut order: u32 = 0;
            for (mu, &k) in beta.iter().enumerate() {
                if k > 0 {
                    w *= binomial(u32::from(self.p[mu]), u32::from(k))
                        * binomial(u32::from(rhs.x[mu]), u32::from(k))
                        * factorial(k);
                    order += u32::from(k);
                }
            }
            let x: Exponents = (0..self.x.len()).map(|mu| self.x[mu] + rhs.x[mu] - beta[mu]).collect();
            let p: Exponents = (0..self.p.len()).map(|mu| self.p[mu] - beta[mu] + rhs.p[mu]).collect();
            // (-i)^k = i^(3k)
            let ip = (3 * order) % 4;
            for &(d, wd) in &d_terms {
                out.push((WMonomial { x: x.clone(), p: p.clone(), d }, w * wd, ip));
            }
        }
    }

    fn write_text(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mu, e) in self.x.iter().enumerate() {
            write!(f, "x{mu}^{e} ")?;
        }
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
                m.p[parse_index(idx, dim, tok)?] = exp;
            } else if let Some(idx) = name.strip_prefix('x') {
                m.x[parse_index(idx, dim, tok)?] = exp;
            } else {
                return Err(AlgebraError::Parse(format!("unknown factor `{tok}`")));
            }
        }
        Ok(m)
    }
}

/// Embeds an element of `U(g)` as an `x`-free Weyl element.
pub fn embed_u<C: Coefficient>(x: &Series<C, [UMonomial; 1]>) -> WSeries<C> {
    x.map_basis(x.dim(), |[m]| WSeries::term(m.dim(), x.order(), 0, WMonomial::from_u(m), C::one()))
}

pub fn coordinate<C: Coefficient>(dim: usize, order: u32, mu: usize) -> WSeries<C> {
    WSeries::term(dim, order, 0, WMonomial::coordinate(dim, mu), C::one())
}

/// Replaces `D` by `i x^alpha P_alpha`, the realization of the dilatation on
/// functions; this is an algebra homomorphism into the pure Weyl algebra.
pub fn substitute_dilatation<C: Coefficient>(w: &WSeries<C>) -> WSeries<C> {
    let dim = w.dim();
    let order = w.order();
    let mut d_image = WSeries::zero(dim, order);
    for mu in 0..dim {
        let mut m = WMonomial::one(dim);
        m.x[mu] = 1;
        m.p[mu] = 1;
        d_image.add_term(0, m, C::imaginary_unit());
    }
    let max_d = w.iter().map(|(_, m, _)| m.d).max().unwrap_or(0);
    let mut powers = vec![WSeries::one(dim, order)];
    for _ in 0..max_d {
        let next = powers.last().expect("nonempty") * &d_image;
        powers.push(next);
    }
    w.map_basis(dim, |m| {
        let head = WSeries::term(dim, order, 0, WMonomial { d: 0, ..m.clone() }, C::one());
        &head * &powers[usize::from(m.d)]
    })
}

pub fn is_dilatation_free<C: Coefficient>(w: &WSeries<C>) -> bool {
    w.iter().all(|(_, m, _)| m.d == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::GaussianRational as Q;

    fn w(x: &[u16], p: &[u16], d: u16) -> WMonomial {
        WMonomial { x: x.iter().copied().collect(), p: p.iter().copied().collect(), d }
    }

    fn el(terms: &[(WMonomial, Q)]) -> WSeries<Q> {
        WSeries::from_terms(1, 4, terms.iter().map(|(m, c)| (0, m.clone(), c.clone())))
    }

    #[test]
    fn defining_relations() {
        let p = el(&[(w(&[0], &[1], 0), Q::from(1))]);
        let x = el(&[(w(&[1], &[0], 0), Q::from(1))]);
        let d = el(&[(w(&[0], &[0], 1), Q::from(1))]);
        assert_eq!(&p * &x, el(&[(w(&[1], &[1], 0), Q::from(1)), (w(&[0], &[0], 0), -Q::i())]));
        assert_eq!(&d * &x, el(&[(w(&[1], &[0], 1), Q::from(1)), (w(&[1], &[0], 0), Q::from(1))]));
        assert_eq!(&p * &d - &d * &p, p);
    }

    #[test]
    fn xp_squared() {
        let xp = el(&[(w(&[1], &[1], 0), Q::from(1))]);
        let expected = el(&[(w(&[2], &[2], 0), Q::from(1)), (w(&[1], &[1], 0), -Q::i())]);
        assert_eq!(&xp * &xp, expected);
    }

    #[test]
    fn dilatation_substitution_respects_relations() {
        let d = el(&[(w(&[0], &[0], 1), Q::from(1))]);
        let x = el(&[(w(&[1], &[0], 0), Q::from(1))]);
        let lhs = substitute_dilatation(&(&d * &x));
        let rhs = &substitute_dilatation(&d) * &x;
        assert_eq!(lhs, rhs);
        assert!(is_dilatation_free(&lhs));
    }
}
