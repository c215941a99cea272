//! Normal-ordered exponentials in the Weyl algebra: `exp(i k.x̂)` expanded
//! by brute force against `:exp(i x.(J - p)): exp(iQ)`, with `J` and `Q`
//! solved as formal power series in `k`.
//!
//! The series grade counts powers of `k`; for `n > 1`, `k = lambda kbar`
//! along a grid of rational directions `kbar`, which pins down every
//! homogeneous component of the identity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hopf::twist::rational;
use crate::ncalg::analytic;
use crate::report::Report;
use crate::weyl::{Realization, WMonomial};
use crate::{UElement, WElement, Q};

/// Elements of `W_n[[k]]`; the grade is the power of `k`.
pub type W1Element = WElement;

/// `Phi_alpha(k, p) = J_alpha(k, p) - p_alpha`, one series per component.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiSeries {
    pub components: Vec<WElement>,
}

/// A realization with numeric `kappa`: `phi[alpha][mu]` is the coefficient
/// of `x^alpha` in `x̂^mu`, every entry a polynomial in `p` at grade 0.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialRealization {
    pub phi: Vec<Vec<WElement>>,
    pub chi: Vec<WElement>,
}

fn monomial_p(dim: usize, p: &[u16]) -> WMonomial {
    let mut m = WMonomial::one(dim);
    m.p.copy_from_slice(p);
    m
}

/// Substitutes `1/kappa` by a rational and re-grades the polynomial at 0.
pub fn at_kappa(x: &UElement, kappa: &BigRational, order: u32) -> WElement {
    let inv = rational(&kappa.recip());
    let dim = x.dim();
    let mut out = WElement::zero(dim, order);
    for (g, [m], c) in x.iter() {
        assert_eq!(m.d, 0, "realization entries are functions of P only");
        let scale = (0..g).fold(Q::one(), |acc, _| acc * inv.clone());
        out.add_term(0, monomial_p(dim, &m.p), c.clone() * scale);
    }
    out
}

impl PolynomialRealization {
    /// `x̂ = x phi(p)` in one dimension.
    pub fn one_dimensional(phi: &[Q], order: u32) -> Self {
        let mut entry = WElement::zero(1, order);
        for (j, c) in phi.iter().enumerate() {
            entry.add_term(0, monomial_p(1, &[j as u16]), c.clone());
        }
        PolynomialRealization { phi: vec![vec![entry]], chi: vec![WElement::zero(1, order)] }
    }

    pub fn from_realization(r: &Realization, kappa: &BigRational, order: u32) -> Self {
        PolynomialRealization {
            phi: r.phi.iter().map(|row| row.iter().map(|x| at_kappa(x, kappa, order)).collect()).collect(),
            chi: r.chi.iter().map(|x| at_kappa(x, kappa, order)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.chi.len()
    }

    fn order(&self) -> u32 {
        self.chi[0].order()
    }

    /// `x̂^mu = x^alpha phi_alpha^mu(p) + chi^mu(p)`.
    pub fn xhat(&self, mu: usize) -> WElement {
        let dim = self.dim();
        let mut out = self.chi[mu].clone();
        for alpha in 0..dim {
            let x = WElement::term(dim, self.order(), 0, WMonomial::coordinate(dim, alpha), Q::one());
            out = &out + &(&x * &self.phi[alpha][mu]);
        }
        out
    }

    /// `i lambda kbar.x̂`.
    fn exponent(&self, kbar: &[Q]) -> WElement {
        let dim = self.dim();
        let mut out = WElement::zero(dim, self.order());
        for (mu, k) in kbar.iter().enumerate() {
            out = &out + &self.xhat(mu).scale(k);
        }
        out.scale(&Q::i()).kappa_shift(1)
    }
}

/// `exp(i lambda kbar.x̂)`, every word normal ordered, up to `lambda^M`.
pub fn brute_force_expand(r: &PolynomialRealization, kbar: &[Q]) -> WElement {
    analytic::exp(&r.exponent(kbar)).expect("the exponent has grade 1")
}

/// Replaces `p_alpha` by the commuting series `values[alpha]`.
fn compose(f: &WElement, values: &[WElement]) -> WElement {
    let dim = f.dim();
    let one = WElement::one(dim, f.order());
    f.map_basis(dim, |m| {
        m.p.iter().enumerate().fold(one.clone(), |acc, (alpha, &e)| &acc * &values[alpha].pow(u32::from(e)))
    })
}

/// `integral_0^lambda`: grade `g` moves to `g + 1` with weight `1/(g+1)`.
fn integrate(x: &WElement) -> WElement {
    let mut out = WElement::zero(x.dim(), x.order());
    for (g, m, c) in x.iter() {
        let w = BigRational::new(BigInt::one(), BigInt::from(g + 1));
        out.add_term(g + 1, m.clone(), c.clone() * Q::real(w));
    }
    out
}

fn momentum(dim: usize, order: u32, alpha: usize) -> WElement {
    let mut e = vec![0u16; dim];
    e[alpha] = 1;
    WElement::term(dim, order, 0, monomial_p(dim, &e), Q::one())
}

/// `dJ_mu/dlambda = kbar_alpha phi_mu^alpha(J)`, `J(0) = p`, solved one
/// order per Picard sweep.
pub fn solve_j_series(r: &PolynomialRealization, kbar: &[Q]) -> Vec<WElement> {
    let (dim, order) = (r.dim(), r.order());
    let p: Vec<WElement> = (0..dim).map(|a| momentum(dim, order, a)).collect();
    let mut j = p.clone();
    for _ in 0..order {
        j = (0..dim)
            .map(|mu| {
                let mut rate = WElement::zero(dim, order);
                for (alpha, k) in kbar.iter().enumerate() {
                    rate = &rate + &compose(&r.phi[mu][alpha], &j).scale(k);
                }
                &p[mu] + &integrate(&rate)
            })
            .collect();
    }
    j
}

/// `dQ/dlambda = kbar_alpha chi^alpha(J)`, `Q(0) = 0`.
pub fn solve_q_series(r: &PolynomialRealization, kbar: &[Q], j: &[WElement]) -> WElement {
    let mut rate = WElement::zero(r.dim(), r.order());
    for (alpha, k) in kbar.iter().enumerate() {
        rate = &rate + &compose(&r.chi[alpha], j).scale(k);
    }
    integrate(&rate)
}

pub fn phi_series(r: &PolynomialRealization, kbar: &[Q]) -> PhiSeries {
    let j = solve_j_series(r, kbar);
    let dim = r.dim();
    PhiSeries { components: j.iter().enumerate().map(|(a, x)| x - &momentum(dim, r.order(), a)).collect() }
}

/// Product that concatenates exponents without reordering: `x`'s are simply
/// collected on the left.
fn normal_product(a: &WElement, b: &WElement) -> WElement {
    let mut out = WElement::zero(a.dim(), a.order());
    for (ga, ma, ca) in a.iter() {
        for (gb, mb, cb) in b.iter() {
            let key = WMonomial {
                x: ma.x.iter().zip(&mb.x).map(|(s, t)| s + t).collect(),
                p: ma.p.iter().zip(&mb.p).map(|(s, t)| s + t).collect(),
                d: ma.d + mb.d,
            };
            out.add_term(ga + gb, key, ca.clone() * cb.clone());
        }
    }
    out
}

/// `:exp(i x^alpha Phi_alpha): = sum_r (i x.Phi)^r / r!` with every `x` on
/// the left.
pub fn normal_ordered_exp(phi: &PhiSeries) -> WElement {
    let dim = phi.components.len();
    let order = phi.components[0].order();
    let mut exponent = WElement::zero(dim, order);
    for (alpha, c) in phi.components.iter().enumerate() {
        let x = WElement::term(dim, order, 0, WMonomial::coordinate(dim, alpha), Q::i());
        exponent = &exponent + &normal_product(&x, c);
    }
    let mut out = WElement::one(dim, order);
    let mut power = out.clone();
    for r in 1..=order {
        power = normal_product(&power, &exponent).scale(&Q::real(BigRational::new(BigInt::one(), BigInt::from(r))));
        out = &out + &power;
    }
    out
}

/// Directions `(1, t_1, ..., t_{n-1})` with `t_i >= 0` and `sum t <= M`;
/// a homogeneous polynomial of degree `M` in `n` variables is fixed by its
/// values there.
pub fn direction_grid(dim: usize, order: u32) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 1..dim {
        out = out
            .into_iter()
            .flat_map(|t| {
                let used: u32 = t.iter().sum();
                (0..=order - used).map(move |j| {
                    let mut next = t.clone();
                    next.push(j);
                    next
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|t| std::iter::once(Q::one()).chain(t.into_iter().map(|j| Q::from(i64::from(j)))).collect())
        .collect()
}

/// `e^{-i k.x̂} p_mu e^{i k.x̂}` by direct conjugation.
pub fn conjugated_momenta(r: &PolynomialRealization, kbar: &[Q]) -> Vec<WElement> {
    let a = r.exponent(kbar);
    let forward = analytic::exp(&a).expect("grade 1");
    let backward = analytic::exp(&-a).expect("grade 1");
    (0..r.dim())
        .map(|mu| &(&backward * &momentum(r.dim(), r.order(), mu)) * &forward)
        .collect()
}

/// `exp(i k x phi(p)) = :exp(i x (J - p)):` and `J = e^{-ikx phi} p e^{ikx phi}`
/// in one dimension, up to `k^M`.
pub fn check_ordered_exp_1d(phi: &[Q], order: u32) -> Report {
    let r = PolynomialRealization::one_dimensional(phi, order);
    let kbar = [Q::one()];
    let j = solve_j_series(&r, &kbar);
    let phis = phi_series(&r, &kbar);
    Report::new("ordered-exp-1d", "W1", None, order)
        .expect_equal(&brute_force_expand(&r, &kbar), &normal_ordered_exp(&phis))
        .expect_equal(&conjugated_momenta(&r, &kbar)[0], &j[0])
        .with_detail(format!("phi = {}", describe_polynomial(phi)))
}

fn describe_polynomial(phi: &[Q]) -> String {
    let terms: Vec<String> = phi
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| match j {
            0 => format!("{c}"),
            1 => format!("({c}) p"),
            _ => format!("({c}) p^{j}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `phi(p) = (1 + u p)(1 - (1-u) p)`.
pub fn interpolating_phi(u: &BigRational) -> Vec<Q> {
    let w = BigRational::one() - u;
    vec![Q::one(), rational(&(u - &w)), rational(&-(u * &w))]
}

/// Random cubics with small rational coefficients and nonzero leading term.
pub fn random_cubics(count: usize, seed: u64) -> Vec<Vec<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |nonzero: bool| loop {
        let num: i64 = rng.gen_range(-3..=3);
        let den: i64 = rng.gen_range(1..=4);
        if !nonzero || num != 0 {
            return Q::real(BigRational::new(num.into(), den.into()));
        }
    };
    (0..count).map(|_| vec![draw(false), draw(false), draw(false), draw(true)]).collect()
}

/// `exp(i k.x̂) = :exp(i x.(J - p)): exp(iQ)` over the direction grid, with
/// `J` also checked against direct conjugation and `Q(0, p) = 0`.
pub fn check_ordered_exp(r: &PolynomialRealization, family: &str, u: Option<&BigRational>) -> Report {
    let order = r.order();
    let grid = direction_grid(r.dim(), order);
    let mut rep = Report::new("ordered-exp", family, u, order);
    for kbar in &grid {
        let j = solve_j_series(r, kbar);
        let q = solve_q_series(r, kbar, &j);
        let phis = phi_series(r, kbar);
        let phase = analytic::exp(&q.scale(&Q::i())).expect("Q has grade >= 1");
        let rhs = &normal_ordered_exp(&phis) * &phase;
        rep = rep.expect_equal(&brute_force_expand(r, kbar), &rhs);
        for (lhs, rhs) in conjugated_momenta(r, kbar).iter().zip(&j) {
            rep = rep.expect_equal(lhs, rhs);
        }
        rep = rep.expect(q.grade_part(0).is_zero());
    }
    rep.with_detail(format!("{} directions", grid.len()))
}

/// Keeps the `p`-free part: the series evaluated at `p = 0`.
fn at_zero_momentum(x: &WElement) -> WElement {
    let mut out = WElement::zero(x.dim(), x.order());
    for (g, m, c) in x.iter() {
        if m.p.iter().all(|&e| e == 0) {
            out.add_term(g, m.clone(), c.clone());
        }
    }
    out
}

/// `i ln(u e^{-(1-u)A} + (1-u) e^{uA})` with `A = lambda (v.kbar)/kappa`.
pub fn g_series(u: &BigRational, a: &BigRational, dim: usize, order: u32) -> WElement {
    let w = BigRational::one() - u;
    let lambda = WElement::term(dim, order, 1, WMonomial::one(dim), Q::real(a.clone()));
    let exp = |c: &BigRational| analytic::exp(&lambda.scale(&Q::real(c.clone()))).expect("grade 1");
    let sum = &exp(&-(&w)).scale(&rational(u)) + &exp(u).scale(&rational(&w));
    let log = analytic::log1p(&(&sum - &WElement::one(dim, order))).expect("the argument starts at grade 1");
    log.scale(&Q::i())
}

/// `Q(k, 0) = g(k)` for the `R` realization with direction `v` at `kappa`.
pub fn check_q_boundary(
    r: &PolynomialRealization,
    u: &BigRational,
    v: &[BigRational],
    kappa: &BigRational,
) -> Report {
    let order = r.order();
    let mut rep = Report::new("q-boundary", "R", Some(u), order);
    for kbar in direction_grid(r.dim(), order) {
        let j = solve_j_series(r, &kbar);
        let q = solve_q_series(r, &kbar, &j);
        let vk = kbar.iter().zip(v).fold(BigRational::zero(), |acc, (k, vi)| {
            acc + &k.re * vi
        });
        rep = rep.expect_equal(&at_zero_momentum(&q), &g_series(u, &(vk / kappa), r.dim(), order));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::real(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn linear_phi_gives_exponential_j() {
        let r = PolynomialRealization::one_dimensional(&[Q::zero(), Q::one()], 4);
        let j = solve_j_series(&r, &[Q::one()]);
        for g in 0..=4u32 {
            let fact: i64 = (1..=i64::from(g)).product();
            assert_eq!(j[0].coefficient(g, &monomial_p(1, &[1])), q(1, fact));
        }
    }

    #[test]
    fn linear_phi_expansion_by_hand() {
        let r = PolynomialRealization::one_dimensional(&[Q::zero(), Q::one()], 2);
        let e = brute_force_expand(&r, &[Q::one()]);
        let xp = |a, b| WMonomial { x: [a].into_iter().collect(), p: [b].into_iter().collect(), d: 0 };
        // 1 + i k x p + (ik)^2 (x^2 p^2 - i x p)/2
        assert_eq!(e.coefficient(1, &xp(1, 1)), Q::i());
        assert_eq!(e.coefficient(2, &xp(2, 2)), q(-1, 2));
        assert_eq!(e.coefficient(2, &xp(1, 1)), Q::i() * q(1, 2));
    }

    #[test]
    fn constant_and_zero_phi() {
        let zero = PolynomialRealization::one_dimensional(&[], 3);
        assert!(brute_force_expand(&zero, &[Q::one()]).is_one());
        assert!(check_ordered_exp_1d(&[Q::one()], 3).passed());
    }

    #[test]
    fn grid_sizes() {
        assert_eq!(direction_grid(1, 5).len(), 1);
        assert_eq!(direction_grid(2, 5).len(), 6);
        assert_eq!(direction_grid(3, 2).len(), 6);
    }
}
