//! Undeformed Hopf structure of `U(g)` and the leg-wise maps used to build
//! twisted structures: coproduct, counit, antipode, `*`, flip, `kappa` sign
//! flip, leg embeddings, leg multiplication and numeric evaluation.

use super::coeff::Coefficient;
use super::error::AlgebraError;
use super::monomial::{binomial, checked_pow, Basis, UMonomial};
use super::series::Series;
use super::{Element, Tensor};

pub type Legs<C, const L: usize> = Series<C, [UMonomial; L]>;

/// `Delta(P^a D^b) = sum binom(a,c) binom(b,j) P^c D^j ⊗ P^(a-c) D^(b-j)`;
/// both sides are already normal ordered because the `P` parts and the `D`
/// parts of the primitive coproducts commute among themselves.
fn coproduct_monomial(m: &UMonomial) -> Vec<(i64, UMonomial, UMonomial)> {
    let mut splits: Vec<(i64, Vec<u16>)> = vec![(1, Vec::new())];
    for &a in &m.p {
        let mut next = Vec::with_capacity(splits.len() * (usize::from(a) + 1));
        for (w, left) in &splits {
            for c in 0..=a {
                let mut l = left.clone();
                l.push(c);
                next.push((w * binomial(u32::from(a), u32::from(c)), l));
            }
        }
        splits = next;
    }
    let mut out = Vec::new();
    for (w, left_p) in &splits {
        let right_p: Vec<u16> = m.p.iter().zip(left_p).map(|(a, c)| a - c).collect();
        for j in 0..=m.d {
            let wj = w * binomial(u32::from(m.d), u32::from(j));
            out.push((wj, UMonomial::new(left_p, j), UMonomial::new(&right_p, m.d - j)));
        }
    }
    out
}

/// Coproduct applied to tensor leg `leg`, producing one more leg (`M = L + 1`).
pub fn coproduct_on_leg<C: Coefficient, const L: usize, const M: usize>(
    t: &Legs<C, L>,
    leg: usize,
) -> Legs<C, M> {
    assert!(M == L + 1 && leg < L, "coproduct_on_leg: need M = L + 1 and leg < L");
    let mut out = Series::zero(t.dim(), t.order());
    for (g, key, c) in t.iter() {
        for (w, left, right) in coproduct_monomial(&key[leg]) {
            let k: [UMonomial; M] = std::array::from_fn(|dst| match dst.cmp(&leg) {
                std::cmp::Ordering::Less => key[dst].clone(),
                std::cmp::Ordering::Equal => left.clone(),
                std::cmp::Ordering::Greater if dst == leg + 1 => right.clone(),
                std::cmp::Ordering::Greater => key[dst - 1].clone(),
            });
            out.add_term(g, k, c.clone() * C::from_integer(w));
        }
    }
    out
}

/// Undeformed coproduct: primitive on generators, extended multiplicatively.
pub fn coproduct<C: Coefficient>(x: &Element<C>) -> Tensor<C> {
    coproduct_on_leg::<C, 1, 2>(x, 0)
}

/// Counit as a series in `1/kappa`: entry `m` is the coefficient of `kappa^-m`.
pub fn counit<C: Coefficient>(x: &Element<C>) -> Vec<C> {
    let mut out = vec![C::zero(); x.order() as usize + 1];
    for (g, key, c) in x.iter() {
        if key[0].is_unit() {
            out[g as usize] = out[g as usize].clone() + c.clone();
        }
    }
    out
}

/// Counit applied to tensor leg `leg` (`M = L - 1`).
pub fn counit_on_leg<C: Coefficient, const L: usize, const M: usize>(
    t: &Legs<C, L>,
    leg: usize,
) -> Legs<C, M> {
    assert!(M + 1 == L && leg < L, "counit_on_leg: need M = L - 1 and leg < L");
    let mut out = Series::zero(t.dim(), t.order());
    for (g, key, c) in t.iter() {
        if !key[leg].is_unit() {
            continue;
        }
        let mut rest = key.iter().enumerate().filter(|(i, _)| *i != leg).map(|(_, m)| m.clone());
        let k: [UMonomial; M] = std::array::from_fn(|_| rest.next().expect("leg count"));
        out.add_term(g, k, c.clone());
    }
    out
}

/// Replaces leg `leg` of every term by the image of a linear map on `U`.
pub fn map_leg<C: Coefficient, const L: usize>(
    t: &Legs<C, L>,
    leg: usize,
    f: impl Fn(&UMonomial) -> Element<C>,
) -> Legs<C, L> {
    let mut out = Series::zero(t.dim(), t.order());
    for (g, key, c) in t.iter() {
        for (g2, [m], c2) in f(&key[leg]).iter() {
            let mut k = key.clone();
            k[leg] = m.clone();
            out.add_term(g + g2, k, c.clone() * c2.clone());
        }
    }
    out
}

/// `S(P^a D^b) = (-1)^(|a|+b) D^b P^a`, normal ordered.
pub fn antipode_monomial<C: Coefficient>(m: &UMonomial, order: u32) -> Element<C> {
    let dim = m.dim();
    let sign = if (m.p_degree() + u32::from(m.d)).is_multiple_of(2) { 1 } else { -1 };
    let d_part = UMonomial { p: smallvec::SmallVec::from_elem(0, dim), d: m.d };
    let p_part = UMonomial { p: m.p.clone(), d: 0 };
    let mut tmp = Vec::new();
    d_part.product_weighted(&p_part, &mut tmp);
    Element::from_terms(dim, order, tmp.into_iter().map(|(k, w)| (0, [k], C::from_integer(sign * w))))
}

/// Undeformed antipode, an anti-homomorphism with `S(P) = -P`, `S(D) = -D`.
pub fn antipode<C: Coefficient>(x: &Element<C>) -> Element<C> {
    antipode_on_leg(x, 0)
}

pub fn antipode_on_leg<C: Coefficient, const L: usize>(t: &Legs<C, L>, leg: usize) -> Legs<C, L> {
    map_leg(t, leg, |m| antipode_monomial(m, t.order()))
}

/// `(P^a D^b)* = (D*)^b (P*)^a = (-D + c)^b P^a = P^a (-D + c + |a|)^b`
/// before complex conjugation of the coefficient.
fn conjugate_monomial(m: &UMonomial, shift: i64) -> Vec<(UMonomial, i64)> {
    let b = u32::from(m.d);
    let t = shift + i64::from(m.p_degree());
    (0..=b)
        .filter_map(|j| {
            let w = binomial(b, j) * checked_pow(t, b - j) * if j % 2 == 0 { 1 } else { -1 };
            (w != 0).then(|| (UMonomial { p: m.p.clone(), d: j as u16 }, w))
        })
        .collect()
}

/// The `*`-operation: antilinear anti-automorphism with `P_mu* = P_mu`,
/// `D* = -D + shift`, acting leg-wise ("unflipped") on tensors.
pub fn conjugate<C: Coefficient, const L: usize>(t: &Legs<C, L>, shift: i64) -> Legs<C, L> {
    let mut out = Series::zero(t.dim(), t.order());
    for (g, key, c) in t.iter() {
        let mut acc: Vec<([UMonomial; L], i64)> = vec![(key.clone(), 1)];
        for leg in 0..L {
            let images = conjugate_monomial(&key[leg], shift);
            let mut next = Vec::with_capacity(acc.len() * images.len());
            for (k, w) in &acc {
                for (m, w2) in &images {
                    let mut k2 = k.clone();
                    k2[leg] = m.clone();
                    next.push((k2, w * w2));
                }
            }
            acc = next;
        }
        let cc = c.conj();
        for (k, w) in acc {
            out.add_term(g, k, cc.clone() * C::from_integer(w));
        }
    }
    out
}

/// `tau(a ⊗ b) = b ⊗ a`.
pub fn flip<C: Coefficient>(t: &Tensor<C>) -> Tensor<C> {
    embed(t, [1, 0])
}

/// Substitutes `kappa -> -kappa`: negates every odd grade.
pub fn kappa_flip<C: Coefficient, K: Basis>(x: &Series<C, K>) -> Series<C, K> {
    x.map_graded(|g, c| if g % 2 == 1 { -c.clone() } else { c.clone() })
}

/// Places the legs of `t` at `positions` of an `M`-leg tensor, with units
/// elsewhere (`t_12`, `t_13`, `t_23`, `t ⊗ 1`, `1 ⊗ t`, flips).
pub fn embed<C: Coefficient, const L: usize, const M: usize>(
    t: &Legs<C, L>,
    positions: [usize; L],
) -> Legs<C, M> {
    let mut out = Series::zero(t.dim(), t.order());
    for (g, key, c) in t.iter() {
        let mut k: [UMonomial; M] = Basis::unit(t.dim());
        for (src, &dst) in positions.iter().enumerate() {
            k[dst] = key[src].clone();
        }
        out.add_term(g, k, c.clone());
    }
    out
}

/// `a ⊗ b` for single-leg elements.
pub fn tensor<C: Coefficient>(a: &Element<C>, b: &Element<C>) -> Tensor<C> {
    let left: Tensor<C> = embed(a, [0]);
    let right: Tensor<C> = embed(b, [1]);
    &left * &right
}

/// `mu(a ⊗ b) = ab`.
pub fn multiply_legs<C: Coefficient>(t: &Tensor<C>) -> Element<C> {
    let mut out = Element::zero(t.dim(), t.order());
    let mut tmp = Vec::new();
    for (g, [a, b], c) in t.iter() {
        tmp.clear();
        a.product_weighted(b, &mut tmp);
        for (m, w) in tmp.drain(..) {
            out.add_term(g, [m], c.clone() * C::from_integer(w));
        }
    }
    out
}

/// The three leg extensions entering the cocycle condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleExtension {
    CoproductLeft,
    CoproductRight,
    TensorOne,
    OneTensor,
}

pub fn extend_to_triple<C: Coefficient>(t: &Tensor<C>, mode: TripleExtension) -> Legs<C, 3> {
    match mode {
        TripleExtension::CoproductLeft => coproduct_on_leg(t, 0),
        TripleExtension::CoproductRight => coproduct_on_leg(t, 1),
        TripleExtension::TensorOne => embed(t, [0, 1]),
        TripleExtension::OneTensor => embed(t, [1, 2]),
    }
}

/// Evaluates a `D`-free tensor with `P_nu -> points[leg][nu]` on every leg and
/// `1/kappa -> kappa_inv`.
pub fn eval_momentum<C: Coefficient, const L: usize>(
    t: &Legs<C, L>,
    points: [&[C]; L],
    kappa_inv: &C,
) -> Result<C, AlgebraError> {
    let mut total = C::zero();
    for (g, key, c) in t.iter() {
        let mut term = c.clone();
        for (leg, m) in key.iter().enumerate() {
            if m.d != 0 {
                return Err(AlgebraError::ContainsDilatation);
            }
            if points[leg].len() != m.dim() {
                return Err(AlgebraError::DimensionMismatch { left: m.dim(), right: points[leg].len() });
            }
            for (x, &e) in points[leg].iter().zip(&m.p) {
                for _ in 0..e {
                    term = term * x.clone();
                }
            }
        }
        for _ in 0..g {
            term = term * kappa_inv.clone();
        }
        total = total + term;
    }
    Ok(total)
}

/// Checks a series for the absence of `D` in every leg.
pub fn is_dilatation_free<C: Coefficient, const L: usize>(t: &Legs<C, L>) -> bool {
    t.iter().all(|(_, key, _)| key.iter().all(|m| m.d == 0))
}
