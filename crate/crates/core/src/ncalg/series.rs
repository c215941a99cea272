//! Truncated graded series over a normal-ordered basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::coeff::Coefficient;
use super::error::AlgebraError;
use super::monomial::Basis;

/// A sparse formal series `sum_m sum_K c_{m,K} kappa^{-m} K`, truncated at
/// `order`: terms with grade above `order` are never stored, and neither are
/// zero coefficients.
///
/// The grade is the power of the formal parameter (`1/kappa` for the
/// enveloping algebra, the wave-vector scale for the normal-ordering
/// checks). Terms iterate sorted by `(grade, basis element)`.
#[derive(Clone, PartialEq)]
pub struct Series<C, K> {
    dim: usize,
    order: u32,
    terms: BTreeMap<(u32, K), C>,
}

impl<C: Coefficient, K: Basis> Series<C, K> {
    pub fn zero(dim: usize, order: u32) -> Self {
        Self { dim, order, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize, order: u32) -> Self {
        Self::scalar(dim, order, C::one())
    }

    pub fn scalar(dim: usize, order: u32, c: C) -> Self {
        Self::term(dim, order, 0, K::unit(dim), c)
    }

    pub fn term(dim: usize, order: u32, grade: u32, key: K, c: C) -> Self {
        let mut s = Self::zero(dim, order);
        s.add_term(grade, key, c);
        s
    }

    pub fn from_terms(dim: usize, order: u32, terms: impl IntoIterator<Item = (u32, K, C)>) -> Self {
        let mut s = Self::zero(dim, order);
        for (g, k, c) in terms {
            s.add_term(g, k, c);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &K, &C)> + '_ {
        self.terms.iter().map(|((g, k), c)| (*g, k, c))
    }

    pub fn coefficient(&self, grade: u32, key: &K) -> C {
        self.terms.get(&(grade, key.clone())).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, grade: u32, key: K, c: C) {
        if grade > self.order || c.is_zero() {
            return;
        }
        debug_assert_eq!(key.dim(), self.dim);
        use std::collections::btree_map::Entry;
        match self.terms.entry((grade, key)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Drops every term above `order` and lowers the truncation.
    pub fn truncated(&self, order: u32) -> Self {
        assert!(order <= self.order, "cannot raise truncation order by truncating");
        self.with_order(order)
    }

    /// Re-labels the truncation order. Raising it is only meaningful for
    /// elements known exactly (polynomials), e.g. generators.
    pub fn with_order(&self, order: u32) -> Self {
        Self {
            dim: self.dim,
            order,
            terms: self
                .terms
                .iter()
                .filter(|((g, _), _)| *g <= order)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn grade_part(&self, grade: u32) -> Self {
        Self {
            dim: self.dim,
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|((g, _), _)| *g == grade)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn min_grade(&self) -> Option<u32> {
        self.terms.keys().map(|(g, _)| *g).min()
    }

    pub fn max_grade(&self) -> Option<u32> {
        self.terms.keys().map(|(g, _)| *g).max()
    }

    /// The constant coefficient of the unit basis element at grade 0.
    pub fn constant_term(&self) -> C {
        self.coefficient(0, &K::unit(self.dim))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim, self.order);
        }
        self.map_coeffs(|x| x.clone() * c.clone())
    }

    /// Multiplies by `kappa^{-shift}`.
    pub fn kappa_shift(&self, shift: u32) -> Self {
        Self {
            dim: self.dim,
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|((g, _), _)| g + shift <= self.order)
                .map(|((g, k), c)| ((g + shift, k.clone()), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<C2: Coefficient>(&self, f: impl Fn(&C) -> C2) -> Series<C2, K> {
        let mut out = Series::zero(self.dim, self.order);
        for ((g, k), c) in &self.terms {
            out.add_term(*g, k.clone(), f(c));
        }
        out
    }

    /// Applies `f` to every grade (`kappa` sign flips and the like).
    pub fn map_graded(&self, f: impl Fn(u32, &C) -> C) -> Self {
        let mut out = Self::zero(self.dim, self.order);
        for ((g, k), c) in &self.terms {
            out.add_term(*g, k.clone(), f(*g, c));
        }
        out
    }

    /// Linear extension of a map on basis elements.
    pub fn map_basis<K2: Basis>(
        &self,
        dim: usize,
        f: impl Fn(&K) -> Series<C, K2>,
    ) -> Series<C, K2> {
        let mut out = Series::zero(dim, self.order);
        for ((g, k), c) in &self.terms {
            for (g2, k2, c2) in f(k).iter() {
                out.add_term(g + g2, k2.clone(), c.clone() * c2.clone());
            }
        }
        out
    }

    fn check_compatible(&self, rhs: &Self) -> Result<(), AlgebraError> {
        if self.dim != rhs.dim {
            return Err(AlgebraError::DimensionMismatch { left: self.dim, right: rhs.dim });
        }
        if self.order != rhs.order {
            return Err(AlgebraError::TruncationMismatch { left: self.order, right: rhs.order });
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for ((g, k), c) in &rhs.terms {
            out.add_term(*g, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for ((g, k), c) in &rhs.terms {
            out.add_term(*g, k.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Normal-ordered product, truncated at the common order.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(rhs)?;
        let order = self.order;
        let mut acc: HashMap<(u32, K), C> = HashMap::new();
        let mut expansion = Vec::new();
        let i_powers: [C; 4] = std::array::from_fn(|k| C::i_pow(k as u32));
        for ((g1, k1), c1) in &self.terms {
            for ((g2, k2), c2) in rhs.terms.iter().take_while(|((g2, _), _)| g1 + g2 <= order) {
                let g = g1 + g2;
                let c = c1.clone() * c2.clone();
                expansion.clear();
                k1.product(k2, &mut expansion);
                for (k, w, ip) in expansion.drain(..) {
                    if w == 0 {
                        continue;
                    }
                    let mut term = c.clone();
                    if w != 1 {
                        term = term * C::from_integer(w);
                    }
                    if ip % 4 != 0 {
                        term = term * i_powers[(ip % 4) as usize].clone();
                    }
                    match acc.entry((g, k)) {
                        std::collections::hash_map::Entry::Vacant(e) => {
                            e.insert(term);
                        }
                        std::collections::hash_map::Entry::Occupied(mut e) => {
                            let v = e.get_mut();
                            *v = v.clone() + term;
                        }
                    }
                }
            }
        }
        Ok(Self {
            dim: self.dim,
            order,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.dim, self.order);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &(self * rhs) - &(rhs * self)
    }

    /// Lowest grade at which `self` and `other` differ, ignoring the
    /// truncation labels (terms above the smaller order are not compared).
    pub fn first_difference_order(&self, other: &Self) -> Option<u32> {
        let order = self.order.min(other.order);
        let a = self.with_order(order);
        let b = other.with_order(order);
        let mut diff = a;
        for ((g, k), c) in &b.terms {
            diff.add_term(*g, k.clone(), -c.clone());
        }
        diff.min_grade()
    }

    /// Term-by-term equality regardless of truncation labels.
    pub fn same_terms(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<C: Coefficient, K: Basis> Add for &Series<C, K> {
    type Output = Series<C, K>;
    fn add(self, rhs: Self) -> Series<C, K> {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("series addition: {e}"))
    }
}

impl<C: Coefficient, K: Basis> Sub for &Series<C, K> {
    type Output = Series<C, K>;
    fn sub(self, rhs: Self) -> Series<C, K> {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("series subtraction: {e}"))
    }
}

impl<C: Coefficient, K: Basis> Mul for &Series<C, K> {
    type Output = Series<C, K>;
    fn mul(self, rhs: Self) -> Series<C, K> {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("series product: {e}"))
    }
}

impl<C: Coefficient, K: Basis> Add for Series<C, K> {
    type Output = Series<C, K>;
    fn add(self, rhs: Self) -> Series<C, K> {
        &self + &rhs
    }
}

impl<C: Coefficient, K: Basis> Sub for Series<C, K> {
    type Output = Series<C, K>;
    fn sub(self, rhs: Self) -> Series<C, K> {
        &self - &rhs
    }
}

impl<C: Coefficient, K: Basis> Mul for Series<C, K> {
    type Output = Series<C, K>;
    fn mul(self, rhs: Self) -> Series<C, K> {
        &self * &rhs
    }
}

impl<C: Coefficient, K: Basis> Neg for &Series<C, K> {
    type Output = Series<C, K>;
    fn neg(self) -> Series<C, K> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Coefficient, K: Basis> Neg for Series<C, K> {
    type Output = Series<C, K>;
    fn neg(self) -> Series<C, K> {
        -&self
    }
}

impl<C: Coefficient + fmt::Display, K: Basis> Series<C, K> {
    /// Parses the line format written by `Display`.
    pub fn parse(text: &str, dim: usize, order: u32) -> Result<Self, AlgebraError>
    where
        C: std::str::FromStr<Err = AlgebraError>,
    {
        let mut out = Self::zero(dim, order);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if line == "0" {
                continue;
            }
            let mut parts = line.splitn(3, " * ");
            let (Some(coeff), Some(kappa), Some(key)) = (parts.next(), parts.next(), parts.next())
            else {
                return Err(AlgebraError::Parse(format!("malformed term `{line}`")));
            };
            let c: C = coeff.parse()?;
            let grade: u32 = kappa
                .strip_prefix("kappa^-")
                .and_then(|g| g.parse().ok())
                .ok_or_else(|| AlgebraError::Parse(format!("malformed grade `{kappa}`")))?;
            out.add_term(grade, K::parse_text(key, dim)?, c);
        }
        Ok(out)
    }
}

struct KeyText<'a, K>(&'a K);

impl<K: Basis> fmt::Display for KeyText<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_text(f)
    }
}

/// One term per line: `<coeff> * kappa^-<grade> * <basis element>`.
impl<C: Coefficient + fmt::Display, K: Basis> fmt::Display for Series<C, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0\n");
        }
        for ((g, k), c) in &self.terms {
            writeln!(f, "{c} * kappa^-{g} * {}", KeyText(k))?;
        }
        Ok(())
    }
}

impl<C: Coefficient + fmt::Display, K: Basis> fmt::Debug for Series<C, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series(dim={}, order={}) {{\n{self}}}", self.dim, self.order)
    }
}

impl<C: Coefficient, K: Basis> Series<C, K> {
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }
}
