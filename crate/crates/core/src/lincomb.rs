//! Sparse linear combinations over a cyclotomic field, keyed by any ordered
//! monomial type. Zero coefficients are never stored.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::scalar::{CyclotomicField, Scalar};

/// A basis element that knows how to print itself.
pub trait Monomial: Ord + Clone {
    /// True for the empty word (printed as `1` when alone).
    fn is_unit(&self) -> bool;
    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    field: CyclotomicField,
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero(field: CyclotomicField) -> Self {
        LinComb { field, terms: BTreeMap::new() }
    }

    pub fn term(field: CyclotomicField, key: K, coeff: Scalar) -> Self {
        let mut out = Self::zero(field);
        out.add_term(key, coeff);
        out
    }

    pub fn monomial(field: CyclotomicField, key: K) -> Self {
        Self::term(field, key, field.one())
    }

    pub fn from_terms(field: CyclotomicField, terms: impl IntoIterator<Item = (K, Scalar)>) -> Self {
        let mut out = Self::zero(field);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn field(&self) -> CyclotomicField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Largest key in the natural order of `K`.
    pub fn max_term(&self) -> Option<(&K, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn remove(&mut self, key: &K) -> Option<Scalar> {
        self.terms.remove(key)
    }

    pub fn add_scaled(&mut self, other: &LinComb<K>, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::zero(self.field);
        }
        LinComb { field: self.field, terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect() }
    }

    /// Applies a linear map defined on basis elements.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero(self.field);
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Keeps the terms selected by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            field: self.field,
            terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<K, Scalar> {
        self.terms
    }
}

impl<K: Ord + Clone> std::ops::Add<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &self.field.one());
        out
    }
}

impl<K: Ord + Clone> std::ops::Sub<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &self.field.integer(-1));
        out
    }
}

impl<K: Ord + Clone> std::ops::Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&self.field.integer(-1))
    }
}

/// Writes one term; `first` controls whether a leading `+` is emitted.
fn write_term<K: Monomial>(f: &mut fmt::Formatter<'_>, key: &K, c: &Scalar, first: bool) -> fmt::Result {
    let negative = c.is_negative_rational();
    let magnitude = if negative { -c } else { c.clone() };
    if first {
        if negative {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if negative { "-" } else { "+" })?;
    }
    let coeff = if magnitude.is_rational() { magnitude.to_string() } else { format!("({magnitude})") };
    if key.is_unit() {
        write!(f, "{coeff}")
    } else if magnitude.is_one() {
        key.write(f)
    } else {
        write!(f, "{coeff}·")?;
        key.write(f)
    }
}

impl<K: Monomial> fmt::Display for LinComb<K> {
    /// Terms in descending order, e.g. `x2 x1 - x1 x2 + 1/2·x1 x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, k, c, i == 0)?;
        }
        Ok(())
    }
}

impl<K: Monomial> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinComb({self})")
    }
}

impl<A: Monomial, B: Monomial> Monomial for (A, B) {
    fn is_unit(&self) -> bool {
        false
    }
    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_leg(f, &self.0)?;
        write!(f, " ⊗ ")?;
        write_leg(f, &self.1)
    }
}

fn write_leg<K: Monomial>(f: &mut fmt::Formatter<'_>, k: &K) -> fmt::Result {
    if k.is_unit() {
        write!(f, "1")
    } else {
        k.write(f)
    }
}
