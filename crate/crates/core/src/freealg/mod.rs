//! The tensor algebra T(V): words, the braid-group action on tensor powers,
//! quantum symmetrizers and the braided coproduct.

mod braid;
mod coproduct;
mod symmetrizer;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::expr::{self, Interpret};
use crate::lincomb::{LinComb, Monomial};
use crate::scalar::{CyclotomicField, Scalar, ScalarError};

pub use braid::{apply_sigma, braid_word_action, reduced_word};
pub use coproduct::{braid_words, braided_coproduct, primitivity_defect, tensor_mul};
pub use symmetrizer::{
    default_degree_cap, sigma_dense, symmetrizer_apply, symmetrizer_matrix, SymmetrizerTower,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeAlgError {
    #[error("braid generator s{index} out of range for {n} tensor factors")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("letter x{letter} out of range for a space of dimension {dim}")]
    LetterOutOfRange { letter: usize, dim: usize },
    #[error("word of length {got} where length {expected} was expected")]
    WrongLength { expected: usize, got: usize },
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("element must have degree at least 1")]
    DegreeZero,
    #[error("degree {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("only division by a nonzero scalar is supported")]
    NonScalarDivision,
    #[error("negative powers of non-scalars are not supported")]
    NegativePower,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A word in the letters x1, x2, … (stored 1-based).
///
/// Words are ordered by length first and lexicographically within a length;
/// for a fixed length this is the order of [`Word::index`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1));
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: u8) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Position of this word among the d^n words of its length:
    /// Σ (letter − 1)·d^(positions to the right).
    pub fn index(&self, d: usize) -> usize {
        self.0.iter().fold(0, |acc, &l| acc * d + (l as usize - 1))
    }

    pub fn from_index(mut index: usize, n: usize, d: usize) -> Word {
        let mut v = vec![0u8; n];
        for slot in v.iter_mut().rev() {
            *slot = (index % d) as u8 + 1;
            index /= d;
        }
        Word(v)
    }

    /// All d^n words of length n in increasing order.
    pub fn all(n: usize, d: usize) -> impl Iterator<Item = Word> {
        (0..d.pow(n as u32)).map(move |i| Word::from_index(i, n, d))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl Monomial for Word {
    fn is_unit(&self) -> bool {
        self.0.is_empty()
    }
    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of T(V).
pub type FreeElement = LinComb<Word>;
/// An element of T(V)⊗T(V).
pub type TensorSquareElement = LinComb<(Word, Word)>;

pub fn word_element(field: CyclotomicField, letters: &[u8]) -> FreeElement {
    FreeElement::monomial(field, Word::new(letters.to_vec()))
}

/// Concatenation product in T(V).
pub fn free_mul(a: &FreeElement, b: &FreeElement) -> FreeElement {
    let mut out = FreeElement::zero(a.field());
    for (u, c) in a.iter() {
        for (v, d) in b.iter() {
            out.add_term(u.concat(v), c * d);
        }
    }
    out
}

/// The common length of all words, or `None` for zero or mixed lengths.
pub fn homogeneous_degree(e: &FreeElement) -> Option<usize> {
    let mut lens = e.keys().map(Word::len);
    let first = lens.next()?;
    lens.all(|l| l == first).then_some(first)
}

/// Dense coordinates of a homogeneous element of degree n in V^⊗n.
pub fn to_dense(e: &FreeElement, n: usize, d: usize) -> Vec<Scalar> {
    let mut v = vec![e.field().zero(); d.pow(n as u32)];
    for (w, c) in e.iter() {
        assert_eq!(w.len(), n, "element is not of degree {n}");
        v[w.index(d)] = c.clone();
    }
    v
}

pub fn from_dense(field: CyclotomicField, v: &[Scalar], n: usize, d: usize) -> FreeElement {
    FreeElement::from_terms(
        field,
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (Word::from_index(i, n, d), c.clone())),
    )
}

/// Divides by the coefficient of the largest word, so the leading coefficient is 1.
pub fn normalize_leading(e: &FreeElement) -> FreeElement {
    match e.max_term() {
        None => e.clone(),
        Some((_, c)) => e.scale(&c.inv().expect("stored coefficients are nonzero")),
    }
}

struct FreeInterp {
    field: CyclotomicField,
    dim: usize,
}

impl FreeInterp {
    fn as_scalar(e: &FreeElement) -> Option<Scalar> {
        match e.len() {
            0 => Some(e.field().zero()),
            1 => {
                let (w, c) = e.max_term().expect("one term");
                w.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }
}

impl Interpret for FreeInterp {
    type Value = FreeElement;
    type Error = FreeAlgError;

    fn int(&self, n: &BigInt) -> Result<FreeElement, FreeAlgError> {
        Ok(FreeElement::term(self.field, Word::empty(), self.field.rational(BigRational::from_integer(n.clone()))))
    }
    fn symbol(&self, name: &str) -> Result<FreeElement, FreeAlgError> {
        if name == "z" {
            return Ok(FreeElement::term(self.field, Word::empty(), self.field.zeta()));
        }
        match expr::letter_index(name) {
            Some(l) if l <= self.dim => Ok(word_element(self.field, &[l as u8])),
            Some(l) => Err(FreeAlgError::LetterOutOfRange { letter: l, dim: self.dim }),
            None => Err(ScalarError::UnknownSymbol(name.to_string()).into()),
        }
    }
    fn add(&self, a: FreeElement, b: FreeElement) -> Result<FreeElement, FreeAlgError> {
        Ok(&a + &b)
    }
    fn sub(&self, a: FreeElement, b: FreeElement) -> Result<FreeElement, FreeAlgError> {
        Ok(&a - &b)
    }
    fn mul(&self, a: FreeElement, b: FreeElement) -> Result<FreeElement, FreeAlgError> {
        Ok(free_mul(&a, &b))
    }
    fn div(&self, a: FreeElement, b: FreeElement) -> Result<FreeElement, FreeAlgError> {
        let s = Self::as_scalar(&b).ok_or(FreeAlgError::NonScalarDivision)?;
        let inv = s.inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(a.scale(&inv))
    }
    fn neg(&self, a: FreeElement) -> Result<FreeElement, FreeAlgError> {
        Ok(-&a)
    }
    fn pow(&self, a: FreeElement, e: i64) -> Result<FreeElement, FreeAlgError> {
        if let Some(s) = Self::as_scalar(&a) {
            return Ok(FreeElement::term(self.field, Word::empty(), s.pow(e)?));
        }
        if e < 0 {
            return Err(FreeAlgError::NegativePower);
        }
        let mut acc = FreeElement::monomial(self.field, Word::empty());
        for _ in 0..e {
            acc = free_mul(&acc, &a);
        }
        Ok(acc)
    }
}

/// Parses an element of T(V) in the letters x1..x_dim, e.g. `x2 x1 - x1 x2 + 1/2 x1^2`.
pub fn parse_free(text: &str, field: CyclotomicField, dim: usize) -> Result<FreeElement, FreeAlgError> {
    let e = expr::parse(text)?;
    FreeInterp { field, dim }.eval(&e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> CyclotomicField {
        CyclotomicField::new(12).unwrap()
    }

    #[test]
    fn word_order_and_index() {
        let a = Word::new(vec![2]);
        let b = Word::new(vec![1, 1]);
        assert!(a < b);
        assert_eq!(Word::new(vec![2, 1]).index(2), 2);
        for (i, w) in Word::all(3, 3).enumerate() {
            assert_eq!(w.index(3), i);
        }
        let words: Vec<Word> = Word::all(3, 2).collect();
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn parse_and_print() {
        let f = f();
        let e = parse_free("x2 x1 - x1 x2 + 1/2 x1^2", f, 2).unwrap();
        assert_eq!(e.to_string(), "x2 x1 - x1 x2 + 1/2·x1 x1");
        assert_eq!(parse_free(&e.to_string(), f, 2).unwrap(), e);
        let g = parse_free("(1 + z) x1 - 3", f, 2).unwrap();
        assert_eq!(g.to_string(), "(1 + z)·x1 - 3");
        assert_eq!(parse_free(&g.to_string(), f, 2).unwrap(), g);
        assert_eq!(parse_free("x3", f, 2), Err(FreeAlgError::LetterOutOfRange { letter: 3, dim: 2 }));
        assert_eq!(parse_free("x1 / x2", f, 2), Err(FreeAlgError::NonScalarDivision));
        assert_eq!(parse_free("0", f, 2).unwrap().to_string(), "0");
    }

    #[test]
    fn degrees() {
        let f = f();
        assert_eq!(homogeneous_degree(&parse_free("x1 x2 + x2 x2", f, 2).unwrap()), Some(2));
        assert_eq!(homogeneous_degree(&parse_free("x1 + x2 x2", f, 2).unwrap()), None);
        let e = parse_free("x1 x2 - 1/3 x2 x1", f, 2).unwrap();
        assert_eq!(from_dense(f, &to_dense(&e, 2, 2), 2, 2), e);
    }
}
