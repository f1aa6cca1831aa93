//! The smash product T(V)#kG for an abelian group acting linearly on V.
//! Elements are stored with every group letter moved to the right, using
//! h x_i = (h·x_i) h.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::expr::{self, Interpret};
use crate::freealg::{FreeElement, Word};
use crate::lincomb::{LinComb, Monomial};
use crate::scalar::{CyclotomicField, Matrix, Scalar, ScalarError};
use crate::ydcat::{FGAbelianGroup, GroupElem, YdTriple};

/// A word followed by a group element: `x_{i1} ⋯ x_{ik} h`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SmashMonomial {
    pub word: Word,
    pub group: GroupElem,
}

impl Monomial for SmashMonomial {
    fn is_unit(&self) -> bool {
        self.word.is_empty() && self.group.coords().iter().all(|&x| x == 0)
    }
    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let trivial = self.group.coords().iter().all(|&x| x == 0);
        match (self.word.is_empty(), trivial) {
            (true, true) => write!(f, "1"),
            (true, false) => write!(f, "{}", self.group),
            (false, true) => write!(f, "{}", self.word),
            (false, false) => write!(f, "{} {}", self.word, self.group),
        }
    }
}

pub type SmashElement = LinComb<SmashMonomial>;
pub type SmashTensor = LinComb<(SmashMonomial, SmashMonomial)>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SmashError {
    #[error("expected {expected} action matrices, got {got}")]
    WrongActionCount { expected: usize, got: usize },
    #[error("action of h{0} is not an invertible {1}x{1} matrix")]
    BadAction(usize, usize),
    #[error("letter x{letter} out of range for dimension {dim}")]
    LetterOutOfRange { letter: usize, dim: usize },
    #[error("group generator h{index} out of range ({count} generators)")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("only division by a nonzero scalar is supported")]
    NonScalarDivision,
    #[error("negative powers are only supported for scalars and group elements")]
    NegativePower,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// T(V)#kG with each generator h_i acting on V by an invertible matrix
/// (column j = h_i·x_j), and a distinguished degree g for the coproduct
/// Δ(x_i) = x_i⊗1 + g⊗x_i.
pub struct SmashAlgebra {
    field: CyclotomicField,
    dim: usize,
    group: FGAbelianGroup,
    g: GroupElem,
    actions: Vec<Matrix>,
    inverses: Vec<Matrix>,
    cache: Mutex<BTreeMap<GroupElem, Matrix>>,
}

impl Clone for SmashAlgebra {
    fn clone(&self) -> Self {
        SmashAlgebra {
            field: self.field,
            dim: self.dim,
            group: self.group.clone(),
            g: self.g.clone(),
            actions: self.actions.clone(),
            inverses: self.inverses.clone(),
            cache: Mutex::new(BTreeMap::new()),
        }
    }
}

impl fmt::Debug for SmashAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SmashAlgebra").field("dim", &self.dim).field("group", &self.group).field("g", &self.g).finish()
    }
}

impl SmashAlgebra {
    pub fn new(
        field: CyclotomicField,
        dim: usize,
        group: FGAbelianGroup,
        g: GroupElem,
        actions: Vec<Matrix>,
    ) -> Result<Self, SmashError> {
        if actions.len() != group.num_generators() {
            return Err(SmashError::WrongActionCount { expected: group.num_generators(), got: actions.len() });
        }
        let mut inverses = Vec::with_capacity(actions.len());
        for (i, a) in actions.iter().enumerate() {
            if a.rows() != dim || a.cols() != dim || a.field() != field {
                return Err(SmashError::BadAction(i + 1, dim));
            }
            inverses.push(invert(a).ok_or(SmashError::BadAction(i + 1, dim))?);
        }
        Ok(SmashAlgebra { field, dim, group, g, actions, inverses, cache: Mutex::new(BTreeMap::new()) })
    }

    /// T(V)#kG for V = V_g(χ, η): h·x1 = χ(h)x1, h·x2 = χ(h)x2 + η(h)x1.
    pub fn from_triple(t: &YdTriple) -> Self {
        let field = t.field();
        let group = t.group().clone();
        let actions = t
            .chi()
            .values()
            .iter()
            .zip(t.eta().values())
            .map(|(c, e)| Matrix::from_rows(field, vec![vec![c.clone(), e.clone()], vec![field.zero(), c.clone()]]))
            .collect();
        Self::new(field, 2, group, t.g().clone(), actions).expect("triple actions are invertible")
    }

    /// The free algebra T(V) (trivial group).
    pub fn free(field: CyclotomicField, dim: usize) -> Self {
        let group = FGAbelianGroup::free(0);
        Self::new(field, dim, group.clone(), group.identity(), Vec::new()).expect("no actions to check")
    }

    pub fn field(&self) -> CyclotomicField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> &FGAbelianGroup {
        &self.group
    }

    pub fn g(&self) -> &GroupElem {
        &self.g
    }

    /// Matrix of h acting on V.
    pub fn action_matrix(&self, h: &GroupElem) -> Matrix {
        if let Some(m) = self.cache.lock().expect("cache poisoned").get(h) {
            return m.clone();
        }
        let mut acc = Matrix::identity(self.field, self.dim);
        for (i, &k) in h.coords().iter().enumerate() {
            let base = if k < 0 { &self.inverses[i] } else { &self.actions[i] };
            for _ in 0..k.unsigned_abs() {
                acc = acc.mul(base);
            }
        }
        self.cache.lock().expect("cache poisoned").insert(h.clone(), acc.clone());
        acc
    }

    /// h·w for a word w, acting letter by letter.
    pub fn act_word(&self, h: &GroupElem, w: &Word) -> FreeElement {
        let field = self.field;
        if self.group.is_identity(h) {
            return FreeElement::monomial(field, w.clone());
        }
        let m = self.action_matrix(h);
        let mut acc: Vec<(Vec<u8>, Scalar)> = vec![(Vec::with_capacity(w.len()), field.one())];
        for &l in w.letters() {
            let col = l as usize - 1;
            let mut next = Vec::with_capacity(acc.len() * self.dim);
            for (prefix, c) in &acc {
                for row in 0..self.dim {
                    let a = m.get(row, col);
                    if !a.is_zero() {
                        let mut p = prefix.clone();
                        p.push(row as u8 + 1);
                        next.push((p, c * a));
                    }
                }
            }
            acc = next;
        }
        FreeElement::from_terms(field, acc.into_iter().map(|(p, c)| (Word::new(p), c)))
    }

    /// h e h⁻¹: the action on words, group tags untouched.
    pub fn conjugate(&self, h: &GroupElem, e: &SmashElement) -> SmashElement {
        e.map_linear(|m| {
            let moved = self.act_word(h, &m.word);
            LinComb::from_terms(
                self.field,
                moved.iter().map(|(w, c)| (SmashMonomial { word: w.clone(), group: m.group.clone() }, c.clone())),
            )
        })
    }

    pub fn one(&self) -> SmashElement {
        self.scalar(self.field.one())
    }

    pub fn scalar(&self, c: Scalar) -> SmashElement {
        LinComb::term(self.field, SmashMonomial { word: Word::empty(), group: self.group.identity() }, c)
    }

    pub fn x(&self, l: u8) -> SmashElement {
        LinComb::monomial(self.field, SmashMonomial { word: Word::letter(l), group: self.group.identity() })
    }

    pub fn word(&self, letters: &[u8]) -> SmashElement {
        LinComb::monomial(self.field, SmashMonomial { word: Word::new(letters.to_vec()), group: self.group.identity() })
    }

    pub fn grouplike(&self, h: GroupElem) -> SmashElement {
        LinComb::monomial(self.field, SmashMonomial { word: Word::empty(), group: h })
    }

    /// g^k.
    pub fn g_pow(&self, k: i64) -> SmashElement {
        self.grouplike(self.group.pow(&self.g, k))
    }

    pub fn from_free(&self, e: &FreeElement) -> SmashElement {
        LinComb::from_terms(
            self.field,
            e.iter().map(|(w, c)| (SmashMonomial { word: w.clone(), group: self.group.identity() }, c.clone())),
        )
    }

    /// (u h)(v k) = u (h·v) hk.
    pub fn mul_monomials(&self, a: &SmashMonomial, b: &SmashMonomial) -> SmashElement {
        let moved = self.act_word(&a.group, &b.word);
        let group = self.group.mul(&a.group, &b.group);
        LinComb::from_terms(
            self.field,
            moved.iter().map(|(w, c)| (SmashMonomial { word: a.word.concat(w), group: group.clone() }, c.clone())),
        )
    }

    pub fn mul(&self, a: &SmashElement, b: &SmashElement) -> SmashElement {
        let mut out = LinComb::zero(self.field);
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                out.add_scaled(&self.mul_monomials(ma, mb), &(ca * cb));
            }
        }
        out
    }

    /// Kills x-letters and sends group elements to 1.
    pub fn counit(&self, e: &SmashElement) -> Scalar {
        let mut acc = self.field.zero();
        for (m, c) in e.iter() {
            if m.word.is_empty() {
                acc += c;
            }
        }
        acc
    }

    pub fn tensor_mul(&self, a: &SmashTensor, b: &SmashTensor) -> SmashTensor {
        let mut out = LinComb::zero(self.field);
        for ((a1, a2), ca) in a.iter() {
            for ((b1, b2), cb) in b.iter() {
                let left = self.mul_monomials(a1, b1);
                let right = self.mul_monomials(a2, b2);
                let c = ca * cb;
                for (l, x) in left.iter() {
                    for (r, y) in right.iter() {
                        out.add_term((l.clone(), r.clone()), &(&c * x) * y);
                    }
                }
            }
        }
        out
    }

    /// The algebra map with Δ(x_i) = x_i⊗1 + g⊗x_i and Δ(h) = h⊗h.
    pub fn coproduct(&self, e: &SmashElement) -> SmashTensor {
        let field = self.field;
        let id = self.group.identity();
        let unit = SmashMonomial { word: Word::empty(), group: id.clone() };
        let g = SmashMonomial { word: Word::empty(), group: self.g.clone() };
        let mut out = LinComb::zero(field);
        for (m, c) in e.iter() {
            let mut acc = LinComb::monomial(field, (unit.clone(), unit.clone()));
            for &l in m.word.letters() {
                let x = SmashMonomial { word: Word::letter(l), group: id.clone() };
                let dx = LinComb::from_terms(field, [((x.clone(), unit.clone()), field.one()), ((g.clone(), x), field.one())]);
                acc = self.tensor_mul(&acc, &dx);
            }
            let h = SmashMonomial { word: Word::empty(), group: m.group.clone() };
            acc = self.tensor_mul(&acc, &LinComb::monomial(field, (h.clone(), h)));
            out.add_scaled(&acc, c);
        }
        out
    }

    /// a ⊗ b as an element of the tensor square.
    pub fn tensor(&self, a: &SmashElement, b: &SmashElement) -> SmashTensor {
        let mut out = LinComb::zero(self.field);
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                out.add_term((x.clone(), y.clone()), c * d);
            }
        }
        out
    }

    /// Parses elements such as `x2 x1 g - 1/2 x1^2 + 3 g^-2`; `g` is the
    /// distinguished element and `h1, h2, …` are the group generators.
    pub fn parse(&self, text: &str) -> Result<SmashElement, SmashError> {
        let e = expr::parse(text)?;
        SmashInterp { alg: self }.eval(&e)
    }
}

fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.rows();
    let field = a.field();
    let mut aug = Matrix::zeros(field, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n + i, field.one());
    }
    let r = aug.rref();
    if r.pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    let mut inv = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.matrix.get(i, n + j).clone());
        }
    }
    Some(inv)
}

struct SmashInterp<'a> {
    alg: &'a SmashAlgebra,
}

impl SmashInterp<'_> {
    fn as_scalar(e: &SmashElement) -> Option<Scalar> {
        match e.len() {
            0 => Some(e.field().zero()),
            1 => {
                let (m, c) = e.max_term().expect("one term");
                m.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn as_grouplike(e: &SmashElement) -> Option<GroupElem> {
        if e.len() != 1 {
            return None;
        }
        let (m, c) = e.max_term().expect("one term");
        (m.word.is_empty() && c.is_one()).then(|| m.group.clone())
    }
}

impl Interpret for SmashInterp<'_> {
    type Value = SmashElement;
    type Error = SmashError;

    fn int(&self, n: &BigInt) -> Result<SmashElement, SmashError> {
        Ok(self.alg.scalar(self.alg.field.rational(BigRational::from_integer(n.clone()))))
    }
    fn symbol(&self, name: &str) -> Result<SmashElement, SmashError> {
        let alg = self.alg;
        if name == "z" {
            return Ok(alg.scalar(alg.field.zeta()));
        }
        if name == "g" {
            return Ok(alg.grouplike(alg.g.clone()));
        }
        if let Some(l) = expr::letter_index(name) {
            if l > alg.dim {
                return Err(SmashError::LetterOutOfRange { letter: l, dim: alg.dim });
            }
            return Ok(alg.x(l as u8));
        }
        if let Some(i) = expr::generator_index(name) {
            let count = alg.group.num_generators();
            if i > count {
                return Err(SmashError::GeneratorOutOfRange { index: i, count });
            }
            return Ok(alg.grouplike(alg.group.generator(i - 1)));
        }
        Err(ScalarError::UnknownSymbol(name.to_string()).into())
    }
    fn add(&self, a: SmashElement, b: SmashElement) -> Result<SmashElement, SmashError> {
        Ok(&a + &b)
    }
    fn sub(&self, a: SmashElement, b: SmashElement) -> Result<SmashElement, SmashError> {
        Ok(&a - &b)
    }
    fn mul(&self, a: SmashElement, b: SmashElement) -> Result<SmashElement, SmashError> {
        Ok(self.alg.mul(&a, &b))
    }
    fn div(&self, a: SmashElement, b: SmashElement) -> Result<SmashElement, SmashError> {
        let s = Self::as_scalar(&b).ok_or(SmashError::NonScalarDivision)?;
        let inv = s.inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(a.scale(&inv))
    }
    fn neg(&self, a: SmashElement) -> Result<SmashElement, SmashError> {
        Ok(-&a)
    }
    fn pow(&self, a: SmashElement, e: i64) -> Result<SmashElement, SmashError> {
        let alg = self.alg;
        if let Some(s) = Self::as_scalar(&a) {
            return Ok(alg.scalar(s.pow(e)?));
        }
        if let Some(h) = Self::as_grouplike(&a) {
            return Ok(alg.grouplike(alg.group.pow(&h, e)));
        }
        if e < 0 {
            return Err(SmashError::NegativePower);
        }
        let mut acc = alg.one();
        for _ in 0..e {
            acc = alg.mul(&acc, &a);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ydcat::standard_triple;

    fn algebras() -> (SmashAlgebra, SmashAlgebra) {
        let f = CyclotomicField::new(12).unwrap();
        (
            SmashAlgebra::from_triple(&standard_triple(&f.one()).unwrap()),
            SmashAlgebra::from_triple(&standard_triple(&f.integer(-1)).unwrap()),
        )
    }

    #[test]
    fn commutation() {
        let (jordan, sup) = algebras();
        let lhs = jordan.mul(&jordan.g_pow(1), &jordan.x(2));
        assert_eq!(lhs, jordan.parse("x2 g + x1 g").unwrap());
        assert_eq!(lhs.to_string(), "x2 h1 + x1 h1");
        let lhs = sup.mul(&sup.g_pow(1), &sup.x(1));
        assert_eq!(lhs, sup.parse("-x1 g").unwrap());
        let e = sup.parse("x2 x1 g^-3 - 2 x1").unwrap();
        assert_eq!(sup.mul(&sup.one(), &e), e);
        assert_eq!(sup.parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn grouplike_coproduct() {
        let (jordan, _) = algebras();
        let g3 = jordan.g_pow(3);
        assert_eq!(jordan.coproduct(&g3), jordan.tensor(&g3, &g3));
        let x1 = jordan.x(1);
        let expected = &jordan.tensor(&x1, &jordan.one()) + &jordan.tensor(&jordan.g_pow(1), &x1);
        assert_eq!(jordan.coproduct(&x1), expected);
    }

    #[test]
    fn super_jordan_r_coproduct() {
        // Δ(r) = r⊗1 + g³⊗r + x1g²⊗x1² − 2x1²g⊗x2
        let (_, sup) = algebras();
        let x21 = sup.parse("x2 x1 + x1 x2").unwrap();
        let (x1, x2) = (sup.x(1), sup.x(2));
        let r = &(&sup.mul(&x2, &x21) - &sup.mul(&x21, &x2)) - &sup.mul(&x1, &x21);
        let x11 = sup.mul(&x1, &x1);
        let mut expected = &sup.tensor(&r, &sup.one()) + &sup.tensor(&sup.g_pow(3), &r);
        expected = &expected + &sup.tensor(&sup.mul(&x1, &sup.g_pow(2)), &x11);
        expected = &expected - &sup.tensor(&sup.mul(&x11, &sup.g_pow(1)), &x2).scale(&sup.field().integer(2));
        assert_eq!(sup.coproduct(&r), expected);
    }
}
