//! The liftings U(D, λ) of Jordan and super Jordan planes as quotients of
//! T(V)#kG, and the checks that certify them at bounded degree.

mod iso;

use std::fmt;

use thiserror::Error;

use crate::nichols::{nichols_dims, NicholsError};
use crate::rewrite::{complete_to_degree, MonomialOrder, RewriteError, RewriteSystem};
use crate::scalar::Scalar;
use crate::smash::{SmashAlgebra, SmashElement, SmashTensor};
use crate::ydcat::{realize_braiding, TripleKind, YdTriple};

pub use iso::{iso_classify, iso_classify_with_bound, IsoVerdict, ScalingClass, DEFAULT_AUT_BOUND};

/// x-degree to which presentations are completed unless asked otherwise.
pub const DEFAULT_LIFT_DEGREE: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("lambda = {lambda} is nonzero but chi(h{generator})^2 = {square} is not 1")]
    Constraint { lambda: String, generator: usize, square: String },
    #[error("operation needs a super Jordanian presentation")]
    NotSuperJordan,
    #[error("sqrt_lambda^2 = {square} differs from lambda = {lambda}")]
    BadSquareRoot { square: String, lambda: String },
    #[error("presentations live over different groups")]
    GroupMismatch,
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Nichols(#[from] NicholsError),
}

/// A relation e = 0 that should be (g^k, 1)-skew-primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningRelation {
    pub element: SmashElement,
    pub skew_degree: i64,
    /// Check skew-primitivity modulo the relations listed before this one.
    pub modulo_previous: bool,
}

#[derive(Clone, Debug)]
pub struct LiftingPresentation {
    triple: YdTriple,
    lambda: Scalar,
    alg: SmashAlgebra,
    relations: Vec<DefiningRelation>,
    system: RewriteSystem,
}

/// x2x_{21} − x_{21}x2 − x1x_{21} with x_{21} = x2x1 − ϵx1x2.
fn super_r(alg: &SmashAlgebra, eps: &Scalar) -> SmashElement {
    let (x1, x2) = (alg.x(1), alg.x(2));
    let x21 = &alg.word(&[2, 1]) - &alg.word(&[1, 2]).scale(eps);
    &(&alg.mul(&x2, &x21) - &alg.mul(&x21, &x2)) - &alg.mul(&x1, &x21)
}

/// The defining relations of U(D, λ), each written as e = 0.
pub fn lifting_relations(t: &YdTriple, lambda: &Scalar) -> Vec<DefiningRelation> {
    let alg = SmashAlgebra::from_triple(t);
    let field = t.field();
    // λ(1 − g²)
    let deformation = (&alg.one() - &alg.g_pow(2)).scale(lambda);
    match t.kind() {
        TripleKind::Jordanian => {
            let y = &(&alg.word(&[2, 1]) - &alg.word(&[1, 2])) + &alg.word(&[1, 1]).scale(&field.fraction(1, 2));
            vec![DefiningRelation { element: &y - &deformation, skew_degree: 2, modulo_previous: false }]
        }
        TripleKind::SuperJordanian => {
            let first = &alg.word(&[1, 1]) - &deformation;
            let tail = &alg.x(2).scale(&(&field.integer(2) * lambda)) + &alg.mul(&alg.x(1), &alg.g_pow(2)).scale(lambda);
            let second = &super_r(&alg, &t.eps()) + &tail;
            vec![
                DefiningRelation { element: first, skew_degree: 2, modulo_previous: false },
                DefiningRelation { element: second, skew_degree: 3, modulo_previous: true },
            ]
        }
    }
}

/// λ may be nonzero only when χ(h)² = 1 on every generator.
pub fn check_lambda_constraint(t: &YdTriple, lambda: &Scalar) -> Result<(), LiftError> {
    if lambda.is_zero() {
        return Ok(());
    }
    for (i, v) in t.chi().values().iter().enumerate() {
        let square = v * v;
        if !square.is_one() {
            return Err(LiftError::Constraint { lambda: lambda.to_string(), generator: i + 1, square: square.to_string() });
        }
    }
    Ok(())
}

pub fn build_lifting(t: &YdTriple, lambda: &Scalar) -> Result<LiftingPresentation, LiftError> {
    build_lifting_to(t, lambda, DEFAULT_LIFT_DEGREE)
}

/// U(D, λ) completed up to x-degree `degree`.
pub fn build_lifting_to(t: &YdTriple, lambda: &Scalar, degree: usize) -> Result<LiftingPresentation, LiftError> {
    check_lambda_constraint(t, lambda)?;
    LiftingPresentation::with_relations(t, lambda, lifting_relations(t, lambda), degree)
}

fn relation_system(alg: &SmashAlgebra, relations: &[DefiningRelation], degree: usize) -> Result<RewriteSystem, LiftError> {
    let elems: Vec<SmashElement> = relations.iter().map(|r| r.element.clone()).collect();
    Ok(complete_to_degree(alg, &elems, MonomialOrder::deglex(2), degree)?)
}

impl LiftingPresentation {
    /// A presentation with arbitrary relations; no constraint on λ is checked.
    pub fn with_relations(
        t: &YdTriple,
        lambda: &Scalar,
        relations: Vec<DefiningRelation>,
        degree: usize,
    ) -> Result<Self, LiftError> {
        let alg = SmashAlgebra::from_triple(t);
        let system = relation_system(&alg, &relations, degree)?;
        Ok(LiftingPresentation { triple: t.clone(), lambda: lambda.clone(), alg, relations, system })
    }

    pub fn triple(&self) -> &YdTriple {
        &self.triple
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn case(&self) -> TripleKind {
        self.triple.kind()
    }

    pub fn algebra(&self) -> &SmashAlgebra {
        &self.alg
    }

    pub fn relations(&self) -> &[DefiningRelation] {
        &self.relations
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    /// No rules beyond the input relations appeared during completion.
    pub fn is_flat(&self) -> bool {
        self.system.derived_rules().next().is_none()
    }

    pub fn normal_form(&self, e: &SmashElement) -> Result<SmashElement, LiftError> {
        Ok(self.system.normal_form(e)?)
    }
}

/// Defects Δ(e) − e⊗1 − g^k⊗e that did not vanish, by relation index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub defects: Vec<(usize, SmashTensor)>,
}

impl HopfReport {
    pub fn is_ok(&self) -> bool {
        self.defects.is_empty()
    }
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "hopf-ideal: ok");
        }
        write!(f, "hopf-ideal: failed")?;
        for (i, d) in &self.defects {
            write!(f, "\ndefect[{}] = {d}", i + 1)?;
        }
        Ok(())
    }
}

fn reduce_tensor(sys: &RewriteSystem, t: &SmashTensor) -> Result<SmashTensor, RewriteError> {
    let field = sys.field();
    let mut out = SmashTensor::zero(field);
    for ((a, b), c) in t.iter() {
        let na = sys.normal_form(&SmashElement::monomial(field, a.clone()))?;
        let nb = sys.normal_form(&SmashElement::monomial(field, b.clone()))?;
        for (x, cx) in na.iter() {
            for (y, cy) in nb.iter() {
                out.add_term((x.clone(), y.clone()), &(c * cx) * cy);
            }
        }
    }
    Ok(out)
}

/// Verifies that each relation is (g^k, 1)-skew-primitive, reducing both
/// tensor legs modulo the earlier relations when the relation asks for it.
pub fn hopf_ideal_check(p: &LiftingPresentation) -> Result<HopfReport, LiftError> {
    let alg = &p.alg;
    let mut defects = Vec::new();
    for (i, rel) in p.relations.iter().enumerate() {
        let e = &rel.element;
        let expected = &alg.tensor(e, &alg.one()) + &alg.tensor(&alg.g_pow(rel.skew_degree), e);
        let mut defect = &alg.coproduct(e) - &expected;
        if rel.modulo_previous && i > 0 {
            let degree = e.keys().map(|m| m.word.len()).max().unwrap_or(0);
            let sys = relation_system(alg, &p.relations[..i], degree)?;
            defect = reduce_tensor(&sys, &defect)?;
        }
        if !defect.is_zero() {
            defects.push((i, defect));
        }
    }
    Ok(HopfReport { defects })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwReport {
    pub degree: usize,
    pub new_rules: usize,
    pub counts: Vec<u64>,
    pub expected: Vec<u64>,
}

impl PbwReport {
    pub fn first_bad_degree(&self) -> Option<usize> {
        self.counts.iter().zip(&self.expected).position(|(a, b)| a != b)
    }

    pub fn is_ok(&self) -> bool {
        self.new_rules == 0 && self.first_bad_degree().is_none()
    }
}

impl fmt::Display for PbwReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        writeln!(f, "pbw: {}", if self.is_ok() { "ok" } else { "failed" })?;
        writeln!(f, "new-rules = {}", self.new_rules)?;
        writeln!(f, "counts = {}", join(&self.counts))?;
        write!(f, "expected = {}", join(&self.expected))?;
        if let Some(n) = self.first_bad_degree() {
            write!(f, "\nfirst-bad-degree = {n}")?;
        }
        Ok(())
    }
}

/// Flatness up to x-degree `n`: completion adds no rules and the irreducible
/// words of each degree are counted by dim ℬ(V)^n.
pub fn pbw_check(p: &LiftingPresentation, n: usize) -> Result<PbwReport, LiftError> {
    let recomputed;
    let sys = if p.system.degree_bound() >= n {
        &p.system
    } else {
        recomputed = relation_system(&p.alg, &p.relations, n)?;
        &recomputed
    };
    let new_rules = sys.derived_rules().filter(|r| r.lhs.len() <= n).count();
    let counts = sys.hilbert_function(n);
    let expected = nichols_dims(&realize_braiding(&p.triple), n)?.dims;
    Ok(PbwReport { degree: n, new_rules, counts, expected })
}

/// The relations of ℰ(D, λ): the parts of the defining relations free of
/// group letters.
pub fn group_free_relations(p: &LiftingPresentation) -> Vec<SmashElement> {
    let group = p.alg.group();
    p.relations.iter().map(|r| r.element.filter(|m| group.is_identity(&m.group))).collect()
}

/// Values of the ℰ(D, λ) relations under x1 ↦ c1, x2 ↦ c2; the map is a
/// representation iff all of them vanish.
pub fn one_dim_rep(p: &LiftingPresentation, c1: &Scalar, c2: &Scalar) -> Vec<Scalar> {
    let field = p.alg.field();
    group_free_relations(p)
        .iter()
        .map(|e| {
            let mut acc = field.zero();
            for (m, c) in e.iter() {
                let mut v = c.clone();
                for &l in m.word.letters() {
                    v = &v * if l == 1 { c1 } else { c2 };
                }
                acc += &v;
            }
            acc
        })
        .collect()
}

/// Normal form of a·b for a = s(g − 1) + x1 and b = s(g + 1) + x1 with s² = λ.
pub fn zero_divisor_witness(p: &LiftingPresentation, sqrt_lambda: &Scalar) -> Result<SmashElement, LiftError> {
    if p.case() != TripleKind::SuperJordanian {
        return Err(LiftError::NotSuperJordan);
    }
    let square = sqrt_lambda * sqrt_lambda;
    if square != p.lambda {
        return Err(LiftError::BadSquareRoot { square: square.to_string(), lambda: p.lambda.to_string() });
    }
    let alg = &p.alg;
    let g = alg.g_pow(1);
    let a = &(&g - &alg.one()).scale(sqrt_lambda) + &alg.x(1);
    let b = &(&g + &alg.one()).scale(sqrt_lambda) + &alg.x(1);
    p.normal_form(&alg.mul(&a, &b))
}
