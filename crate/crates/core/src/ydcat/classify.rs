use thiserror::Error;

use super::group::{FGAbelianGroup, GroupElem};
use super::triple::{Character, Derivation, YdData};
use crate::scalar::{Matrix, Scalar};

/// A two-dimensional module over the group algebra, homogeneous of one degree.
///
/// `actions[i]` is the matrix of generator i with column j = h_i·x_j.
#[derive(Clone, Debug)]
pub struct Dim2Module {
    pub group: FGAbelianGroup,
    pub degree: GroupElem,
    pub actions: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dim2Class {
    /// The degree acts diagonalizably (over the algebraic closure).
    Diagonal,
    /// A block: data (g, χ, η) with η(g) = 1 in the new basis x1, x2, whose
    /// coordinates in the old basis are `basis[0]`, `basis[1]`.
    Block { data: YdData, basis: [Vec<Scalar>; 2] },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("expected one action per generator ({expected}), got {got}")]
    WrongActionCount { expected: usize, got: usize },
    #[error("action of h{0} is not a 2x2 matrix")]
    NotTwoByTwo(usize),
    #[error("action of h{0} is not invertible")]
    NotInvertible(usize),
    #[error("degree has {got} coordinates, expected {expected}")]
    BadDegree { expected: usize, got: usize },
    #[error("action of h{0} does not commute with the action of the degree")]
    NotCommuting(usize),
}

fn det2(m: &Matrix) -> Scalar {
    m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)
}

fn inv2(m: &Matrix) -> Option<Matrix> {
    let det = det2(m).inv()?;
    let f = m.field();
    Some(Matrix::from_rows(
        f,
        vec![
            vec![m.get(1, 1) * &det, -(m.get(0, 1) * &det)],
            vec![-(m.get(1, 0) * &det), m.get(0, 0) * &det],
        ],
    ))
}

fn pow2(m: &Matrix, k: i64) -> Matrix {
    let base = if k < 0 { inv2(m).expect("checked invertible") } else { m.clone() };
    let mut acc = Matrix::identity(m.field(), 2);
    for _ in 0..k.unsigned_abs() {
        acc = acc.mul(&base);
    }
    acc
}

/// Decides whether the degree acts diagonalizably; otherwise normalizes the
/// block so that g·x1 = ϵx1 and g·x2 = ϵx2 + x1, rescaling x1 only.
pub fn classify_dim2(module: &Dim2Module) -> Result<Dim2Class, ClassifyError> {
    let group = &module.group;
    let n = group.num_generators();
    if module.actions.len() != n {
        return Err(ClassifyError::WrongActionCount { expected: n, got: module.actions.len() });
    }
    if module.degree.coords().len() != n {
        return Err(ClassifyError::BadDegree { expected: n, got: module.degree.coords().len() });
    }
    for (i, a) in module.actions.iter().enumerate() {
        if a.rows() != 2 || a.cols() != 2 {
            return Err(ClassifyError::NotTwoByTwo(i + 1));
        }
        if det2(a).is_zero() {
            return Err(ClassifyError::NotInvertible(i + 1));
        }
    }
    let field = module.actions.first().map(Matrix::field).ok_or(ClassifyError::WrongActionCount { expected: 1, got: 0 })?;
    let mut ag = Matrix::identity(field, 2);
    for (a, &k) in module.actions.iter().zip(module.degree.coords()) {
        if k != 0 {
            ag = ag.mul(&pow2(a, k));
        }
    }
    for (i, a) in module.actions.iter().enumerate() {
        if a.mul(&ag) != ag.mul(a) {
            return Err(ClassifyError::NotCommuting(i + 1));
        }
    }
    let trace = ag.get(0, 0) + ag.get(1, 1);
    let discriminant = &trace * &trace - &field.integer(4) * &det2(&ag);
    let scalar = ag.get(0, 1).is_zero() && ag.get(1, 0).is_zero() && ag.get(0, 0) == ag.get(1, 1);
    if scalar || !discriminant.is_zero() {
        return Ok(Dim2Class::Diagonal);
    }
    let eps = &trace * &field.fraction(1, 2);
    let mut nilpotent = ag.clone();
    for i in 0..2 {
        nilpotent.set(i, i, ag.get(i, i) - &eps);
    }
    let e2 = vec![field.zero(), field.one()];
    let e1 = vec![field.one(), field.zero()];
    let x2 = if nilpotent.apply(&e2).iter().any(|c| !c.is_zero()) { e2 } else { e1 };
    let x1 = nilpotent.apply(&x2);
    // change of basis P = [x1 x2]; h acts by P⁻¹ A P = [[χ(h), η(h)], [0, χ(h)]]
    let p = Matrix::from_rows(field, vec![vec![x1[0].clone(), x2[0].clone()], vec![x1[1].clone(), x2[1].clone()]]);
    let p_inv = inv2(&p).expect("x1 and x2 are independent");
    let mut chi = Vec::with_capacity(n);
    let mut eta = Vec::with_capacity(n);
    for (i, a) in module.actions.iter().enumerate() {
        let b = p_inv.mul(a).mul(&p);
        if !b.get(1, 0).is_zero() || b.get(0, 0) != b.get(1, 1) {
            return Err(ClassifyError::NotCommuting(i + 1));
        }
        chi.push(b.get(0, 0).clone());
        eta.push(b.get(0, 1).clone());
    }
    let data = YdData { group: group.clone(), g: module.degree.clone(), chi: Character::new(chi), eta: Derivation::new(eta) };
    Ok(Dim2Class::Block { data, basis: [x1, x2] })
}

/// The module V_g(χ, η) of a triple, in the basis x1, x2.
pub fn module_of(data: &YdData) -> Dim2Module {
    let field = data.chi.values()[0].field();
    let actions = data
        .chi
        .values()
        .iter()
        .zip(data.eta.values())
        .map(|(c, e)| Matrix::from_rows(field, vec![vec![c.clone(), e.clone()], vec![field.zero(), c.clone()]]))
        .collect();
    Dim2Module { group: data.group.clone(), degree: data.g.clone(), actions }
}
