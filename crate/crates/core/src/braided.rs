//! Braided vector spaces given by their full braiding tensor, the block and
//! block+point families, and an exhaustive braid-equation check.

use std::fmt;

use thiserror::Error;

use crate::scalar::{CyclotomicField, Matrix, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("block size must be at least 2, got {0}")]
    BlockTooSmall(usize),
    #[error("eps must be nonzero")]
    ZeroEps,
    #[error("eps must be 1 or -1, got {0}")]
    EpsNotSign(String),
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("coefficient tensor has {got} entries, expected {expected}")]
    TensorSize { expected: usize, got: usize },
    #[error("braiding is not invertible")]
    NotInvertible,
}

/// A finite-dimensional braided vector space with basis x1..xd.
///
/// `coeff(i, j, k, l)` is the coefficient of x_k⊗x_l in c(x_i⊗x_j); all
/// indices are 1-based.
#[derive(Clone, PartialEq, Eq)]
pub struct BraidedVectorSpace {
    field: CyclotomicField,
    dim: usize,
    coeffs: Vec<Scalar>,
    /// Sparse image of each basis pair, indexed by (i-1)*d + (j-1).
    images: Vec<Vec<(u8, u8, Scalar)>>,
}

/// A basis triple on which the two sides of the braid equation differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidFailure {
    pub triple: (usize, usize, usize),
}

impl fmt::Display for BraidFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "braid equation fails on x{i} ⊗ x{j} ⊗ x{k}")
    }
}

impl BraidedVectorSpace {
    /// Builds a space from the full tensor in the order i, j, k, l (row-major).
    pub fn from_tensor(field: CyclotomicField, dim: usize, coeffs: Vec<Scalar>) -> Result<Self, BraidError> {
        if dim == 0 {
            return Err(BraidError::ZeroDimension);
        }
        let expected = dim.pow(4);
        if coeffs.len() != expected {
            return Err(BraidError::TensorSize { expected, got: coeffs.len() });
        }
        let space = Self::from_tensor_unchecked(field, dim, coeffs);
        if space.matrix().rank() != dim * dim {
            return Err(BraidError::NotInvertible);
        }
        Ok(space)
    }

    fn from_tensor_unchecked(field: CyclotomicField, dim: usize, coeffs: Vec<Scalar>) -> Self {
        let d = dim;
        let mut images = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut img = Vec::new();
                for k in 0..d {
                    for l in 0..d {
                        let c = &coeffs[((i * d + j) * d + k) * d + l];
                        if !c.is_zero() {
                            img.push((k as u8 + 1, l as u8 + 1, c.clone()));
                        }
                    }
                }
                images.push(img);
            }
        }
        BraidedVectorSpace { field, dim, coeffs, images }
    }

    fn builder(field: CyclotomicField, dim: usize) -> TensorBuilder {
        TensorBuilder { field, dim, coeffs: vec![field.zero(); dim.pow(4)] }
    }

    pub fn field(&self) -> CyclotomicField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        let d = self.dim;
        &self.coeffs[(((i - 1) * d + (j - 1)) * d + (k - 1)) * d + (l - 1)]
    }

    /// Nonzero terms (k, l, coefficient) of c(x_i⊗x_j).
    pub fn image(&self, i: u8, j: u8) -> &[(u8, u8, Scalar)] {
        &self.images[(i as usize - 1) * self.dim + (j as usize - 1)]
    }

    /// The d²×d² matrix of c; column (i,j) holds c(x_i⊗x_j) with basis
    /// x_k⊗x_l at row (k-1)d + (l-1).
    pub fn matrix(&self) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(self.field, d * d, d * d);
        for i in 1..=d {
            for j in 1..=d {
                for (k, l, c) in self.image(i as u8, j as u8) {
                    m.set((*k as usize - 1) * d + (*l as usize - 1), (i - 1) * d + (j - 1), c.clone());
                }
            }
        }
        m
    }

    /// Returns a copy with one tensor entry overwritten. The result skips the
    /// invertibility check, so it can describe non-braidings.
    pub fn with_coeff(&self, i: usize, j: usize, k: usize, l: usize, value: Scalar) -> Self {
        let d = self.dim;
        let mut coeffs = self.coeffs.clone();
        coeffs[(((i - 1) * d + (j - 1)) * d + (k - 1)) * d + (l - 1)] = value;
        Self::from_tensor_unchecked(self.field, d, coeffs)
    }

    /// Restriction to the span of x1..x_m when that span is stable.
    pub fn restrict(&self, m: usize) -> Option<Self> {
        let d = self.dim;
        if m == 0 || m > d {
            return None;
        }
        for i in 1..=m {
            for j in 1..=m {
                if self.image(i as u8, j as u8).iter().any(|(k, l, _)| *k as usize > m || *l as usize > m) {
                    return None;
                }
            }
        }
        let mut b = Self::builder(self.field, m);
        for i in 1..=m {
            for j in 1..=m {
                for k in 1..=m {
                    for l in 1..=m {
                        b.set(i, j, k, l, self.coeff(i, j, k, l).clone());
                    }
                }
            }
        }
        Some(b.finish_unchecked())
    }
}

impl fmt::Debug for BraidedVectorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BraidedVectorSpace(dim {}) {{", self.dim)?;
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                let terms: Vec<String> =
                    self.image(i as u8, j as u8).iter().map(|(k, l, c)| format!("({c}) x{k}⊗x{l}")).collect();
                writeln!(f, "  c(x{i}⊗x{j}) = {}", terms.join(" + "))?;
            }
        }
        write!(f, "}}")
    }
}

struct TensorBuilder {
    field: CyclotomicField,
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl TensorBuilder {
    fn set(&mut self, i: usize, j: usize, k: usize, l: usize, value: Scalar) {
        let d = self.dim;
        self.coeffs[(((i - 1) * d + (j - 1)) * d + (k - 1)) * d + (l - 1)] = value;
    }

    /// Sets c(x_i⊗x_j) = (Σ_k image[k] x_k) ⊗ x_i, the braiding shape of a
    /// Yetter–Drinfeld module over an abelian group.
    fn set_action(&mut self, i: usize, j: usize, image: &[(usize, Scalar)]) {
        for (k, c) in image {
            self.set(i, j, *k, i, c.clone());
        }
    }

    fn finish_unchecked(self) -> BraidedVectorSpace {
        BraidedVectorSpace::from_tensor_unchecked(self.field, self.dim, self.coeffs)
    }
}

/// The ϵ-block 𝒱(ϵ, ℓ): c(x_i⊗x_1) = ϵ x_1⊗x_i and
/// c(x_i⊗x_j) = (ϵ x_j + x_{j−1})⊗x_i for j ≥ 2.
pub fn make_block(eps: &Scalar, ell: usize) -> Result<BraidedVectorSpace, BraidError> {
    if ell < 2 {
        return Err(BraidError::BlockTooSmall(ell));
    }
    if eps.is_zero() {
        return Err(BraidError::ZeroEps);
    }
    let field = eps.field();
    let mut b = BraidedVectorSpace::builder(field, ell);
    for i in 1..=ell {
        b.set_action(i, 1, &[(1, eps.clone())]);
        for j in 2..=ell {
            b.set_action(i, j, &[(j, eps.clone()), (j - 1, field.one())]);
        }
    }
    Ok(b.finish_unchecked())
}

/// Diagonal braiding c(x_i⊗x_j) = q_ij x_j⊗x_i.
pub fn make_diagonal(q: &[Vec<Scalar>]) -> Result<BraidedVectorSpace, BraidError> {
    let d = q.len();
    if d == 0 {
        return Err(BraidError::ZeroDimension);
    }
    if q.iter().any(|row| row.len() != d) {
        return Err(BraidError::TensorSize { expected: d * d, got: q.iter().map(Vec::len).sum() });
    }
    if q.iter().flatten().any(Scalar::is_zero) {
        return Err(BraidError::ZeroParameter("q"));
    }
    let field = q[0][0].field();
    let mut b = BraidedVectorSpace::builder(field, d);
    for i in 1..=d {
        for j in 1..=d {
            b.set_action(i, j, &[(j, q[i - 1][j - 1].clone())]);
        }
    }
    Ok(b.finish_unchecked())
}

/// Parameters of a block+point braiding together with its ghost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPointParams {
    pub q12: Scalar,
    pub q21: Scalar,
    pub q22: Scalar,
    pub eps: Scalar,
    pub a: Scalar,
}

impl BlockPointParams {
    pub fn q12q21(&self) -> Scalar {
        &self.q12 * &self.q21
    }

    /// 𝒢 = −2a when ϵ = 1 and a when ϵ = −1.
    pub fn ghost(&self) -> Scalar {
        ghost_formula(&self.eps, &self.a).expect("eps is a sign in a validated datum")
    }
}

pub(crate) fn ghost_formula(eps: &Scalar, a: &Scalar) -> Option<Scalar> {
    let field = eps.field();
    if eps.is_one() {
        Some(&field.integer(-2) * a)
    } else if *eps == field.integer(-1) {
        Some(a.clone())
    } else {
        None
    }
}

fn is_sign(s: &Scalar) -> bool {
    s.is_one() || *s == s.field().integer(-1)
}

/// The three-dimensional block+point braiding: an ϵ-block on x1, x2 and a
/// point x3, where x3 acts on the block by q21 (x2 ↦ x2 + a x1) and the
/// block acts on x3 by q12.
pub fn make_block_point(params: &BlockPointParams) -> Result<BraidedVectorSpace, BraidError> {
    let BlockPointParams { q12, q21, q22, eps, a } = params;
    if !is_sign(eps) {
        return Err(BraidError::EpsNotSign(eps.to_string()));
    }
    for (name, q) in [("q12", q12), ("q21", q21), ("q22", q22)] {
        if q.is_zero() {
            return Err(BraidError::ZeroParameter(name));
        }
    }
    let field = eps.field();
    let mut b = BraidedVectorSpace::builder(field, 3);
    for i in 1..=2 {
        b.set_action(i, 1, &[(1, eps.clone())]);
        b.set_action(i, 2, &[(2, eps.clone()), (1, field.one())]);
        b.set_action(i, 3, &[(3, q12.clone())]);
    }
    b.set_action(3, 1, &[(1, q21.clone())]);
    b.set_action(3, 2, &[(2, q21.clone()), (1, q21 * a)]);
    b.set_action(3, 3, &[(3, q22.clone())]);
    Ok(b.finish_unchecked())
}

/// Exhaustive check of (c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c) on all d³
/// basis vectors.
pub fn braid_check(space: &BraidedVectorSpace) -> Result<(), BraidFailure> {
    use crate::freealg::{apply_sigma, Word};
    use crate::lincomb::LinComb;
    let d = space.dim as u8;
    for i in 1..=d {
        for j in 1..=d {
            for k in 1..=d {
                let v = LinComb::monomial(space.field, Word::new(vec![i, j, k]));
                let lhs = apply_sigma(space, 1, &apply_sigma(space, 2, &apply_sigma(space, 1, &v)));
                let rhs = apply_sigma(space, 2, &apply_sigma(space, 1, &apply_sigma(space, 2, &v)));
                if lhs != rhs {
                    return Err(BraidFailure { triple: (i as usize, j as usize, k as usize) });
                }
            }
        }
    }
    Ok(())
}
