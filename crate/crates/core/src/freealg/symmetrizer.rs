//! Quantum symmetrizers 𝔖_n via the coset factorization
//! 𝔖_n = (𝔖_{n−1} ⊗ id) · T_n, T_n = id + σ_{n−1} + σ_{n−1}σ_{n−2} + ⋯ + σ_{n−1}⋯σ_1.

use super::FreeAlgError;
use crate::braided::BraidedVectorSpace;
use crate::scalar::{Matrix, Rref, Scalar};

/// Largest degree handled by default: the largest n with d^n ≤ 6561
/// (n = 12 for d = 2, n = 8 for d = 3).
pub fn default_degree_cap(dim: usize) -> usize {
    if dim <= 1 {
        return 64;
    }
    let mut n = 0;
    let mut size = 1usize;
    while size * dim <= 6561 {
        size *= dim;
        n += 1;
    }
    n
}

fn check_cap(n: usize, cap: usize) -> Result<(), FreeAlgError> {
    if n > cap {
        Err(FreeAlgError::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// σ_i on a dense vector of V^⊗n (coordinates indexed by [`super::Word::index`]).
pub fn sigma_dense(space: &BraidedVectorSpace, n: usize, i: usize, v: &[Scalar]) -> Vec<Scalar> {
    let d = space.dim();
    let sa = d.pow((n - i) as u32);
    let sb = sa / d;
    let mut out = vec![space.field().zero(); v.len()];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let a = (idx / sa) % d;
        let b = (idx / sb) % d;
        let base = idx - a * sa - b * sb;
        for (k, l, c) in space.image(a as u8 + 1, b as u8 + 1) {
            let target = base + (*k as usize - 1) * sa + (*l as usize - 1) * sb;
            out[target] += &(x * c);
        }
    }
    out
}

/// The transpose of σ_i, acting on row functionals.
fn sigma_transpose_dense(space: &BraidedVectorSpace, n: usize, i: usize, v: &[Scalar]) -> Vec<Scalar> {
    let d = space.dim();
    let sa = d.pow((n - i) as u32);
    let sb = sa / d;
    let mut out = vec![space.field().zero(); v.len()];
    for (idx, slot) in out.iter_mut().enumerate() {
        let a = (idx / sa) % d;
        let b = (idx / sb) % d;
        let base = idx - a * sa - b * sb;
        for (k, l, c) in space.image(a as u8 + 1, b as u8 + 1) {
            let x = &v[base + (*k as usize - 1) * sa + (*l as usize - 1) * sb];
            if !x.is_zero() {
                *slot += &(x * c);
            }
        }
    }
    out
}

fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += b;
        }
    }
}

/// T_k ⊗ id^⊗(n−k) by Horner's rule: w ← v + σ_j w for j = 1..k−1.
fn apply_t(space: &BraidedVectorSpace, n: usize, k: usize, v: &[Scalar]) -> Vec<Scalar> {
    let mut w = v.to_vec();
    for j in 1..k {
        let mut next = sigma_dense(space, n, j, &w);
        add_into(&mut next, v);
        w = next;
    }
    w
}

/// 𝔖_n v = T_2 T_3 ⋯ T_n v.
pub fn symmetrizer_apply(space: &BraidedVectorSpace, n: usize, v: &[Scalar]) -> Vec<Scalar> {
    let mut w = v.to_vec();
    for k in (2..=n).rev() {
        w = apply_t(space, n, k, &w);
    }
    w
}

/// The dense d^n × d^n matrix of 𝔖_n.
pub fn symmetrizer_matrix(space: &BraidedVectorSpace, n: usize, cap: usize) -> Result<Matrix, FreeAlgError> {
    check_cap(n, cap)?;
    let field = space.field();
    let size = space.dim().pow(n as u32);
    let mut m = Matrix::zeros(field, size, size);
    for col in 0..size {
        let mut e = vec![field.zero(); size];
        e[col] = field.one();
        for (row, x) in symmetrizer_apply(space, n, &e).into_iter().enumerate() {
            if !x.is_zero() {
                m.set(row, col, x);
            }
        }
    }
    Ok(m)
}

/// Row-compressed symmetrizers of successive degrees.
///
/// Writing 𝔖_{n−1} = L·C_{n−1} with C_{n−1} the nonzero rows of its reduced
/// echelon form and L injective, 𝔖_n = (L⊗id)(C_{n−1}⊗id)T_n, so
/// M_n = (C_{n−1}⊗id)T_n has the same rank and kernel as 𝔖_n while having
/// only rank(𝔖_{n−1})·d rows.
pub struct SymmetrizerTower<'a> {
    space: &'a BraidedVectorSpace,
    cap: usize,
    levels: Vec<Rref>,
}

impl<'a> SymmetrizerTower<'a> {
    pub fn new(space: &'a BraidedVectorSpace) -> Self {
        Self::with_cap(space, default_degree_cap(space.dim()))
    }

    pub fn with_cap(space: &'a BraidedVectorSpace, cap: usize) -> Self {
        let field = space.field();
        let levels = vec![Matrix::identity(field, 1).rref(), Matrix::identity(field, space.dim()).rref()];
        SymmetrizerTower { space, cap, levels }
    }

    pub fn space(&self) -> &BraidedVectorSpace {
        self.space
    }

    pub fn extend_to(&mut self, n: usize) -> Result<(), FreeAlgError> {
        check_cap(n, self.cap)?;
        while self.levels.len() <= n {
            let next = self.compressed(self.levels.len());
            self.levels.push(next.rref());
        }
        Ok(())
    }

    /// M_n = (C_{n−1}⊗id)T_n, built row by row as T_nᵀ(c⊗e_j).
    fn compressed(&self, n: usize) -> Matrix {
        let space = self.space;
        let d = space.dim();
        let field = space.field();
        let size = d.pow(n as u32);
        let previous = self.levels[n - 1].row_space();
        let mut entries = Vec::with_capacity(previous.len() * d * size);
        for c in &previous {
            for j in 0..d {
                let mut phi = vec![field.zero(); size];
                for (u, x) in c.iter().enumerate() {
                    if !x.is_zero() {
                        phi[u * d + j] = x.clone();
                    }
                }
                // T_nᵀ = Σ_k σ_kᵀ⋯σ_{n−1}ᵀ
                let mut acc = phi.clone();
                let mut y = phi;
                for k in (1..n).rev() {
                    y = sigma_transpose_dense(space, n, k, &y);
                    add_into(&mut acc, &y);
                }
                entries.extend(acc);
            }
        }
        Matrix::from_entries(field, previous.len() * d, size, entries)
    }

    pub fn rank(&mut self, n: usize) -> Result<usize, FreeAlgError> {
        self.extend_to(n)?;
        Ok(self.levels[n].rank())
    }

    /// A basis of ker 𝔖_n in dense coordinates.
    pub fn kernel(&mut self, n: usize) -> Result<Vec<Vec<Scalar>>, FreeAlgError> {
        self.extend_to(n)?;
        Ok(self.levels[n].kernel())
    }

    /// Reduced row echelon form of M_n.
    pub fn level(&mut self, n: usize) -> Result<&Rref, FreeAlgError> {
        self.extend_to(n)?;
        Ok(&self.levels[n])
    }
}
