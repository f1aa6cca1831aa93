//! Nichols algebras ℬ(V) = T(V)/⊕ ker 𝔖_n: graded dimensions, minimal
//! relations, block+point parameters of adjoined primitives and the
//! GKdim lookup for a block plus a point.

mod params;
mod table1;

use std::fmt;

use thiserror::Error;

use crate::braided::BraidedVectorSpace;
use crate::freealg::{from_dense, FreeAlgError, FreeElement, SymmetrizerTower};
use crate::rewrite::RewriteError;
use crate::scalar::{CyclotomicField, Matrix, Rref, Scalar, ScalarError};

pub use params::adjoin_primitive_params;
pub use table1::{
    ghost_of, table1_lookup, EpsCell, GhostCell, GkFormula, GkdimVerdict, Ghost, ProductCell, Q22Cell, Table1Row,
    TABLE1,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NicholsError {
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error("relations start in degree 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("eps must be 1 or -1, got {0}")]
    EpsNotSign(String),
    #[error("{0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("element is not homogeneous of x-degree {0}")]
    NotHomogeneous(usize),
    #[error("element vanishes")]
    ZeroElement,
    #[error("not a weight vector under {generator}: offending term {term}")]
    NotWeightVector { generator: String, term: String },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// dim ℬ(V)^n for n = 0..=N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub dims: Vec<u64>,
}

impl GradedDims {
    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn nichols_dims(space: &BraidedVectorSpace, n: usize) -> Result<GradedDims, NicholsError> {
    nichols_dims_in(&mut SymmetrizerTower::new(space), n)
}

/// Same as [`nichols_dims`], reusing the levels already in `tower`.
pub fn nichols_dims_in(tower: &mut SymmetrizerTower<'_>, n: usize) -> Result<GradedDims, NicholsError> {
    tower.extend_to(n)?;
    let dims = (0..=n).map(|k| tower.rank(k).map(|r| r as u64)).collect::<Result<_, _>>()?;
    Ok(GradedDims { dims })
}

pub fn relation_generators(space: &BraidedVectorSpace, n: usize) -> Result<Vec<FreeElement>, NicholsError> {
    relation_generators_in(&mut SymmetrizerTower::new(space), n)
}

/// A basis of ker 𝔖_n modulo V·ker 𝔖_{n−1} + ker 𝔖_{n−1}·V.
///
/// Output is in reduced echelon form with words in descending order: each
/// generator has leading word its largest word, with coefficient 1, and no
/// term on a leading word of the ideal part.
pub fn relation_generators_in(tower: &mut SymmetrizerTower<'_>, n: usize) -> Result<Vec<FreeElement>, NicholsError> {
    if n < 2 {
        return Err(NicholsError::DegreeTooSmall(n));
    }
    let d = tower.space().dim();
    let field = tower.space().field();
    let kernel = tower.kernel(n)?;
    let lower = tower.kernel(n - 1)?;
    let size = d.pow(n as u32);
    let high = d.pow(n as u32 - 1);
    // column c stores the word with index size − 1 − c
    let col = |index: usize| size - 1 - index;
    let mut ideal = Vec::with_capacity(2 * d * lower.len());
    for k in &lower {
        for l in 0..d {
            let mut left = vec![field.zero(); size];
            let mut right = vec![field.zero(); size];
            for (idx, c) in k.iter().enumerate() {
                if !c.is_zero() {
                    left[col(l * high + idx)] = c.clone();
                    right[col(idx * d + l)] = c.clone();
                }
            }
            ideal.push(left);
            ideal.push(right);
        }
    }
    let ideal_rref = rref_rows(field, size, ideal);
    let ideal_rows = ideal_rref.row_space();
    let mut reduced = Vec::with_capacity(kernel.len());
    for v in &kernel {
        let mut row = vec![field.zero(); size];
        for (idx, c) in v.iter().enumerate() {
            row[col(idx)] = c.clone();
        }
        for (r, &p) in ideal_rows.iter().zip(&ideal_rref.pivots) {
            let factor = row[p].clone();
            if !factor.is_zero() {
                for (x, y) in row.iter_mut().zip(r) {
                    *x -= &(&factor * y);
                }
            }
        }
        reduced.push(row);
    }
    let out = rref_rows(field, size, reduced);
    Ok(out
        .row_space()
        .into_iter()
        .map(|row| {
            let dense: Vec<Scalar> = (0..size).map(|idx| row[col(idx)].clone()).collect();
            from_dense(field, &dense, n, d)
        })
        .collect())
}

fn rref_rows(field: CyclotomicField, cols: usize, rows: Vec<Vec<Scalar>>) -> Rref {
    let count = rows.len();
    Matrix::from_entries(field, count, cols, rows.into_iter().flatten().collect()).rref()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::make_block;
    use crate::freealg::{parse_free, symmetrizer_apply, to_dense};

    fn block(eps: i64) -> BraidedVectorSpace {
        let f = CyclotomicField::new(12).unwrap();
        make_block(&f.integer(eps), 2).unwrap()
    }

    #[test]
    fn planes_are_linear() {
        for eps in [1, -1] {
            let dims = nichols_dims(&block(eps), 6).unwrap();
            assert_eq!(dims.dims, vec![1, 2, 3, 4, 5, 6, 7]);
        }
        assert_eq!(nichols_dims(&block(1), 0).unwrap().dims, vec![1]);
        assert_eq!(nichols_dims(&block(1), 6).unwrap().to_string(), "1 2 3 4 5 6 7");
    }

    #[test]
    fn jordan_relations() {
        let f = CyclotomicField::new(12).unwrap();
        let space = block(1);
        let rels = relation_generators(&space, 2).unwrap();
        assert_eq!(rels, vec![parse_free("x2 x1 - x1 x2 + 1/2 x1 x1", f, 2).unwrap()]);
        assert!(relation_generators(&space, 3).unwrap().is_empty());
        assert!(matches!(relation_generators(&space, 1), Err(NicholsError::DegreeTooSmall(1))));
    }

    #[test]
    fn super_jordan_relations() {
        let f = CyclotomicField::new(12).unwrap();
        let space = block(-1);
        let mut tower = SymmetrizerTower::new(&space);
        assert_eq!(relation_generators_in(&mut tower, 2).unwrap(), vec![parse_free("x1 x1", f, 2).unwrap()]);
        let r3 = relation_generators_in(&mut tower, 3).unwrap();
        assert_eq!(r3, vec![parse_free("x2 x2 x1 - x1 x2 x2 - x1 x2 x1", f, 2).unwrap()]);
        let dense = to_dense(&r3[0], 3, 2);
        assert!(symmetrizer_apply(&space, 3, &dense).iter().all(Scalar::is_zero));
        assert!(relation_generators_in(&mut tower, 4).unwrap().is_empty());
    }
}
