use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("torsion orders must be at least 2, got {0}")]
    BadTorsion(i64),
    #[error("group element has {got} coordinates, the group has {expected} generators")]
    WrongLength { expected: usize, got: usize },
    #[error("a homomorphism needs one image per generator ({expected}), got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("image of generator {generator} does not respect its order")]
    NotHomomorphism { generator: usize },
    #[error("map is not an automorphism of the group: {0}")]
    NotAutomorphism(String),
}

/// ℤ^r × ℤ/m_1 × ⋯ × ℤ/m_s.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FGAbelianGroup {
    free_rank: usize,
    torsion: Vec<u32>,
}

/// Exponent vector: free coordinates first, then residues in [0, m_i).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElem(Vec<i64>);

impl GroupElem {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl FGAbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<i64>) -> Result<Self, GroupError> {
        let mut orders = Vec::with_capacity(torsion.len());
        for m in torsion {
            if m < 2 || m > u32::MAX as i64 {
                return Err(GroupError::BadTorsion(m));
            }
            orders.push(m as u32);
        }
        Ok(FGAbelianGroup { free_rank, torsion: orders })
    }

    /// ℤ^r.
    pub fn free(rank: usize) -> Self {
        FGAbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u32] {
        &self.torsion
    }

    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of generator i, `None` for the free ones.
    pub fn generator_order(&self, i: usize) -> Option<u32> {
        i.checked_sub(self.free_rank).map(|t| self.torsion[t])
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem(vec![0; self.num_generators()])
    }

    /// The i-th generator (0-based).
    pub fn generator(&self, i: usize) -> GroupElem {
        let mut v = vec![0; self.num_generators()];
        v[i] = 1;
        self.reduce(v)
    }

    fn reduce(&self, mut v: Vec<i64>) -> GroupElem {
        for (x, &m) in v[self.free_rank..].iter_mut().zip(&self.torsion) {
            *x = x.rem_euclid(m as i64);
        }
        GroupElem(v)
    }

    pub fn element(&self, coords: Vec<i64>) -> Result<GroupElem, GroupError> {
        if coords.len() != self.num_generators() {
            return Err(GroupError::WrongLength { expected: self.num_generators(), got: coords.len() });
        }
        Ok(self.reduce(coords))
    }

    pub fn mul(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        self.reduce(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn inv(&self, a: &GroupElem) -> GroupElem {
        self.reduce(a.0.iter().map(|x| -x).collect())
    }

    pub fn pow(&self, a: &GroupElem, k: i64) -> GroupElem {
        self.reduce(a.0.iter().map(|x| x * k).collect())
    }

    pub fn is_identity(&self, a: &GroupElem) -> bool {
        a.0.iter().all(|&x| x == 0)
    }

    /// `None` for elements of infinite order.
    pub fn order(&self, a: &GroupElem) -> Option<u64> {
        if a.0[..self.free_rank].iter().any(|&x| x != 0) {
            return None;
        }
        let mut order = 1u64;
        for (&x, &m) in a.0[self.free_rank..].iter().zip(&self.torsion) {
            let m = m as u64;
            order = order.lcm(&(m / (x as u64).gcd(&m)));
        }
        Some(order)
    }

    /// Every element of the torsion subgroup, free part zero.
    pub fn torsion_elements(&self) -> Vec<GroupElem> {
        let mut out = vec![self.identity()];
        for (t, &m) in self.torsion.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for e in &out {
                for k in 0..m as i64 {
                    let mut v = e.0.clone();
                    v[self.free_rank + t] = k;
                    next.push(GroupElem(v));
                }
            }
            out = next;
        }
        out
    }

    pub fn torsion_size(&self) -> u64 {
        self.torsion.iter().map(|&m| m as u64).product()
    }
}

struct ElemDisplay<'a>(&'a GroupElem);

impl fmt::Display for ElemDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &x) in self.0 .0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if x == 1 {
                write!(f, "h{}", i + 1)?;
            } else {
                write!(f, "h{}^{}", i + 1, x)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", ElemDisplay(self))
    }
}

/// A homomorphism of the group to itself, given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    group: FGAbelianGroup,
    images: Vec<GroupElem>,
}

impl GroupHom {
    pub fn new(group: &FGAbelianGroup, images: Vec<GroupElem>) -> Result<Self, GroupError> {
        let n = group.num_generators();
        if images.len() != n {
            return Err(GroupError::WrongImageCount { expected: n, got: images.len() });
        }
        for (i, img) in images.iter().enumerate() {
            if img.0.len() != n {
                return Err(GroupError::WrongLength { expected: n, got: img.0.len() });
            }
            if let Some(m) = group.generator_order(i) {
                if !group.is_identity(&group.pow(img, m as i64)) {
                    return Err(GroupError::NotHomomorphism { generator: i + 1 });
                }
            }
        }
        let images = images.into_iter().map(|e| group.reduce(e.0)).collect();
        Ok(GroupHom { group: group.clone(), images })
    }

    pub fn identity(group: &FGAbelianGroup) -> Self {
        GroupHom { group: group.clone(), images: (0..group.num_generators()).map(|i| group.generator(i)).collect() }
    }

    pub fn images(&self) -> &[GroupElem] {
        &self.images
    }

    pub fn group(&self) -> &FGAbelianGroup {
        &self.group
    }

    pub fn apply(&self, e: &GroupElem) -> GroupElem {
        let g = &self.group;
        let mut acc = g.identity();
        for (img, &k) in self.images.iter().zip(&e.0) {
            if k != 0 {
                acc = g.mul(&acc, &g.pow(img, k));
            }
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupHom) -> GroupHom {
        GroupHom { group: self.group.clone(), images: other.images.iter().map(|e| self.apply(e)).collect() }
    }

    /// Free block: column j holds the free coordinates of the image of free generator j.
    fn free_block(&self) -> Vec<Vec<i64>> {
        let r = self.group.free_rank;
        (0..r).map(|i| (0..r).map(|j| self.images[j].0[i]).collect()).collect()
    }

    fn torsion_part_bijective(&self) -> bool {
        let g = &self.group;
        let mut images: Vec<GroupElem> = g.torsion_elements().iter().map(|t| self.apply(t)).collect();
        if images.iter().any(|e| e.0[..g.free_rank].iter().any(|&x| x != 0)) {
            return false;
        }
        images.sort();
        images.dedup();
        images.len() as u64 == g.torsion_size()
    }

    pub fn is_automorphism(&self) -> bool {
        int_matrix_inverse(&self.free_block()).is_some() && self.torsion_part_bijective()
    }

    /// The unique x with f(x) = e, for an automorphism.
    pub fn preimage(&self, e: &GroupElem) -> Result<GroupElem, GroupError> {
        let g = &self.group;
        let r = g.free_rank;
        let inv = int_matrix_inverse(&self.free_block())
            .ok_or_else(|| GroupError::NotAutomorphism("free block is not invertible over the integers".into()))?;
        let mut free = vec![0i64; g.num_generators()];
        for i in 0..r {
            free[i] = (0..r).map(|j| inv[i][j] * e.0[j]).sum();
        }
        let a = GroupElem(free);
        let rest = g.mul(e, &g.inv(&self.apply(&a)));
        if rest.0[..r].iter().any(|&x| x != 0) {
            return Err(GroupError::NotAutomorphism("torsion maps outside the torsion subgroup".into()));
        }
        let t = g
            .torsion_elements()
            .into_iter()
            .find(|t| self.apply(t) == rest)
            .ok_or_else(|| GroupError::NotAutomorphism("torsion part is not surjective".into()))?;
        Ok(g.mul(&a, &t))
    }

    pub fn inverse(&self) -> Result<GroupHom, GroupError> {
        if !self.torsion_part_bijective() {
            return Err(GroupError::NotAutomorphism("torsion part is not bijective".into()));
        }
        let g = &self.group;
        let images = (0..g.num_generators()).map(|i| self.preimage(&g.generator(i))).collect::<Result<_, _>>()?;
        Ok(GroupHom { group: g.clone(), images })
    }
}

/// Inverse of a square integer matrix when it exists over ℤ.
pub(crate) fn int_matrix_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in 0..2 * n {
                    let delta = &factor * &a[col][j];
                    a[r][j] -= delta;
                }
            }
        }
    }
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let x = &a[i][n + j];
            if !x.is_integer() || x.abs() > BigRational::from_integer(BigInt::from(i64::MAX / 4)) {
                return None;
            }
            out[i][j] = x.to_integer().to_i64()?;
        }
    }
    Some(out)
}
