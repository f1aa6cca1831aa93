//! Independent oracles shared by the integration tests and the acceptance
//! suite. Nothing here calls the library's symmetrizer or elimination code.

#![allow(dead_code)]

use jordan_lift::braided::{make_diagonal, BraidedVectorSpace};
use jordan_lift::scalar::{CyclotomicField, Matrix, Scalar};
use rand::Rng;

pub fn field() -> CyclotomicField {
    CyclotomicField::new(12).unwrap()
}

/// σ_i (1-based, acting on tensor positions i, i+1) on a dense vector of
/// V^⊗n, read straight off the coefficient tensor.
pub fn sigma(space: &BraidedVectorSpace, n: usize, i: usize, v: &[Scalar]) -> Vec<Scalar> {
    let d = space.dim();
    let f = space.field();
    let mut out = vec![f.zero(); v.len()];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let mut letters = digits(idx, n, d);
        let (a, b) = (letters[i - 1], letters[i]);
        for k in 0..d {
            for l in 0..d {
                let c = space.coeff(a + 1, b + 1, k + 1, l + 1);
                if c.is_zero() {
                    continue;
                }
                letters[i - 1] = k;
                letters[i] = l;
                let t = undigits(&letters, d);
                out[t] = &out[t] + &(x * c);
            }
        }
    }
    out
}

/// Base-d digits of `idx`, most significant first (the first tensor factor).
pub fn digits(mut idx: usize, n: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for p in (0..n).rev() {
        out[p] = idx % d;
        idx /= d;
    }
    out
}

pub fn undigits(letters: &[usize], d: usize) -> usize {
    letters.iter().fold(0, |acc, &l| acc * d + l)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// A reduced word (1-based adjacent transpositions) obtained by bubble sort.
pub fn reduced_word_of(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    loop {
        let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) else {
            return word;
        };
        p.swap(i, i + 1);
        word.push(i + 1);
    }
}

/// Σ over all n! permutations of the Matsumoto lift, as a row-major matrix
/// whose column j is the image of the j-th basis tensor.
pub fn brute_symmetrizer(space: &BraidedVectorSpace, n: usize) -> Vec<Vec<Scalar>> {
    let f = space.field();
    let size = space.dim().pow(n as u32);
    let words: Vec<Vec<usize>> = permutations(n).iter().map(|p| reduced_word_of(p)).collect();
    let mut rows = vec![vec![f.zero(); size]; size];
    for col in 0..size {
        let mut e = vec![f.zero(); size];
        e[col] = f.one();
        for w in &words {
            let mut v = e.clone();
            for &i in w.iter().rev() {
                v = sigma(space, n, i, &v);
            }
            for (row, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    rows[row][col] = &rows[row][col] + x;
                }
            }
        }
    }
    rows
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

/// Plain Gaussian elimination, choosing the last nonzero entry as pivot so
/// the pivoting differs from the library's.
pub fn naive_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut rows: Vec<Vec<Scalar>> = rows.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in (0..cols).rev() {
        let Some(p) = (rank..rows.len()).rev().find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().unwrap();
        let pivot: Vec<Scalar> = rows[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// A nonzero scalar: ±1, a power of ζ_12 or a small integer.
pub fn random_unit<R: Rng>(rng: &mut R, f: CyclotomicField) -> Scalar {
    match rng.gen_range(0..3) {
        0 => f.integer(if rng.gen_bool(0.5) { 1 } else { -1 }),
        1 => f.zeta_pow(rng.gen_range(0..12)),
        _ => f.integer(rng.gen_range(2..5)),
    }
}

pub fn random_diagonal<R: Rng>(rng: &mut R, d: usize) -> BraidedVectorSpace {
    let f = field();
    let q: Vec<Vec<Scalar>> = (0..d).map(|_| (0..d).map(|_| random_unit(rng, f)).collect()).collect();
    make_diagonal(&q).unwrap()
}

/// A scalar with small random rational coordinates in the power basis.
pub fn random_scalar<R: Rng>(rng: &mut R, f: CyclotomicField) -> Scalar {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    let coords = (0..f.degree())
        .map(|_| BigRational::new(BigInt::from(rng.gen_range(-5..=5)), BigInt::from(rng.gen_range(1..=4))))
        .collect();
    f.from_coefficients(coords)
}
