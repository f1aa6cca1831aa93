use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Scalar, ScalarError};

/// Largest conductor accepted by [`CyclotomicField::new`].
pub const MAX_CONDUCTOR: u32 = 10_000;

pub(crate) struct FieldData {
    conductor: u32,
    degree: usize,
    /// `powers[k]` holds the power-basis coordinates of ζ^k for `k < max(2·degree - 1, conductor)`.
    powers: Vec<Vec<BigInt>>,
}

/// The cyclotomic field ℚ(ζ_N), as a cheap copyable handle.
///
/// Fields are interned per conductor, so two handles with the same conductor
/// compare equal and share their reduction tables.
#[derive(Clone, Copy)]
pub struct CyclotomicField(&'static FieldData);

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.0.conductor == other.0.conductor
    }
}

impl Eq for CyclotomicField {}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.0.conductor)
    }
}

fn registry() -> &'static Mutex<BTreeMap<u32, &'static FieldData>> {
    static REGISTRY: OnceLock<Mutex<BTreeMap<u32, &'static FieldData>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(BTreeMap::new()))
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Coefficients (low to high) of the n-th cyclotomic polynomial, via
/// Φ_n = ∏_{d | n} (x^d − 1)^{μ(n/d)}.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let divisors: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut poly = vec![BigInt::one()];
    // Multiply first, divide afterwards, so every division is exact.
    for &d in &divisors {
        if mobius(n / d) == 1 {
            let d = d as usize;
            let mut next = vec![BigInt::zero(); poly.len() + d];
            for (i, c) in poly.iter().enumerate() {
                next[i + d] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            // Divide by x^d − 1: q_i = q_{i-d} − p_i read from the bottom.
            let d = d as usize;
            let len = poly.len() - d;
            let mut quotient = vec![BigInt::zero(); len];
            for i in 0..len {
                let carry = if i >= d { quotient[i - d].clone() } else { BigInt::zero() };
                quotient[i] = carry - &poly[i];
            }
            poly = quotient;
        }
    }
    poly
}

fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

impl CyclotomicField {
    pub fn new(conductor: u32) -> Result<Self, ScalarError> {
        if conductor == 0 || conductor > MAX_CONDUCTOR {
            return Err(ScalarError::BadConductor(conductor));
        }
        let mut reg = registry().lock().expect("field registry poisoned");
        if let Some(data) = reg.get(&conductor) {
            return Ok(CyclotomicField(data));
        }
        let degree = euler_phi(conductor);
        let phi = cyclotomic_polynomial(conductor);
        debug_assert_eq!(phi.len(), degree + 1);
        let count = (2 * degree).max(conductor as usize).max(2);
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(count);
        let mut current = vec![BigInt::zero(); degree];
        current[0] = BigInt::one();
        for _ in 0..count {
            powers.push(current.clone());
            // multiply by ζ and fold the overflow coefficient back using Φ_N
            let top = current[degree - 1].clone();
            for i in (1..degree).rev() {
                current[i] = current[i - 1].clone();
            }
            current[0] = BigInt::zero();
            if !top.is_zero() {
                for (i, c) in current.iter_mut().enumerate() {
                    *c -= &top * &phi[i];
                }
            }
        }
        let data: &'static FieldData = Box::leak(Box::new(FieldData { conductor, degree, powers }));
        reg.insert(conductor, data);
        Ok(CyclotomicField(data))
    }

    pub fn conductor(&self) -> u32 {
        self.0.conductor
    }

    /// φ(N), the dimension of the field over ℚ.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn zero(&self) -> Scalar {
        Scalar { field: *self, coeffs: Vec::new() }
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }

    pub fn integer(&self, n: i64) -> Scalar {
        self.rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn fraction(&self, numer: i64, denom: i64) -> Scalar {
        assert!(denom != 0, "zero denominator");
        self.rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn rational(&self, q: BigRational) -> Scalar {
        if q.is_zero() {
            self.zero()
        } else {
            Scalar { field: *self, coeffs: vec![q] }
        }
    }

    /// ζ_N.
    pub fn zeta(&self) -> Scalar {
        self.zeta_pow(1)
    }

    /// ζ_N^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> Scalar {
        let n = self.0.conductor as i64;
        let k = k.rem_euclid(n) as usize;
        self.from_integer_coords(&self.0.powers[k])
    }

    pub(crate) fn from_integer_coords(&self, coords: &[BigInt]) -> Scalar {
        let coeffs = coords.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        Scalar::from_raw(*self, coeffs)
    }

    /// Builds a scalar from its power-basis coordinates; anything beyond φ(N)
    /// entries is reduced modulo Φ_N.
    pub fn from_coefficients(&self, coords: Vec<BigRational>) -> Scalar {
        if coords.len() <= self.0.degree {
            return Scalar::from_raw(*self, coords);
        }
        let mut acc = vec![BigRational::zero(); self.0.degree];
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = self.zeta_pow(k as i64);
            for (i, p) in power.coeffs.iter().enumerate() {
                acc[i] += c * p;
            }
        }
        Scalar::from_raw(*self, acc)
    }

    /// Order of any root of unity in this field divides this number.
    pub fn root_of_unity_bound(&self) -> u32 {
        let n = self.0.conductor;
        n.lcm(&2)
    }

    pub(crate) fn reduce_product(&self, prod: Vec<BigRational>) -> Vec<BigRational> {
        let degree = self.0.degree;
        if prod.len() <= degree {
            return prod;
        }
        let mut out: Vec<BigRational> = prod[..degree].to_vec();
        for (k, c) in prod.iter().enumerate().skip(degree) {
            if c.is_zero() {
                continue;
            }
            for (i, p) in self.0.powers[k].iter().enumerate() {
                if !p.is_zero() {
                    out[i] += c * BigRational::from_integer(p.clone());
                }
            }
        }
        out
    }
}

/// Exact rational Gaussian solve of a small square system, used for inverses.
pub(crate) fn solve_rational(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for j in col..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in col..n {
                    let delta = &factor * &a[col][j];
                    a[r][j] -= delta;
                }
                let delta = &factor * &b[col];
                b[r] -= delta;
            }
        }
    }
    Some(b)
}

pub(crate) fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
