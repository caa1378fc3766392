//! Dense matrices and rank over exact and floating scalars.
//!
//! Two elimination routes are provided: Gaussian elimination over a
//! [`Field`], and fraction-free (Bareiss) elimination over an
//! [`IntegralDomain`], where every division is exact.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{CheckedMul, CheckedSub, FromPrimitive, One, ToPrimitive, Zero};

/// Ring element usable as a matrix entry.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + FromPrimitive
    + ToPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Treat as zero during elimination. Exact types use `is_zero`.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn from_sign(positive: bool) -> Self {
        if positive {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

/// Scalars whose `Div` is field division.
pub trait Field: Scalar {}

/// Scalars whose `Div` is exact division by a divisor.
pub trait IntegralDomain: Scalar + CheckedMul + CheckedSub {}

impl Scalar for f64 {
    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-9
    }
}
impl Field for f64 {}

impl Scalar for f32 {
    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-5
    }
}
impl Field for f32 {}

impl Scalar for Ratio<BigInt> {}
impl Field for Ratio<BigInt> {}
impl Scalar for Ratio<i64> {}
impl Field for Ratio<i64> {}

impl Scalar for i64 {}
impl IntegralDomain for i64 {}
impl Scalar for i128 {}
impl IntegralDomain for i128 {}
impl Scalar for BigInt {}
impl IntegralDomain for BigInt {}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Converts entries through `i64`; panics if an entry does not fit.
    pub fn cast<U: Scalar>(&self) -> Matrix<U> {
        self.map(|v| {
            U::from_i64(v.to_i64().expect("entry fits in i64")).expect("representable entry")
        })
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Rank by Gaussian elimination with largest-magnitude pivoting.
pub fn rank_gauss<F: Field>(m: &Matrix<F>) -> usize {
    let mut a = m.clone();
    let mut rank = 0;
    for col in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let pivot = (rank..a.rows)
            .filter(|&r| !a.get(r, col).is_negligible())
            .max_by(|&x, &y| {
                let fx = a.get(x, col).to_f64().map_or(0.0, f64::abs);
                let fy = a.get(y, col).to_f64().map_or(0.0, f64::abs);
                fx.total_cmp(&fy)
            });
        let Some(p) = pivot else { continue };
        a.swap_rows(rank, p);
        let pv = a.get(rank, col).clone();
        for r in rank + 1..a.rows {
            let factor = a.get(r, col).clone() / pv.clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..a.cols {
                let v = a.get(r, c).clone() - factor.clone() * a.get(rank, c).clone();
                a.set(r, c, v);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank by fraction-free elimination. Returns `None` on overflow, which
/// can only happen for fixed-width integer types.
pub fn rank_bareiss<R: IntegralDomain>(m: &Matrix<R>) -> Option<usize> {
    let mut a = m.clone();
    let mut prev = R::one();
    let mut rank = 0;
    for col in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let Some(p) = (rank..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(rank, p);
        let pv = a.get(rank, col).clone();
        for r in rank + 1..a.rows {
            let lead = a.get(r, col).clone();
            for c in col + 1..a.cols {
                let x = pv.checked_mul(a.get(r, c))?;
                let y = lead.checked_mul(a.get(rank, c))?;
                let v = x.checked_sub(&y)? / prev.clone();
                a.set(r, c, v);
            }
            a.set(r, col, R::zero());
        }
        prev = pv;
        rank += 1;
    }
    Some(rank)
}

/// Exact rank over the rationals of an integer matrix: fixed-width
/// fraction-free elimination first, arbitrary precision on overflow.
pub fn rank_rational(m: &Matrix<i64>) -> usize {
    let wide: Matrix<i128> = m.map(|&v| i128::from(v));
    match rank_bareiss(&wide) {
        Some(r) => r,
        None => rank_bareiss(&m.map(|&v| BigInt::from(v))).expect("arbitrary precision"),
    }
}

/// Rank over the prime field with `p` elements.
pub fn rank_mod_prime(m: &Matrix<i64>, p: u64) -> usize {
    let p128 = u128::from(p);
    let reduce = |v: i64| -> u64 { (i128::from(v).rem_euclid(p as i128)) as u64 };
    let mut a: Vec<Vec<u64>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| reduce(*m.get(r, c))).collect())
        .collect();
    let mul = |x: u64, y: u64| ((u128::from(x) * u128::from(y)) % p128) as u64;
    let inv = |x: u64| {
        // Fermat: x^(p-2)
        let (mut base, mut exp, mut acc) = (x, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..m.cols() {
        if rank == a.len() {
            break;
        }
        let Some(piv) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let iv = inv(a[rank][col]);
        for r in rank + 1..a.len() {
            let f = mul(a[r][col], iv);
            if f == 0 {
                continue;
            }
            for c in col..m.cols() {
                let sub = mul(f, a[rank][c]);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
