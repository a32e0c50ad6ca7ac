use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::ExactError;

/// Work (multiply-adds) above which matrix products fan out over rows.
const PARALLEL_WORK: usize = 1 << 16;

/// A dense matrix of exact rationals.
///
/// Entries are kept as integer numerators over one shared positive
/// denominator, reduced so that the denominator and all numerators are
/// coprime. Products and sums therefore run on integers only; the single
/// normalization pass afterwards replaces per-entry fraction reduction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    num: Vec<BigInt>,
    den: BigInt,
}

impl ExactMatrix {
    /// Builds `num / den`, normalizing the representation.
    pub fn from_scaled(rows: usize, cols: usize, num: Vec<BigInt>, den: BigInt) -> Self {
        assert_eq!(num.len(), rows * cols, "entry count does not match dimensions");
        assert!(!den.is_zero(), "zero denominator");
        let mut m = ExactMatrix { rows, cols, num, den };
        m.normalize();
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            num: vec![BigInt::zero(); rows * cols],
            den: BigInt::one(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn_integer(n, n, |i, j| i64::from(i == j))
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self::from_fn_integer(rows, cols, |_, _| 1)
    }

    pub fn from_fn_integer(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let num = (0..rows * cols).map(|idx| BigInt::from(f(idx / cols, idx % cols))).collect();
        ExactMatrix {
            rows,
            cols,
            num,
            den: BigInt::one(),
        }
    }

    pub fn from_integers(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        Self::from_scaled(rows, cols, entries, BigInt::one())
    }

    pub fn from_rationals(rows: usize, cols: usize, entries: &[BigRational]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match dimensions");
        let den = entries
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        let num = entries
            .iter()
            .map(|e| e.numer() * (&den / e.denom()))
            .collect();
        Self::from_scaled(rows, cols, num, den)
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for v in &mut self.num {
                *v = -&*v;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for v in &self.num {
            if g.is_one() {
                return;
            }
            if !v.is_zero() {
                g = g.gcd(v);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            self.den /= &g;
            for v in &mut self.num {
                *v /= &g;
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Numerator of entry `(i, j)` over [`denominator`](Self::denominator).
    pub fn numerator(&self, i: usize, j: usize) -> &BigInt {
        &self.num[i * self.cols + j]
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        BigRational::new(self.numerator(i, j).clone(), self.den.clone())
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.numerator(i, j) == self.numerator(j, i)))
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn column_is_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.numerator(i, j).is_zero())
    }

    pub fn transpose(&self) -> Self {
        let num = (0..self.rows * self.cols)
            .map(|idx| self.numerator(idx % self.rows, idx / self.rows).clone())
            .collect();
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            num,
            den: self.den.clone(),
        }
    }

    pub fn trace(&self) -> BigRational {
        let sum = (0..self.rows.min(self.cols)).fold(BigInt::zero(), |acc, i| acc + self.numerator(i, i));
        BigRational::new(sum, self.den.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let num = self.num.iter().map(|v| v * c.numer()).collect();
        Self::from_scaled(self.rows, self.cols, num, &self.den * c.denom())
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), ExactError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    fn combine(&self, other: &Self, sign: i8) -> Result<Self, ExactError> {
        self.check_same_shape(other)?;
        let den = self.den.lcm(&other.den);
        let (fa, fb) = (&den / &self.den, &den / &other.den);
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| if sign > 0 { a * &fa + b * &fb } else { a * &fa - b * &fb })
            .collect();
        Ok(Self::from_scaled(self.rows, self.cols, num, den))
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.combine(other, -1)
    }

    /// `self + c·I`.
    pub fn add_identity(&self, c: &BigRational) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let den = self.den.lcm(c.denom());
        let factor = &den / &self.den;
        let shift = c.numer() * (&den / c.denom());
        let mut num: Vec<BigInt> = self.num.iter().map(|v| v * &factor).collect();
        for i in 0..self.rows {
            num[i * self.cols + i] += &shift;
        }
        Ok(Self::from_scaled(self.rows, self.cols, num, den))
    }

    /// Exact product. Zero entries of the left factor are skipped, so sparse
    /// left operands (adjacency, Grover operators) cost `O(nnz · cols)`.
    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let num = integer_product(&self.num, self.rows, self.cols, &other.num, other.cols);
        Ok(Self::from_scaled(self.rows, other.cols, num, &self.den * &other.den))
    }

    /// `self^e` by binary powering.
    ///
    /// # Panics
    ///
    /// Panics if the matrix is not square.
    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square(), "pow needs a square matrix");
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("square");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("square");
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.den.is_one()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.numerator(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }
}

fn max_bits(values: &[BigInt]) -> u64 {
    values.iter().map(BigInt::bits).max().unwrap_or(0)
}

/// Integer matrix product `a (r×inner) · b (inner×c)`, row-major.
fn integer_product(a: &[BigInt], r: usize, inner: usize, b: &[BigInt], c: usize) -> Vec<BigInt> {
    let budget = max_bits(a) + max_bits(b) + u64::from(usize::BITS - inner.leading_zeros());
    let parallel = r * inner * c >= PARALLEL_WORK;
    if budget < 126 {
        let a: Vec<i128> = a.iter().map(|v| v.to_i128().expect("fits")).collect();
        let b: Vec<i128> = b.iter().map(|v| v.to_i128().expect("fits")).collect();
        let row = |i: usize| {
            let mut acc = vec![0i128; c];
            for l in 0..inner {
                let x = a[i * inner + l];
                if x == 0 {
                    continue;
                }
                let brow = &b[l * c..(l + 1) * c];
                for (slot, y) in acc.iter_mut().zip(brow) {
                    *slot += x * y;
                }
            }
            acc.into_iter().map(BigInt::from).collect::<Vec<_>>()
        };
        if parallel {
            (0..r).into_par_iter().flat_map_iter(row).collect()
        } else {
            (0..r).flat_map(row).collect()
        }
    } else {
        let row = |i: usize| {
            let mut acc = vec![BigInt::zero(); c];
            for l in 0..inner {
                let x = &a[i * inner + l];
                if x.is_zero() {
                    continue;
                }
                for (slot, y) in acc.iter_mut().zip(&b[l * c..(l + 1) * c]) {
                    if !y.is_zero() {
                        *slot += x * y;
                    }
                }
            }
            acc
        };
        if parallel {
            (0..r).into_par_iter().flat_map_iter(row).collect()
        } else {
            (0..r).flat_map(row).collect()
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} (/{}) [", self.rows, self.cols, self.den)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.numerator(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
