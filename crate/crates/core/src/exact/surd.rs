use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExactError, ExactMatrix, ExactScalar};

/// A matrix over `Q(√D)`, stored as `rational + surd·√D`.
///
/// A matrix with no surd part has no radicand, so values from `Q` combine
/// freely with any field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SurdMatrix {
    rational: ExactMatrix,
    surd: ExactMatrix,
    radicand: Option<BigInt>,
}

impl SurdMatrix {
    pub fn new(rational: ExactMatrix, surd: ExactMatrix, radicand: Option<BigInt>) -> Result<Self, ExactError> {
        if (rational.rows(), rational.cols()) != (surd.rows(), surd.cols()) {
            return Err(ExactError::DimensionMismatch {
                left: (rational.rows(), rational.cols()),
                right: (surd.rows(), surd.cols()),
            });
        }
        let radicand = if surd.is_zero() { None } else { radicand };
        match &radicand {
            None if !surd.is_zero() => return Err(ExactError::InvalidRadicand(BigInt::zero())),
            Some(d) if *d <= BigInt::from(1) || !super::scalar::split_square(d).0.is_one() => {
                return Err(ExactError::InvalidRadicand(d.clone()))
            }
            _ => {}
        }
        Ok(SurdMatrix {
            rational,
            surd,
            radicand,
        })
    }

    pub fn rows(&self) -> usize {
        self.rational.rows()
    }

    pub fn cols(&self) -> usize {
        self.rational.cols()
    }

    pub fn rational_part(&self) -> &ExactMatrix {
        &self.rational
    }

    pub fn surd_part(&self) -> &ExactMatrix {
        &self.surd
    }

    pub fn radicand(&self) -> Option<&BigInt> {
        self.radicand.as_ref()
    }

    /// The rational matrix, when there is no surd part.
    pub fn as_rational(&self) -> Option<&ExactMatrix> {
        self.radicand.is_none().then_some(&self.rational)
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rational.is_symmetric() && self.surd.is_symmetric()
    }

    pub fn get(&self, i: usize, j: usize) -> ExactScalar {
        self.scalar(self.rational.get(i, j), self.surd.get(i, j))
    }

    fn scalar(&self, rational: BigRational, surd: BigRational) -> ExactScalar {
        match &self.radicand {
            Some(d) => ExactScalar::quadratic(rational, surd, d.clone()).expect("radicand is positive"),
            None => ExactScalar::Rational(rational),
        }
    }

    pub fn column(&self, j: usize) -> Vec<ExactScalar> {
        (0..self.rows()).map(|i| self.get(i, j)).collect()
    }

    pub fn column_is_zero(&self, j: usize) -> bool {
        self.rational.column_is_zero(j) && self.surd.column_is_zero(j)
    }

    pub fn trace(&self) -> ExactScalar {
        self.scalar(self.rational.trace(), self.surd.trace())
    }

    fn field(&self, other: &Self) -> Result<Option<BigInt>, ExactError> {
        match (&self.radicand, &other.radicand) {
            (Some(a), Some(b)) if a != b => Err(ExactError::MixedFields(a.clone(), b.clone())),
            (Some(a), _) | (None, Some(a)) => Ok(Some(a.clone())),
            (None, None) => Ok(None),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.field(other)?;
        Self::new(self.rational.add(&other.rational)?, self.surd.add(&other.surd)?, d)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.field(other)?;
        Self::new(self.rational.sub(&other.rational)?, self.surd.sub(&other.surd)?, d)
    }

    /// `(A + B√D)(C + E√D) = (AC + D·BE) + (AE + BC)√D`.
    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.field(other)?;
        let mut rational = self.rational.mul(&other.rational)?;
        let mut surd = ExactMatrix::zeros(rational.rows(), rational.cols());
        if let Some(radicand) = &d {
            if !self.surd.is_zero() && !other.surd.is_zero() {
                let be = self.surd.mul(&other.surd)?;
                rational = rational.add(&be.scale(&BigRational::from_integer(radicand.clone())))?;
            }
            if !other.surd.is_zero() {
                surd = surd.add(&self.rational.mul(&other.surd)?)?;
            }
            if !self.surd.is_zero() {
                surd = surd.add(&self.surd.mul(&other.rational)?)?;
            }
        }
        Self::new(rational, surd, d)
    }

    /// Multiplies every entry by an exact scalar.
    pub fn scale(&self, c: &ExactScalar) -> Result<Self, ExactError> {
        let probe = match &self.radicand {
            Some(d) => ExactScalar::quadratic(BigRational::zero(), BigRational::from_integer(1.into()), d.clone())?,
            None => ExactScalar::zero(),
        };
        probe.common_radicand(c)?;
        let d = self.radicand.clone().or_else(|| c.radicand().cloned());
        let (a, b) = (c.rational_part(), c.surd_part());
        let mut rational = self.rational.scale(a);
        let mut surd = self.surd.scale(a);
        if !b.is_zero() {
            let radicand = BigRational::from_integer(d.clone().expect("quadratic scalar has a radicand"));
            rational = rational.add(&self.surd.scale(&(&b * radicand)))?;
            surd = surd.add(&self.rational.scale(&b))?;
        }
        Self::new(rational, surd, d)
    }

    /// `self + c·I`.
    pub fn add_scalar_identity(&self, c: &ExactScalar) -> Result<Self, ExactError> {
        let identity = SurdMatrix::from(ExactMatrix::identity(self.rows()));
        self.add(&identity.scale(c)?)
    }
}

impl From<ExactMatrix> for SurdMatrix {
    fn from(m: ExactMatrix) -> Self {
        let surd = ExactMatrix::zeros(m.rows(), m.cols());
        SurdMatrix {
            rational: m,
            surd,
            radicand: None,
        }
    }
}

impl fmt::Debug for SurdMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.radicand {
            None => write!(f, "{:?}", self.rational),
            Some(d) => write!(f, "{:?} + sqrt({d})·{:?}", self.rational, self.surd),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn field_arithmetic() {
        let i2 = ExactMatrix::identity(2);
        let root5 = SurdMatrix::new(ExactMatrix::zeros(2, 2), i2.clone(), Some(5.into())).unwrap();
        let square = root5.mul(&root5).unwrap();
        assert_eq!(square.as_rational(), Some(&i2.scale(&q(5, 1))));
        let golden = ExactScalar::quadratic(q(-1, 2), q(1, 2), 5.into()).unwrap();
        let m = SurdMatrix::from(i2.clone()).scale(&golden).unwrap();
        assert_eq!(m.trace(), golden.scale(&q(2, 1)));
        assert_eq!(m.get(0, 1), ExactScalar::zero());
        let root2 = SurdMatrix::new(ExactMatrix::zeros(2, 2), i2, Some(2.into())).unwrap();
        assert!(matches!(root2.add(&root5), Err(ExactError::MixedFields(_, _))));
    }

    #[test]
    fn radicand_validation() {
        let i2 = ExactMatrix::identity(2);
        let z = ExactMatrix::zeros(2, 2);
        assert!(SurdMatrix::new(z.clone(), i2.clone(), Some(12.into())).is_err());
        assert!(SurdMatrix::new(z.clone(), i2, None).is_err());
        assert!(SurdMatrix::new(z.clone(), z, Some(12.into())).is_ok());
    }

    #[test]
    fn surd_part_cancels_to_rational() {
        let i2 = ExactMatrix::identity(2);
        let root3 = SurdMatrix::new(ExactMatrix::zeros(2, 2), i2, Some(3.into())).unwrap();
        let zero = root3.sub(&root3).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.radicand(), None);
    }
}
