use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// An exact real number: a rational, or `a + b√D` with `D > 1` square-free and `b ≠ 0`.
///
/// Arithmetic between two quadratic values requires the same radicand; mixing
/// `Q(√2)` with `Q(√3)` is reported as [`ExactError::MixedFields`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExactScalar {
    Rational(BigRational),
    Quadratic {
        rational: BigRational,
        surd: BigRational,
        radicand: BigInt,
    },
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar::Rational(BigRational::one())
    }

    pub fn integer(v: i64) -> Self {
        ExactScalar::Rational(BigRational::from_integer(v.into()))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        ExactScalar::Rational(BigRational::new(numer.into(), denom.into()))
    }

    /// `rational + surd·√radicand`, normalized: square factors of the
    /// radicand are pulled into the coefficient, and a vanishing surd part
    /// collapses to a rational.
    pub fn quadratic(rational: BigRational, surd: BigRational, radicand: BigInt) -> Result<Self, ExactError> {
        if radicand.is_negative() {
            return Err(ExactError::NegativeRadicand(radicand));
        }
        let (square, free) = split_square(&radicand);
        let surd = surd * BigRational::from_integer(square);
        if surd.is_zero() || free.is_zero() {
            return Ok(ExactScalar::Rational(rational));
        }
        if free.is_one() {
            return Ok(ExactScalar::Rational(rational + surd));
        }
        Ok(ExactScalar::Quadratic {
            rational,
            surd,
            radicand: free,
        })
    }

    /// The two roots `(s ± √(s² − 4p)) / 2` of `x² − s·x + p`, larger first.
    pub fn roots_of_monic_quadratic(s: &BigInt, p: &BigInt) -> Result<(Self, Self), ExactError> {
        let disc: BigInt = s * s - BigInt::from(4) * p;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let a = BigRational::from_integer(s.clone()) * &half;
        let hi = Self::quadratic(a.clone(), half.clone(), disc.clone())?;
        let lo = Self::quadratic(a, -half, disc)?;
        Ok((hi, lo))
    }

    pub fn rational_part(&self) -> &BigRational {
        match self {
            ExactScalar::Rational(r) => r,
            ExactScalar::Quadratic { rational, .. } => rational,
        }
    }

    pub fn surd_part(&self) -> BigRational {
        match self {
            ExactScalar::Rational(_) => BigRational::zero(),
            ExactScalar::Quadratic { surd, .. } => surd.clone(),
        }
    }

    pub fn radicand(&self) -> Option<&BigInt> {
        match self {
            ExactScalar::Rational(_) => None,
            ExactScalar::Quadratic { radicand, .. } => Some(radicand),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            ExactScalar::Quadratic { .. } => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExactScalar::Rational(r) if r.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, ExactScalar::Rational(_))
    }

    /// The Galois conjugate `a − b√D` (identity on rationals).
    pub fn conjugate(&self) -> Self {
        match self {
            ExactScalar::Rational(_) => self.clone(),
            ExactScalar::Quadratic {
                rational,
                surd,
                radicand,
            } => ExactScalar::Quadratic {
                rational: rational.clone(),
                surd: -surd,
                radicand: radicand.clone(),
            },
        }
    }

    /// Field trace `x + x̄`.
    pub fn trace(&self) -> BigRational {
        match self {
            ExactScalar::Rational(r) => r * BigRational::from_integer(2.into()),
            ExactScalar::Quadratic { rational, .. } => rational * BigRational::from_integer(2.into()),
        }
    }

    /// Field norm `x·x̄`.
    pub fn norm(&self) -> BigRational {
        match self {
            ExactScalar::Rational(r) => r * r,
            ExactScalar::Quadratic {
                rational,
                surd,
                radicand,
            } => rational * rational - surd * surd * BigRational::from_integer(radicand.clone()),
        }
    }

    /// Radicand shared by `self` and `other`, or an error if they live in different fields.
    pub fn common_radicand<'a>(&'a self, other: &'a Self) -> Result<Option<&'a BigInt>, ExactError> {
        match (self.radicand(), other.radicand()) {
            (Some(a), Some(b)) if a != b => Err(ExactError::MixedFields(a.clone(), b.clone())),
            (Some(a), _) | (None, Some(a)) => Ok(Some(a)),
            (None, None) => Ok(None),
        }
    }

    fn rebuild(rational: BigRational, surd: BigRational, radicand: Option<&BigInt>) -> Self {
        match radicand {
            Some(d) if !surd.is_zero() => ExactScalar::Quadratic {
                rational,
                surd,
                radicand: d.clone(),
            },
            _ => ExactScalar::Rational(rational),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(other)?;
        Ok(Self::rebuild(
            self.rational_part() + other.rational_part(),
            self.surd_part() + other.surd_part(),
            d,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(other)?;
        let (a, b) = (self.rational_part(), self.surd_part());
        let (c, e) = (other.rational_part(), other.surd_part());
        let dd = d.map_or_else(BigRational::zero, |d| BigRational::from_integer(d.clone()));
        Ok(Self::rebuild(a * c + &b * &e * dd, a * &e + b * c, d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        self.common_radicand(other)?;
        let norm = other.norm();
        let numer = self.checked_mul(&other.conjugate())?;
        Ok(numer.scale(&norm.recip()))
    }

    /// Multiplies by a rational.
    pub fn scale(&self, factor: &BigRational) -> Self {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(r * factor),
            ExactScalar::Quadratic {
                rational,
                surd,
                radicand,
            } => Self::rebuild(rational * factor, surd * factor, Some(radicand)),
        }
    }

    pub fn checked_pow(&self, exp: u32) -> Result<Self, ExactError> {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Sign of the real number, computed exactly.
    pub fn signum(&self) -> Ordering {
        match self {
            ExactScalar::Rational(r) => r.cmp(&BigRational::zero()),
            ExactScalar::Quadratic {
                rational,
                surd,
                radicand,
            } => {
                let sa = rational.cmp(&BigRational::zero());
                let sb = surd.cmp(&BigRational::zero());
                if sa == sb || sa == Ordering::Equal {
                    return sb;
                }
                // Opposite signs: the larger magnitude wins; they never tie since √D is irrational.
                let a2 = rational * rational;
                let b2d = surd * surd * BigRational::from_integer(radicand.clone());
                if a2 > b2d {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    /// Exact total order on values drawn from a single field.
    pub fn checked_cmp(&self, other: &Self) -> Result<Ordering, ExactError> {
        Ok(self.checked_sub(other)?.signum())
    }

    /// Integer value, if the scalar is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Decimal approximation, for display and test oracles only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let r = |q: &BigRational| q.to_f64().unwrap_or(f64::NAN);
        match self {
            ExactScalar::Rational(q) => r(q),
            ExactScalar::Quadratic {
                rational,
                surd,
                radicand,
            } => r(rational) + r(surd) * radicand.to_f64().unwrap_or(f64::NAN).sqrt(),
        }
    }
}

impl Ord for ExactScalar {
    /// Numeric order. Values from different quadratic fields are compared by
    /// squaring: with `x − y = P − Q`, `P ∈ Q(√D)` and `Q = e√E`, the sign
    /// follows from the signs of `P`, `Q` and of `P² − Q²`.
    fn cmp(&self, other: &Self) -> Ordering {
        if let Ok(ord) = self.checked_cmp(other) {
            return ord;
        }
        let e = other.surd_part();
        let big_e = BigRational::from_integer(other.radicand().cloned().unwrap_or_default());
        let p = ExactScalar::Rational(-other.rational_part())
            .checked_add(self)
            .expect("rational shift stays in the field");
        let (sp, sq) = (p.signum(), e.cmp(&BigRational::zero()));
        if sp != sq || sp == Ordering::Equal {
            return sp.cmp(&sq);
        }
        let q2 = ExactScalar::Rational(&e * &e * big_e);
        let diff = p
            .checked_mul(&p)
            .and_then(|p2| p2.checked_sub(&q2))
            .expect("same field")
            .signum();
        if sp == Ordering::Greater {
            diff
        } else {
            diff.reverse()
        }
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        ExactScalar::Rational(r)
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        ExactScalar::integer(v)
    }
}

impl std::ops::Neg for &ExactScalar {
    type Output = ExactScalar;

    fn neg(self) -> ExactScalar {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(-r),
            ExactScalar::Quadratic {
                rational,
                surd,
                radicand,
            } => ExactScalar::Quadratic {
                rational: -rational,
                surd: -surd,
                radicand: radicand.clone(),
            },
        }
    }
}

impl std::ops::Neg for ExactScalar {
    type Output = ExactScalar;

    fn neg(self) -> ExactScalar {
        -&self
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExactScalar {
    /// Rationals print as `p/q`; quadratics as `a+b*sqrt(D)` with `a` omitted when zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(r) => f.write_str(&format_rational(r)),
            ExactScalar::Quadratic {
                rational,
                surd,
                radicand,
            } => {
                let sqrt = format!("sqrt({radicand})");
                let tail = if surd.is_one() {
                    sqrt
                } else if *surd == -BigRational::one() {
                    format!("-{sqrt}")
                } else {
                    format!("{}*{sqrt}", format_rational(surd))
                };
                if rational.is_zero() {
                    f.write_str(&tail)
                } else if tail.starts_with('-') {
                    write!(f, "{}{tail}", format_rational(rational))
                } else {
                    write!(f, "{}+{tail}", format_rational(rational))
                }
            }
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splits `v ≥ 0` as `s²·f` with `f` square-free; returns `(s, f)`.
pub(crate) fn split_square(v: &BigInt) -> (BigInt, BigInt) {
    if v.is_zero() {
        return (BigInt::one(), BigInt::zero());
    }
    let mut rest = v.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut exponent = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            exponent += 1;
        }
        square *= p.pow(exponent / 2);
        if exponent % 2 == 1 {
            free *= &p;
        }
        p += 1;
    }
    (square, free * rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn golden() -> ExactScalar {
        // (−1 + √5)/2
        ExactScalar::quadratic(q(-1, 2), q(1, 2), 5.into()).unwrap()
    }

    #[test]
    fn square_split() {
        assert_eq!(split_square(&12.into()), (2.into(), 3.into()));
        assert_eq!(split_square(&45.into()), (3.into(), 5.into()));
        assert_eq!(split_square(&49.into()), (7.into(), 1.into()));
        assert_eq!(split_square(&30.into()), (1.into(), 30.into()));
        assert_eq!(split_square(&72.into()), (6.into(), 2.into()));
    }

    #[test]
    fn normalization() {
        let x = ExactScalar::quadratic(q(1, 1), q(1, 1), 4.into()).unwrap();
        assert_eq!(x, ExactScalar::integer(3));
        let y = ExactScalar::quadratic(q(0, 1), q(1, 2), 20.into()).unwrap();
        assert_eq!(y, ExactScalar::quadratic(q(0, 1), q(1, 1), 5.into()).unwrap());
    }

    #[test]
    fn field_arithmetic() {
        let g = golden();
        // g² + g − 1 = 0
        let g2 = g.checked_mul(&g).unwrap();
        let lhs = g2.checked_add(&g).unwrap().checked_sub(&ExactScalar::one()).unwrap();
        assert!(lhs.is_zero());
        let inv = ExactScalar::one().checked_div(&g).unwrap();
        assert_eq!(g.checked_mul(&inv).unwrap(), ExactScalar::one());
        assert_eq!(g.trace(), q(-1, 1));
        assert_eq!(g.norm(), q(-1, 1));
    }

    #[test]
    fn mixed_fields_rejected() {
        let s2 = ExactScalar::quadratic(q(0, 1), q(1, 1), 2.into()).unwrap();
        let s3 = ExactScalar::quadratic(q(0, 1), q(1, 1), 3.into()).unwrap();
        assert!(matches!(s2.checked_add(&s3), Err(ExactError::MixedFields(..))));
        assert!(s2.checked_mul(&ExactScalar::integer(3)).is_ok());
    }

    #[test]
    fn exact_ordering() {
        let g = golden(); // ≈ 0.618
        assert_eq!(g.signum(), Ordering::Greater);
        assert_eq!(g.conjugate().signum(), Ordering::Less);
        assert_eq!(g.checked_cmp(&ExactScalar::ratio(5, 8)).unwrap(), Ordering::Less);
        assert_eq!(g.checked_cmp(&ExactScalar::ratio(3, 5)).unwrap(), Ordering::Greater);
        let (hi, lo) = ExactScalar::roots_of_monic_quadratic(&BigInt::from(-1), &BigInt::from(-1)).unwrap();
        assert_eq!(hi, g);
        assert_eq!(lo, g.conjugate());
    }

    #[test]
    fn ordering_across_fields() {
        let sqrt = |d: i64| ExactScalar::quadratic(q(0, 1), q(1, 1), d.into()).unwrap();
        let mut values = [
            sqrt(3).scale(&q(1, 2)),
            golden(),
            sqrt(2).scale(&q(-1, 2)),
            ExactScalar::ratio(1, 2),
            sqrt(2).scale(&q(1, 2)),
            ExactScalar::integer(-1),
        ];
        values.sort();
        let approx: Vec<f64> = values.iter().map(ExactScalar::to_f64).collect();
        assert!(approx.windows(2).all(|w| w[0] < w[1]), "{approx:?}");
        assert!(sqrt(2) > sqrt(3).scale(&q(4, 5)));
        assert!(sqrt(2).conjugate() < sqrt(3).scale(&q(-4, 5)));
    }

    #[test]
    fn display() {
        assert_eq!(golden().to_string(), "-1/2+1/2*sqrt(5)");
        assert_eq!(golden().conjugate().to_string(), "-1/2-1/2*sqrt(5)");
        assert_eq!(ExactScalar::ratio(-4, 6).to_string(), "-2/3");
        let s = ExactScalar::quadratic(q(0, 1), q(-1, 1), 2.into()).unwrap();
        assert_eq!(s.to_string(), "-sqrt(2)");
    }
}
