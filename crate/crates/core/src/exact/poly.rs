use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExactError, ExactScalar};

/// A polynomial with rational coefficients, stored lowest degree first with
/// no trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_big_integers(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `x`
    pub fn x() -> Self {
        Self::from_integers(&[0, 1])
    }

    /// The monic linear factor `x − root`.
    pub fn linear(root: BigRational) -> Self {
        Self::new(vec![-root, BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigRational {
        self.coeffs.get(power).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.is_integral()
            .then(|| self.coeffs.iter().map(BigRational::to_integer).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division over Q.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ExactError> {
        let dd = divisor.degree().ok_or(ExactError::DivisionByZero)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree().filter(|&sd| sd >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        for shift in (0..=sd - dd).rev() {
            let c = &rem[shift + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * b;
            }
            quot[shift] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is non-zero");
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(lead) => a.scale(&lead.recip()),
            None => a,
        }
    }

    /// The square-free part `p / gcd(p, p')`, made monic. Its degree is the
    /// number of distinct complex roots of `p`.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.div_rem(&g).expect("gcd is non-zero");
        let lead = q.leading().cloned().expect("quotient is non-zero");
        q.scale(&lead.recip())
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at an exact scalar.
    pub fn eval(&self, x: &ExactScalar) -> Result<ExactScalar, ExactError> {
        self.coeffs.iter().rev().try_fold(ExactScalar::zero(), |acc, c| {
            acc.checked_mul(x)?.checked_add(&ExactScalar::Rational(c.clone()))
        })
    }
}

impl fmt::Display for Polynomial {
    /// Highest degree first, e.g. `x^3 - 3x - 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigRational::zero();
            let magnitude = if negative { -c } else { c.clone() };
            let sign = match (first, negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let coefficient = if magnitude.is_one() && power > 0 {
                String::new()
            } else {
                super::scalar::format_rational(&magnitude)
            };
            let monomial = match power {
                0 => String::new(),
                1 => "x".to_string(),
                p => format!("x^{p}"),
            };
            write!(f, "{sign}{coefficient}{monomial}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_degree() {
        let p = Polynomial::from_integers(&[-2, -3, 0, 1]);
        assert_eq!(p.to_string(), "x^3 - 3x - 2");
        assert_eq!(p.degree(), Some(3));
        assert_eq!(Polynomial::from_integers(&[0, 0]).degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        // (x − 2)(x + 1)² = x³ − 3x − 2
        let p = Polynomial::from_integers(&[-2, -3, 0, 1]);
        let (q, r) = p.div_rem(&Polynomial::from_integers(&[-2, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, Polynomial::from_integers(&[1, 2, 1]));
        assert_eq!(p.gcd(&p.derivative()), Polynomial::from_integers(&[1, 1]));
        assert_eq!(p.square_free_part(), Polynomial::from_integers(&[-2, -1, 1]));
    }

    #[test]
    fn evaluation() {
        let p = Polynomial::from_integers(&[-1, 1, 1]); // x² + x − 1
        let root = ExactScalar::quadratic(
            BigRational::new((-1).into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            5.into(),
        )
        .unwrap();
        assert!(p.eval(&root).unwrap().is_zero());
        assert_eq!(
            p.eval_rational(&BigRational::from_integer(2.into())),
            BigRational::from_integer(5.into())
        );
    }
}
