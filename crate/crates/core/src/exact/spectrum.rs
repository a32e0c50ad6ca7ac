//! Exact spectra of integer symmetric matrices and their eigenprojections.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{char_poly, ExactError, ExactMatrix, ExactScalar, Polynomial, SurdMatrix};

/// One distinct eigenvalue and its algebraic multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Eigenvalue {
    pub value: ExactScalar,
    pub multiplicity: usize,
}

/// Distinct eigenvalues in descending order, with the characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<Eigenvalue>,
    pub charpoly: Polynomial,
}

impl SpectrumReport {
    pub fn distinct(&self) -> impl Iterator<Item = &ExactScalar> {
        self.eigenvalues.iter().map(|e| &e.value)
    }

    pub fn distinct_count(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn multiplicity(&self, value: &ExactScalar) -> usize {
        self.eigenvalues
            .iter()
            .find(|e| &e.value == value)
            .map_or(0, |e| e.multiplicity)
    }

    pub fn contains(&self, value: &ExactScalar) -> bool {
        self.multiplicity(value) > 0
    }

    pub fn dimension(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.multiplicity).sum()
    }

    pub fn is_rational(&self) -> bool {
        self.eigenvalues.iter().all(|e| e.value.is_rational())
    }

    /// `Σ m_i λ_i^power`, exact.
    pub fn power_sum(&self, power: u32) -> Result<ExactScalar, ExactError> {
        self.eigenvalues.iter().try_fold(ExactScalar::zero(), |acc, e| {
            let term = e.value.checked_pow(power)?.scale(&BigRational::from_integer(e.multiplicity.into()));
            acc.checked_add(&term)
        })
    }

    /// The spectrum of `c·M`, for `c > 0` (order is preserved).
    pub fn scaled(&self, c: &BigRational) -> SpectrumReport {
        assert!(c.is_positive(), "scaling factor must be positive");
        let eigenvalues = self
            .eigenvalues
            .iter()
            .map(|e| Eigenvalue {
                value: e.value.scale(c),
                multiplicity: e.multiplicity,
            })
            .collect();
        // det(xI − cM) = c^n·det((x/c)I − M).
        let n = self.charpoly.degree().unwrap_or(0);
        let coeffs = self
            .charpoly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, a)| a * pow_rational(c, n - j))
            .collect();
        SpectrumReport {
            eigenvalues,
            charpoly: Polynomial::new(coeffs),
        }
    }

    /// Rendering such as `{[4]^1, [2]^1, [0]^3, [-2]^3}`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .eigenvalues
            .iter()
            .map(|e| format!("[{}]^{}", e.value, e.multiplicity))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for SpectrumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn pow_rational(c: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * c)
}

/// The exact spectrum of an integer symmetric matrix.
///
/// The characteristic polynomial is split into integer roots and irreducible
/// quadratics. Any other factor is reported as [`ExactError::IrreducibleFactor`].
pub fn exact_spectrum(a: &ExactMatrix) -> Result<SpectrumReport, ExactError> {
    if !a.is_square() {
        return Err(ExactError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !a.is_integral() {
        return Err(ExactError::NonIntegerEntries);
    }
    if !a.is_symmetric() {
        return Err(ExactError::NotSymmetric);
    }
    let charpoly = char_poly(a, true)?;
    let coeffs = charpoly.to_integers().expect("integer input gives integer coefficients");
    // Every eigenvalue of a symmetric matrix is bounded by the largest absolute row sum.
    let n = a.rows();
    let bound = (0..n)
        .map(|i| (0..n).map(|j| a.numerator(i, j).abs()).sum::<BigInt>())
        .max()
        .unwrap_or_default();
    let mut eigenvalues = factor_real_rooted(coeffs, &bound)?;
    eigenvalues.sort_by(|x, y| y.value.cmp(&x.value));
    Ok(SpectrumReport { eigenvalues, charpoly })
}

/// Splits a monic integer polynomial whose roots are real and bounded by
/// `bound` in absolute value.
fn factor_real_rooted(mut rem: Vec<BigInt>, bound: &BigInt) -> Result<Vec<Eigenvalue>, ExactError> {
    let mut found = Vec::new();
    let zeros = rem.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        rem.drain(..zeros);
        found.push(Eigenvalue {
            value: ExactScalar::zero(),
            multiplicity: zeros,
        });
    }

    let mut r = -bound.clone();
    while &r <= bound && rem.len() > 1 {
        if !r.is_zero() && rem[0].is_multiple_of(&r) {
            let multiplicity = divide_out(&mut rem, &[-r.clone(), BigInt::one()]);
            if multiplicity > 0 {
                found.push(Eigenvalue {
                    value: ExactScalar::Rational(BigRational::from_integer(r.clone())),
                    multiplicity,
                });
            }
        }
        r += 1;
    }

    // x² − s·x + p with irrational real roots: |s| ≤ 2·bound, 0 < |p| ≤ bound².
    let s_max = bound * 2u32;
    let p_max = bound * bound;
    let mut s = -s_max.clone();
    while s <= s_max && rem.len() > 2 {
        let mut p = -p_max.clone();
        while p <= p_max && rem.len() > 2 {
            let disc: BigInt = &s * &s - &p * 4u32;
            let admissible = !p.is_zero()
                && disc.is_positive()
                && disc.sqrt().pow(2) != disc
                && rem[0].is_multiple_of(&p);
            if admissible {
                let multiplicity = divide_out(&mut rem, &[p.clone(), -s.clone(), BigInt::one()]);
                if multiplicity > 0 {
                    let (hi, lo) = ExactScalar::roots_of_monic_quadratic(&s, &p)?;
                    for value in [hi, lo] {
                        found.push(Eigenvalue { value, multiplicity });
                    }
                }
            }
            p += 1;
        }
        s += 1;
    }

    if rem.len() > 1 {
        return Err(ExactError::IrreducibleFactor { degree: rem.len() - 1 });
    }
    Ok(found)
}

/// Divides `poly` by the monic `factor` as often as it goes evenly; returns the count.
fn divide_out(poly: &mut Vec<BigInt>, factor: &[BigInt]) -> usize {
    let mut count = 0;
    while poly.len() >= factor.len() {
        let Some(quotient) = exact_monic_division(poly, factor) else {
            break;
        };
        *poly = quotient;
        count += 1;
    }
    count
}

fn exact_monic_division(poly: &[BigInt], factor: &[BigInt]) -> Option<Vec<BigInt>> {
    let df = factor.len() - 1;
    let mut rem = poly.to_vec();
    let mut quot = vec![BigInt::zero(); poly.len() - df];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + df].clone();
        if c.is_zero() {
            continue;
        }
        for (i, f) in factor.iter().enumerate() {
            rem[shift + i] -= &c * f;
        }
        quot[shift] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

/// A polynomial with coefficients in `Q` or one field `Q(√D)`, lowest degree first.
#[derive(Clone, Debug)]
struct ScalarPoly(Vec<ExactScalar>);

impl ScalarPoly {
    fn mul(&self, other: &[ExactScalar]) -> Result<Self, ExactError> {
        let mut out = vec![ExactScalar::zero(); self.0.len() + other.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.iter().enumerate() {
                out[i + j] = out[i + j].checked_add(&a.checked_mul(b)?)?;
            }
        }
        Ok(ScalarPoly(out))
    }

    fn eval(&self, x: &ExactScalar) -> Result<ExactScalar, ExactError> {
        self.0
            .iter()
            .rev()
            .try_fold(ExactScalar::zero(), |acc, c| acc.checked_mul(x)?.checked_add(c))
    }
}

/// Coefficients of the Lagrange polynomial `Π_{μ≠λ} (x − μ)/(λ − μ)`.
///
/// Conjugate pairs outside `λ`'s field are multiplied together first, so
/// their contribution is rational.
fn lagrange_polynomial(spectrum: &SpectrumReport, lambda: &ExactScalar) -> Result<ScalarPoly, ExactError> {
    let mut numerator = ScalarPoly(vec![ExactScalar::one()]);
    for mu in spectrum.distinct().filter(|&mu| mu != lambda) {
        let foreign = mu.radicand().is_some() && mu.radicand() != lambda.radicand();
        let factor = if foreign {
            if mu.surd_part().is_negative() {
                continue;
            }
            vec![
                ExactScalar::Rational(mu.norm()),
                ExactScalar::Rational(-mu.trace()),
                ExactScalar::one(),
            ]
        } else {
            vec![-mu, ExactScalar::one()]
        };
        numerator = numerator.mul(&factor)?;
    }
    let denominator = numerator.eval(lambda)?;
    let coeffs = numerator
        .0
        .iter()
        .map(|c| c.checked_div(&denominator))
        .collect::<Result<_, _>>()?;
    Ok(ScalarPoly(coeffs))
}

/// Horner evaluation of a rational polynomial at a square matrix.
pub fn mat_poly_eval(p: &Polynomial, m: &ExactMatrix) -> Result<ExactMatrix, ExactError> {
    if !m.is_square() {
        return Err(ExactError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut acc = ExactMatrix::zeros(m.rows(), m.cols());
    for c in p.coeffs().iter().rev() {
        acc = m.mul(&acc)?.add_identity(c)?;
    }
    Ok(acc)
}

/// Horner evaluation of a polynomial with coefficients in `Q(√D)` at a rational matrix.
fn mat_poly_eval_scalar(p: &ScalarPoly, m: &ExactMatrix) -> Result<SurdMatrix, ExactError> {
    let mut radicand = None;
    for c in &p.0 {
        if let Some(d) = c.radicand() {
            if radicand.as_ref().is_some_and(|r: &BigInt| r != d) {
                return Err(ExactError::MixedFields(radicand.unwrap_or_default(), d.clone()));
            }
            radicand = Some(d.clone());
        }
    }
    let rational = Polynomial::new(p.0.iter().map(|c| c.rational_part().clone()).collect());
    let surd = Polynomial::new(p.0.iter().map(ExactScalar::surd_part).collect());
    let rational_part = mat_poly_eval(&rational, m)?;
    let surd_part = mat_poly_eval(&surd, m)?;
    SurdMatrix::new(rational_part, surd_part, radicand)
}

/// The orthogonal projection onto the `λ`-eigenspace of a symmetric matrix.
pub fn eigenprojection(
    a: &ExactMatrix,
    spectrum: &SpectrumReport,
    lambda: &ExactScalar,
) -> Result<SurdMatrix, ExactError> {
    if !spectrum.contains(lambda) {
        return Err(ExactError::NotAnEigenvalue(lambda.to_string()));
    }
    mat_poly_eval_scalar(&lagrange_polynomial(spectrum, lambda)?, a)
}

/// A symmetric matrix together with its spectrum and all eigenprojections,
/// in the order of `spectrum.eigenvalues`.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    pub spectrum: SpectrumReport,
    pub projections: Vec<SurdMatrix>,
}

impl SpectralDecomposition {
    pub fn new(a: &ExactMatrix) -> Result<Self, ExactError> {
        let spectrum = exact_spectrum(a)?;
        Self::with_spectrum(a, spectrum)
    }

    pub fn with_spectrum(a: &ExactMatrix, spectrum: SpectrumReport) -> Result<Self, ExactError> {
        use rayon::prelude::*;
        let projections = spectrum
            .eigenvalues
            .par_iter()
            .map(|e| eigenprojection(a, &spectrum, &e.value))
            .collect::<Result<_, _>>()?;
        Ok(SpectralDecomposition { spectrum, projections })
    }

    pub fn projection(&self, lambda: &ExactScalar) -> Option<&SurdMatrix> {
        self.spectrum
            .eigenvalues
            .iter()
            .position(|e| &e.value == lambda)
            .map(|i| &self.projections[i])
    }

    /// Eigenvalues whose projection does not annihilate `e_x`.
    pub fn support(&self, x: usize) -> Vec<ExactScalar> {
        self.spectrum
            .eigenvalues
            .iter()
            .zip(&self.projections)
            .filter(|(_, e)| !e.column_is_zero(x))
            .map(|(ev, _)| ev.value.clone())
            .collect()
    }
}
