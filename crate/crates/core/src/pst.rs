//! Perfect state transfer between vertex-type states.
//!
//! Two independent criteria are implemented and cross-checked:
//!
//! * Chebyshev: transfer from `x` to `y` at time `τ` iff `T_τ(P)e_x = e_y`.
//! * Conditions: `E_λe_x = ±E_λe_y` for every eigenvalue, and for every `λ`
//!   in the support of `e_x`, `λ = cos(jπ/τ)` with `j` even where the sign is
//!   `+` and odd where it is `−`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::exact::{ExactMatrix, ExactScalar, SpectralDecomposition, SpectrumReport, SurdMatrix};
use crate::graph::Graph;
use crate::grover::spectral_period;
use crate::{require_connected_regular, Bounds, Error, Result};

/// `p/q`, or `p` for integers.
pub fn rational_string(r: &BigRational) -> String {
    r.to_string()
}

pub(crate) fn serialize_rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

/// `T_τ(P)` from `T₀ = I`, `T₁ = P`, `T_{m+1} = 2P·T_m − T_{m−1}`.
pub fn chebyshev_matrix(p: &ExactMatrix, tau: u32) -> ExactMatrix {
    ChebyshevSequence::new(p).nth(tau as usize).expect("the sequence is infinite")
}

/// The matrices `T_0(P), T_1(P), T_2(P), …`.
pub struct ChebyshevSequence<'a> {
    p: &'a ExactMatrix,
    twice_p: ExactMatrix,
    previous: Option<ExactMatrix>,
    current: Option<ExactMatrix>,
}

impl<'a> ChebyshevSequence<'a> {
    pub fn new(p: &'a ExactMatrix) -> Self {
        assert!(p.is_square(), "Chebyshev polynomials need a square matrix");
        ChebyshevSequence {
            p,
            twice_p: p.scale(&BigRational::from_integer(2.into())),
            previous: None,
            current: None,
        }
    }
}

impl Iterator for ChebyshevSequence<'_> {
    type Item = ExactMatrix;

    fn next(&mut self) -> Option<ExactMatrix> {
        let next = match (&self.previous, &self.current) {
            (_, None) => ExactMatrix::identity(self.p.rows()),
            (None, Some(_)) => self.p.clone(),
            (Some(prev), Some(cur)) => self.twice_p.mul(cur).and_then(|m| m.sub(prev)).expect("square"),
        };
        self.previous = self.current.take();
        self.current = Some(next.clone());
        Some(next)
    }
}

/// `T_m(λ)` evaluated exactly.
pub fn scalar_chebyshev(lambda: &ExactScalar, m: u32) -> ExactScalar {
    let two = ExactScalar::integer(2);
    let (mut prev, mut cur) = (ExactScalar::one(), lambda.clone());
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = two
            .checked_mul(lambda)
            .and_then(|t| t.checked_mul(&cur))
            .and_then(|t| t.checked_sub(&prev))
            .expect("single field");
        prev = cur;
        cur = next;
    }
    cur
}

/// The `y` with column `x` of `t` equal to `e_y`, if any.
fn column_target(t: &ExactMatrix, x: usize) -> Option<usize> {
    if !t.denominator().is_one() {
        return None;
    }
    let mut target = None;
    for y in 0..t.rows() {
        let v = t.numerator(y, x);
        if v.is_zero() {
            continue;
        }
        if !v.is_one() || target.is_some() {
            return None;
        }
        target = Some(y);
    }
    target
}

/// Ordered pairs `x ≠ y` with `T_τ(P)e_x = e_y`.
pub fn pst_at_time(g: &Graph, tau: u32) -> Result<Vec<(usize, usize)>> {
    let k = require_connected_regular(g)?;
    let p = g.adjacency_matrix().scale(&BigRational::new(BigInt::one(), BigInt::from(k)));
    Ok(transfers_in(&chebyshev_matrix(&p, tau), 0..g.order()))
}

fn transfers_in(t: &ExactMatrix, sources: impl Iterator<Item = usize>) -> Vec<(usize, usize)> {
    sources
        .filter_map(|x| column_target(t, x).filter(|&y| y != x).map(|y| (x, y)))
        .collect()
}

/// Cosines of rational multiples of `π` of degree at most 2 over `Q`, as
/// `(cos(rπ), r)` with `r ∈ [0, 1]`.
fn angle_table() -> Vec<(ExactScalar, BigRational)> {
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let quad = |a: BigRational, b: BigRational, d: i64| ExactScalar::quadratic(a, b, d.into()).expect("valid");
    vec![
        (ExactScalar::one(), q(0, 1)),
        (quad(q(0, 1), q(1, 2), 3), q(1, 6)),
        (quad(q(0, 1), q(1, 2), 2), q(1, 4)),
        (quad(q(1, 4), q(1, 4), 5), q(1, 5)),
        (ExactScalar::ratio(1, 2), q(1, 3)),
        (quad(q(-1, 4), q(1, 4), 5), q(2, 5)),
        (ExactScalar::zero(), q(1, 2)),
        (quad(q(1, 4), q(-1, 4), 5), q(3, 5)),
        (ExactScalar::ratio(-1, 2), q(2, 3)),
        (quad(q(0, 1), q(-1, 2), 2), q(3, 4)),
        (quad(q(-1, 4), q(-1, 4), 5), q(4, 5)),
        (quad(q(0, 1), q(-1, 2), 3), q(5, 6)),
        (ExactScalar::integer(-1), q(1, 1)),
    ]
}

/// The `r ∈ [0, 1]` with `λ = cos(rπ)`, when `λ` is such a cosine of degree ≤ 2.
pub fn rational_angle(lambda: &ExactScalar) -> Option<BigRational> {
    angle_table().into_iter().find(|(c, _)| c == lambda).map(|(_, r)| r)
}

/// `λ = cos(jπ/τ)` with `0 ≤ j ≤ τ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AngleCertificate {
    #[serde(serialize_with = "serialize_scalar")]
    pub lambda: ExactScalar,
    pub j: u32,
    pub tau: u32,
}

impl AngleCertificate {
    pub fn is_even(&self) -> bool {
        self.j.is_multiple_of(2)
    }
}

fn serialize_scalar<S: Serializer>(v: &ExactScalar, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Finds `j` with `λ = cos(jπ/τ)`. `Ok(None)` means `λ` is a recognized
/// cosine whose angle is not a multiple of `π/τ`; an unrecognized `λ` is
/// [`Error::UnrecognizedAngle`], meaning no certificate exists for any `τ`.
pub fn angle_certificate(lambda: &ExactScalar, tau: u32) -> Result<Option<AngleCertificate>> {
    assert!(tau >= 1, "τ must be positive");
    let r = rational_angle(lambda).ok_or_else(|| Error::UnrecognizedAngle(lambda.to_string()))?;
    let j = r * BigRational::from_integer(tau.into());
    Ok(j.is_integer().then(|| AngleCertificate {
        lambda: lambda.clone(),
        j: u32::try_from(j.to_integer()).expect("0 ≤ j ≤ τ"),
        tau,
    }))
}

/// Outcome of the algebraic-integer necessary condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterVerdict {
    Passes,
    /// The first eigenvalue (in descending order) with `2λ` not an algebraic integer.
    Fails(ExactScalar),
}

impl FilterVerdict {
    pub fn passes(&self) -> bool {
        matches!(self, FilterVerdict::Passes)
    }
}

impl fmt::Display for FilterVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterVerdict::Passes => f.write_str("pass"),
            FilterVerdict::Fails(l) => write!(f, "fail at {l}"),
        }
    }
}

/// Whether `2λ` is an algebraic integer: an integer in the rational case,
/// integral trace and norm in the quadratic case.
pub fn twice_is_algebraic_integer(lambda: &ExactScalar) -> bool {
    let twice = lambda.scale(&BigRational::from_integer(2.into()));
    match twice.as_rational() {
        Some(r) => r.is_integer(),
        None => twice.trace().is_integer() && twice.norm().is_integer(),
    }
}

/// The necessary condition `2λ ∈ Ω` over the given eigenvalues of `P`.
pub fn filter_eigenvalues<'a>(values: impl IntoIterator<Item = &'a ExactScalar>) -> FilterVerdict {
    values
        .into_iter()
        .find(|l| !twice_is_algebraic_integer(l))
        .map_or(FilterVerdict::Passes, |l| FilterVerdict::Fails(l.clone()))
}

/// The filter over all of `σ(P)`.
pub fn algebraic_integer_filter(g: &Graph) -> Result<FilterVerdict> {
    let spectrum = crate::grover::discriminant_spectrum(g)?;
    Ok(filter_eigenvalues(spectrum.distinct()))
}

/// Eigenvalues of `P` whose projection does not annihilate `e_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet {
    pub vertex: usize,
    pub eigenvalues: Vec<ExactScalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

/// Spectral data of a connected regular graph, shared by the condition checks.
#[derive(Clone, Debug)]
pub struct PstContext {
    pub label: String,
    pub k: usize,
    pub p: ExactMatrix,
    /// Spectrum and projections of the adjacency matrix.
    pub decomposition: SpectralDecomposition,
    /// `σ(P)`, aligned with the projections.
    pub spectrum_p: SpectrumReport,
}

impl PstContext {
    pub fn new(g: &Graph) -> Result<Self> {
        let k = require_connected_regular(g)?;
        let a = g.adjacency_matrix();
        let decomposition = SpectralDecomposition::new(&a)?;
        let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
        let spectrum_p = decomposition.spectrum.scaled(&inv_k);
        Ok(PstContext {
            label: g.label().to_string(),
            k,
            p: a.scale(&inv_k),
            decomposition,
            spectrum_p,
        })
    }

    pub fn order(&self) -> usize {
        self.p.rows()
    }

    fn eigen_pairs(&self) -> impl Iterator<Item = (&ExactScalar, &SurdMatrix)> {
        self.spectrum_p.distinct().zip(&self.decomposition.projections)
    }

    pub fn support(&self, x: usize) -> SupportSet {
        SupportSet {
            vertex: x,
            eigenvalues: self
                .eigen_pairs()
                .filter(|(_, e)| !e.column_is_zero(x))
                .map(|(l, _)| l.clone())
                .collect(),
        }
    }

    /// Per-eigenvalue signs with `E_λe_x = ±E_λe_y`, if they exist.
    pub fn strong_cospectrality(&self, x: usize, y: usize) -> Option<Vec<Sign>> {
        self.decomposition
            .projections
            .iter()
            .map(|e| column_sign(e, x, y))
            .collect()
    }

    /// Condition-based verdict for transfer `x → y` at time `τ`.
    pub fn pst_via_conditions(&self, x: usize, y: usize, tau: u32) -> Result<ConditionVerdict> {
        assert!(x != y, "transfer needs distinct vertices");
        let Some(signs) = self.strong_cospectrality(x, y) else {
            return Ok(ConditionVerdict::rejected(None, Vec::new()));
        };
        self.conditions_with_signs(x, tau, signs)
    }

    fn conditions_with_signs(&self, x: usize, tau: u32, signs: Vec<Sign>) -> Result<ConditionVerdict> {
        let mut angles = Vec::new();
        for ((lambda, e), sign) in self.eigen_pairs().zip(&signs) {
            if e.column_is_zero(x) {
                continue;
            }
            let certificate = match angle_certificate(lambda, tau) {
                Ok(Some(c)) => c,
                Ok(None) | Err(Error::UnrecognizedAngle(_)) => {
                    return Ok(ConditionVerdict::rejected(Some(signs), angles))
                }
                Err(other) => return Err(other),
            };
            if certificate.is_even() != (*sign == Sign::Plus) {
                return Ok(ConditionVerdict::rejected(Some(signs), angles));
            }
            angles.push(certificate);
        }
        Ok(ConditionVerdict {
            transfers: true,
            signs: Some(signs),
            angles,
        })
    }
}

fn column_sign(e: &SurdMatrix, x: usize, y: usize) -> Option<Sign> {
    let parts = [e.rational_part(), e.surd_part()];
    let n = e.rows();
    let same = parts
        .iter()
        .all(|m| (0..n).all(|i| m.numerator(i, x) == m.numerator(i, y)));
    if same {
        return Some(Sign::Plus);
    }
    let opposite = parts
        .iter()
        .all(|m| (0..n).all(|i| *m.numerator(i, x) == -m.numerator(i, y)));
    opposite.then_some(Sign::Minus)
}

/// Verdict of the condition criterion, with the evidence gathered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionVerdict {
    pub transfers: bool,
    pub signs: Option<Vec<Sign>>,
    pub angles: Vec<AngleCertificate>,
}

impl ConditionVerdict {
    fn rejected(signs: Option<Vec<Sign>>, angles: Vec<AngleCertificate>) -> Self {
        ConditionVerdict {
            transfers: false,
            signs,
            angles,
        }
    }
}

/// The eigenvalue support of `e_x` in `σ(P)`.
pub fn eigenvalue_support(g: &Graph, x: usize) -> Result<SupportSet> {
    Ok(PstContext::new(g)?.support(x))
}

pub fn strong_cospectrality(g: &Graph, x: usize, y: usize) -> Result<Option<Vec<Sign>>> {
    Ok(PstContext::new(g)?.strong_cospectrality(x, y))
}

pub fn pst_via_conditions(g: &Graph, x: usize, y: usize, tau: u32) -> Result<ConditionVerdict> {
    PstContext::new(g)?.pst_via_conditions(x, y, tau)
}

/// One transferring pair at its minimal time.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PstPair {
    pub x: usize,
    pub y: usize,
    pub tau: u32,
    pub signs: Vec<&'static str>,
    pub angles: Vec<AngleCertificate>,
}

/// Result of [`minimal_time_scan`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PstReport {
    pub graph: String,
    pub spectrum: String,
    #[serde(serialize_with = "serialize_filter")]
    pub filter: FilterVerdict,
    pub periodic: bool,
    pub period: Option<u32>,
    /// Vertices that passed the per-vertex filter and were scanned as sources.
    pub sources: Vec<usize>,
    pub checked_times: Vec<u32>,
    /// Whether every vertex has full support `Θ_P(e_x) = σ(P)`.
    pub full_support: bool,
    #[serde(rename = "pst")]
    pub pairs: Vec<PstPair>,
}

fn serialize_filter<S: Serializer>(v: &FilterVerdict, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(None)?;
    match v {
        FilterVerdict::Passes => map.serialize_entry("verdict", "pass")?,
        FilterVerdict::Fails(l) => {
            map.serialize_entry("verdict", "fail")?;
            map.serialize_entry("lambda", &l.to_string())?;
        }
    }
    map.end()
}

/// `σ(A) = {k, k/2, 0, −k/2}`.
pub fn is_half_spectrum(spectrum_a: &SpectrumReport, k: usize) -> bool {
    let k = k as i64;
    let expected = [k, k / 2, 0, -k / 2].map(ExactScalar::integer);
    k % 2 == 0 && spectrum_a.distinct().eq(expected.iter())
}

/// Minimal PST times for every transferring pair.
///
/// Graphs with spectrum `{k, k/2, 0, −k/2}` are tested at `τ ∈ {6, 12}` only.
/// Otherwise `τ` runs from 1 to `τ_max`, or to the period of `U` if that is
/// smaller. Vertices failing the algebraic-integer condition on their support
/// are never sources; when none remain no time is scanned. Every Chebyshev
/// verdict is checked against the condition criterion.
pub fn minimal_time_scan(g: &Graph, bounds: &Bounds) -> Result<PstReport> {
    let ctx = PstContext::new(g)?;
    minimal_time_scan_with(g, &ctx, bounds)
}

pub fn minimal_time_scan_with(g: &Graph, ctx: &PstContext, bounds: &Bounds) -> Result<PstReport> {
    let n = ctx.order();
    let filter = filter_eigenvalues(ctx.spectrum_p.distinct());
    let supports: Vec<SupportSet> = (0..n).map(|x| ctx.support(x)).collect();
    let full_support = supports.iter().all(|s| s.eigenvalues.len() == ctx.spectrum_p.distinct_count());
    let sources: Vec<usize> = (0..n)
        .filter(|&x| filter_eigenvalues(&supports[x].eigenvalues).passes())
        .collect();
    let period = spectral_period(g, &ctx.spectrum_p);
    let mut report = PstReport {
        graph: ctx.label.clone(),
        spectrum: ctx.decomposition.spectrum.render(),
        filter,
        periodic: period.is_some(),
        period,
        sources: sources.clone(),
        checked_times: Vec::new(),
        full_support,
        pairs: Vec::new(),
    };
    if sources.is_empty() {
        return Ok(report);
    }
    report.checked_times = if is_half_spectrum(&ctx.decomposition.spectrum, ctx.k) {
        vec![6, 12]
    } else {
        (1..=period.map_or(bounds.tau_max, |p| p.min(bounds.tau_max))).collect()
    };

    // Strong cospectrality does not depend on τ.
    let candidates: Vec<(usize, usize, Vec<Sign>)> = {
        use rayon::prelude::*;
        sources
            .par_iter()
            .flat_map_iter(|&x| {
                (0..n)
                    .filter(move |&y| y != x)
                    .filter_map(move |y| ctx.strong_cospectrality(x, y).map(|s| (x, y, s)))
            })
            .collect()
    };

    let last = *report.checked_times.last().expect("non-empty");
    let mut found = std::collections::BTreeSet::new();
    for (tau, t) in ChebyshevSequence::new(&ctx.p).enumerate().take(last as usize + 1) {
        let tau = tau as u32;
        if !report.checked_times.contains(&tau) {
            continue;
        }
        let chebyshev: Vec<(usize, usize)> = transfers_in(&t, sources.iter().copied());
        for &(x, y) in &chebyshev {
            if !candidates.iter().any(|(cx, cy, _)| (*cx, *cy) == (x, y)) {
                return Err(mismatch(ctx, x, y, tau, true, false));
            }
        }
        for (x, y, signs) in &candidates {
            let verdict = ctx.conditions_with_signs(*x, tau, signs.clone())?;
            let by_chebyshev = chebyshev.contains(&(*x, *y));
            if verdict.transfers != by_chebyshev {
                return Err(mismatch(ctx, *x, *y, tau, by_chebyshev, verdict.transfers));
            }
            if verdict.transfers && found.insert((*x, *y)) {
                report.pairs.push(PstPair {
                    x: *x,
                    y: *y,
                    tau,
                    signs: signs.iter().map(|s| s.symbol()).collect(),
                    angles: verdict.angles,
                });
            }
        }
    }
    report.pairs.sort_by_key(|p| (p.x, p.y, p.tau));
    Ok(report)
}

fn mismatch(ctx: &PstContext, x: usize, y: usize, tau: u32, chebyshev: bool, conditions: bool) -> Error {
    Error::OracleMismatch {
        label: ctx.label.clone(),
        x,
        y,
        tau,
        chebyshev,
        conditions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct;

    fn g(spec: &str) -> Graph {
        construct(spec).unwrap()
    }

    #[test]
    fn chebyshev_on_c4() {
        let c4 = g("cycle(4)");
        let p = c4.adjacency_matrix().scale(&BigRational::new(1.into(), 2.into()));
        let t2 = chebyshev_matrix(&p, 2);
        let antipodal = ExactMatrix::from_fn_integer(4, 4, |i, j| i64::from((i + 2) % 4 == j));
        assert_eq!(t2, antipodal);
        assert!(chebyshev_matrix(&p, 0).is_identity());
        assert_eq!(pst_at_time(&c4, 2).unwrap(), vec![(0, 2), (1, 3), (2, 0), (3, 1)]);
    }

    #[test]
    fn scalar_identity() {
        assert_eq!(scalar_chebyshev(&ExactScalar::ratio(1, 2), 6), ExactScalar::one());
        // T_b(cos(aπ/b)) = (−1)^a for every table entry.
        for (c, r) in angle_table() {
            let (a, b) = (r.numer().clone(), r.denom().clone());
            let b = u32::try_from(b).unwrap();
            let expected = if a % 2 == BigInt::zero() { 1 } else { -1 };
            assert_eq!(scalar_chebyshev(&c, b), ExactScalar::integer(expected), "{c}");
        }
    }

    #[test]
    fn angles() {
        let cert = |l: ExactScalar, tau| angle_certificate(&l, tau).unwrap().map(|c| c.j);
        assert_eq!(cert(ExactScalar::ratio(-1, 2), 6), Some(4));
        assert_eq!(cert(ExactScalar::zero(), 12), Some(6));
        let h = BigRational::new(1.into(), 4.into());
        let c25 = ExactScalar::quadratic(-h.clone(), h, 5.into()).unwrap();
        assert_eq!(cert(c25, 5), Some(2));
        assert_eq!(cert(ExactScalar::ratio(1, 2), 4), None);
        assert!(matches!(
            angle_certificate(&ExactScalar::ratio(1, 3), 6),
            Err(Error::UnrecognizedAngle(_))
        ));
    }

    #[test]
    fn supports() {
        let k4 = eigenvalue_support(&g("complete(4)"), 0).unwrap();
        assert_eq!(k4.eigenvalues, vec![ExactScalar::one(), ExactScalar::ratio(-1, 3)]);
        let h = eigenvalue_support(&g("hamming(3,3)"), 5).unwrap();
        assert_eq!(h.eigenvalues.len(), 4);
    }

    #[test]
    fn cospectrality() {
        let c4 = g("cycle(4)");
        assert!(strong_cospectrality(&c4, 0, 2).unwrap().is_some());
        assert!(strong_cospectrality(&c4, 0, 1).unwrap().is_none());
        let k3 = strong_cospectrality(&g("complete(3)"), 0, 1).unwrap();
        assert!(k3.is_none() || k3.unwrap()[0] == Sign::Plus);
    }

    #[test]
    fn conditions_on_c4() {
        let v = pst_via_conditions(&g("cycle(4)"), 0, 2, 2).unwrap();
        assert!(v.transfers);
        assert_eq!(v.signs.unwrap(), vec![Sign::Plus, Sign::Minus, Sign::Plus]);
        assert!(!pst_via_conditions(&g("cycle(4)"), 0, 2, 1).unwrap().transfers);
    }

    #[test]
    fn filter() {
        assert_eq!(
            algebraic_integer_filter(&g("petersen")).unwrap(),
            FilterVerdict::Fails(ExactScalar::ratio(1, 3))
        );
        assert!(algebraic_integer_filter(&g("complement(hamming(3,2))")).unwrap().passes());
        assert!(algebraic_integer_filter(&g("cycle(5)")).unwrap().passes());
    }

    #[test]
    fn scans() {
        let bounds = Bounds::default();
        let c4 = minimal_time_scan(&g("cycle(4)"), &bounds).unwrap();
        assert_eq!(c4.pairs.iter().map(|p| (p.x, p.y, p.tau)).collect::<Vec<_>>(), vec![(0, 2, 2), (1, 3, 2), (2, 0, 2), (3, 1, 2)]);
        let petersen = minimal_time_scan(&g("petersen"), &bounds).unwrap();
        assert!(petersen.checked_times.is_empty() && petersen.pairs.is_empty());
        let octahedron = minimal_time_scan(&g("complete_multipartite(2,2,2)"), &bounds).unwrap();
        assert_eq!(octahedron.pairs.len(), 6);
        assert!(octahedron.pairs.iter().all(|p| p.x / 2 == p.y / 2 && p.tau <= 12));
        let ext = minimal_time_scan(&g("coclique(complement(hamming(3,2)),2)"), &bounds).unwrap();
        assert_eq!(ext.checked_times, vec![6, 12]);
        assert!(ext.pairs.is_empty());
        let c5 = minimal_time_scan(&g("cycle(5)"), &bounds).unwrap();
        assert!(c5.periodic && c5.pairs.is_empty());
    }

    #[test]
    fn report_json() {
        let r = minimal_time_scan(&g("cycle(4)"), &Bounds::default()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["filter"]["verdict"], "pass");
        assert_eq!(v["pst"][0]["tau"], 2);
        assert_eq!(v["pst"][0]["angles"][2]["lambda"], "-1");
        assert_eq!(v["pst"][0]["signs"][1], "-");
    }
}
