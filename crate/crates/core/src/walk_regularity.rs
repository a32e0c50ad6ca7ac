//! Strongly regular and strongly walk-regular graphs.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::exact::{char_poly, exact_spectrum, ExactError, ExactMatrix, ExactScalar};
use crate::graph::Graph;
use crate::{Error, Result};

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// Validated parameters: `0 < k < n − 1` and `k(k − λ − 1) = (n − k − 1)μ`.
    pub fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        if k == 0 || k + 1 >= n {
            return Err(Error::InvalidParameters(format!(
                "({n},{k},{lambda},{mu}): need 0 < k < n - 1"
            )));
        }
        if lambda + 1 > k || k * (k - lambda - 1) != (n - k - 1) * mu {
            return Err(Error::InvalidParameters(format!(
                "({n},{k},{lambda},{mu}): k(k - λ - 1) ≠ (n - k - 1)μ"
            )));
        }
        Ok(SrgParams { n, k, lambda, mu })
    }

    /// `(λ − μ)² + 4(k − μ)`, the discriminant of `x² − (λ − μ)x + (μ − k)`.
    pub fn discriminant(&self) -> BigInt {
        let d = BigInt::from(self.lambda) - BigInt::from(self.mu);
        &d * &d + 4 * (BigInt::from(self.k) - BigInt::from(self.mu))
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// Recognizes a strongly regular graph from its common-neighbor counts.
/// Complete and edgeless graphs are excluded.
pub fn srg_recognize(g: &Graph) -> Option<SrgParams> {
    let k = g.regularity()?;
    let n = g.order();
    if k == 0 || k + 1 >= n {
        return None;
    }
    let (mut lambda, mut mu) = (None, None);
    for x in 0..n {
        for y in x + 1..n {
            let c = g.common_neighbors(x, y);
            let slot = if g.is_adjacent(x, y) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(v) if v != c => return None,
                Some(_) => {}
            }
        }
    }
    SrgParams::new(n as u64, k as u64, lambda? as u64, mu? as u64).ok()
}

/// The non-principal eigenvalues `(θ₊, θ₋)`, roots of `x² − (λ − μ)x + (μ − k)`.
pub fn srg_eigenvalues(p: &SrgParams) -> (ExactScalar, ExactScalar) {
    let s = BigInt::from(p.lambda) - BigInt::from(p.mu);
    let prod = BigInt::from(p.mu) - BigInt::from(p.k);
    ExactScalar::roots_of_monic_quadratic(&s, &prod).expect("discriminant is positive for valid parameters")
}

/// Whether `θ±` are irrational. Such graphs are conference graphs
/// `(4μ + 1, 2μ, μ − 1, μ)`.
pub fn srg_half_case(p: &SrgParams) -> bool {
    let d = p.discriminant();
    let irrational = d.sqrt().pow(2) != d;
    if irrational {
        assert!(
            p.mu >= 1 && (p.n, p.k, p.lambda) == (4 * p.mu + 1, 2 * p.mu, p.mu - 1),
            "irrational eigenvalues outside the conference family: {p}"
        );
    }
    irrational
}

/// The SRG families on which the Grover walk can be periodic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum SrgFamily {
    /// `K_{m,m}`, parameters `(2m, m, 0, m)`.
    CompleteBipartite { m: u64 },
    /// `K_{m,m,m}`, parameters `(3m, 2m, m, 2m)`.
    CompleteTripartite { m: u64 },
    /// The pentagon, `(5, 2, 0, 1)`.
    Pentagon,
}

impl fmt::Display for SrgFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SrgFamily::CompleteBipartite { m } => write!(f, "K_{{{m},{m}}}"),
            SrgFamily::CompleteTripartite { m } => write!(f, "K_{{{m},{m},{m}}}"),
            SrgFamily::Pentagon => f.write_str("C5"),
        }
    }
}

pub fn srg_periodicity_class(p: &SrgParams) -> Option<SrgFamily> {
    let SrgParams { n, k, lambda, mu } = *p;
    if n == 2 * k && lambda == 0 && mu == k {
        Some(SrgFamily::CompleteBipartite { m: k })
    } else if lambda > 0 && n == 3 * lambda && k == 2 * lambda && mu == 2 * lambda {
        Some(SrgFamily::CompleteTripartite { m: lambda })
    } else if (n, k, lambda, mu) == (5, 2, 0, 1) {
        Some(SrgFamily::Pentagon)
    } else {
        None
    }
}

/// Coefficients with `A^ℓ = a·I + b·A + c·J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkCoefficients {
    #[serde(serialize_with = "crate::pst::serialize_rational")]
    pub a: BigRational,
    #[serde(serialize_with = "crate::pst::serialize_rational")]
    pub b: BigRational,
    #[serde(serialize_with = "crate::pst::serialize_rational")]
    pub c: BigRational,
}

/// Tests whether `A^ℓ ∈ span{I, A, J}`.
///
/// The coefficients are read off one diagonal entry (`a + c`), one adjacent
/// entry (`b + c`) and one non-adjacent entry (`c`), then checked against
/// all `n²` entries.
pub fn is_strongly_l_walk_regular(g: &Graph, ell: u32) -> Option<WalkCoefficients> {
    assert!(ell >= 2, "ℓ must be at least 2");
    fit_identity_adjacency_ones(g, &g.adjacency_matrix().pow(ell))
}

fn fit_identity_adjacency_ones(g: &Graph, power: &ExactMatrix) -> Option<WalkCoefficients> {
    let n = g.order();
    let pairs = || (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)));
    let c = pairs()
        .find(|&(x, y)| !g.is_adjacent(x, y))
        .map_or_else(BigRational::zero, |(x, y)| power.get(x, y));
    let b = pairs()
        .find(|&(x, y)| g.is_adjacent(x, y))
        .map_or_else(BigRational::zero, |(x, y)| power.get(x, y) - &c);
    let a = power.get(0, 0) - &c;
    let consistent = (0..n).all(|x| {
        (0..n).all(|y| {
            let expected = if x == y {
                &a + &c
            } else if g.is_adjacent(x, y) {
                &b + &c
            } else {
                c.clone()
            };
            power.get(x, y) == expected
        })
    });
    consistent.then_some(WalkCoefficients { a, b, c })
}

/// `(θ₂ − θ₃)θ₁^ℓ + (θ₃ − θ₁)θ₂^ℓ + (θ₁ − θ₂)θ₃^ℓ = 0`, evaluated exactly.
pub fn swr_eigenvalue_criterion(
    t1: &ExactScalar,
    t2: &ExactScalar,
    t3: &ExactScalar,
    ell: u32,
) -> Result<bool, ExactError> {
    let term = |p: &ExactScalar, q: &ExactScalar, r: &ExactScalar| -> Result<ExactScalar, ExactError> {
        q.checked_sub(r)?.checked_mul(&p.checked_pow(ell)?)
    };
    let total = term(t1, t2, t3)?
        .checked_add(&term(t2, t3, t1)?)?
        .checked_add(&term(t3, t1, t2)?)?;
    Ok(total.is_zero())
}

/// How a genuine graph's walk-regularity was established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SwrWitness {
    /// The eigenvalue identity holds for `θ₁ > θ₂ > θ₃`.
    Eigenvalues { ell: u32, theta: [String; 3] },
    /// `A^ℓ ∈ span{I, A, J}` verified directly (spectrum outside `Q(√D)`).
    Matrix { ell: u32 },
}

/// The strongly walk-regular classes, plus the negative verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum SwrClass {
    Empty,
    DisjointComplete { order: usize, copies: usize },
    StronglyRegular { params: SrgParams },
    #[serde(rename = "disjoint-complete-bipartite+isolated")]
    DisjointCompleteBipartite { part: usize, copies: usize, isolated: usize },
    Genuine { witness: SwrWitness },
    NotSwr,
}

impl SwrClass {
    pub fn tag(&self) -> &'static str {
        match self {
            SwrClass::Empty => "empty",
            SwrClass::DisjointComplete { .. } => "disjoint-complete",
            SwrClass::StronglyRegular { .. } => "strongly-regular",
            SwrClass::DisjointCompleteBipartite { .. } => "disjoint-complete-bipartite+isolated",
            SwrClass::Genuine { .. } => "genuine",
            SwrClass::NotSwr => "not-swr",
        }
    }

    pub fn is_swr(&self) -> bool {
        !matches!(self, SwrClass::NotSwr)
    }

    /// The smallest witnessing walk length of a genuine graph.
    pub fn genuine_ell(&self) -> Option<u32> {
        match self {
            SwrClass::Genuine {
                witness: SwrWitness::Eigenvalues { ell, .. } | SwrWitness::Matrix { ell },
            } => Some(*ell),
            _ => None,
        }
    }
}

impl fmt::Display for SwrClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Assigns `g` to exactly one strongly walk-regular class (or `not-swr`).
///
/// A genuine witness is the smallest odd `ℓ` in `3..=ell_max`.
pub fn classify_swr(g: &Graph, ell_max: u32) -> Result<SwrClass> {
    if g.edge_count() == 0 {
        return Ok(SwrClass::Empty);
    }
    let components = g.components();
    let sizes: Vec<usize> = components.iter().map(Vec::len).collect();
    let all_complete = components.iter().all(|c| c.iter().all(|&x| g.degree(x) == c.len() - 1));
    if all_complete && sizes.iter().all(|&s| s == sizes[0]) {
        return Ok(SwrClass::DisjointComplete {
            order: sizes[0],
            copies: sizes.len(),
        });
    }
    if let Some(params) = srg_recognize(g) {
        return Ok(SwrClass::StronglyRegular { params });
    }
    if let Some(class) = disjoint_complete_bipartite(g, &components) {
        return Ok(class);
    }
    if g.regularity().is_none() || components.len() != 1 {
        return Ok(SwrClass::NotSwr);
    }

    let a = g.adjacency_matrix();
    match exact_spectrum(&a) {
        Ok(spectrum) => {
            if spectrum.distinct_count() != 4 {
                return Ok(SwrClass::NotSwr);
            }
            let t: Vec<&ExactScalar> = spectrum.distinct().skip(1).collect();
            for ell in (3..=ell_max).step_by(2) {
                if swr_eigenvalue_criterion(t[0], t[1], t[2], ell)? {
                    let theta = [t[0].to_string(), t[1].to_string(), t[2].to_string()];
                    return Ok(SwrClass::Genuine {
                        witness: SwrWitness::Eigenvalues { ell, theta },
                    });
                }
            }
            Ok(SwrClass::NotSwr)
        }
        Err(ExactError::IrreducibleFactor { .. }) => {
            let distinct = char_poly(&a, true)?.square_free_part().degree().unwrap_or(0);
            if distinct != 4 {
                return Ok(SwrClass::NotSwr);
            }
            let square = a.mul(&a)?;
            let mut power = a.clone();
            for ell in (3..=ell_max).step_by(2) {
                power = power.mul(&square)?;
                if fit_identity_adjacency_ones(g, &power).is_some() {
                    return Ok(SwrClass::Genuine {
                        witness: SwrWitness::Matrix { ell },
                    });
                }
            }
            Ok(SwrClass::NotSwr)
        }
        Err(e) => Err(e.into()),
    }
}

/// Disjoint copies of `K_{m,m}` together with any number of isolated vertices.
fn disjoint_complete_bipartite(g: &Graph, components: &[Vec<usize>]) -> Option<SwrClass> {
    let isolated = components.iter().filter(|c| c.len() == 1).count();
    let nontrivial: Vec<&Vec<usize>> = components.iter().filter(|c| c.len() > 1).collect();
    let m = nontrivial.first()?.len() / 2;
    // An m-regular bipartite graph on 2m vertices is K_{m,m}.
    let bipartite = g.two_coloring().is_some();
    let is_kmm = |c: &Vec<usize>| c.len() == 2 * m && c.iter().all(|&x| g.degree(x) == m);
    (bipartite && nontrivial.iter().all(|c| is_kmm(c))).then_some(SwrClass::DisjointCompleteBipartite {
        part: m,
        copies: nontrivial.len(),
        isolated,
    })
}
