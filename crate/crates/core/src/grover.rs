//! The Grover walk on a regular graph: time evolution `U`, discriminant `P`,
//! and periodicity.
//!
//! On a `k`-regular graph the boundary matrix is `d = D/√k` with `D` the 0/1
//! arc-terminus incidence matrix. `d` itself is never formed; the identities
//! involving it are checked on `D` with the `√k` factors cancelled.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::exact::{exact_spectrum, ExactMatrix, SpectrumReport};
use crate::graph::{Arc, Graph};
use crate::pst::rational_angle;
use crate::walk_regularity::{classify_swr, srg_periodicity_class, SwrClass};
use crate::{require_connected_regular, Bounds, Error, Result};

/// Exact Grover-walk operators over the canonical arc order.
#[derive(Clone, Debug)]
pub struct WalkOperators {
    pub arcs: Vec<Arc>,
    /// `U_{a,b} = (2/k)·[o(a) = t(b)] − [a = b⁻¹]`.
    pub u: ExactMatrix,
    /// `P = A/k`.
    pub p: ExactMatrix,
    pub k: usize,
}

impl WalkOperators {
    fn arc_index(&self, arc: Arc) -> usize {
        self.arcs.binary_search(&arc).expect("arc belongs to the graph")
    }

    /// The arc-reversal involution `R`.
    pub fn shift(&self) -> ExactMatrix {
        let m = self.arcs.len();
        let mut num = vec![BigInt::from(0); m * m];
        for (a, arc) in self.arcs.iter().enumerate() {
            num[a * m + self.arc_index(arc.inverse())] = 1.into();
        }
        ExactMatrix::from_integers(m, m, num)
    }

    /// The 0/1 matrix `D_{x,a} = [t(a) = x]`, so that `d = D/√k`.
    pub fn incidence(&self) -> ExactMatrix {
        let n = self.p.rows();
        let m = self.arcs.len();
        ExactMatrix::from_fn_integer(n, m, |x, a| i64::from(self.arcs[a].terminus == x))
    }

    /// Exact dump with entries as `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "arcs": self.arcs.iter().map(|a| [a.origin, a.terminus]).collect::<Vec<_>>(),
            "U": matrix_json(&self.u),
            "P": matrix_json(&self.p),
        })
    }
}

fn matrix_json(m: &ExactMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| crate::pst::rational_string(&m.get(i, j))).collect())
        .collect();
    json!(rows)
}

pub fn build_operators(g: &Graph) -> Result<WalkOperators> {
    let k = require_connected_regular(g)?;
    let arcs = g.arcs();
    let m = arcs.len();
    let index = |arc: Arc| arcs.binary_search(&arc).expect("arc belongs to the graph");
    // k·U has integer entries 2·[o(a) = t(b)] − k·[a = b⁻¹].
    let mut num = vec![BigInt::from(0); m * m];
    for (a, arc_a) in arcs.iter().enumerate() {
        for &w in g.neighbors(arc_a.origin) {
            // Arcs b with t(b) = o(a) are exactly (w, o(a)) for w ∼ o(a).
            let b = index(Arc {
                origin: w,
                terminus: arc_a.origin,
            });
            num[a * m + b] += 2;
        }
        num[a * m + index(arc_a.inverse())] -= BigInt::from(k);
    }
    let u = ExactMatrix::from_scaled(m, m, num, BigInt::from(k));
    let p = g.adjacency_matrix().scale(&BigRational::new(1.into(), BigInt::from(k)));
    Ok(WalkOperators { arcs, u, p, k })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PeriodicityMethod {
    DirectPower,
    Spectral,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityVerdict {
    pub periodic: bool,
    pub period: Option<u32>,
    pub method: PeriodicityMethod,
}

/// Smallest `τ ≤ tau_max` with `U^τ = I`, by repeated exact multiplication.
pub fn check_periodic_direct(ops: &WalkOperators, tau_max: u32) -> PeriodicityVerdict {
    let mut power = ops.u.clone();
    let mut period = None;
    for tau in 1..=tau_max {
        if power.is_identity() {
            period = Some(tau);
            break;
        }
        // U is sparse, so it goes on the left where zero entries are skipped.
        power = ops.u.mul(&power).expect("square");
    }
    PeriodicityVerdict {
        periodic: period.is_some(),
        period,
        method: PeriodicityMethod::DirectPower,
    }
}

/// The period of `U` read off the spectrum of `P`.
///
/// `σ(U)` consists of `e^{±iθ}` with `cos θ = λ ∈ σ(P)`, together with `1`
/// (multiplicity `m − n + 1`) and `−1` (multiplicity `m − n + 1` if the graph
/// is bipartite, else `m − n`), where `m = |E|`. The period is the least
/// common multiple of the orders of these roots of unity; an eigenvalue of
/// `P` that is not the cosine of a rational multiple of `π` rules out
/// periodicity.
pub fn spectral_period(g: &Graph, spectrum_p: &SpectrumReport) -> Option<u32> {
    let (n, m) = (g.order() as i64, g.edge_count() as i64);
    let bipartite = g.two_coloring().is_some();
    let mut period: u32 = if m - n + 1 > 0 { 1 } else { 0 };
    let minus_one = if bipartite { m - n + 1 } else { m - n };
    if minus_one > 0 {
        period = period.max(1).lcm(&2);
    }
    for lambda in spectrum_p.distinct() {
        let r = rational_angle(lambda)?;
        // e^{iπa/b} has order 2b / gcd(a, 2b).
        let (a, b) = (r.numer().clone(), r.denom().clone());
        let two_b: BigInt = b * 2;
        let order: BigInt = &two_b / a.gcd(&two_b);
        let order = u32::try_from(order).expect("small denominators only");
        period = period.max(1).lcm(&order);
    }
    Some(period.max(1))
}

/// The spectrum of `P = A/k` for a connected regular graph.
pub fn discriminant_spectrum(g: &Graph) -> Result<SpectrumReport> {
    let k = require_connected_regular(g)?;
    let spectrum = exact_spectrum(&g.adjacency_matrix())?;
    Ok(spectrum.scaled(&BigRational::new(1.into(), BigInt::from(k))))
}

/// Periodicity of a genuine strongly walk-regular graph with eigenvalues
/// `k > θ₁ > θ₂ > θ₃`: periodic exactly when `(θ₁, θ₂, θ₃) = (k/2, 0, −k/2)`.
pub fn genuine_periodicity_rule(k: &BigRational, theta: [&BigRational; 3]) -> bool {
    let half = k / BigInt::from(2);
    *theta[0] == half && theta[1] == &BigRational::from_integer(0.into()) && *theta[2] == -half
}

/// Periodicity decided from classification: SRG families, and the
/// `{k, k/2, 0, −k/2}` rule for genuine strongly walk-regular graphs.
/// The reported period comes from [`spectral_period`].
pub fn check_periodic_spectral(g: &Graph) -> Result<PeriodicityVerdict> {
    let class = classify_swr(g, Bounds::default().ell_max)?;
    periodicity_for_class(g, &class, &discriminant_spectrum(g)?)
}

/// [`check_periodic_spectral`] with the classification and `σ(P)` supplied.
pub fn periodicity_for_class(g: &Graph, class: &SwrClass, spectrum_p: &SpectrumReport) -> Result<PeriodicityVerdict> {
    let k = require_connected_regular(g)?;
    let periodic = match class {
        SwrClass::StronglyRegular { params } => srg_periodicity_class(params).is_some(),
        SwrClass::Genuine { .. } => {
            let a_spectrum = spectrum_p.scaled(&BigRational::from_integer(k.into()));
            let values: Vec<Option<&BigRational>> = a_spectrum.distinct().map(|v| v.as_rational()).collect();
            match values[..] {
                [Some(_), Some(t1), Some(t2), Some(t3)] => {
                    genuine_periodicity_rule(&BigRational::from_integer(k.into()), [t1, t2, t3])
                }
                _ => false,
            }
        }
        other => {
            return Err(Error::Unsupported {
                label: g.label().to_string(),
                reason: format!("spectral periodicity needs an SRG or genuine SWR graph, found {other}"),
            })
        }
    };
    let period = if periodic { spectral_period(g, spectrum_p) } else { None };
    Ok(PeriodicityVerdict {
        periodic,
        period,
        method: PeriodicityMethod::Spectral,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct;

    fn ops(spec: &str) -> WalkOperators {
        build_operators(&construct(spec).unwrap()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn k2_swaps_its_arcs() {
        let o = ops("complete(2)");
        assert_eq!(o.u, ExactMatrix::from_fn_integer(2, 2, |i, j| i64::from(i != j)));
        assert_eq!(check_periodic_direct(&o, 10).period, Some(2));
    }

    #[test]
    fn entries_follow_the_formula() {
        let o = ops("complement(hamming(3,2))");
        assert_eq!(o.arcs.len(), 32);
        for i in 0..32 {
            for j in 0..32 {
                let v = o.u.get(i, j);
                assert!([q(0, 1), q(1, 2), q(-1, 2)].contains(&v), "{v}");
            }
        }
        let c3 = ops("cycle(3)");
        assert!(c3.u.is_integral());
    }

    #[test]
    fn structural_identities() {
        for spec in ["cycle(5)", "complement(hamming(3,2))", "petersen", "complete_multipartite(2,2,2)"] {
            let o = ops(spec);
            let r = o.shift();
            let d = o.incidence();
            let k = BigRational::from_integer(o.k.into());
            assert!(o.u.transpose().mul(&o.u).unwrap().is_identity(), "{spec}: UᵀU");
            assert!(r.mul(&r).unwrap().is_identity(), "{spec}: R²");
            let ddt = d.mul(&d.transpose()).unwrap();
            assert_eq!(ddt, ExactMatrix::identity(d.rows()).scale(&k), "{spec}: DDᵀ");
            let drdt = d.mul(&r).unwrap().mul(&d.transpose()).unwrap();
            assert_eq!(drdt.scale(&k.recip()), o.p, "{spec}: P = dRd*");
            // dU = 2Pd − dR, after cancelling the common 1/√k.
            let lhs = d.mul(&o.u).unwrap();
            let rhs = o.p.mul(&d).unwrap().scale(&q(2, 1)).sub(&d.mul(&r).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{spec}: dU");
        }
    }

    #[test]
    fn rejects_unsupported_graphs() {
        let disconnected = construct("cartesian(cycle(4),complement(complete(2)))").unwrap();
        assert!(matches!(build_operators(&disconnected), Err(Error::Unsupported { .. })));
        let star = construct("complete_multipartite(1,3)").unwrap();
        assert!(matches!(build_operators(&star), Err(Error::Unsupported { .. })));
    }

    #[test]
    fn direct_periods() {
        assert_eq!(check_periodic_direct(&ops("cycle(4)"), 24).period, Some(4));
        assert_eq!(check_periodic_direct(&ops("complement(hamming(3,2))"), 120).period, Some(12));
        assert!(!check_periodic_direct(&ops("petersen"), 120).periodic);
    }

    #[test]
    fn spectral_periods() {
        let period = |spec: &str| {
            let g = construct(spec).unwrap();
            spectral_period(&g, &discriminant_spectrum(&g).unwrap())
        };
        assert_eq!(period("cycle(3)"), Some(3));
        assert_eq!(period("cycle(4)"), Some(4));
        assert_eq!(period("cycle(5)"), Some(5));
        assert_eq!(period("cycle(8)"), Some(8));
        assert_eq!(period("complete(2)"), Some(2));
        assert_eq!(period("hamming(3,3)"), Some(12));
        assert_eq!(period("complete(4)"), None);
        assert_eq!(period("petersen"), None);
    }

    #[test]
    fn spectral_verdicts() {
        let verdict = |spec: &str| check_periodic_spectral(&construct(spec).unwrap()).unwrap();
        let h = verdict("hamming(3,3)");
        assert!(h.periodic && 12 % h.period.unwrap() == 0);
        assert!(verdict("cycle(5)").periodic);
        assert!(!verdict("petersen").periodic);
        assert!(check_periodic_spectral(&construct("cycle(6)").unwrap()).is_err());
        let k = q(8, 1);
        assert!(!genuine_periodicity_rule(&k, [&q(4, 1), &q(-4, 1), &q(-8, 1)]));
        assert!(genuine_periodicity_rule(&k, [&q(4, 1), &q(0, 1), &q(-4, 1)]));
    }

    #[test]
    fn json_dump_is_exact() {
        let v = ops("cycle(3)").to_json();
        assert_eq!(v["k"], 2);
        assert_eq!(v["arcs"].as_array().unwrap().len(), 6);
        assert_eq!(v["P"][0][1], "1/2");
    }
}
