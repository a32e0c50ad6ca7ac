//! Randomized invariants.

use grover_lab::exact::{char_poly, exact_spectrum, ExactMatrix, ExactScalar, SpectralDecomposition, SurdMatrix};
use grover_lab::graph::{circulant, complement, parse_graph6, to_graph6, Graph};
use grover_lab::pst::{scalar_chebyshev, ChebyshevSequence, PstContext};
use grover_lab::search::{closed_walk_count, FeasibleRow};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..10).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for x in 0..n {
                for y in (x + 1)..n {
                    if it.next().unwrap() {
                        edges.push((x, y));
                    }
                }
            }
            Graph::from_edges(n, edges, "random").unwrap()
        })
    })
}

/// Connected circulants `Cay(Z_n, S)` with `1 ∈ S`.
fn random_circulant() -> impl Strategy<Value = Graph> {
    (5usize..17).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n / 2).prop_map(move |bits| {
            let mut set: Vec<i64> = vec![1, -1];
            for (i, b) in bits.into_iter().enumerate().skip(1) {
                if b {
                    set.push(i as i64 + 1);
                    set.push(-(i as i64 + 1));
                }
            }
            circulant(n, &set).unwrap()
        })
    })
}

fn faddeev_leverrier(m: &ExactMatrix) -> Vec<BigRational> {
    let n = m.rows();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::from_integer(1.into());
    let mut mk = ExactMatrix::zeros(n, n);
    for k in 1..=n {
        mk = m.mul(&mk).unwrap().add_identity(&coeffs[n - k + 1]).unwrap();
        coeffs[n - k] = -m.mul(&mk).unwrap().trace() / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in random_graph()) {
        let back = parse_graph6(&to_graph6(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn complement_is_an_involution(g in random_graph()) {
        let twice = complement(&complement(&g).unwrap()).unwrap();
        prop_assert_eq!(twice, g);
    }

    #[test]
    fn charpoly_matches_leverrier(g in random_graph()) {
        let a = g.adjacency_matrix();
        let p = char_poly(&a, true).unwrap();
        prop_assert_eq!(p.coeffs(), &faddeev_leverrier(&a)[..]);
    }

    #[test]
    fn charpoly_of_integer_matrices(entries in proptest::collection::vec(-1000i64..1000, 16)) {
        let m = ExactMatrix::from_integers(4, 4, entries.into_iter().map(BigInt::from).collect());
        let p = char_poly(&m, true).unwrap();
        prop_assert_eq!(p.coeffs(), &faddeev_leverrier(&m)[..]);
    }

    #[test]
    fn triangles_from_cubed_diagonal(g in random_graph()) {
        let a3 = g.adjacency_matrix().pow(3);
        for x in 0..g.order() {
            prop_assert_eq!(a3.numerator(x, x), &BigInt::from(2 * g.count_triangles_through(x)));
        }
    }

    #[test]
    fn quadrangle_counting_methods_agree(g in random_graph()) {
        let q = g.count_quadrangles();
        let a = g.adjacency_matrix();
        // tr(A⁴) = 8q + 2Σd² − 2m for simple graphs.
        let degrees: i64 = (0..g.order()).map(|x| (g.degree(x) * g.degree(x)) as i64).sum();
        let expected = 8 * q.total as i64 + 2 * degrees - 2 * g.edge_count() as i64;
        prop_assert_eq!(a.pow(4).trace(), BigRational::from_integer(expected.into()));
    }

    #[test]
    fn circulant_criteria_agree(g in random_circulant()) {
        let Ok(ctx) = PstContext::new(&g) else { return Ok(()) };
        let n = g.order();
        for (tau, t) in ChebyshevSequence::new(&ctx.p).enumerate().skip(1).take(12) {
            prop_assert!(t.is_symmetric());
            for x in 0..n {
                for y in (0..n).filter(|&y| y != x) {
                    let hit = (0..n).all(|z| t.get(z, x) == BigRational::from_integer(BigInt::from(u8::from(z == y))));
                    let cond = ctx.pst_via_conditions(x, y, tau as u32).unwrap().transfers;
                    prop_assert_eq!(hit, cond, "{} x={} y={} tau={}", g.label(), x, y, tau);
                }
            }
        }
    }

    #[test]
    fn circulant_projections_resolve_identity(g in random_circulant()) {
        let a = g.adjacency_matrix();
        if exact_spectrum(&a).is_err() {
            return Ok(());
        }
        let dec = SpectralDecomposition::new(&a).unwrap();
        let n = g.order();
        let mut sum = SurdMatrix::from(ExactMatrix::zeros(n, n));
        for e in &dec.projections {
            sum = sum.add(e).unwrap();
        }
        prop_assert_eq!(sum, SurdMatrix::from(ExactMatrix::identity(n)));
    }

    #[test]
    fn chebyshev_composition(a in -6i64..=6, b in 1i64..=6, m in 0u32..6, n in 0u32..6) {
        let x = ExactScalar::ratio(a, b);
        let inner = scalar_chebyshev(&x, n);
        prop_assert_eq!(scalar_chebyshev(&inner, m), scalar_chebyshev(&x, m * n));
    }

    #[test]
    fn scalar_ordering_matches_floats(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50, r in 2i64..4) {
        let r = BigInt::from(r);
        let q = |v: i64| BigRational::new(v.into(), 7.into());
        let x = ExactScalar::quadratic(q(a), q(b), r.clone()).unwrap();
        let y = ExactScalar::quadratic(q(c), q(d), BigInt::from(5)).unwrap();
        let diff = x.to_f64() - y.to_f64();
        if diff.abs() > 1e-9 {
            prop_assert_eq!(x > y, diff > 0.0);
        }
    }

    #[test]
    fn feasible_rows_satisfy_invariants(half in 2u64..40, n in 1u64..60_000) {
        let k = 2 * half;
        if let Some(row) = FeasibleRow::evaluate(k, n) {
            prop_assert!(row.check_invariants());
            let c2 = closed_walk_count(&row, 2);
            prop_assert_eq!(c2, BigRational::from_integer(BigInt::from(k)));
            prop_assert!(!closed_walk_count(&row, 3).is_negative());
        }
    }
}
