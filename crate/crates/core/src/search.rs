//! Feasible spectra `{[k]^1, [k/2]^α, [0]^β, [-k/2]^γ}` of genuine strongly
//! walk-regular graphs, with table emitters and candidate-graph checks.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{exact_spectrum, ExactMatrix};
use crate::graph::{construct, Graph};
use crate::{require_connected_regular, Error, Result};

/// Largest valency accepted by the enumerator.
pub const K_LIMIT: u64 = 1000;

/// A multiplicity pattern that passes every feasibility condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FeasibleRow {
    pub k: u64,
    pub n: u64,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    /// Triangles through each vertex.
    pub t_x: u64,
    /// Total number of quadrangles.
    pub q: u64,
    /// Quadrangles through each vertex.
    pub q_x: u64,
}

impl FeasibleRow {
    /// Checks every condition for `(k, n)`; `None` if one fails.
    pub fn evaluate(k: u64, n: u64) -> Option<FeasibleRow> {
        let (k, n) = (i128::from(k), i128::from(n));
        if k < 4 || k % 2 != 0 || (2 * n) % k != 0 {
            return None;
        }
        let alpha = 2 * n / k - 3;
        let beta = n + 3 - 4 * n / k;
        let gamma = 2 * n / k - 1;
        if alpha < 1 || beta < 1 || gamma < 1 {
            return None;
        }
        if n < 2 * k || 4 * n > 3 * k * k * k {
            return None;
        }
        let cube3 = 3 * k * k * k;
        if cube3 % (8 * n) != 0 {
            return None;
        }
        let q32 = k * (3 * k * k * k + n * k * k - 8 * n * k + 4 * n);
        if q32 % 32 != 0 || q32 < 0 {
            return None;
        }
        let q = q32 / 32;
        if (4 * q) % n != 0 {
            return None;
        }
        let u = |v: i128| u64::try_from(v).expect("positive and bounded");
        Some(FeasibleRow {
            k: u(k),
            n: u(n),
            alpha: u(alpha),
            beta: u(beta),
            gamma: u(gamma),
            t_x: u(cube3 / (8 * n)),
            q: u(q),
            q_x: u(4 * q / n),
        })
    }

    /// Re-checks the row invariants from scratch.
    pub fn check_invariants(&self) -> bool {
        let (k, n) = (self.k, self.n);
        let positive = self.alpha > 0 && self.beta > 0 && self.gamma > 0;
        positive
            && 2 * n == k * (self.alpha + 3)
            && 1 + self.alpha + self.beta + self.gamma == n
            && 2 * k <= n
            && 4 * n <= 3 * k * k * k
            && 8 * n * self.t_x == 3 * k * k * k
            && self.q_x * n == 4 * self.q
            && FeasibleRow::evaluate(k, n) == Some(*self)
    }

    pub fn spectrum(&self) -> String {
        let h = self.k / 2;
        format!(
            "{{[{}]^1, [{}]^{}, [0]^{}, [-{}]^{}}}",
            self.k, h, self.alpha, self.beta, h, self.gamma
        )
    }
}

fn check_k(k: u64) -> Result<()> {
    if !k.is_multiple_of(2) || k < 4 {
        return Err(Error::InvalidParameters(format!("valency must be even and at least 4, got {k}")));
    }
    if k > K_LIMIT {
        return Err(Error::InvalidParameters(format!("valency above {K_LIMIT} is not supported")));
    }
    Ok(())
}

/// All feasible rows with valency `k`, ascending by `n`.
pub fn feasible_rows(k: u64) -> Result<Vec<FeasibleRow>> {
    check_k(k)?;
    let step = k / 2;
    let upper = 3 * k * k * k / 4;
    Ok((2 * k..=upper)
        .step_by(step as usize)
        .filter_map(|n| FeasibleRow::evaluate(k, n))
        .collect())
}

/// Rows for every even `k` in `[4, k_max]`, ordered by `(k, n)`.
pub fn enumerate_tables(k_max: u64) -> Result<Vec<FeasibleRow>> {
    check_k(k_max)?;
    let blocks: Vec<Vec<FeasibleRow>> = (4..=k_max)
        .step_by(2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(feasible_rows)
        .collect::<Result<_>>()?;
    Ok(blocks.concat())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum WalkFilterVerdict {
    Kept,
    Eliminated { r: u32 },
}

/// Closed walks of length `r` per vertex, `(k^r + α(k/2)^r + γ(−k/2)^r)/n`.
pub fn closed_walk_count(row: &FeasibleRow, r: u32) -> BigRational {
    let k = BigInt::from(row.k);
    let h = BigInt::from(row.k / 2);
    let signed_h = if r.is_multiple_of(2) { h.pow(r) } else { -h.pow(r) };
    let total = k.pow(r) + BigInt::from(row.alpha) * h.pow(r) + BigInt::from(row.gamma) * signed_h;
    BigRational::new(total, BigInt::from(row.n))
}

/// First `r ≤ r_max` where the closed-walk count is not a non-negative integer.
pub fn closed_walk_filter(row: &FeasibleRow, r_max: u32) -> WalkFilterVerdict {
    assert!(r_max >= 1, "r_max must be positive");
    (1..=r_max)
        .find(|&r| {
            let c = closed_walk_count(row, r);
            !c.is_integer() || c.is_negative()
        })
        .map_or(WalkFilterVerdict::Kept, |r| WalkFilterVerdict::Eliminated { r })
}

/// A row that may be realized as an `m`-coclique extension of a smaller row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CocliqueHint {
    pub k: u64,
    pub n: u64,
    pub base_k: u64,
    pub base_n: u64,
    pub m: u64,
}

impl fmt::Display for CocliqueHint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "try coclique(G, {}) for G realizing (k={}, n={})", self.m, self.base_k, self.base_n)
    }
}

/// Hints `(k, n) = (m·k′, m·n′)` where `(k′, n′)` is itself among `rows`.
pub fn coclique_hints(rows: &[FeasibleRow]) -> Vec<CocliqueHint> {
    let mut hints = Vec::new();
    for row in rows {
        for m in 2..=row.k / 4 {
            if row.k % m != 0 || row.n % m != 0 {
                continue;
            }
            let (base_k, base_n) = (row.k / m, row.n / m);
            if rows.iter().any(|b| (b.k, b.n) == (base_k, base_n)) {
                hints.push(CocliqueHint { k: row.k, n: row.n, base_k, base_n, m });
            }
        }
    }
    hints
}

/// What is known about a row's realizability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExistenceStatus {
    /// Realized by a graph the crate can build.
    Constructible,
    /// Realized by a coset graph of a binary code; not built here.
    Coset,
    Unknown,
    /// Feasible here, but ruled out by an external argument.
    ExcludedByCitation,
}

impl ExistenceStatus {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "constructible" => ExistenceStatus::Constructible,
            "coset" => ExistenceStatus::Coset,
            "unknown" => ExistenceStatus::Unknown,
            "excluded-by-citation" => ExistenceStatus::ExcludedByCitation,
            _ => return None,
        })
    }
}

/// One line of the bundled reference table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenRow {
    pub k: u64,
    pub n: u64,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub spectrum: String,
    pub existence: String,
    pub status: ExistenceStatus,
    pub note: String,
}

/// The reference table covers valencies up to this bound.
pub const GOLDEN_K_MAX: u64 = 20;

const GOLDEN_TSV: &str = include_str!("../data/tables_golden.tsv");

/// Parses the bundled reference table.
pub fn golden_table() -> Vec<GoldenRow> {
    parse_golden(GOLDEN_TSV).expect("bundled table is well formed")
}

/// Parses a reference table: tab-separated `k, n, alpha, beta, gamma,
/// spectrum, existence, status, note`, with `#` comment lines.
pub fn parse_golden(text: &str) -> Result<Vec<GoldenRow>> {
    let bad = |line: usize, what: &str| Error::InvalidParameters(format!("reference table line {line}: {what}"));
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 9 {
            return Err(bad(i + 1, "expected 9 tab-separated fields"));
        }
        let num = |j: usize| f[j].parse::<u64>().map_err(|_| bad(i + 1, "non-numeric field"));
        rows.push(GoldenRow {
            k: num(0)?,
            n: num(1)?,
            alpha: num(2)?,
            beta: num(3)?,
            gamma: num(4)?,
            spectrum: f[5].to_string(),
            existence: f[6].to_string(),
            status: ExistenceStatus::parse(f[7]).ok_or_else(|| bad(i + 1, "unknown status"))?,
            note: f[8].to_string(),
        });
    }
    Ok(rows)
}

/// A disagreement between emitted rows and the reference table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoldenDiff {
    Missing { k: u64, n: u64 },
    Unexpected { k: u64, n: u64 },
    Field { k: u64, n: u64, field: &'static str, expected: String, actual: String },
}

impl fmt::Display for GoldenDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoldenDiff::Missing { k, n } => write!(f, "missing row k={k} n={n}"),
            GoldenDiff::Unexpected { k, n } => write!(f, "unexpected row k={k} n={n}"),
            GoldenDiff::Field { k, n, field, expected, actual } => {
                write!(f, "row k={k} n={n}: {field} expected {expected}, got {actual}")
            }
        }
    }
}

/// Compares rows with `k ≤ min(k_max, 20)` against the bundled reference table.
pub fn compare_with_golden(rows: &[FeasibleRow], k_max: u64) -> Vec<GoldenDiff> {
    compare_against(rows, &golden_table(), k_max.min(GOLDEN_K_MAX))
}

/// Compares rows with `k ≤ limit` against `reference` restricted the same way.
pub fn compare_against(rows: &[FeasibleRow], reference: &[GoldenRow], limit: u64) -> Vec<GoldenDiff> {
    let golden: Vec<&GoldenRow> = reference.iter().filter(|g| g.k <= limit).collect();
    let ours: Vec<&FeasibleRow> = rows.iter().filter(|r| r.k <= limit).collect();
    let mut diffs = Vec::new();
    for g in &golden {
        let Some(r) = ours.iter().find(|r| (r.k, r.n) == (g.k, g.n)) else {
            diffs.push(GoldenDiff::Missing { k: g.k, n: g.n });
            continue;
        };
        let fields = [
            ("alpha", g.alpha.to_string(), r.alpha.to_string()),
            ("beta", g.beta.to_string(), r.beta.to_string()),
            ("gamma", g.gamma.to_string(), r.gamma.to_string()),
            ("spectrum", g.spectrum.clone(), r.spectrum()),
        ];
        for (field, expected, actual) in fields {
            if expected != actual {
                diffs.push(GoldenDiff::Field { k: g.k, n: g.n, field, expected, actual });
            }
        }
    }
    for r in ours {
        if !golden.iter().any(|g| (g.k, g.n) == (r.k, r.n)) {
            diffs.push(GoldenDiff::Unexpected { k: r.k, n: r.n });
        }
    }
    diffs
}

pub fn to_tsv(rows: &[FeasibleRow]) -> String {
    let mut out = String::from("k\tn\talpha\tbeta\tgamma\tt_x\tq\tq_x\tspectrum\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.k, r.n, r.alpha, r.beta, r.gamma, r.t_x, r.q, r.q_x, r.spectrum()
        );
    }
    out
}

pub fn to_jsonl(rows: &[FeasibleRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let mut v = serde_json::to_value(r).expect("plain struct");
        v["spectrum"] = r.spectrum().into();
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

/// Markdown table with Existence and Comment columns taken from the
/// reference table, or from coclique hints beyond it.
pub fn to_markdown(rows: &[FeasibleRow]) -> String {
    let golden = golden_table();
    let hints = coclique_hints(rows);
    let mut out = String::from("| k | n | Spectrum | Existence | Comment |\n|---|---|---|---|---|\n");
    for r in rows {
        let (existence, comment) = match golden.iter().find(|g| (g.k, g.n) == (r.k, r.n)) {
            Some(g) => (g.existence.clone(), g.note.clone()),
            None => {
                let hint = hints.iter().find(|h| (h.k, h.n) == (r.k, r.n));
                ("?".to_string(), hint.map(ToString::to_string).unwrap_or_default())
            }
        };
        let _ = writeln!(out, "| {} | {} | {} | {} | {} |", r.k, r.n, r.spectrum(), existence, comment);
    }
    out
}

/// One checked quantity of [`verify_candidate_graph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldCheck {
    pub field: &'static str,
    pub expected: String,
    pub measured: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub graph: String,
    pub k: u64,
    pub n: u64,
    pub checks: Vec<FieldCheck>,
}

impl CandidateVerdict {
    pub fn verified(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FieldCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

fn check(field: &'static str, expected: impl ToString, measured: impl ToString) -> FieldCheck {
    let (expected, measured) = (expected.to_string(), measured.to_string());
    FieldCheck { ok: expected == measured, field, expected, measured }
}

/// Checks a graph against a row: order, valency, exact spectrum, triangle and
/// quadrangle counts, and `h(A) = (h(k)/n)J` for `h(x) = x(x − k/2)(x + k/2)`.
///
/// The remaining checks are skipped once order or valency differ.
pub fn verify_candidate_graph(g: &Graph, row: &FeasibleRow) -> Result<CandidateVerdict> {
    let k = require_connected_regular(g)? as u64;
    let n = g.order() as u64;
    let mut verdict = CandidateVerdict {
        graph: g.label().to_string(),
        k: row.k,
        n: row.n,
        checks: vec![check("n", row.n, n), check("k", row.k, k)],
    };
    if !verdict.verified() {
        return Ok(verdict);
    }

    let a = g.adjacency_matrix();
    let spectrum = exact_spectrum(&a)?;
    verdict.checks.push(check("spectrum", row.spectrum(), spectrum.render()));

    let triangles: Vec<u64> = (0..g.order()).map(|x| g.count_triangles_through(x)).collect();
    verdict.checks.push(check("t_x", row.t_x, uniform(&triangles)));
    let quads = g.count_quadrangles();
    verdict.checks.push(check("q", row.q, quads.total));
    verdict.checks.push(check("q_x", row.q_x, uniform(&quads.through)));

    let half_sq = BigRational::new(BigInt::from(row.k * row.k), BigInt::from(4));
    let lhs = a.pow(3).sub(&a.scale(&half_sq))?;
    let hk = BigRational::new(BigInt::from(3 * row.k * row.k * row.k), BigInt::from(4 * row.n));
    let rhs = ExactMatrix::ones(g.order(), g.order()).scale(&hk);
    verdict.checks.push(FieldCheck {
        field: "hoffman",
        expected: format!("({hk})J"),
        measured: if lhs == rhs { format!("({hk})J") } else { "not a multiple of J".to_string() },
        ok: lhs == rhs,
    });
    Ok(verdict)
}

fn uniform(values: &[u64]) -> String {
    match values.split_first() {
        Some((first, rest)) if rest.iter().all(|v| v == first) => first.to_string(),
        _ => {
            let (lo, hi) = (values.iter().min(), values.iter().max());
            format!("varies {}..{}", lo.copied().unwrap_or(0), hi.copied().unwrap_or(0))
        }
    }
}

/// A realizing graph listed in the reference table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceEntry {
    pub row: FeasibleRow,
    pub golden: GoldenRow,
}

impl ExistenceEntry {
    pub fn is_constructible(&self) -> bool {
        self.golden.status == ExistenceStatus::Constructible
    }

    pub fn build(&self) -> Result<Graph> {
        if !self.is_constructible() {
            return Err(Error::Unsupported {
                label: self.golden.existence.clone(),
                reason: "construction data not available".to_string(),
            });
        }
        Ok(construct(&self.golden.existence)?)
    }
}

/// Rows of the reference table with a named realizing graph, in table order.
pub fn existence_catalog() -> Vec<ExistenceEntry> {
    golden_table()
        .into_iter()
        .filter(|g| matches!(g.status, ExistenceStatus::Constructible | ExistenceStatus::Coset))
        .map(|golden| ExistenceEntry {
            row: FeasibleRow::evaluate(golden.k, golden.n).expect("reference rows are feasible"),
            golden,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_valencies() {
        let ns = |k| feasible_rows(k).unwrap().iter().map(|r| r.n).collect::<Vec<_>>();
        assert_eq!(ns(4), vec![8, 12]);
        assert_eq!(ns(6), vec![27, 81]);
        let k20 = feasible_rows(20).unwrap();
        assert_eq!((k20.len(), k20[0].n, k20[14].n), (15, 40, 3000));
    }

    #[test]
    fn bad_valencies() {
        assert!(feasible_rows(3).is_err());
        assert!(feasible_rows(2).is_err());
        assert!(enumerate_tables(21).is_err());
    }

    #[test]
    fn table_counts() {
        let rows = enumerate_tables(20).unwrap();
        let counts: Vec<usize> = (4..=20).step_by(2).map(|k| rows.iter().filter(|r| r.k == k).count()).collect();
        assert_eq!(counts, vec![2, 2, 7, 4, 9, 4, 11, 4, 15]);
        assert!(rows.iter().all(FeasibleRow::check_invariants));
        assert!(compare_with_golden(&rows, 20).is_empty());
        assert_eq!(enumerate_tables(4).unwrap().len(), 2);
    }

    #[test]
    fn spectrum_string() {
        let r = FeasibleRow::evaluate(8, 32).unwrap();
        assert_eq!(r.spectrum(), "{[8]^1, [4]^5, [0]^19, [-4]^7}");
        assert_eq!(FeasibleRow::evaluate(6, 81).unwrap().q, 0);
    }

    #[test]
    fn rejected_rows() {
        assert_eq!(FeasibleRow::evaluate(4, 10), None);
        assert_eq!(FeasibleRow::evaluate(4, 16), None);
    }

    #[test]
    fn walk_filter() {
        let r = FeasibleRow::evaluate(4, 8).unwrap();
        assert_eq!(closed_walk_count(&r, 3), BigRational::from_integer(BigInt::from(2 * r.t_x)));
        assert_eq!(closed_walk_count(&r, 2), BigRational::from_integer(BigInt::from(4)));
        assert_eq!(closed_walk_filter(&r, 20), WalkFilterVerdict::Kept);
        let fake = FeasibleRow { n: 10, ..r };
        assert_eq!(closed_walk_filter(&fake, 5), WalkFilterVerdict::Eliminated { r: 2 });
    }

    #[test]
    fn hints() {
        let rows = enumerate_tables(20).unwrap();
        let hints = coclique_hints(&rows);
        assert!(hints.contains(&CocliqueHint { k: 18, n: 81, base_k: 6, base_n: 27, m: 3 }));
        assert!(hints.contains(&CocliqueHint { k: 8, n: 16, base_k: 4, base_n: 8, m: 2 }));
        assert!(!hints.iter().any(|h| (h.k, h.n) == (10, 25)));
    }

    #[test]
    fn candidates() {
        let row = FeasibleRow::evaluate(4, 12).unwrap();
        let v = verify_candidate_graph(&construct("line(hamming(3,2))").unwrap(), &row).unwrap();
        assert!(v.verified(), "{v:?}");
        let row = FeasibleRow::evaluate(6, 81).unwrap();
        let v = verify_candidate_graph(&construct("hamming(3,3)").unwrap(), &row).unwrap();
        assert_eq!(v.failures().next().unwrap().field, "n");
    }

    #[test]
    fn catalog() {
        let cat = existence_catalog();
        assert_eq!(cat.iter().filter(|e| e.is_constructible()).count(), 13);
        assert_eq!(cat.iter().filter(|e| !e.is_constructible()).count(), 4);
        assert!(cat.iter().find(|e| !e.is_constructible()).unwrap().build().is_err());
    }

    #[test]
    fn emitters() {
        let rows = enumerate_tables(4).unwrap();
        let tsv = to_tsv(&rows);
        assert_eq!(tsv.lines().nth(1).unwrap(), "4\t8\t1\t3\t3\t3\t12\t6\t{[4]^1, [2]^1, [0]^3, [-2]^3}");
        let json: serde_json::Value = serde_json::from_str(to_jsonl(&rows).lines().next().unwrap()).unwrap();
        assert_eq!(json["n"], 8);
        assert!(to_markdown(&rows).contains("| 4 | 12 | {[4]^1, [2]^3, [0]^3, [-2]^5} | line(hamming(3,2)) |  |"));
    }
}
