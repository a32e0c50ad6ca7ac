//! Whole-graph reports combining the individual analyses.

use std::fmt::Write as _;

use serde::Serialize;

use crate::exact::ExactError;
use crate::graph::Graph;
use crate::grover::{build_operators, check_periodic_direct, periodicity_for_class, PeriodicityVerdict};
use crate::pst::{minimal_time_scan_with, PstContext, PstReport};
use crate::search::{verify_candidate_graph, CandidateVerdict, ExistenceEntry};
use crate::walk_regularity::{classify_swr, SwrClass};
use crate::{require_connected_regular, Bounds, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub order: usize,
    pub valency: usize,
    pub edges: usize,
    pub bipartite: bool,
    pub complete: bool,
    pub classification: SwrClass,
    /// Class-based periodicity rule, for SRGs and genuine graphs.
    pub periodicity_rule: Option<PeriodicityVerdict>,
    /// Exact powering of `U`, when the arc count is within bounds.
    pub direct: Option<PeriodicityVerdict>,
    #[serde(flatten)]
    pub pst: PstReport,
}

fn unsupported_spectrum(g: &Graph, e: Error) -> Error {
    match e {
        Error::Exact(ExactError::IrreducibleFactor { degree }) => Error::Unsupported {
            label: g.label().to_string(),
            reason: format!("spectrum has an irreducible factor of degree {degree}"),
        },
        other => other,
    }
}

/// Predicates, spectrum, classification, filter, periodicity and PST scan.
pub fn analyze(g: &Graph, bounds: &Bounds) -> Result<AnalysisReport> {
    let k = require_connected_regular(g)?;
    let ctx = PstContext::new(g).map_err(|e| unsupported_spectrum(g, e))?;
    let classification = classify_swr(g, bounds.ell_max)?;
    let periodicity_rule = match classification {
        SwrClass::StronglyRegular { .. } | SwrClass::Genuine { .. } => {
            Some(periodicity_for_class(g, &classification, &ctx.spectrum_p)?)
        }
        _ => None,
    };
    let direct = if 2 * g.edge_count() <= bounds.direct_arc_limit {
        Some(check_periodic_direct(&build_operators(g)?, bounds.direct_tau_max))
    } else {
        None
    };
    let predicates = g.basic_predicates();
    Ok(AnalysisReport {
        order: g.order(),
        valency: k,
        edges: g.edge_count(),
        bipartite: predicates.bipartite,
        complete: predicates.complete,
        classification,
        periodicity_rule,
        direct,
        pst: minimal_time_scan_with(g, &ctx, bounds)?,
    })
}

impl AnalysisReport {
    pub fn to_markdown(&self) -> String {
        let p = &self.pst;
        let mut out = format!("# {}\n\n", p.graph);
        let period = |v: Option<u32>| v.map_or("none".to_string(), |t| t.to_string());
        let rows = [
            ("vertices", self.order.to_string()),
            ("valency", self.valency.to_string()),
            ("edges", self.edges.to_string()),
            ("bipartite", self.bipartite.to_string()),
            ("spectrum", p.spectrum.clone()),
            ("class", describe_class(&self.classification)),
            ("filter", p.filter.to_string()),
            ("periodic", p.periodic.to_string()),
            ("period", period(p.period)),
            (
                "direct powering",
                self.direct.as_ref().map_or("skipped".to_string(), |d| period(d.period)),
            ),
            ("times scanned", describe_times(&p.checked_times)),
        ];
        out.push_str("| property | value |\n|---|---|\n");
        for (name, value) in rows {
            let _ = writeln!(out, "| {name} | {value} |");
        }
        out.push('\n');
        if p.pairs.is_empty() {
            out.push_str("No perfect state transfer.\n");
        } else {
            out.push_str("| x | y | τ | signs |\n|---|---|---|---|\n");
            for pair in &p.pairs {
                let _ = writeln!(out, "| {} | {} | {} | {} |", pair.x, pair.y, pair.tau, pair.signs.concat());
            }
        }
        out
    }

    /// One line per transferring pair.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("graph\tx\ty\ttau\tsigns\n");
        for pair in &self.pst.pairs {
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", self.pst.graph, pair.x, pair.y, pair.tau, pair.signs.concat());
        }
        out
    }
}

fn describe_class(c: &SwrClass) -> String {
    match c {
        SwrClass::StronglyRegular { params } => format!("strongly regular {params}"),
        SwrClass::Genuine { .. } => format!("genuine strongly {}-walk-regular", c.genuine_ell().unwrap_or(0)),
        other => other.tag().to_string(),
    }
}

fn describe_times(times: &[u32]) -> String {
    match times {
        [] => "none".to_string(),
        [only] => only.to_string(),
        [first, .., last] if times.len() as u32 == last - first + 1 => format!("{first}..={last}"),
        _ => times.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
    }
}

/// Outcome for one entry of the existence catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ExistenceOutcome {
    Skipped {
        k: u64,
        n: u64,
        existence: String,
        reason: String,
    },
    Checked {
        k: u64,
        n: u64,
        existence: String,
        candidate: CandidateVerdict,
        periodic: bool,
        period: Option<u32>,
        checked_times: Vec<u32>,
        pst_pairs: usize,
    },
}

impl ExistenceOutcome {
    /// Verified, periodic, and without transfer at the scanned times.
    pub fn passes(&self) -> bool {
        match self {
            ExistenceOutcome::Skipped { .. } => true,
            ExistenceOutcome::Checked { candidate, periodic, pst_pairs, checked_times, .. } => {
                candidate.verified() && *periodic && *pst_pairs == 0 && checked_times == &[6, 12]
            }
        }
    }
}

/// Builds the entry's graph, checks it against its row, and scans for PST.
pub fn check_existence_entry(entry: &ExistenceEntry, bounds: &Bounds) -> Result<ExistenceOutcome> {
    let (k, n, existence) = (entry.row.k, entry.row.n, entry.golden.existence.clone());
    if !entry.is_constructible() {
        return Ok(ExistenceOutcome::Skipped {
            k,
            n,
            existence,
            reason: "construction data not available".to_string(),
        });
    }
    let g = entry.build()?;
    let candidate = verify_candidate_graph(&g, &entry.row)?;
    let ctx = PstContext::new(&g)?;
    let scan = minimal_time_scan_with(&g, &ctx, bounds)?;
    Ok(ExistenceOutcome::Checked {
        k,
        n,
        existence,
        candidate,
        periodic: scan.periodic,
        period: scan.period,
        checked_times: scan.checked_times,
        pst_pairs: scan.pairs.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct;
    use crate::search::existence_catalog;

    #[test]
    fn analyze_c4() {
        let r = analyze(&construct("cycle(4)").unwrap(), &Bounds::default()).unwrap();
        assert_eq!(r.pst.pairs.len(), 4);
        assert_eq!(r.direct.as_ref().unwrap().period, Some(4));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["pst"][0]["tau"], 2);
        assert_eq!(json["classification"]["class"], "strongly-regular");
        assert!(r.to_markdown().contains("| 0 | 2 | 2 | +-+ |"));
        assert_eq!(r.to_tsv().lines().count(), 5);
    }

    #[test]
    fn unsupported_inputs() {
        let c7 = analyze(&construct("cycle(7)").unwrap(), &Bounds::default());
        assert!(matches!(c7, Err(Error::Unsupported { .. })));
        let star = analyze(&construct("complete_multipartite(1,3)").unwrap(), &Bounds::default());
        assert!(matches!(star, Err(Error::Unsupported { .. })));
    }

    #[test]
    fn first_existence_entry() {
        let cat = existence_catalog();
        let out = check_existence_entry(&cat[0], &Bounds::default()).unwrap();
        assert!(out.passes(), "{out:?}");
    }

    #[test]
    fn time_ranges() {
        assert_eq!(describe_times(&[1, 2, 3]), "1..=3");
        assert_eq!(describe_times(&[6, 12]), "6, 12");
    }
}
