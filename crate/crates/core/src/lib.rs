//! Exact analysis of Grover walks on regular graphs.
//!
//! The crate decides periodicity and perfect state transfer (PST) of the
//! Grover walk, classifies strongly regular and strongly walk-regular
//! graphs, and enumerates the feasible spectra
//! `{[k]^1, [k/2]^α, [0]^β, [-k/2]^γ}`. All arithmetic is exact: rationals,
//! real quadratic irrationals, and arbitrary-precision integers.
//!
//! ```
//! use grover_lab::{graph::construct, pst::minimal_time_scan, Bounds};
//!
//! let c4 = construct("cycle(4)").unwrap();
//! let report = minimal_time_scan(&c4, &Bounds::default()).unwrap();
//! assert_eq!(report.pairs.len(), 4);
//! assert!(report.pairs.iter().all(|p| p.tau == 2));
//! ```

pub mod exact;
pub mod graph;
pub mod grover;
pub mod pst;
pub mod report;
pub mod search;
pub mod walk_regularity;

use thiserror::Error;

use exact::ExactError;
use graph::{Graph, GraphError};

/// Search limits shared by the analyses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest time scanned for PST.
    pub tau_max: u32,
    /// Largest odd walk length tried when looking for a strong walk-regularity witness.
    pub ell_max: u32,
    /// Largest closed-walk length checked by the spectrum filter.
    pub r_max: u32,
    /// Largest power tried by direct periodicity checks.
    pub direct_tau_max: u32,
    /// Direct powering is skipped above this many arcs.
    pub direct_arc_limit: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            tau_max: 60,
            ell_max: 21,
            r_max: 20,
            direct_tau_max: 120,
            direct_arc_limit: 300,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("unsupported graph {label}: {reason}")]
    Unsupported { label: String, reason: String },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{0} is not the cosine of a rational multiple of π of degree at most 2")]
    UnrecognizedAngle(String),
    #[error("criteria disagree for {label} at ({x}, {y}, τ={tau}): Chebyshev says {chebyshev}, conditions say {conditions}")]
    OracleMismatch {
        label: String,
        x: usize,
        y: usize,
        tau: u32,
        chebyshev: bool,
        conditions: bool,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Valency of a connected regular graph, or [`Error::Unsupported`].
pub fn require_connected_regular(g: &Graph) -> Result<usize> {
    let unsupported = |reason: &str| Error::Unsupported {
        label: g.label().to_string(),
        reason: reason.to_string(),
    };
    let k = g.regularity().ok_or_else(|| unsupported("not regular"))?;
    if !g.is_connected() {
        return Err(unsupported("not connected"));
    }
    if k == 0 {
        return Err(unsupported("no edges"));
    }
    Ok(k)
}
