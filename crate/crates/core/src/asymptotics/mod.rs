//! The explicit asymptotic machinery for `L_n(1)`: the main term, certified
//! `J_v(2r)` enclosures, the tail error budget, and floating-point quadrature
//! oracles used only for cross-checking.

mod bessel;
mod budget;
mod oracle;

use thiserror::Error;

use crate::interval::IntervalError;

pub use bessel::{bessel_enclosure, bessel_pq, BesselEnclosure, BesselOrder};
pub use budget::{
    e6_bessel_form, error_budget, h_terms, main_term, main_term_amplitude, ErrorBudget, HTerms,
    PROOF_THRESHOLD,
};
pub(crate) use budget::quarter_powers;
pub use oracle::{
    bessel_quadrature_oracle, laguerre_contour_oracle, OracleValue, AGREEMENT_TOL, MAX_NODES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymptoticsError {
    #[error("unsupported Bessel order {0}; only 0, 1 and 3 are available")]
    UnsupportedOrder(u32),
    #[error("radius enclosure must be strictly positive")]
    NonPositiveRadius,
    #[error("index {0} is outside the domain (n >= 1 required)")]
    InvalidIndex(u64),
    #[error("node count {0} must be a power of two above the minimum")]
    InvalidNodes(usize),
    #[error("quadrature did not converge with {nodes} nodes")]
    NoConvergence { nodes: usize },
    #[error(transparent)]
    Interval(#[from] IntervalError),
}
