//! Executable restatements of the quantitative claims about `Q_n(1)` and
//! `L_n(1)`. Every check returns a [`VerificationReport`].

mod constants;
mod sweeps;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::asymptotics::AsymptoticsError;
use crate::exact::Rational;
use crate::interval::{AdaptivePrecision, Interval, IntervalError, Precision};

pub use constants::{
    check_bessel_dominance, check_budget_grid, check_lemma4, check_polynomiksi_constant,
    check_theorem1_tail, lemma4_coefficients, polynomiksi_lhs, tail_constant_chain,
    Lemma4Coefficients,
};
pub use sweeps::{
    check_folklore, check_qraja, check_ratio_extrema, check_theorem1_numeric, check_theorem2,
    cross_check_indices, Theorem2Form, FOURTH_POWER_LIMIT_BITS,
};

/// Sweeps log progress after this many indices.
pub const PROGRESS_INTERVAL: u64 = 500;

/// Failing indices beyond this count are summarized in the notes only.
pub const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("n = {n} is below the validity threshold {threshold} of this check")]
    BelowProofRange { n: u64, threshold: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Asymptotics(#[from] AsymptoticsError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Verified,
    Violated,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "Verified",
            Verdict::Violated => "Violated",
            Verdict::Inconclusive => "Inconclusive",
        }
    }

    /// Worst of two verdicts: Violated over Inconclusive over Verified.
    pub fn combine(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Violated, _) | (_, Violated) => Violated,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Verified,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub n: u64,
    pub value: Interval,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub check: String,
    pub range: (u64, u64),
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    /// Largest working precision any sub-decision needed; 0 when the check
    /// is purely exact.
    pub precision_bits: u32,
    pub elapsed: Duration,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(check: &str, range: (u64, u64)) -> Self {
        Self {
            check: check.to_string(),
            range,
            verdict: Verdict::Verified,
            witnesses: Vec::new(),
            precision_bits: 0,
            elapsed: Duration::ZERO,
            notes: Vec::new(),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    pub(crate) fn degrade(&mut self, v: Verdict) {
        self.verdict = self.verdict.combine(v);
    }

    pub(crate) fn use_precision(&mut self, p: Precision) {
        self.precision_bits = self.precision_bits.max(p.bits());
    }
}

/// Outcome of one adaptively decided inequality.
#[derive(Debug, Clone)]
pub(crate) struct Decision {
    /// `Some(true)` holds, `Some(false)` fails, `None` undecided at the cap.
    pub holds: Option<bool>,
    pub value: Interval,
    pub prec: Precision,
}

/// Runs `attempt` under `policy`; `attempt` returns the decision (if any)
/// together with the enclosure it was based on.
pub(crate) fn decide(
    policy: &AdaptivePrecision,
    mut attempt: impl FnMut(Precision) -> Result<(Option<bool>, Interval), VerifyError>,
) -> Result<Decision, VerifyError> {
    let mut last: Option<Interval> = None;
    let mut failure: Option<VerifyError> = None;
    let outcome = policy.run(|p| match attempt(p) {
        Ok((Some(holds), value)) => Some(Some((holds, value))),
        Ok((None, value)) => {
            last = Some(value);
            None
        }
        Err(e) => {
            failure = Some(e);
            Some(None)
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(match outcome {
        Ok((Some((holds, value)), prec)) => Decision {
            holds: Some(holds),
            value,
            prec,
        },
        Ok((None, _)) => unreachable!("errors returned above"),
        Err(prec) => Decision {
            holds: None,
            value: last.expect("at least one attempt"),
            prec,
        },
    })
}

/// Parses `"0.33"`, `"-1.5e-3"`, `"2"` or `"7/3"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, VerifyError> {
    let bad = || VerifyError::InvalidArgument(format!("not a decimal or fraction: {s:?}"));
    let s = s.trim();
    if s.contains('/') {
        let r = Rational::from_str(s).map_err(|_| bad())?;
        return Ok(r);
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let num: BigInt = format!("0{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = if scale >= 0 {
        Rational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        r = -r;
    }
    Ok(r)
}

pub(crate) fn sign_pow(n: u64) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}
