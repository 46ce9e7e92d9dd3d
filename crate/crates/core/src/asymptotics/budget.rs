use num_bigint::BigInt;
use num_rational::BigRational;

use super::bessel::{bessel_enclosure, BesselOrder};
use super::AsymptoticsError;
use crate::interval::{
    const_e, const_pi, exp_enclosure, sincos_enclosure, sqrt_enclosure, Interval, Precision,
};

/// Smallest `n` covered by the analytic tail argument.
pub const PROOF_THRESHOLD: u64 = 10_000;

const GUARD: u32 = 32;

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Interval constants shared by every budget term.
struct Constants {
    sqrt_e: Interval,
    e_three_halves: Interval,
    sqrt_pi: Interval,
    sqrt_e_over_pi: Interval,
}

impl Constants {
    fn new(w: Precision) -> Result<Self, AsymptoticsError> {
        let e = const_e(w);
        let pi = const_pi(w);
        let sqrt_e = sqrt_enclosure(&e, w)?;
        let e_three_halves = exp_enclosure(&Interval::from_rational(&ratio(3, 2), w), w)?;
        let sqrt_pi = sqrt_enclosure(&pi, w)?;
        let sqrt_e_over_pi = sqrt_enclosure(&e.div(&pi, w)?, w)?;
        Ok(Self {
            sqrt_e,
            e_three_halves,
            sqrt_pi,
            sqrt_e_over_pi,
        })
    }
}

/// `x^{1/4}` and `x^{3/4}` as composed square roots.
pub(crate) fn quarter_powers(x: &Interval, w: Precision) -> Result<(Interval, Interval), AsymptoticsError> {
    let root = sqrt_enclosure(x, w)?;
    let quarter = sqrt_enclosure(&root, w)?;
    let three_quarters = sqrt_enclosure(&x.mul(&root, w), w)?;
    Ok((quarter, three_quarters))
}

/// `√(e/π) / n^{1/4}`, the amplitude of the main term.
pub fn main_term_amplitude(n: u64, prec: Precision) -> Result<Interval, AsymptoticsError> {
    if n == 0 {
        return Err(AsymptoticsError::InvalidIndex(n));
    }
    let w = prec.plus(GUARD);
    let c = Constants::new(w)?;
    let (quarter, _) = quarter_powers(&Interval::from_int(n), w)?;
    Ok(c.sqrt_e_over_pi.div(&quarter, w)?.round_out(prec))
}

/// `M(n) = √(e/π)·cos(2√n − π/4)/n^{1/4}`.
pub fn main_term(n: u64, prec: Precision) -> Result<Interval, AsymptoticsError> {
    if n == 0 {
        return Err(AsymptoticsError::InvalidIndex(n));
    }
    let w = prec.plus(GUARD);
    let c = Constants::new(w)?;
    let nn = Interval::from_int(n);
    let (quarter, _) = quarter_powers(&nn, w)?;
    let phase = sqrt_enclosure(&nn, w)?
        .mul_pow2(1)
        .sub(&const_pi(w).mul_pow2(-2), w);
    let (_, cos) = sincos_enclosure(&phase, w);
    Ok(c
        .sqrt_e_over_pi
        .mul(&cos, w)
        .div(&quarter, w)?
        .round_out(prec))
}

/// The seven closed-form majorants of the analytic tail and their sum.
#[derive(Debug, Clone)]
pub struct ErrorBudget {
    pub n: u64,
    /// `r = √(n+1)`.
    pub r: Interval,
    pub e2: Interval,
    pub e3: Interval,
    pub e4: Interval,
    pub e5: Interval,
    pub e6: Interval,
    pub e7: Interval,
    pub e8: Interval,
    pub total: Interval,
    /// `total·n^{3/4}`.
    pub normalized: Interval,
    /// Set when `n` is below [`PROOF_THRESHOLD`]; the formulas are still
    /// evaluated but do not bound anything there.
    pub outside_proof_range: bool,
}

impl ErrorBudget {
    pub fn terms(&self) -> [(&'static str, &Interval); 7] {
        [
            ("e2", &self.e2),
            ("e3", &self.e3),
            ("e4", &self.e4),
            ("e5", &self.e5),
            ("e6", &self.e6),
            ("e7", &self.e7),
            ("e8", &self.e8),
        ]
    }
}

pub fn error_budget(n: u64, prec: Precision) -> Result<ErrorBudget, AsymptoticsError> {
    if n == 0 {
        return Err(AsymptoticsError::InvalidIndex(n));
    }
    let w = prec.plus(GUARD);
    let c = Constants::new(w)?;
    let nn = Interval::from_int(n);
    let m = Interval::from_int(n + 1);
    let r = sqrt_enclosure(&m, w)?;
    let (m_quarter, m_three_quarters) = quarter_powers(&m, w)?;
    let (n_quarter, n_three_quarters) = quarter_powers(&nn, w)?;
    let m_five_quarters = m.mul(&m_quarter, w);
    let n_five_quarters = nn.mul(&n_quarter, w);
    let r_minus_half = r.sub(&Interval::from_rational(&ratio(1, 2), w), w);
    let rat = |p: i64, q: i64| Interval::from_rational(&ratio(p, q), w);

    // E2 = 0.00605·e^{3/2} / ((n+1)^{3/2}·(√(n+1) − 1/2))
    let e2 = rat(605, 100_000)
        .mul(&c.e_three_halves, w)
        .div(&m.mul(&r, w).mul(&r_minus_half, w), w)?;
    // E3 = e^{3/2} / (80·(n+1)·(√(n+1) − 1/2))
    let e3 = c
        .e_three_halves
        .div(&m.mul_int(80, w).mul(&r_minus_half, w), w)?;
    // E4 = √e / ((n+1)^{1/2}·(√(n+1) − 1/2))
    let e4 = c.sqrt_e.div(&r.mul(&r_minus_half, w), w)?;
    // E5 = 4√e/(n+1) + √e/(24(n+1))
    let e5 = c
        .sqrt_e
        .mul_int(4, w)
        .div(&m, w)?
        .add(&c.sqrt_e.div(&m.mul_int(24, w), w)?, w);
    // E6 = 0.546·(n+1)^{−3/4}
    let e6 = rat(546, 1000).div(&m_three_quarters, w)?;
    // E7 = √e/(16√π(n+1)^{3/4}) + 9√e/(256√π(n+1)^{5/4})
    let e7 = c
        .sqrt_e
        .div(&c.sqrt_pi.mul_int(16, w).mul(&m_three_quarters, w), w)?
        .add(
            &c.sqrt_e
                .mul_int(9, w)
                .div(&c.sqrt_pi.mul_int(256, w).mul(&m_five_quarters, w), w)?,
            w,
        );
    // E8 = √(e/π)·(1/n^{3/4} + 1/(4n^{5/4}))
    let e8 = c.sqrt_e_over_pi.mul(
        &n_three_quarters
            .recip(w)?
            .add(&n_five_quarters.mul_int(4, w).recip(w)?, w),
        w,
    );

    let total = [&e2, &e3, &e4, &e5, &e6, &e7, &e8]
        .into_iter()
        .fold(Interval::zero(), |acc, e| acc.add(e, w));
    let normalized = total.mul(&n_three_quarters, w);
    let out = |i: Interval| i.round_out(prec);
    Ok(ErrorBudget {
        n,
        r: out(r),
        e2: out(e2),
        e3: out(e3),
        e4: out(e4),
        e5: out(e5),
        e6: out(e6),
        e7: out(e7),
        e8: out(e8),
        total: out(total),
        normalized: out(normalized),
        outside_proof_range: n < PROOF_THRESHOLD,
    })
}

/// `(√e/2r)·|J₁(2r) − J₃(2r)/6|` from certified Bessel enclosures, `r = √(n+1)`.
pub fn e6_bessel_form(n: u64, prec: Precision) -> Result<Interval, AsymptoticsError> {
    if n == 0 {
        return Err(AsymptoticsError::InvalidIndex(n));
    }
    let w = prec.plus(GUARD);
    let r = sqrt_enclosure(&Interval::from_int(n + 1), w)?;
    let j1 = bessel_enclosure(BesselOrder::One, &r, w)?.j;
    let j3 = bessel_enclosure(BesselOrder::Three, &r, w)?.j;
    let sqrt_e = sqrt_enclosure(&const_e(w), w)?;
    let diff = j1.sub(&j3.div_int(6, w), w).abs();
    Ok(sqrt_e
        .div(&r.mul_pow2(1), w)?
        .mul(&diff, w)
        .round_out(prec))
}

#[derive(Debug, Clone)]
pub struct HTerms {
    /// `√e·J₀(2r)`.
    pub h1: Interval,
    /// `√(e/(πr))·cos(2r − π/4)`.
    pub h2: Interval,
    /// `√(e/π)·cos(2√n − π/4)/n^{1/4}`, identical to [`main_term`].
    pub h3: Interval,
}

pub fn h_terms(n: u64, prec: Precision) -> Result<HTerms, AsymptoticsError> {
    if n == 0 {
        return Err(AsymptoticsError::InvalidIndex(n));
    }
    let w = prec.plus(GUARD);
    let c = Constants::new(w)?;
    let r = sqrt_enclosure(&Interval::from_int(n + 1), w)?;
    let j0 = bessel_enclosure(BesselOrder::Zero, &r, w)?.j;
    let h1 = c.sqrt_e.mul(&j0, w);
    let phase = r.mul_pow2(1).sub(&const_pi(w).mul_pow2(-2), w);
    let (_, cos) = sincos_enclosure(&phase, w);
    let h2 = sqrt_enclosure(&const_e(w).div(&const_pi(w).mul(&r, w), w)?, w)?.mul(&cos, w);
    let h3 = main_term(n, w)?;
    Ok(HTerms {
        h1: h1.round_out(prec),
        h2: h2.round_out(prec),
        h3: h3.round_out(prec),
    })
}
