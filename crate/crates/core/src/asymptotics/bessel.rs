//! Enclosures of `J_v(2r)` for `v ∈ {0, 1, 3}` from the Hankel-type
//! representation
//!
//! ```text
//! J_v(x) = √(2/(πx))·(cos(x − vπ/2 − π/4)·P(x,v) − sin(x − vπ/2 − π/4)·Q(x,v))
//! ```
//!
//! with `P`, `Q` truncated after a few terms. Each remainder is a known
//! coefficient times a factor `Θ` with `|Θ| <= 1`, entered here as the full
//! interval `[−1, 1]`. The enclosure is therefore exactly as rigorous as those
//! `|Θ| <= 1` bounds.

use std::fmt;

use super::AsymptoticsError;
use crate::interval::{const_pi, sincos_enclosure, sqrt_enclosure, DyadicFloat, Interval, Precision};

/// Orders for which truncated `P`/`Q` expansions are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BesselOrder {
    Zero,
    One,
    Three,
}

impl BesselOrder {
    pub fn value(self) -> u32 {
        match self {
            BesselOrder::Zero => 0,
            BesselOrder::One => 1,
            BesselOrder::Three => 3,
        }
    }
}

impl TryFrom<u32> for BesselOrder {
    type Error = AsymptoticsError;

    fn try_from(v: u32) -> Result<Self, Self::Error> {
        match v {
            0 => Ok(BesselOrder::Zero),
            1 => Ok(BesselOrder::One),
            3 => Ok(BesselOrder::Three),
            other => Err(AsymptoticsError::UnsupportedOrder(other)),
        }
    }
}

impl fmt::Display for BesselOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[derive(Debug, Clone)]
pub struct BesselEnclosure {
    pub order: BesselOrder,
    /// The argument `x = 2r`.
    pub x: Interval,
    pub p: Interval,
    pub q: Interval,
    pub j: Interval,
}

fn theta() -> Interval {
    Interval::symmetric(DyadicFloat::one())
}

/// `num / (2^pow2 · r^k)` as an interval.
fn coeff(num: i64, pow2: i64, r_pow: &Interval, w: Precision) -> Interval {
    Interval::from_int(num)
        .mul_pow2(-pow2)
        .div(r_pow, w)
        .expect("r is positive")
}

/// Truncated `P(2r, v)` and `Q(2r, v)` with every `Θ` term as a symmetric
/// interval:
///
/// ```text
/// P(2r,1) = 1 + 15/(2⁹r²) + 105/(2¹³r³)·Θ₁      Q(2r,1) = 3/(2⁴r) + 105/(2¹³r³)·Θ₂
/// P(2r,3) = 1 − 945/(2⁹r²) + 3465/(2¹³r³)·Θ₃    Q(2r,3) = 35/(2⁴r) − 3465/(2¹³r³)·Θ₄
/// P(2r,0) = 1 + 9/(2⁹r²)·Θ₅                      Q(2r,0) = −1/(2⁴r) + 9/(2⁹r²)·Θ₆
/// ```
pub fn bessel_pq(
    order: BesselOrder,
    r: &Interval,
    prec: Precision,
) -> Result<(Interval, Interval), AsymptoticsError> {
    if r.lo().signum() <= 0 {
        return Err(AsymptoticsError::NonPositiveRadius);
    }
    let w = prec.plus(16);
    let r2 = r.sqr(w);
    let r3 = r2.mul(r, w);
    let one = Interval::one();
    let (p, q) = match order {
        BesselOrder::One => {
            let rem = coeff(105, 13, &r3, w).mul(&theta(), w);
            let p = one.add(&coeff(15, 9, &r2, w), w).add(&rem, w);
            let q = coeff(3, 4, r, w).add(&rem, w);
            (p, q)
        }
        BesselOrder::Three => {
            let rem = coeff(3465, 13, &r3, w).mul(&theta(), w);
            let p = one.sub(&coeff(945, 9, &r2, w), w).add(&rem, w);
            let q = coeff(35, 4, r, w).sub(&rem, w);
            (p, q)
        }
        BesselOrder::Zero => {
            let rem = coeff(9, 9, &r2, w).mul(&theta(), w);
            let p = one.add(&rem, w);
            let q = coeff(-1, 4, r, w).add(&rem, w);
            (p, q)
        }
    };
    Ok((p.round_out(prec), q.round_out(prec)))
}

/// Rigorous enclosure of `J_v(2r)`, conditional on the `|Θ| <= 1` bounds.
pub fn bessel_enclosure(
    order: BesselOrder,
    r: &Interval,
    prec: Precision,
) -> Result<BesselEnclosure, AsymptoticsError> {
    let (p, q) = bessel_pq(order, r, prec)?;
    let w = prec.plus(32);
    let x = r.mul_pow2(1);
    let pi = const_pi(w);
    // phase x − vπ/2 − π/4 = x − (2v+1)·π/4
    let shift = pi.mul_int(2 * i64::from(order.value()) + 1, w).mul_pow2(-2);
    let phase = x.sub(&shift, w);
    let (sin, cos) = sincos_enclosure(&phase, w);
    let amplitude = sqrt_enclosure(&pi.mul(r, w).recip(w)?, w)?;
    let j = amplitude
        .mul(&cos.mul(&p, w).sub(&sin.mul(&q, w), w), w)
        .round_out(prec);
    Ok(BesselEnclosure { order, x, p, q, j })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(bits: u32) -> Precision {
        Precision::new(bits).unwrap()
    }

    #[test]
    fn order_parsing() {
        assert_eq!(BesselOrder::try_from(3).unwrap(), BesselOrder::Three);
        assert_eq!(
            BesselOrder::try_from(2),
            Err(AsymptoticsError::UnsupportedOrder(2))
        );
    }

    #[test]
    fn rejects_nonpositive_radius() {
        assert!(bessel_pq(BesselOrder::Zero, &Interval::zero(), p(64)).is_err());
    }

    #[test]
    fn order_one_tends_to_leading_terms() {
        let r = Interval::from_int(1_000_000);
        let (pp, qq) = bessel_pq(BesselOrder::One, &r, p(128)).unwrap();
        let (plo, phi) = pp.to_f64_bounds();
        let (qlo, qhi) = qq.to_f64_bounds();
        assert!((plo - 1.0).abs() < 1e-10 && (phi - 1.0).abs() < 1e-10);
        assert!(qlo.abs() < 1e-6 && qhi.abs() < 1e-6);
    }

    #[test]
    fn order_zero_p_half_width_at_ten_thousand() {
        // r = √10001 ≈ 100.005; half-width 9/(2⁹·10001) ≈ 1.7576e-6
        let r = sqrt_enclosure(&Interval::from_int(10_001), p(128)).unwrap();
        let (pp, _) = bessel_pq(BesselOrder::Zero, &r, p(128)).unwrap();
        let (lo, hi) = pp.to_f64_bounds();
        let half = 9.0 / (512.0 * 10_001.0);
        assert!((1.0 - lo - half).abs() < 1e-15 && (hi - 1.0 - half).abs() < 1e-15);
        assert!(half < 1.76e-6);
    }

    #[test]
    fn order_three_q_at_hundred() {
        let (_, qq) = bessel_pq(BesselOrder::Three, &Interval::from_int(100), p(128)).unwrap();
        let mid = qq.mid().to_f64();
        let half = qq.width().to_f64() / 2.0;
        assert!((mid - 0.021875).abs() < 1e-15);
        assert!((half - 3465.0 / (8192.0 * 1e6)).abs() < 1e-15);
        assert!((half - 4.23e-7).abs() < 1e-9);
    }

    #[test]
    fn order_zero_width_at_hundred() {
        let prec = p(128);
        let r = Interval::from_int(100);
        let enc = bessel_enclosure(BesselOrder::Zero, &r, prec).unwrap();
        // width = 2·(9/(2⁹r²))·(|cos|+|sin|)/√(πr) <= 2√2·(9/(2⁹r²))/√(πr)
        let a = 9.0 / (512.0 * 1e4);
        let bound = 2.0 * std::f64::consts::SQRT_2 * a / (std::f64::consts::PI * 100.0).sqrt();
        let width = enc.j.width().to_f64();
        assert!(width <= bound * (1.0 + 1e-12), "{width} > {bound}");
        assert!(width <= 4e-7);
    }

    #[test]
    fn enclosure_contains_known_value() {
        // J0(2) = 0.22389077914123566805…
        let enc = bessel_enclosure(BesselOrder::Zero, &Interval::one(), p(128)).unwrap();
        let v = BigRational::new(22389077914123567i64.into(), 100000000000000000i64.into());
        assert!(enc.j.contains_rational(&v));
    }
}
