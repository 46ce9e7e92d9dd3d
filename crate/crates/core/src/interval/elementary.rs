//! sqrt, exp, sin and cos enclosures.
//!
//! exp and sin/cos use range reduction followed by a Taylor polynomial whose
//! Lagrange remainder is added as a symmetric interval.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{const_ln2, const_pi, DyadicFloat, Interval, IntervalError, Precision, Round};

const GUARD_BITS: u32 = 24;

pub fn sqrt_enclosure(x: &Interval, prec: Precision) -> Result<Interval, IntervalError> {
    if x.lo().is_negative() {
        return Err(IntervalError::NegativeSqrt);
    }
    Interval::new(
        x.lo().sqrt(prec.bits(), Round::Down),
        x.hi().sqrt(prec.bits(), Round::Up),
    )
}

/// Sums `Σ term_j` where `term_{j+1} = term_j·step/divisor(j)` until the
/// magnitude bound (tracked on `|step|`) drops below `2^-w`, then adds the
/// Lagrange remainder `scale·bound`.
fn taylor_sum(
    first: Interval,
    step: &Interval,
    step_bound: &Interval,
    first_bound: Interval,
    divisor: impl Fn(u64) -> i64,
    remainder_scale: i64,
    w: Precision,
) -> Interval {
    let threshold = DyadicFloat::one().mul_pow2(-i64::from(w.bits()) - 2);
    let mut term = first;
    let mut bound = first_bound;
    let mut sum = Interval::zero();
    let mut j = 0u64;
    loop {
        sum = sum.add(&term, w);
        let d = divisor(j);
        term = term.mul(step, w).div_int(d, w);
        bound = bound.mul(step_bound, w).div_int(d, w);
        j += 1;
        // stop once the next omitted term is negligible and shrinking
        if bound.hi() < &threshold && j > 2 {
            break;
        }
    }
    let rem = bound.hi().mul(&DyadicFloat::from_int(remainder_scale));
    sum.add(&Interval::symmetric(rem), w)
}

fn exp_point(x: &DyadicFloat, prec: Precision) -> Result<Interval, IntervalError> {
    if x.is_zero() {
        return Ok(Interval::one());
    }
    if x.magnitude_exponent() > 52 {
        return Err(IntervalError::ExpOverflow);
    }
    let xf = x.to_f64();
    let k = (xf / std::f64::consts::LN_2).round() as i64;
    let k_bits = 64 - k.unsigned_abs().leading_zeros();
    let w = prec.plus(GUARD_BITS + k_bits);
    let ln2 = const_ln2(w.plus(k_bits));
    let y = Interval::point(x.clone()).sub(&ln2.mul_int(k, w.plus(k_bits)), w);
    let ymax = y.mag();
    // e^|y| <= 3^ceil(|y|)
    let ceil = ymax.floor().to_i64().unwrap_or(i64::MAX - 1) + 1;
    let scale = 3i64.pow(ceil.clamp(1, 30) as u32);
    let s = taylor_sum(
        Interval::one(),
        &y,
        &Interval::point(ymax.clone()),
        Interval::one(),
        |j| (j + 1) as i64,
        scale,
        w,
    );
    Ok(s.mul_pow2(k).round_out(prec))
}

/// `exp` is increasing, so the enclosure is `[exp(lo)↓, exp(hi)↑]`.
pub fn exp_enclosure(x: &Interval, prec: Precision) -> Result<Interval, IntervalError> {
    let lo = exp_point(x.lo(), prec)?;
    if x.is_point() {
        return Ok(lo);
    }
    let hi = exp_point(x.hi(), prec)?;
    Interval::new(lo.lo().clone(), hi.hi().clone())
}

fn sin_cos_small(y: &Interval, w: Precision) -> (Interval, Interval) {
    let ymax = Interval::point(y.mag());
    let y2 = y.sqr(w);
    let ymax2 = ymax.sqr(w);
    let neg_y2 = y2.neg();
    // sin: y − y³/3! + …, term_{j+1} = −term_j·y²/((2j+2)(2j+3))
    let sin = taylor_sum(
        y.clone(),
        &neg_y2,
        &ymax2,
        ymax.clone(),
        |j| ((2 * j + 2) * (2 * j + 3)) as i64,
        1,
        w,
    );
    // cos: 1 − y²/2! + …, term_{j+1} = −term_j·y²/((2j+1)(2j+2))
    let cos = taylor_sum(
        Interval::one(),
        &neg_y2,
        &ymax2,
        Interval::one(),
        |j| ((2 * j + 1) * (2 * j + 2)) as i64,
        1,
        w,
    );
    (sin, cos)
}

/// Enclosures of `(sin x, cos x)`.
///
/// The argument is reduced by the nearest multiple of π/2, with π carried at
/// `prec + max(0, exponent of x) + 16` bits.
pub fn sincos_enclosure(x: &Interval, prec: Precision) -> (Interval, Interval) {
    let unit = Interval::new(DyadicFloat::from_int(-1), DyadicFloat::one()).expect("ordered");
    if x.width() > DyadicFloat::from_int(4) {
        return (unit.clone(), unit);
    }
    let x_exp = x.mag().magnitude_exponent().max(0) as u32;
    let w = prec.plus(x_exp + 16);
    let half_pi = const_pi(w.plus(x_exp)).mul_pow2(-1);
    let mid = x.mid();
    let q = if mid.is_zero() {
        BigInt::from(0)
    } else {
        mid.div(&half_pi.mid(), x_exp + 16, Round::Down).round_to_integer()
    };
    let reduction = half_pi.mul(&Interval::point(DyadicFloat::from_int(q.clone())), w.plus(x_exp));
    let y = x.sub(&reduction, w);
    let (s, c) = sin_cos_small(&y, w.plus(GUARD_BITS));
    let quadrant = q.mod_floor(&BigInt::from(4)).to_u8().expect("0..4");
    let (s, c) = match quadrant {
        0 => (s, c),
        1 => (c, s.neg()),
        2 => (s.neg(), c.neg()),
        _ => (c.neg(), s),
    };
    let one = DyadicFloat::one();
    let m_one = one.neg();
    (
        s.round_out(prec).clip(&m_one, &one),
        c.round_out(prec).clip(&m_one, &one),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::const_e;

    fn p(bits: u32) -> Precision {
        Precision::new(bits).unwrap()
    }

    fn pt(x: f64) -> Interval {
        Interval::from_f64(x).unwrap()
    }

    #[test]
    fn sqrt_of_four() {
        let r = sqrt_enclosure(&Interval::from_int(4), p(64)).unwrap();
        assert!(r.contains_point(&DyadicFloat::from_int(2)));
        assert!(r.width() <= DyadicFloat::one().mul_pow2(-62));
    }

    #[test]
    fn sqrt_of_two_squares_back() {
        let r = sqrt_enclosure(&Interval::from_int(2), p(128)).unwrap();
        let sq = r.sqr(p(256));
        assert!(sq.contains_point(&DyadicFloat::from_int(2)));
        let (lo, hi) = r.to_f64_bounds();
        assert!(lo <= 1.4142135623730951 && 1.4142135623730951 <= hi.next_up());
    }

    #[test]
    fn n_three_quarters_at_ten_thousand() {
        let n = Interval::from_int(10_000);
        let s = sqrt_enclosure(&n, p(128)).unwrap();
        let r = sqrt_enclosure(&n.mul(&s, p(128)), p(128)).unwrap();
        assert!(r.contains_point(&DyadicFloat::from_int(1000)));
    }

    #[test]
    fn sqrt_rejects_negative() {
        assert_eq!(sqrt_enclosure(&pt(-1.0), p(64)), Err(IntervalError::NegativeSqrt));
    }

    #[test]
    fn exp_zero_and_one() {
        assert_eq!(exp_enclosure(&Interval::zero(), p(64)).unwrap(), Interval::one());
        let e1 = exp_enclosure(&Interval::one(), p(128)).unwrap();
        assert!(e1.intersects(&const_e(p(128))));
        assert!(e1.width() < DyadicFloat::one().mul_pow2(-100));
    }

    #[test]
    fn exp_minus_two_is_reciprocal_of_exp_two() {
        let a = exp_enclosure(&pt(-2.0), p(128)).unwrap();
        let b = exp_enclosure(&pt(2.0), p(128)).unwrap().recip(p(128)).unwrap();
        assert!(a.intersects(&b));
        let (lo, hi) = a.to_f64_bounds();
        assert!(lo <= 0.1353352832366127 && 0.1353352832366127 <= hi + 1e-16);
    }

    #[test]
    fn exp_large_arguments() {
        let r = exp_enclosure(&pt(200.0), p(128)).unwrap();
        let (lo, hi) = r.to_f64_bounds();
        let f = 200f64.exp();
        assert!((lo - f).abs() / f < 1e-14 && (hi - f).abs() / f < 1e-14);
        let r = exp_enclosure(&pt(-745.0), p(64)).unwrap();
        assert!(r.lo().signum() > 0);
    }

    #[test]
    fn sincos_at_zero() {
        let (s, c) = sincos_enclosure(&Interval::zero(), p(64));
        assert!(s.contains_zero());
        assert!(c.contains_point(&DyadicFloat::one()));
    }

    #[test]
    fn sincos_at_half_pi() {
        let prec = p(128);
        let x = const_pi(prec).mul_pow2(-1);
        let (s, c) = sincos_enclosure(&x, prec);
        assert!(s.contains_point(&DyadicFloat::one()));
        assert!(c.contains_zero());
        let bound = DyadicFloat::one().mul_pow2(-122);
        assert!(s.width() <= bound && c.width() <= bound);
    }

    #[test]
    fn pythagorean_near_two_hundred() {
        let prec = p(128);
        let x = Interval::from_rational(&num_rational::BigRational::new(20001.into(), 100.into()), prec);
        let (s, c) = sincos_enclosure(&x, prec);
        let one = s.sqr(prec).add(&c.sqr(prec), prec);
        assert!(one.contains_point(&DyadicFloat::one()));
        let (lo, hi) = c.to_f64_bounds();
        let f = 200.01f64.cos();
        assert!(lo - 1e-12 <= f && f <= hi + 1e-12);
    }

    #[test]
    fn wide_argument_gives_unit_box() {
        let (s, c) = sincos_enclosure(&Interval::new(DyadicFloat::zero(), DyadicFloat::from_int(10)).unwrap(), p(64));
        assert_eq!(s.to_f64_bounds(), (-1.0, 1.0));
        assert_eq!(c.to_f64_bounds(), (-1.0, 1.0));
    }
}
