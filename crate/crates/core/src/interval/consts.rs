//! π, e and ln 2 from fixed-point series.
//!
//! Each series is summed in integers scaled by `2^W`. Terms are produced by
//! repeated floor division, and `floor(floor(x)/m) = floor(x/m)` for positive
//! integers `m`, so every stored term is the exact floor of the true scaled
//! term. The accumulated error is then at most one unit per term plus the
//! tail bound, which gives the enclosure radius directly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{DyadicFloat, Interval, Precision};

const GUARD_BITS: u32 = 40;

fn fixed_point_enclosure(sum: BigInt, err_units: u64, scale_bits: u32, prec: Precision) -> Interval {
    let lo = DyadicFloat::new(&sum - err_units, -i64::from(scale_bits));
    let hi = DyadicFloat::new(&sum + err_units, -i64::from(scale_bits));
    Interval::new(lo, hi).expect("ordered").round_out(prec)
}

/// `atan(1/k)·2^w` truncated, and the number of terms used.
fn atan_inv_fixed(k: u64, w: u32) -> (BigInt, u64) {
    let k2 = BigInt::from(k) * k;
    let mut power = (BigInt::one() << w as usize) / k;
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !power.is_zero() {
        let term = &power / (2 * j + 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        j += 1;
    }
    (sum, j)
}

/// Enclosure of π via Machin's formula `π = 16·atan(1/5) − 4·atan(1/239)`.
pub fn const_pi(prec: Precision) -> Interval {
    let w = prec.bits() + GUARD_BITS;
    let (a5, n5) = atan_inv_fixed(5, w);
    let (a239, n239) = atan_inv_fixed(239, w);
    // each atan sum is off by < 1 unit per term plus < 1 unit of tail
    let err = 16 * (n5 + 1) + 4 * (n239 + 1);
    fixed_point_enclosure(a5 * 16u32 - a239 * 4u32, err, w, prec)
}

/// Enclosure of e from `Σ 1/k!`.
pub fn const_e(prec: Precision) -> Interval {
    let w = prec.bits() + GUARD_BITS;
    let mut term = BigInt::one() << w as usize;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !term.is_zero() {
        sum += &term;
        k += 1;
        term /= k;
    }
    // tail Σ_{j>=k} 1/j! < 2/k! < 2 units once floor(2^w/k!) = 0
    fixed_point_enclosure(sum, k + 2, w, prec)
}

/// Enclosure of ln 2 from `2·atanh(1/3) = 2·Σ 1/((2j+1)·3^(2j+1))`.
pub fn const_ln2(prec: Precision) -> Interval {
    let w = prec.bits() + GUARD_BITS;
    let mut power = (BigInt::one() << w as usize) / 3u32;
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !power.is_zero() {
        sum += &power / (2 * j + 1);
        power /= 9u32;
        j += 1;
    }
    // positive terms with ratio <= 1/9: tail < 9/8 unit
    fixed_point_enclosure(sum * 2u32, 2 * (j + 2), w, prec)
}
