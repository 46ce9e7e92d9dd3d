//! Outward-rounded interval arithmetic over arbitrary-precision dyadic
//! endpoints.
//!
//! Every operation preserves the inclusion property: if the inputs contain
//! the exact reals, the output contains the exact result. Endpoints are
//! rounded outward to the requested [`Precision`]; there is no
//! round-to-nearest mode anywhere in this module.

mod consts;
mod dyadic;
mod elementary;
mod precision;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use consts::{const_e, const_ln2, const_pi};
pub use dyadic::{DyadicFloat, Round};
pub use elementary::{exp_enclosure, sincos_enclosure, sqrt_enclosure};
pub use precision::{AdaptivePrecision, Precision};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("division by an interval containing zero")]
    DivisionByZero,
    #[error("square root of an interval with negative lower endpoint")]
    NegativeSqrt,
    #[error("precision must be at least {min} bits, got {0}", min = Precision::MIN_BITS)]
    PrecisionTooSmall(u32),
    #[error("precision start {start} exceeds cap {cap}")]
    PrecisionRange { start: u32, cap: u32 },
    #[error("interval endpoints out of order")]
    Inverted,
    #[error("non-finite floating-point input")]
    NonFinite,
    #[error("argument too large for exponential enclosure")]
    ExpOverflow,
}

/// Outcome of a strict comparison between two enclosures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrictOrder {
    Less,
    Greater,
    Unknown,
}

/// `Less` iff `hi(a) < lo(b)`, `Greater` iff `lo(a) > hi(b)`.
pub fn compare_strict(a: &Interval, b: &Interval) -> StrictOrder {
    if a.hi < b.lo {
        StrictOrder::Less
    } else if a.lo > b.hi {
        StrictOrder::Greater
    } else {
        StrictOrder::Unknown
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Abs,
}

/// Dispatches a binary or unary operation; unary ops ignore `b`.
pub fn arith(op: ArithOp, a: &Interval, b: &Interval, prec: Precision) -> Result<Interval, IntervalError> {
    Ok(match op {
        ArithOp::Add => a.add(b, prec),
        ArithOp::Sub => a.sub(b, prec),
        ArithOp::Mul => a.mul(b, prec),
        ArithOp::Div => a.div(b, prec)?,
        ArithOp::Neg => a.neg(),
        ArithOp::Abs => a.abs(),
    })
}

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    lo: DyadicFloat,
    hi: DyadicFloat,
}

impl Interval {
    pub fn new(lo: DyadicFloat, hi: DyadicFloat) -> Result<Self, IntervalError> {
        if lo > hi {
            return Err(IntervalError::Inverted);
        }
        Ok(Self { lo, hi })
    }

    fn from_sorted(lo: DyadicFloat, hi: DyadicFloat) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn point(x: DyadicFloat) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Self {
        Self::point(DyadicFloat::zero())
    }

    pub fn one() -> Self {
        Self::point(DyadicFloat::one())
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Self::point(DyadicFloat::from_int(v))
    }

    pub fn from_f64(x: f64) -> Result<Self, IntervalError> {
        DyadicFloat::from_f64(x)
            .map(Self::point)
            .ok_or(IntervalError::NonFinite)
    }

    /// Tight enclosure of an exact rational.
    pub fn from_rational(r: &BigRational, prec: Precision) -> Self {
        Self::from_sorted(
            DyadicFloat::from_rational(r, prec.bits(), Round::Down),
            DyadicFloat::from_rational(r, prec.bits(), Round::Up),
        )
    }

    /// Enclosure of `num/den` for integers, `den != 0`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: Precision) -> Self {
        let n = DyadicFloat::from_int(num.clone());
        let d = DyadicFloat::from_int(den.clone());
        let (lo, hi) = if d.is_negative() {
            let (n, d) = (n.neg(), d.neg());
            (n.div(&d, prec.bits(), Round::Down), n.div(&d, prec.bits(), Round::Up))
        } else {
            (n.div(&d, prec.bits(), Round::Down), n.div(&d, prec.bits(), Round::Up))
        };
        Self::from_sorted(lo, hi)
    }

    /// `[−r, r]` for `r >= 0`.
    pub fn symmetric(radius: DyadicFloat) -> Self {
        let r = radius.abs();
        Self::from_sorted(r.neg(), r)
    }

    pub fn lo(&self) -> &DyadicFloat {
        &self.lo
    }

    pub fn hi(&self) -> &DyadicFloat {
        &self.hi
    }

    pub fn width(&self) -> DyadicFloat {
        self.hi.sub(&self.lo)
    }

    pub fn mid(&self) -> DyadicFloat {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    /// `max |x|` over the interval.
    pub fn mag(&self) -> DyadicFloat {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    pub fn contains_point(&self, x: &DyadicFloat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        &self.lo.to_rational() <= r && r <= &self.hi.to_rational()
    }

    /// Whether `x` lies in the interval, treating `x` as exact.
    pub fn contains_f64(&self, x: f64) -> bool {
        DyadicFloat::from_f64(x).is_some_and(|d| self.contains_point(&d))
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Self::from_sorted(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
        )
    }

    pub fn round_out(&self, prec: Precision) -> Interval {
        Self::from_sorted(
            self.lo.round(prec.bits(), Round::Down),
            self.hi.round(prec.bits(), Round::Up),
        )
    }

    pub fn neg(&self) -> Interval {
        Self::from_sorted(self.hi.neg(), self.lo.neg())
    }

    pub fn abs(&self) -> Interval {
        if self.lo.signum() >= 0 {
            self.clone()
        } else if self.hi.signum() <= 0 {
            self.neg()
        } else {
            Self::from_sorted(DyadicFloat::zero(), self.mag())
        }
    }

    pub fn add(&self, other: &Interval, prec: Precision) -> Interval {
        Self::from_sorted(
            self.lo.add(&other.lo).round(prec.bits(), Round::Down),
            self.hi.add(&other.hi).round(prec.bits(), Round::Up),
        )
    }

    pub fn sub(&self, other: &Interval, prec: Precision) -> Interval {
        Self::from_sorted(
            self.lo.sub(&other.hi).round(prec.bits(), Round::Down),
            self.hi.sub(&other.lo).round(prec.bits(), Round::Up),
        )
    }

    pub fn mul(&self, other: &Interval, prec: Precision) -> Interval {
        let products = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let lo = products.iter().min().expect("nonempty").clone();
        let hi = products.iter().max().expect("nonempty").clone();
        Self::from_sorted(lo.round(prec.bits(), Round::Down), hi.round(prec.bits(), Round::Up))
    }

    /// `x²`, which is never negative even when the interval straddles zero.
    pub fn sqr(&self, prec: Precision) -> Interval {
        if self.contains_zero() {
            let m = self.mag();
            Self::from_sorted(DyadicFloat::zero(), m.mul(&m).round(prec.bits(), Round::Up))
        } else {
            let a = self.lo.mul(&self.lo);
            let b = self.hi.mul(&self.hi);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            Self::from_sorted(lo.round(prec.bits(), Round::Down), hi.round(prec.bits(), Round::Up))
        }
    }

    pub fn div(&self, other: &Interval, prec: Precision) -> Result<Interval, IntervalError> {
        if other.contains_zero() {
            return Err(IntervalError::DivisionByZero);
        }
        let p = prec.bits();
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| a.div(b, p, Round::Down))
            .min()
            .expect("nonempty");
        let hi = pairs
            .iter()
            .map(|(a, b)| a.div(b, p, Round::Up))
            .max()
            .expect("nonempty");
        Ok(Self::from_sorted(lo, hi))
    }

    pub fn recip(&self, prec: Precision) -> Result<Interval, IntervalError> {
        Interval::one().div(self, prec)
    }

    pub fn mul_int(&self, k: i64, prec: Precision) -> Interval {
        self.mul(&Interval::from_int(k), prec)
    }

    pub fn div_int(&self, k: i64, prec: Precision) -> Interval {
        self.div(&Interval::from_int(k), prec)
            .expect("nonzero integer divisor")
    }

    pub fn mul_pow2(&self, k: i64) -> Interval {
        Self::from_sorted(self.lo.mul_pow2(k), self.hi.mul_pow2(k))
    }

    /// Intersection with `[lo, hi]`; returns `self` unchanged if disjoint.
    pub fn clip(&self, lo: &DyadicFloat, hi: &DyadicFloat) -> Interval {
        let new_lo = self.lo.clone().max(lo.clone());
        let new_hi = self.hi.clone().min(hi.clone());
        if new_lo <= new_hi {
            Self::from_sorted(new_lo, new_hi)
        } else {
            self.clone()
        }
    }

    /// Outward-rounded `f64` endpoints.
    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (
            self.lo.to_f64_directed(Round::Down),
            self.hi.to_f64_directed(Round::Up),
        )
    }

    /// Outward-rounded decimal endpoints with `digits` significant digits.
    pub fn to_decimal_bounds(&self, digits: u32) -> (String, String) {
        (
            self.lo.to_decimal(digits, Round::Down),
            self.hi.to_decimal(digits, Round::Up),
        )
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal_bounds(20);
        write!(f, "[{lo}, {hi}]")
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal_bounds(17);
        write!(f, "[{lo}, {hi}]")
    }
}
