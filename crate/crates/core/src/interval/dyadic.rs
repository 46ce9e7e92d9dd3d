use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rounding direction for a single endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    /// Toward −∞.
    Down,
    /// Toward +∞.
    Up,
}

impl Round {
    pub fn flip(self) -> Self {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        }
    }
}

/// `mantissa · 2^exponent` with an odd mantissa (or zero with exponent 0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicFloat {
    mantissa: BigInt,
    exponent: i64,
}

impl DyadicFloat {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        if mantissa.is_zero() {
            return Self::zero();
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        Self {
            mantissa: mantissa >> tz,
            exponent: exponent + tz as i64,
        }
    }

    pub fn zero() -> Self {
        Self {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Self::new(v.into(), 0)
    }

    /// Exact conversion; `None` for NaN or infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Self::zero());
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Some(Self::new(BigInt::from(m) * sign, e))
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Bit length of the mantissa magnitude.
    pub fn bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// `floor(log2 |x|) + 1`, i.e. the position just above the leading bit.
    /// Zero maps to `i64::MIN`.
    pub fn magnitude_exponent(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exponent + self.bits() as i64
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            mantissa: self.mantissa.clone(),
            exponent: self.exponent + k,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &other.mantissa << (other.exponent - e) as usize;
        Self::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::new(&self.mantissa * &other.mantissa, self.exponent + other.exponent)
    }

    /// Rounds to at most `prec` mantissa bits in direction `dir`.
    pub fn round(&self, prec: u32, dir: Round) -> Self {
        let bits = self.bits();
        if bits <= u64::from(prec) {
            return self.clone();
        }
        let s = bits - u64::from(prec);
        let negative = self.is_negative();
        let mag = self.mantissa.magnitude();
        let inexact = mag.trailing_zeros().unwrap_or(0) < s;
        let mut q: BigUint = mag >> s as usize;
        // away from zero for Up on positives and Down on negatives
        let away = matches!((dir, negative), (Round::Up, false) | (Round::Down, true));
        if inexact && away {
            q += 1u32;
        }
        let m = BigInt::from_biguint(if negative { Sign::Minus } else { Sign::Plus }, q);
        Self::new(m, self.exponent + s as i64)
    }

    /// `self / other` rounded to `prec` bits in direction `dir`.
    ///
    /// Panics if `other` is zero.
    pub fn div(&self, other: &Self, prec: u32, dir: Round) -> Self {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Self::zero();
        }
        let want = i64::from(prec) + 2;
        let shift = (want + other.bits() as i64 - self.bits() as i64).max(0);
        let num = &self.mantissa << shift as usize;
        let q = match dir {
            Round::Down => num.div_floor(&other.mantissa),
            Round::Up => -((-num).div_floor(&other.mantissa)),
        };
        Self::new(q, self.exponent - shift - other.exponent).round(prec, dir)
    }

    /// Square root rounded to `prec` bits. Panics on negative input.
    pub fn sqrt(&self, prec: u32, dir: Round) -> Self {
        assert!(!self.is_negative(), "dyadic sqrt of negative value");
        if self.is_zero() {
            return Self::zero();
        }
        let want = 2 * i64::from(prec) + 4;
        let mut shift = (want - self.bits() as i64).max(0);
        if (self.exponent - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = &self.mantissa << shift as usize;
        let mut root = m.sqrt();
        if dir == Round::Up && &root * &root != m {
            root += 1;
        }
        Self::new(root, (self.exponent - shift) / 2).round(prec, dir)
    }

    /// Nearest integer (ties away from zero).
    pub fn round_to_integer(&self) -> BigInt {
        if self.exponent >= 0 {
            return &self.mantissa << self.exponent as usize;
        }
        let s = (-self.exponent) as usize;
        let half = BigInt::one() << (s - 1);
        let mag = self.mantissa.abs();
        let r = (mag + half) >> s;
        if self.is_negative() {
            -r
        } else {
            r
        }
    }

    pub fn floor(&self) -> BigInt {
        if self.exponent >= 0 {
            &self.mantissa << self.exponent as usize
        } else {
            self.mantissa
                .div_floor(&(BigInt::one() << (-self.exponent) as usize))
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa << self.exponent as usize)
        } else {
            BigRational::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as usize,
            )
        }
    }

    /// Rational `num/den` rounded to `prec` bits in direction `dir`.
    pub fn from_rational(r: &BigRational, prec: u32, dir: Round) -> Self {
        Self::from_int(r.numer().clone()).div(&Self::from_int(r.denom().clone()), prec, dir)
    }

    /// Nearest-ish `f64`; saturates to ±∞ outside the `f64` range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits() as i64;
        let keep = bits.min(64);
        let top = (&self.mantissa.abs() >> (bits - keep) as usize)
            .to_u64()
            .expect("fits in 64 bits") as f64;
        let e = self.exponent + (bits - keep);
        let v = if e > 2000 {
            f64::INFINITY
        } else if e < -2200 {
            0.0
        } else {
            top * 2f64.powi(e as i32 / 2) * 2f64.powi(e as i32 - e as i32 / 2)
        };
        if self.is_negative() {
            -v
        } else {
            v
        }
    }

    /// An `f64` that bounds `self` from the side given by `dir`.
    pub fn to_f64_directed(&self, dir: Round) -> f64 {
        let mut v = self.to_f64();
        if v.is_infinite() {
            return match (dir, v > 0.0) {
                (Round::Down, true) => f64::MAX,
                (Round::Up, false) => f64::MIN,
                _ => v,
            };
        }
        for _ in 0..4 {
            let exact = DyadicFloat::from_f64(v).expect("finite");
            match (dir, exact.cmp(self)) {
                (Round::Down, Ordering::Greater) => v = v.next_down(),
                (Round::Up, Ordering::Less) => v = v.next_up(),
                _ => return v,
            }
        }
        v
    }

    /// Scientific decimal string with `digits` significant digits, rounded in
    /// direction `dir` so that the printed number bounds `self` on that side.
    pub fn to_decimal(&self, digits: u32, dir: Round) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let exact = self.to_rational();
        let ten = BigInt::from(10);
        // decimal exponent estimate from the binary one
        let est = ((self.magnitude_exponent() - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let mut e10 = est - i64::from(digits) + 1;
        loop {
            let scaled = if e10 >= 0 {
                &exact / BigRational::from_integer(num_traits::pow(ten.clone(), e10 as usize))
            } else {
                &exact * BigRational::from_integer(num_traits::pow(ten.clone(), (-e10) as usize))
            };
            let d = match dir {
                Round::Down => scaled.floor().to_integer(),
                Round::Up => scaled.ceil().to_integer(),
            };
            let len = d.abs().to_string().len() as i64;
            if len > i64::from(digits) {
                e10 += 1;
                continue;
            }
            if len < i64::from(digits) || d.is_zero() {
                e10 -= 1;
                continue;
            }
            let s = d.abs().to_string();
            let sign = if d.is_negative() { "-" } else { "" };
            let exp = e10 + s.len() as i64 - 1;
            let (head, tail) = s.split_at(1);
            let tail = tail.trim_end_matches('0');
            return if tail.is_empty() {
                format!("{sign}{head}e{exp}")
            } else {
                format!("{sign}{head}.{tail}e{exp}")
            };
        }
    }
}

impl Ord for DyadicFloat {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // same sign: compare magnitudes by leading-bit position first
        let (ma, mb) = (self.magnitude_exponent(), other.magnitude_exponent());
        if ma != mb {
            let ord = ma.cmp(&mb);
            return if sa > 0 { ord } else { ord.reverse() };
        }
        self.sub(other).signum().cmp(&0)
    }
}

impl PartialOrd for DyadicFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for DyadicFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·2^{}", self.mantissa, self.exponent)
    }
}

impl fmt::Display for DyadicFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}
