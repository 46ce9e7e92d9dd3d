//! Exact integer and rational evaluation of the Padé denominators
//! `Q_n(t) = Σ k!·C(n,k)²·(−t)^k` and the Laguerre polynomials
//! `L_n(t) = Σ C(n,k)·(−t)^k / k!`.
//!
//! Everything here is exact. Rationals are [`num_rational::BigRational`],
//! which keeps `gcd(num, den) = 1` and `den > 0` after every operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact reduced fraction.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("binomial({n}, {k}) requires k <= n")]
    BinomialOutOfRange { n: u64, k: u64 },
    #[error("index must be nonnegative, got {0}")]
    NegativeIndex(i64),
}

/// Validates a signed index coming from an untyped boundary (CLI, FFI).
pub fn index_from_i64(n: i64) -> Result<u64, ExactError> {
    u64::try_from(n).map_err(|_| ExactError::NegativeIndex(n))
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> Result<BigInt, ExactError> {
    if k > n {
        return Err(ExactError::BinomialOutOfRange { n, k });
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 0..k {
        // C(n, i+1) = C(n, i)·(n−i)/(i+1), always an exact division
        c *= n - i;
        c /= i + 1;
    }
    Ok(c)
}

/// `Q_n(t)` by direct summation.
///
/// With `t = p/q` every term is scaled by `q^n` so the whole sum stays in
/// integers. Consecutive scaled terms satisfy
/// `U_{k+1} = U_k·(n−k)²·(−p) / ((k+1)·q)`, an exact division.
pub fn q_direct(n: u64, t: &Rational) -> Rational {
    let p = t.numer();
    let q = t.denom();
    let mut term = num_traits::pow(q.clone(), n as usize);
    let scale = term.clone();
    let mut sum = term.clone();
    for k in 0..n {
        if term.is_zero() {
            break;
        }
        let m = BigInt::from(n - k);
        term = term * &m * &m * (-p);
        term = term.div_exact(&(q * (k + 1)));
        sum += &term;
    }
    Rational::new(sum, scale)
}

/// `Q_n(1)` by direct summation, staying in integers throughout.
pub fn q_direct_at_one(n: u64) -> BigInt {
    q_direct(n, &Rational::one()).to_integer()
}

trait DivExact {
    fn div_exact(self, d: &BigInt) -> BigInt;
}

impl DivExact for BigInt {
    fn div_exact(self, d: &BigInt) -> BigInt {
        let (quot, rem) = self.div_rem(d);
        debug_assert!(rem.is_zero(), "inexact division in term recurrence");
        quot
    }
}

/// Pull-based stream of `(n, Q_n(1))` for `n = 0..=n_max` driven by
/// `Q_{n+2}(1) = −2(n+1)·Q_{n+1}(1) − (n+1)²·Q_n(1)`.
///
/// Only the current and the next value are held at any time.
#[derive(Debug, Clone)]
pub struct QStream {
    n: u64,
    n_max: u64,
    q_n: BigInt,
    q_next: BigInt,
    multiplications: u64,
    done: bool,
}

impl QStream {
    pub fn new(n_max: u64) -> Self {
        Self {
            n: 0,
            n_max,
            q_n: BigInt::one(),
            q_next: BigInt::zero(),
            multiplications: 0,
            done: false,
        }
    }

    /// Number of big-integer multiplications performed so far.
    pub fn multiplications(&self) -> u64 {
        self.multiplications
    }

    /// Count of big-integer values currently retained by the stream.
    pub fn retained_states(&self) -> usize {
        2
    }

    fn advance(&mut self) {
        // Q_{n+2} from Q_{n+1} (= q_next) and Q_n (= q_n), with m = n+1
        let m = u128::from(self.n) + 1;
        let new = -(&self.q_next * (2 * m)) - &self.q_n * (m * m);
        self.multiplications += 2;
        self.q_n = std::mem::replace(&mut self.q_next, new);
        self.n += 1;
    }
}

impl Iterator for QStream {
    type Item = (u64, BigInt);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = (self.n, self.q_n.clone());
        if self.n == self.n_max {
            self.done = true;
        } else {
            self.advance();
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = if self.done {
            0
        } else {
            (self.n_max - self.n + 1) as usize
        };
        (left, Some(left))
    }
}

pub fn q_at_one_stream(n_max: u64) -> QStream {
    QStream::new(n_max)
}

/// Stream of `(n, Q_n(t))` for rational `t = p/q` driven by
/// `Q_{n+2}(t) = (1 − (2n+3)t)·Q_{n+1}(t) − (n+1)²t²·Q_n(t)`.
///
/// Internally tracks `N_n = q^n·Q_n(t)`, which satisfies the integer recurrence
/// `N_{n+2} = (q − (2n+3)p)·N_{n+1} − (n+1)²p²·N_n`.
#[derive(Debug, Clone)]
pub struct QPolyStream {
    n: u64,
    n_max: u64,
    p: BigInt,
    q: BigInt,
    scale: BigInt,
    scaled_n: BigInt,
    scaled_next: BigInt,
    done: bool,
}

impl QPolyStream {
    pub fn new(n_max: u64, t: &Rational) -> Self {
        let p = t.numer().clone();
        let q = t.denom().clone();
        Self {
            n: 0,
            n_max,
            scaled_next: &q - &p,
            p,
            q,
            scale: BigInt::one(),
            scaled_n: BigInt::one(),
            done: false,
        }
    }
}

impl Iterator for QPolyStream {
    type Item = (u64, Rational);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = (
            self.n,
            Rational::new(self.scaled_n.clone(), self.scale.clone()),
        );
        if self.n == self.n_max {
            self.done = true;
            return Some(out);
        }
        let m = BigInt::from(self.n) + 1u32;
        let lead = &self.q - (&m * 2u32 + 1u32) * &self.p;
        let new = lead * &self.scaled_next - &m * &m * &self.p * &self.p * &self.scaled_n;
        self.scaled_n = std::mem::replace(&mut self.scaled_next, new);
        self.scale *= &self.q;
        self.n += 1;
        Some(out)
    }
}

pub fn q_poly_stream(n_max: u64, t: &Rational) -> QPolyStream {
    QPolyStream::new(n_max, t)
}

/// `L_n(t) = Σ_k C(n,k)·(−t)^k / k!` summed over the common denominator
/// `n!·q^n`, where the scaled terms obey
/// `T_{k+1} = T_k·(n−k)·(−p) / ((k+1)²·q)`.
pub fn laguerre_direct(n: u64, t: &Rational) -> Rational {
    let p = t.numer();
    let q = t.denom();
    let scale = num_traits::pow(q.clone(), n as usize) * factorial(n);
    let mut term = scale.clone();
    let mut sum = term.clone();
    for k in 0..n {
        if term.is_zero() {
            break;
        }
        let kk = BigInt::from(k + 1);
        term = term * (n - k) * (-p);
        term = term.div_exact(&(&kk * &kk * q));
        sum += &term;
    }
    Rational::new(sum, scale)
}

/// `L_n(1) = (−1)^n·Q_n(1)/n!`, with `Q_n(1)` taken from the recurrence.
pub fn laguerre_at_one(n: u64) -> Rational {
    let (_, q) = q_at_one_stream(n)
        .last()
        .expect("stream yields at least Q_0");
    let signed = if n % 2 == 0 { q } else { -q };
    Rational::new(signed, factorial(n))
}

/// `|Q_n(1)| <= n!` decided exactly.
pub fn within_factorial(q: &BigInt, fact: &BigInt) -> bool {
    q.abs() <= *fact
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    // term-by-term sum with independently computed factorials/binomials
    fn q_naive(n: u64, t: &Rational) -> Rational {
        let mut pascal = vec![BigInt::one()];
        for _ in 0..n {
            let mut row = vec![BigInt::one(); pascal.len() + 1];
            for i in 1..pascal.len() {
                row[i] = &pascal[i - 1] + &pascal[i];
            }
            pascal = row;
        }
        let mut sum = Rational::zero();
        let mut fact = BigInt::one();
        let mut pow = Rational::one();
        for k in 0..=n {
            if k > 0 {
                fact *= k;
                pow *= -t;
            }
            let c = &pascal[k as usize];
            sum += Rational::from_integer(&fact * c * c) * &pow;
        }
        sum
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(1), BigInt::one());
        let oracle: u64 = (1..=6).product();
        assert_eq!(factorial(6), BigInt::from(oracle));
        assert_eq!(factorial(6), BigInt::from(720));
    }

    #[test]
    fn binomial_values_and_range() {
        assert_eq!(binomial(2, 1).unwrap(), BigInt::from(2));
        assert_eq!(binomial(4, 2).unwrap(), BigInt::from(6));
        for n in 0..40 {
            assert_eq!(binomial(n, 0).unwrap(), BigInt::one());
        }
        assert_eq!(
            binomial(3, 4),
            Err(ExactError::BinomialOutOfRange { n: 3, k: 4 })
        );
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![BigInt::one()];
        for n in 1..=60u64 {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k).unwrap(), row[k as usize], "C({n},{k})");
            }
        }
    }

    #[test]
    fn q_direct_small_values() {
        let one = Rational::one();
        assert_eq!(q_direct(0, &rat(7, 3)), one);
        assert_eq!(q_direct(1, &one), Rational::zero());
        assert_eq!(q_direct(2, &one), rat(-1, 1));
        assert_eq!(q_direct(3, &one), rat(4, 1));
        assert_eq!(q_direct(4, &one), rat(-15, 1));
    }

    #[test]
    fn q_direct_matches_naive_sum() {
        for t in [rat(1, 1), rat(1, 2), rat(-3, 7), rat(2, 1), rat(0, 1)] {
            for n in 0..30 {
                assert_eq!(q_direct(n, &t), q_naive(n, &t), "n={n}, t={t}");
            }
        }
    }

    #[test]
    fn integer_t_gives_integer() {
        for n in 0..20 {
            assert!(q_direct(n, &rat(-2, 1)).is_integer());
        }
    }

    #[test]
    fn stream_initial_values() {
        let v: Vec<_> = q_at_one_stream(1).collect();
        assert_eq!(v, vec![(0, BigInt::one()), (1, BigInt::zero())]);
        let v: Vec<_> = q_at_one_stream(3).map(|(_, q)| q).collect();
        assert_eq!(v, [1, 0, -1, 4].map(BigInt::from));
        assert_eq!(q_at_one_stream(0).count(), 1);
    }

    #[test]
    fn stream_counts_two_multiplications_per_step() {
        let mut s = q_at_one_stream(50);
        for _ in s.by_ref() {}
        assert_eq!(s.multiplications(), 2 * 50);
        assert_eq!(s.retained_states(), 2);
    }

    #[test]
    fn stream_matches_direct_sum() {
        for (n, q) in q_at_one_stream(200) {
            assert_eq!(q, q_direct_at_one(n), "n={n}");
        }
    }

    #[test]
    fn poly_stream_at_zero_is_one() {
        for (_, v) in q_poly_stream(30, &Rational::zero()) {
            assert_eq!(v, Rational::one());
        }
    }

    #[test]
    fn poly_stream_at_half_matches_direct() {
        let t = rat(1, 2);
        for (n, v) in q_poly_stream(100, &t) {
            assert_eq!(v, q_direct(n, &t));
        }
    }

    #[test]
    fn poly_stream_at_one_matches_integer_stream() {
        for ((n, a), (_, b)) in q_poly_stream(200, &Rational::one()).zip(q_at_one_stream(200)) {
            assert_eq!(a, Rational::from_integer(b), "n={n}");
        }
    }

    #[test]
    fn laguerre_small_values() {
        assert_eq!(laguerre_direct(0, &rat(5, 2)), Rational::one());
        assert_eq!(laguerre_direct(1, &Rational::one()), Rational::zero());
        assert_eq!(laguerre_direct(2, &Rational::one()), rat(-1, 2));
        assert_eq!(laguerre_at_one(0), Rational::one());
        assert_eq!(laguerre_at_one(2), rat(-1, 2));
    }

    #[test]
    fn laguerre_matches_textbook_sum() {
        for t in [rat(1, 1), rat(3, 5), rat(-2, 1)] {
            for n in 0..25u64 {
                let mut sum = Rational::zero();
                for k in 0..=n {
                    let c = Rational::from_integer(binomial(n, k).unwrap());
                    let pw = num_traits::pow(-t.clone(), k as usize);
                    sum += c * pw / Rational::from_integer(factorial(k));
                }
                assert_eq!(laguerre_direct(n, &t), sum);
            }
        }
    }

    #[test]
    fn negative_index_rejected() {
        assert_eq!(index_from_i64(-1), Err(ExactError::NegativeIndex(-1)));
        assert_eq!(index_from_i64(12), Ok(12));
    }
}
