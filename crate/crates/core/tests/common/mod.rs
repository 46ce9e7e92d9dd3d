#![allow(dead_code)]

use laguerre_cert::interval::{
    exp_enclosure, sincos_enclosure, sqrt_enclosure, DyadicFloat, Interval, Precision,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PRECISIONS: [u32; 6] = [32, 53, 64, 100, 128, 200];

#[derive(Debug, Default)]
pub struct SoundnessTally {
    pub cases: usize,
    pub failures: Vec<String>,
}

fn random_interval(rng: &mut ChaCha8Rng, scale: f64, nonneg: bool) -> Interval {
    let mut a: f64 = rng.gen_range(-scale..scale);
    if nonneg {
        a = a.abs();
    }
    let w = if rng.gen_bool(0.3) { 0.0 } else { rng.gen_range(0.0..scale * 1e-3) };
    Interval::new(
        DyadicFloat::from_f64(a).unwrap(),
        DyadicFloat::from_f64(a + w).unwrap(),
    )
    .unwrap()
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-1_000_000_000..1_000_000_000);
    let den: i64 = rng.gen_range(1..1_000_000_007);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn evaluate(op: usize, a: &Interval, b: &Interval, r: &BigRational, p: Precision) -> Option<Interval> {
    Some(match op {
        0 => a.add(b, p),
        1 => a.sub(b, p),
        2 => a.mul(b, p),
        3 => a.div(b, p).ok()?,
        4 => sqrt_enclosure(&a.abs(), p).ok()?,
        5 => exp_enclosure(a, p).ok()?,
        6 => sincos_enclosure(a, p).0,
        7 => sincos_enclosure(a, p).1,
        8 => Interval::from_rational(r, p),
        _ => a.sqr(p).mul(b, p).add(a, p),
    })
}

fn exact_point(op: usize, a: &Interval, b: &Interval, r: &BigRational) -> Option<BigRational> {
    if !(a.is_point() && b.is_point()) {
        return None;
    }
    let (x, y) = (a.lo().to_rational(), b.lo().to_rational());
    match op {
        0 => Some(x + y),
        1 => Some(x - y),
        2 => Some(x * y),
        3 if y != BigRational::from_integer(0.into()) => Some(x / y),
        8 => Some(r.clone()),
        9 => Some(&x * &x * y + x),
        _ => None,
    }
}

/// Randomized check that an operation at `p` bits encloses the same operation
/// at `4p` bits, and that exactly representable results lie inside.
pub fn containment_suite(cases: usize, seed: u64) -> SoundnessTally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = SoundnessTally::default();
    while tally.cases < cases {
        let op = rng.gen_range(0..10);
        let scale = match op {
            5 => 40.0,
            6 | 7 => 1e3,
            _ => 1e6,
        };
        let a = random_interval(&mut rng, scale, op == 4);
        let b = random_interval(&mut rng, scale, false);
        let r = random_rational(&mut rng);
        let bits = PRECISIONS[rng.gen_range(0..PRECISIONS.len())];
        let p = Precision::new(bits).unwrap();
        let p4 = Precision::new(4 * bits).unwrap();
        let (Some(lo), Some(hi)) = (evaluate(op, &a, &b, &r, p), evaluate(op, &a, &b, &r, p4)) else {
            continue;
        };
        tally.cases += 1;
        if !lo.contains(&hi) {
            tally
                .failures
                .push(format!("op {op} at {bits} bits: {lo:?} does not contain {hi:?}"));
        }
        if let Some(x) = exact_point(op, &a, &b, &r) {
            if !lo.contains_rational(&x) {
                tally.failures.push(format!("op {op} at {bits} bits misses exact value"));
            }
        }
    }
    tally
}

/// `sin²x + cos²x` enclosures containing 1 for `count` arguments with
/// `|x| <= 10⁶`; returns the failing arguments.
pub fn pythagoras_suite(count: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = Precision::new(128).unwrap();
    let mut bad = Vec::new();
    for i in 0..count {
        let x = if i == 0 { 1e6 } else { rng.gen_range(-1e6..1e6) };
        let (s, c) = sincos_enclosure(&Interval::from_f64(x).unwrap(), p);
        let sum = s.sqr(p).add(&c.sqr(p), p);
        if !sum.contains_point(&DyadicFloat::one()) || sum.width().to_f64() > 1e-30 {
            bad.push(x);
        }
    }
    bad
}
