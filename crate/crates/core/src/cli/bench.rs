use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::exact::{q_at_one_stream, q_direct_at_one};

#[derive(Debug, Clone)]
pub struct BenchResult {
    pub n_max: u64,
    pub repetitions: u32,
    /// Fastest full sweep of the recurrence.
    pub recurrence: Duration,
    /// Fastest evaluation of the direct sum for every `n <= n_max`.
    pub direct: Duration,
    pub multiplications: u64,
    pub sample_size: usize,
    pub sample_equal: bool,
}

impl BenchResult {
    pub fn speedup(&self) -> f64 {
        self.direct.as_secs_f64() / self.recurrence.as_secs_f64().max(1e-9)
    }

    pub fn multiplications_per_step(&self) -> f64 {
        self.multiplications as f64 / self.n_max as f64
    }
}

/// Every `⌈n_max/100⌉`-th index, plus `n_max`.
pub fn sample_indices(n_max: u64) -> Vec<u64> {
    let step = n_max.div_ceil(100).max(1);
    let mut v: Vec<u64> = (0..=n_max).step_by(step as usize).collect();
    if v.last() != Some(&n_max) {
        v.push(n_max);
    }
    v
}

pub fn bench(n_max: u64, repetitions: u32) -> BenchResult {
    assert!(n_max >= 10 && repetitions >= 1);
    let samples = sample_indices(n_max);
    let mut recurrence = Duration::MAX;
    let mut direct = Duration::MAX;
    let mut multiplications = 0;
    let mut sampled: Vec<BigInt> = Vec::new();
    for _ in 0..repetitions {
        let t = Instant::now();
        let mut stream = q_at_one_stream(n_max);
        let mut last = BigInt::default();
        let mut kept = Vec::with_capacity(samples.len());
        let mut next_sample = samples.iter().peekable();
        for (n, q) in stream.by_ref() {
            if next_sample.peek() == Some(&&n) {
                kept.push(q.clone());
                next_sample.next();
            }
            last = q;
        }
        recurrence = recurrence.min(t.elapsed());
        multiplications = stream.multiplications();
        std::hint::black_box(last);
        sampled = kept;

        let t = Instant::now();
        for n in 0..=n_max {
            std::hint::black_box(q_direct_at_one(n));
        }
        direct = direct.min(t.elapsed());
    }
    let sample_equal = samples
        .iter()
        .zip(&sampled)
        .all(|(&n, q)| q_direct_at_one(n) == *q);
    BenchResult {
        n_max,
        repetitions,
        recurrence,
        direct,
        multiplications,
        sample_size: samples.len(),
        sample_equal,
    }
}
