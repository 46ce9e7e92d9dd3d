mod common;

use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use laguerre_cert::asymptotics::{
    bessel_enclosure, bessel_quadrature_oracle, e6_bessel_form, laguerre_contour_oracle,
    BesselOrder,
};
use laguerre_cert::exact::{
    factorial, laguerre_at_one, laguerre_direct, q_at_one_stream, q_direct, q_direct_at_one,
    q_poly_stream, Rational,
};
use laguerre_cert::interval::{
    compare_strict, sqrt_enclosure, AdaptivePrecision, Interval, Precision, StrictOrder,
};
use laguerre_cert::verify::{
    check_lemma4, check_ratio_extrema, check_theorem1_tail, lemma4_coefficients, parse_rational,
};
use num_bigint::BigInt;
use num_traits::One;

const FULL: &str = "10000";

fn p() -> Precision {
    Precision::new(128).unwrap()
}

fn rat(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn cli(args: &[&str]) -> (Option<i32>, Duration) {
    let t = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_laguerre-cert"))
        .args(args)
        .env("RUST_LOG", "warn")
        .env_remove("LAGUERRE_CERT_PRECISION_CAP")
        .env_remove("LAGUERRE_CERT_THREADS")
        .stdout(Stdio::null())
        .status()
        .expect("binary runs");
    (status.code(), t.elapsed())
}

fn criterion_1() -> Result<String, String> {
    let (code, full) = cli(&["folklore", "--n-max", FULL, "--format", "json", "--quiet"]);
    if code != Some(0) {
        return Err(format!("n_max = 10000 exited {code:?}"));
    }
    let (code, small) = cli(&["folklore", "--n-max", "2000", "--format", "json", "--quiet"]);
    if code != Some(0) || small >= Duration::from_secs(30) {
        return Err(format!("n_max = 2000 exited {code:?} after {small:?}"));
    }
    if full >= Duration::from_secs(600) {
        return Err(format!("n_max = 10000 took {full:?}"));
    }
    Ok(format!("exit 0, {:.1} s at 10^4, {:.2} s at 2000", full.as_secs_f64(), small.as_secs_f64()))
}

fn criterion_2() -> Result<String, String> {
    let r = check_ratio_extrema(10_000, &AdaptivePrecision::default()).map_err(|e| e.to_string())?;
    if !r.is_verified() || r.witnesses.len() < 2 {
        return Err(format!("verdict {}", r.verdict));
    }
    let bound = Interval::from_rational(&rat("0.9302"), p());
    let (max, min) = (&r.witnesses[0], &r.witnesses[1]);
    let upper = compare_strict(&max.value, &bound) == StrictOrder::Less;
    let lower = compare_strict(&min.value, &bound.neg()) == StrictOrder::Greater;
    let (_, hi) = max.value.to_f64_bounds();
    let (lo, _) = min.value.to_f64_bounds();
    if upper && lower {
        Ok(format!("max hi {hi:.10} at n = {}, min lo {lo:.10} at n = {}", max.n, min.n))
    } else {
        Err(format!("max hi {hi} at n = {}, min lo {lo} at n = {}", max.n, min.n))
    }
}

fn criterion_3() -> Result<String, String> {
    let mut out = Vec::new();
    for c in ["0.33", "2.38"] {
        let (code, t) = cli(&["theorem1-numeric", "--n-max", FULL, "--c", c, "--format", "json", "--quiet"]);
        if code != Some(0) {
            return Err(format!("c = {c} exited {code:?}"));
        }
        out.push(format!("c = {c} in {:.1} s", t.as_secs_f64()));
    }
    Ok(out.join(", "))
}

fn criterion_4() -> Result<String, String> {
    let t = Instant::now();
    let r = check_theorem1_tail(10_000, &AdaptivePrecision::default()).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    // independent float evaluation of the closing inequality
    let n = 10_000f64;
    let closing = (std::f64::consts::E / std::f64::consts::PI).sqrt() / n.powf(0.25) + 2.38 / n.powf(0.75);
    if r.is_verified() && elapsed < Duration::from_secs(1) && closing < 1.0 {
        Ok(format!("verified in {:.3} s, closing lhs ~ {closing:.4}", elapsed.as_secs_f64()))
    } else {
        Err(format!("verdict {} in {elapsed:?}, notes {:?}", r.verdict, r.notes))
    }
}

fn criterion_5() -> Result<String, String> {
    let e6 = e6_bessel_form(10_000, p()).map_err(|e| e.to_string())?;
    let x = Interval::from_int(10_001);
    let s = sqrt_enclosure(&x, p()).unwrap();
    let three_quarters = s.mul(&sqrt_enclosure(&s, p()).unwrap(), p());
    let bound = Interval::from_rational(&rat("0.546"), p())
        .div(&three_quarters, p())
        .unwrap();
    let (_, e6_hi) = e6.to_f64_bounds();
    let (b_lo, _) = bound.to_f64_bounds();
    if compare_strict(&e6, &bound) == StrictOrder::Less {
        Ok(format!("hi {e6_hi:.6e} < {b_lo:.6e}"))
    } else {
        Err(format!("hi {e6_hi:.6e} vs {b_lo:.6e}"))
    }
}

fn criterion_6() -> Result<String, String> {
    let b = lemma4_coefficients(7).b;
    for (k, v) in [(3, "1/12"), (5, "1/80"), (6, "1/288"), (7, "1/448")] {
        if b[k] != rat(v) {
            return Err(format!("b_{k} = {}, expected {v}", b[k]));
        }
    }
    let r = check_lemma4(500).map_err(|e| e.to_string())?;
    if !r.is_verified() {
        return Err(format!("verdict {}, notes {:?}", r.verdict, r.notes));
    }
    // |b_k|·2^k <= 0.38496 recomputed here for every k
    let all = lemma4_coefficients(500).b;
    let limit = rat("0.38496");
    let mut pow = Rational::one();
    for (k, v) in all.iter().enumerate() {
        if k >= 6 && num_traits::Signed::abs(v) * &pow > limit {
            return Err(format!("|b_{k}| exceeds 0.38496/2^{k}"));
        }
        pow *= Rational::from_integer(BigInt::from(2));
    }
    Ok("b_3, b_5, b_6, b_7 exact; bound holds for 6 <= k <= 500".into())
}

fn criterion_7() -> Result<String, String> {
    for t in ["1", "1/2", "2", "-1"] {
        let t = rat(t);
        for (n, v) in q_poly_stream(200, &t) {
            if v != q_direct(n, &t) {
                return Err(format!("recurrence differs from direct sum at n = {n}, t = {t}"));
            }
        }
    }
    for (n, v) in q_at_one_stream(200) {
        if v != q_direct_at_one(n) {
            return Err(format!("integer stream differs at n = {n}"));
        }
    }
    for n in 0..=500u64 {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let lhs = Rational::from_integer(factorial(n) * sign) * laguerre_direct(n, &Rational::one());
        if lhs != Rational::from_integer(q_direct_at_one(n)) {
            return Err(format!("identity fails at n = {n}"));
        }
    }
    Ok("exact for n <= 200 at t in {1, 1/2, 2, -1}; identity for n <= 500".into())
}

fn criterion_8() -> Result<String, String> {
    let mut worst = 0f64;
    for n in 1..=50u64 {
        let exact = Interval::from_rational(&laguerre_at_one(n), p()).mid().to_f64();
        let v = laguerre_contour_oracle(n, 64).map_err(|e| e.to_string())?;
        worst = worst.max((v.re - exact).abs());
    }
    if worst >= 1e-8 {
        return Err(format!("contour error {worst:e}"));
    }
    for order in [BesselOrder::Zero, BesselOrder::One, BesselOrder::Three] {
        for r in ["1", "10", "100"] {
            let ri = Interval::from_rational(&rat(r), p());
            let enc = bessel_enclosure(order, &ri, p()).map_err(|e| e.to_string())?;
            let x = 2.0 * ri.mid().to_f64();
            let q = bessel_quadrature_oracle(i64::from(order.value()), x, 16).map_err(|e| e.to_string())?;
            if !enc.j.contains_f64(q.re) {
                return Err(format!("J_{order}({x}) = {} outside enclosure", q.re));
            }
        }
    }
    let mut refl = 0f64;
    for k in [1i64, 3] {
        for x in [1.0, 5.0, 200.01] {
            let a = bessel_quadrature_oracle(k, x, 16).map_err(|e| e.to_string())?.re;
            let b = bessel_quadrature_oracle(-k, x, 16).map_err(|e| e.to_string())?.re;
            refl = refl.max((b + a).abs());
        }
    }
    if refl >= 1e-10 {
        return Err(format!("reflection error {refl:e}"));
    }
    Ok(format!("contour error {worst:.2e}, reflection error {refl:.2e}"))
}

fn criterion_9() -> Result<String, String> {
    let tally = common::containment_suite(10_000, 0x5eed);
    let bad = common::pythagoras_suite(100, 7);
    if tally.cases >= 10_000 && tally.failures.is_empty() && bad.is_empty() {
        Ok(format!("{} containment cases, 100 sin^2+cos^2 arguments, 0 failures", tally.cases))
    } else {
        Err(format!("{} failures, sin^2+cos^2 failures at {bad:?}", tally.failures.len()))
    }
}

fn main() {
    let criteria: [(&str, fn() -> Result<String, String>); 9] = [
        ("folklore bound up to 10^4", criterion_1),
        ("ratio extrema within 0.9302", criterion_2),
        ("refined numeric bound, c = 0.33 and 2.38", criterion_3),
        ("analytic tail at n = 10^4", criterion_4),
        ("E6 Bessel form below 0.546(n+1)^(-3/4)", criterion_5),
        ("lemma coefficients b_k", criterion_6),
        ("recurrence and identity oracles", criterion_7),
        ("integral representations", criterion_8),
        ("interval soundness suite", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
