//! Checks of the explicit constants in the analytic part: the tail budget,
//! the series coefficients `a_k`, `b_k`, and the scalar inequality used to
//! bound the `(n+1)`-th power.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{decide, parse_rational, Decision, VerificationReport, Verdict, VerifyError, Witness};
use crate::asymptotics::{
    e6_bessel_form, error_budget, h_terms, main_term_amplitude, quarter_powers, PROOF_THRESHOLD,
};
use crate::exact::{factorial, Rational};
use crate::interval::{
    compare_strict, const_e, const_pi, exp_enclosure, sqrt_enclosure, AdaptivePrecision, Interval,
    Precision, StrictOrder,
};

const GUARD: u32 = 32;

fn less(a: &Interval, b: &Interval) -> Option<bool> {
    match compare_strict(a, b) {
        StrictOrder::Less => Some(true),
        StrictOrder::Greater => Some(false),
        StrictOrder::Unknown => None,
    }
}

fn rat(s: &str) -> Rational {
    parse_rational(s).expect("literal")
}

fn record(report: &mut VerificationReport, n: u64, label: &str, d: &Decision) {
    report.use_precision(d.prec);
    match d.holds {
        Some(true) => report.notes.push(format!("{label}: holds, value {}", d.value)),
        Some(false) => {
            report.degrade(Verdict::Violated);
            report.notes.push(format!("{label}: fails, value {}", d.value));
            report.witnesses.push(Witness {
                n,
                value: d.value.clone(),
            });
        }
        None => {
            report.degrade(Verdict::Inconclusive);
            report
                .notes
                .push(format!("{label}: undecided at {} bits, value {}", d.prec.bits(), d.value));
            report.witnesses.push(Witness {
                n,
                value: d.value.clone(),
            });
        }
    }
}

/// The `n`-free constant the closing chain majorizes the normalized budget by
/// once `n >= 10⁴`:
///
/// ```text
/// (200/199)·0.00605·e^{3/2}/10^{5/4} + (200/199)·e^{3/2}/80000 + (200/199)·√e/10
///   + √e/240 + 4√e/10 + 0.546 + √e/(16√π) + 9√e/(25600√π) + √(e/π)·(1 + 1/400)
/// ```
pub fn tail_constant_chain(prec: Precision) -> Result<Interval, VerifyError> {
    let w = prec.plus(GUARD);
    let r = |s: &str| Interval::from_rational(&rat(s), w);
    let e = const_e(w);
    let pi = const_pi(w);
    let sqrt_e = sqrt_enclosure(&e, w)?;
    let sqrt_pi = sqrt_enclosure(&pi, w)?;
    let e32 = exp_enclosure(&r("1.5"), w)?;
    let factor = r("200/199");
    let (ten_quarter, _) = quarter_powers(&Interval::from_int(10), w)?;
    let ten_five_quarters = ten_quarter.mul_int(10, w);
    let terms = [
        factor
            .mul(&r("0.00605"), w)
            .mul(&e32, w)
            .div(&ten_five_quarters, w)?,
        factor.mul(&e32, w).div_int(80_000, w),
        factor.mul(&sqrt_e, w).div_int(10, w),
        sqrt_e.div_int(240, w),
        sqrt_e.mul_int(4, w).div_int(10, w),
        r("0.546"),
        sqrt_e.div(&sqrt_pi.mul_int(16, w), w)?,
        sqrt_e.mul_int(9, w).div(&sqrt_pi.mul_int(25_600, w), w)?,
        sqrt_enclosure(&e.div(&pi, w)?, w)?.mul(&r("401/400"), w),
    ];
    Ok(terms
        .iter()
        .fold(Interval::zero(), |acc, t| acc.add(t, w))
        .round_out(prec))
}

/// For `n >= 10⁴`: the normalized budget is below 2.38, the closing inequality
/// `√(e/π)/n^{1/4} + 2.38/n^{3/4} < 1` holds, and the `n`-free constant chain
/// is below 2.38.
pub fn check_theorem1_tail(
    n: u64,
    policy: &AdaptivePrecision,
) -> Result<VerificationReport, VerifyError> {
    if n < PROOF_THRESHOLD {
        return Err(VerifyError::BelowProofRange {
            n,
            threshold: PROOF_THRESHOLD,
        });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("theorem1-tail", (n, n));
    let c = rat("2.38");

    let budget = decide(policy, |p| {
        let b = error_budget(n, p)?;
        Ok((less(&b.normalized, &Interval::from_rational(&c, p)), b.normalized))
    })?;
    report.witnesses.push(Witness {
        n,
        value: budget.value.clone(),
    });
    record(&mut report, n, "normalized budget < 2.38", &budget);
    if budget.holds != Some(true) {
        report.witnesses.pop();
    }

    let closing = decide(policy, |p| {
        let w = p.plus(GUARD);
        let (_, three_quarters) = quarter_powers(&Interval::from_int(n), w)?;
        let lhs = main_term_amplitude(n, w)?
            .add(&Interval::from_rational(&c, w).div(&three_quarters, w)?, w)
            .round_out(p);
        Ok((less(&lhs, &Interval::one()), lhs))
    })?;
    record(&mut report, n, "sqrt(e/pi)/n^(1/4) + 2.38/n^(3/4) < 1", &closing);

    let chain = decide(policy, |p| {
        let v = tail_constant_chain(p)?;
        Ok((less(&v, &Interval::from_rational(&c, p)), v))
    })?;
    record(&mut report, n, "constant chain < 2.38", &chain);

    report.elapsed = start.elapsed();
    Ok(report)
}

/// Coefficients of `e^{−t}·(1 + t/2)/(1 − t/2) = Σ b_k t^k` and of
/// `e^{−t}/(1 − t/2) = Σ a_k t^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma4Coefficients {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

fn signed_inverse_factorial(k: u64) -> Rational {
    let s = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    Rational::new(s, factorial(k))
}

/// `a_k` and `b_k` for `0 <= k <= k_max` from the recurrences
/// `a_k = a_{k−1}/2 + (−1)^k/k!` and `b_k = a_{k−1} + (−1)^k/k!`.
pub fn lemma4_coefficients(k_max: u64) -> Lemma4Coefficients {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut a = vec![Rational::one()];
    let mut b = vec![Rational::one()];
    for k in 1..=k_max {
        let s = signed_inverse_factorial(k);
        let prev = &a[(k - 1) as usize];
        b.push(prev + &s);
        let next = prev * &half + s;
        a.push(next);
    }
    Lemma4Coefficients { a, b }
}

/// `a_k = 2^{−k}·Σ_{m<=k} (−2)^m/m!` and `b_k = a_k + a_{k−1}/2`, term by term.
fn lemma4_explicit(k_max: u64) -> Lemma4Coefficients {
    let mut a = Vec::new();
    for k in 0..=k_max {
        let mut sum = Rational::zero();
        for m in 0..=k {
            sum += Rational::new(num_traits::pow(BigInt::from(-2), m as usize), factorial(m));
        }
        a.push(sum / Rational::from_integer(num_traits::pow(BigInt::from(2), k as usize)));
    }
    let mut b = vec![Rational::one()];
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for k in 1..=k_max as usize {
        b.push(&a[k] + &a[k - 1] * &half);
    }
    Lemma4Coefficients { a, b }
}

/// Exact checks on `a_k`, `b_k` for `k <= k_max`, plus the two constant
/// inequalities that extend the bound on `|b_k|` to all `k >= 6`.
pub fn check_lemma4(k_max: u64) -> Result<VerificationReport, VerifyError> {
    if k_max < 8 {
        return Err(VerifyError::InvalidArgument("k_max must be at least 8".into()));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("lemma4", (0, k_max));
    let rec = lemma4_coefficients(k_max);
    let exp = lemma4_explicit(k_max);
    let fail = |report: &mut VerificationReport, k: u64, v: &Rational, msg: String| {
        report.degrade(Verdict::Violated);
        report.notes.push(msg);
        report.witnesses.push(Witness {
            n: k,
            value: Interval::from_rational(v, Precision::default()),
        });
    };

    for k in 0..=k_max as usize {
        if rec.a[k] != exp.a[k] || rec.b[k] != exp.b[k] {
            fail(&mut report, k as u64, &rec.b[k], format!("recurrence and sum differ at k = {k}"));
        }
    }

    let expected = [
        (0usize, "1"),
        (1, "0"),
        (2, "0"),
        (3, "1/12"),
        (4, "0"),
        (5, "1/80"),
        (6, "1/288"),
        (7, "1/448"),
    ];
    for (k, v) in expected {
        if rec.b[k] != rat(v) {
            let b = rec.b[k].clone();
            fail(&mut report, k as u64, &b, format!("b_{k} = {b}, expected {v}"));
        }
    }
    report.notes.push("b_0..b_7 match 1, 0, 0, 1/12, 0, 1/80, 1/288, 1/448".into());

    let bound = rat("0.38496");
    let mut pow2 = Rational::from_integer(BigInt::from(64));
    let mut worst = (6u64, Rational::zero());
    for k in 6..=k_max as usize {
        let scaled = rec.b[k].abs() * &pow2;
        if scaled > bound {
            let b = rec.b[k].clone();
            fail(&mut report, k as u64, &b, format!("|b_{k}|·2^{k} = {scaled} exceeds 0.38496"));
        }
        if scaled > worst.1 {
            worst = (k as u64, scaled);
        }
        pow2 *= Rational::from_integer(BigInt::from(2));
    }
    report.notes.push(format!(
        "max |b_k|·2^k over 6 <= k <= {k_max} is at k = {}",
        worst.0
    ));

    // 2/e² + 9·2⁶/(7·6!) <= 0.38496
    let policy = AdaptivePrecision::default();
    let anchor = decide(&policy, |p| {
        let w = p.plus(GUARD);
        let e2 = const_e(w).sqr(w);
        let v = Interval::from_int(2)
            .div(&e2, w)?
            .add(&Interval::from_rational(&rat("576/5040"), w), w)
            .round_out(p);
        Ok((less(&v, &Interval::from_rational(&bound, p)), v))
    })?;
    record(&mut report, 6, "2/e^2 + 9*2^6/(7*6!) <= 0.38496", &anchor);

    // (0.38496/2⁶)·(200/199) < 0.00605, exactly
    let chain = &bound / Rational::from_integer(BigInt::from(64)) * rat("200/199");
    if chain < rat("0.00605") {
        report
            .notes
            .push(format!("(0.38496/64)*(200/199) = {chain} < 0.00605"));
    } else {
        fail(&mut report, 6, &chain, format!("tail chain {chain} >= 0.00605"));
    }
    report.notes.push(format!(
        "|b_k| <= 0.38496/2^k is checked exactly only for k <= {k_max}"
    ));
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `(1/12)|t|³ + (1/80)|t|⁵ + 0.00605·|t|⁶`.
pub fn polynomiksi_lhs(t: &Interval, prec: Precision) -> Interval {
    let w = prec.plus(GUARD);
    let t = t.abs();
    let t3 = t.sqr(w).mul(&t, w);
    let t5 = t3.mul(&t.sqr(w), w);
    let t6 = t3.sqr(w);
    t3.div_int(12, w)
        .add(&t5.div_int(80, w), w)
        .add(&t6.mul(&Interval::from_rational(&rat("0.00605"), w), w), w)
        .round_out(prec)
}

/// The scalar inequality `polynomiksi_lhs(t) < 1/n` at `|t| = (n+1)^{−1/2}`
/// for `n ∈ {10⁴, 10⁵, 10⁶}` and at `|t| = 1/100` with `n = 10⁴`.
pub fn check_polynomiksi_constant(
    policy: &AdaptivePrecision,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let mut report = VerificationReport::new("polynomiksi", (10_000, 1_000_000));
    for n in [10_000u64, 100_000, 1_000_000] {
        let d = decide(policy, |p| {
            let w = p.plus(GUARD);
            let t = sqrt_enclosure(&Interval::from_int(n + 1), w)?.recip(w)?;
            let lhs = polynomiksi_lhs(&t, w);
            let rhs = Interval::from_ratio(&BigInt::one(), &BigInt::from(n), w);
            Ok((less(&lhs, &rhs), lhs.round_out(p)))
        })?;
        record(&mut report, n, &format!("n = {n}, |t| = (n+1)^(-1/2)"), &d);
    }
    let d = decide(policy, |p| {
        let t = Interval::from_rational(&rat("0.01"), p.plus(GUARD));
        let lhs = polynomiksi_lhs(&t, p);
        Ok((less(&lhs, &Interval::from_rational(&rat("1e-4"), p)), lhs))
    })?;
    record(&mut report, 10_000, "|t| = 1/100", &d);
    report.elapsed = start.elapsed();
    Ok(report)
}

/// The normalized budget at `n = 10⁴·2^j`, `0 <= j <= j_max`, starts below
/// 2.38 and strictly decreases along the grid.
///
/// Only the total is monotone; `E_6·n^{3/4}` and the leading part of
/// `E_7·n^{3/4}` increase with `n`.
pub fn check_budget_grid(
    j_max: u32,
    policy: &AdaptivePrecision,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let n_of = |j: u32| PROOF_THRESHOLD << j;
    let mut report = VerificationReport::new("budget-grid", (n_of(0), n_of(j_max)));
    let first = decide(policy, |p| {
        let v = error_budget(n_of(0), p)?.normalized;
        Ok((less(&v, &Interval::from_rational(&rat("2.38"), p)), v))
    })?;
    record(&mut report, n_of(0), "normalized budget < 2.38 at n = 10^4", &first);
    let mut failures = 0;
    for j in 0..j_max {
        let (a, b) = (n_of(j), n_of(j + 1));
        let d = decide(policy, |p| {
            let prev = error_budget(a, p)?.normalized;
            let next = error_budget(b, p)?.normalized;
            Ok((less(&next, &prev), next))
        })?;
        report.use_precision(d.prec);
        if d.holds != Some(true) {
            failures += 1;
            report.degrade(if d.holds.is_none() {
                Verdict::Inconclusive
            } else {
                Verdict::Violated
            });
            report.witnesses.push(Witness { n: b, value: d.value });
        }
    }
    report.notes.push(format!(
        "{} grid steps, {failures} not strictly decreasing",
        j_max
    ));
    report.elapsed = start.elapsed();
    Ok(report)
}

/// For each `n >= 10⁴`: `e6_bessel_form(n) < E_6`, `|H_1 − H_2| < E_7` and
/// `|H_2 − H_3| < E_8`.
pub fn check_bessel_dominance(
    ns: &[u64],
    policy: &AdaptivePrecision,
) -> Result<VerificationReport, VerifyError> {
    if let Some(&n) = ns.iter().find(|&&n| n < PROOF_THRESHOLD) {
        return Err(VerifyError::BelowProofRange {
            n,
            threshold: PROOF_THRESHOLD,
        });
    }
    let start = Instant::now();
    let lo = ns.iter().copied().min().unwrap_or(PROOF_THRESHOLD);
    let hi = ns.iter().copied().max().unwrap_or(PROOF_THRESHOLD);
    let mut report = VerificationReport::new("bessel-dominance", (lo, hi));
    for &n in ns {
        let e6 = decide(policy, |p| {
            let form = e6_bessel_form(n, p)?;
            Ok((less(&form, &error_budget(n, p)?.e6), form))
        })?;
        record(&mut report, n, &format!("n = {n}: e6 Bessel form < E6"), &e6);
        let h12 = decide(policy, |p| {
            let h = h_terms(n, p)?;
            let d = h.h1.sub(&h.h2, p).abs();
            Ok((less(&d, &error_budget(n, p)?.e7), d))
        })?;
        record(&mut report, n, &format!("n = {n}: |H1 - H2| < E7"), &h12);
        let h23 = decide(policy, |p| {
            let h = h_terms(n, p)?;
            let d = h.h2.sub(&h.h3, p).abs();
            Ok((less(&d, &error_budget(n, p)?.e8), d))
        })?;
        record(&mut report, n, &format!("n = {n}: |H2 - H3| < E8"), &h23);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Cauchy product of e^{−t}, (1 + t/2) and Σ (t/2)^k, truncated at k_max
    fn series_oracle(k_max: usize) -> Vec<Rational> {
        let exp_neg: Vec<Rational> = (0..=k_max as u64).map(signed_inverse_factorial).collect();
        let geom: Vec<Rational> = (0..=k_max)
            .map(|k| Rational::new(BigInt::one(), num_traits::pow(BigInt::from(2), k)))
            .collect();
        let mut prod = vec![Rational::zero(); k_max + 1];
        for i in 0..=k_max {
            for j in 0..=k_max - i {
                prod[i + j] += &exp_neg[i] * &geom[j];
            }
        }
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        (0..=k_max)
            .map(|k| {
                let mut v = prod[k].clone();
                if k > 0 {
                    v += &prod[k - 1] * &half;
                }
                v
            })
            .collect()
    }

    #[test]
    fn coefficients_match_series_product() {
        let c = lemma4_coefficients(40);
        assert_eq!(c.b, series_oracle(40));
        assert_eq!(c, lemma4_explicit(40));
    }

    #[test]
    fn b20_bound() {
        let c = lemma4_coefficients(20);
        let scaled = c.b[20].abs() * Rational::from_integer(BigInt::from(1u64 << 20));
        assert!(scaled <= rat("0.38496"));
    }

    #[test]
    fn lemma4_report() {
        let r = check_lemma4(60).unwrap();
        assert_eq!(r.verdict, Verdict::Verified, "{:?}", r.notes);
        assert!(check_lemma4(7).is_err());
    }

    #[test]
    fn polynomiksi_values() {
        let p = Precision::default();
        assert!(polynomiksi_lhs(&Interval::zero(), p).is_point());
        let v = polynomiksi_lhs(&Interval::from_rational(&rat("0.01"), p), p);
        // (1/12)1e-6 + (1/80)1e-10 + 0.00605e-12
        let f = 1e-6 / 12.0 + 1e-10 / 80.0 + 0.00605e-12;
        let (lo, hi) = v.to_f64_bounds();
        assert!((lo - f).abs() < 1e-20 && (hi - f).abs() < 1e-20);
        let r = check_polynomiksi_constant(&AdaptivePrecision::default()).unwrap();
        assert!(r.is_verified(), "{:?}", r.notes);
    }

    #[test]
    fn constant_chain_value() {
        // term-by-term float evaluation of the same sum
        let e: f64 = std::f64::consts::E;
        let pi = std::f64::consts::PI;
        let f = 200.0 / 199.0 * 0.00605 * e.powf(1.5) / 10f64.powf(1.25)
            + 200.0 / 199.0 * e.powf(1.5) / 80_000.0
            + 200.0 / 199.0 * e.sqrt() / 10.0
            + e.sqrt() / 240.0
            + 4.0 * e.sqrt() / 10.0
            + 0.546
            + e.sqrt() / (16.0 * pi.sqrt())
            + 9.0 * e.sqrt() / (25_600.0 * pi.sqrt())
            + (e / pi).sqrt() * (1.0 + 1.0 / 400.0);
        let v = tail_constant_chain(Precision::default()).unwrap();
        assert!((v.mid().to_f64() - f).abs() < 1e-13);
        assert!(f < 2.38);
    }

    #[test]
    fn tail_reports() {
        let policy = AdaptivePrecision::default();
        assert!(check_theorem1_tail(10_000, &policy).unwrap().is_verified());
        let big = check_theorem1_tail(1_000_000, &policy).unwrap();
        assert!(big.is_verified());
        assert!(matches!(
            check_theorem1_tail(1_000, &policy),
            Err(VerifyError::BelowProofRange { n: 1_000, .. })
        ));
        let a = &check_theorem1_tail(10_000, &policy).unwrap().witnesses[0].value;
        let b = &big.witnesses[0].value;
        assert_eq!(compare_strict(b, a), StrictOrder::Less);
    }

    #[test]
    fn grid_and_dominance() {
        let policy = AdaptivePrecision::default();
        let g = check_budget_grid(20, &policy).unwrap();
        assert!(g.is_verified(), "{:?}", g.notes);
        let d = check_bessel_dominance(&[10_000, 100_000, 1_000_000], &policy).unwrap();
        assert!(d.is_verified(), "{:?}", d.notes);
        assert!(check_bessel_dominance(&[999], &policy).is_err());
    }
}
