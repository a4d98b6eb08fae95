//! Log-space binomials and binomial tail probabilities.

use num_bigint::BigUint;
use num_traits::One;

/// `ln C(n, k)`; `-inf` when `k < 0` or `k > n` (the coefficient is zero).
pub fn ln_binomial(n: u64, k: i64) -> f64 {
    if k < 0 || k as u64 > n {
        return f64::NEG_INFINITY;
    }
    let k = (k as u64).min(n - k as u64);
    (1..=k).map(|i| ((n - k + i) as f64 / i as f64).ln()).sum()
}

/// Exact `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binomial_big(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::ZERO;
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc * (n-k+i) is divisible by i at every step
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// `ln(sum(exp(x_i)))`, `-inf` for an empty or all-`-inf` input.
pub fn log_sum_exp(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    let s: f64 = values.iter().map(|&x| (x - max).exp()).sum();
    max + s.ln()
}

/// Natural log of a big integer, accurate to double precision.
pub fn ln_big(x: &BigUint) -> f64 {
    if x.bits() == 0 {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x
            .to_string()
            .parse::<f64>()
            .map(f64::ln)
            .unwrap_or(f64::INFINITY);
    }
    let shift = bits - 64;
    let top: BigUint = x >> shift;
    let mantissa = top.to_string().parse::<f64>().unwrap_or(f64::INFINITY);
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `P(Bin(trials, p) <= at_most)`.
///
/// Terms are accumulated in log space so large `trials` with `p` near 1 do
/// not underflow the leading term.
pub fn binomial_cdf(trials: usize, p: f64, at_most: i64) -> f64 {
    if at_most < 0 {
        return 0.0;
    }
    if at_most as usize >= trials {
        return 1.0;
    }
    if p <= 0.0 {
        return 1.0;
    }
    if p >= 1.0 {
        return 0.0;
    }
    let (lp, lq) = (p.ln(), (-p).ln_1p());
    let mut log_term = trials as f64 * lq;
    let mut terms = Vec::with_capacity(at_most as usize + 1);
    terms.push(log_term);
    for j in 0..at_most as usize {
        log_term += ((trials - j) as f64 / (j + 1) as f64).ln() + lp - lq;
        terms.push(log_term);
    }
    log_sum_exp(&terms).exp().min(1.0)
}
