//! Small statistical helpers shared across modules.

use crate::error::{Error, Result};
use statrs::distribution::{ChiSquared, ContinuousCDF, Normal};

pub fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample variance with the n-1 denominator.
pub fn sample_var(xs: &[f64]) -> f64 {
    let n = xs.len();
    if n < 2 {
        return f64::NAN;
    }
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (n - 1) as f64
}

pub fn sample_sd(xs: &[f64]) -> f64 {
    sample_var(xs).sqrt()
}

/// Pearson correlation; NaN when either side is constant.
pub fn pearson(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    if x.len() < 2 {
        return f64::NAN;
    }
    let (mx, my) = (mean(x), mean(y));
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (a, b) in x.iter().zip(y.iter()) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    let _ = n;
    if sxx <= 0.0 || syy <= 0.0 {
        return f64::NAN;
    }
    sxy / (sxx * syy).sqrt()
}

/// Quantile by linear interpolation on the sorted sample (type-7).
pub fn quantile(xs: &[f64], p: f64) -> f64 {
    assert!(!xs.is_empty());
    let mut v = xs.to_vec();
    v.sort_by(|a, b| a.total_cmp(b));
    quantile_sorted(&v, p)
}

pub fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = p.clamp(0.0, 1.0) * (n - 1) as f64;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    if lo == hi {
        sorted[lo]
    } else {
        sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
    }
}

pub fn median(xs: &[f64]) -> f64 {
    quantile(xs, 0.5)
}

/// Upper-tail probability of a chi-squared distribution.
pub fn chi2_sf(x: f64, df: f64) -> Result<f64> {
    if df <= 0.0 {
        return Err(Error::Domain(format!("chi2 df must be positive, got {df}")));
    }
    if x <= 0.0 {
        return Ok(1.0);
    }
    let d = ChiSquared::new(df)
        .map_err(|e| Error::Numerical(format!("chi-squared({df}): {e}")))?;
    Ok(d.sf(x))
}

/// Standard normal CDF.
pub fn normal_cdf(z: f64) -> f64 {
    let d = Normal::new(0.0, 1.0).expect("standard normal");
    d.cdf(z)
}

/// Student-t upper/lower two-sided p-value approximated by the normal for
/// large df, exact via statrs otherwise.
pub fn t_test_two_sided_p(tstat: f64, df: f64) -> f64 {
    use statrs::distribution::StudentsT;
    if df <= 0.0 {
        return f64::NAN;
    }
    match StudentsT::new(0.0, 1.0, df) {
        Ok(d) => 2.0 * d.sf(tstat.abs()),
        Err(_) => f64::NAN,
    }
}

/// log(sum(exp(xs))) computed stably.
pub fn log_sum_exp(xs: &[f64]) -> f64 {
    let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    m + xs.iter().map(|x| (x - m).exp()).sum::<f64>().ln()
}

/// Kolmogorov–Smirnov test of uniformity on [0, 1]; returns the asymptotic
/// p-value of the two-sided statistic.
pub fn ks_uniform_pvalue(us: &[f64]) -> f64 {
    let n = us.len();
    if n == 0 {
        return f64::NAN;
    }
    let mut v = us.to_vec();
    v.sort_by(|a, b| a.total_cmp(b));
    let mut d: f64 = 0.0;
    for (i, &u) in v.iter().enumerate() {
        let hi = (i + 1) as f64 / n as f64 - u;
        let lo = u - i as f64 / n as f64;
        d = d.max(hi).max(lo);
    }
    let x = (n as f64).sqrt() * d;
    // Kolmogorov asymptotic survival series
    let mut p = 0.0;
    for k in 1..=100 {
        let k = k as f64;
        let term = 2.0 * (-1.0f64).powi(k as i32 - 1) * (-2.0 * k * k * x * x).exp();
        p += term;
        if term.abs() < 1e-12 {
            break;
        }
    }
    p.clamp(0.0, 1.0)
}
