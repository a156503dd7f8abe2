//! Pool-adjacent-violators projection onto the nondecreasing cone.

/// Least-squares isotonic (nondecreasing) fit with equal weights.
pub fn isotonic_nondecreasing(y: &[f64]) -> Vec<f64> {
    // blocks of (mean, weight)
    let mut means: Vec<f64> = Vec::with_capacity(y.len());
    let mut weights: Vec<f64> = Vec::with_capacity(y.len());
    let mut sizes: Vec<usize> = Vec::with_capacity(y.len());

    for &v in y {
        means.push(v);
        weights.push(1.0);
        sizes.push(1);
        while means.len() >= 2 {
            let k = means.len();
            if means[k - 2] <= means[k - 1] {
                break;
            }
            let w = weights[k - 2] + weights[k - 1];
            let m = (means[k - 2] * weights[k - 2] + means[k - 1] * weights[k - 1]) / w;
            means.truncate(k - 1);
            weights.truncate(k - 1);
            let s = sizes.pop().unwrap();
            *means.last_mut().unwrap() = m;
            *weights.last_mut().unwrap() = w;
            *sizes.last_mut().unwrap() += s;
        }
    }

    let mut out = Vec::with_capacity(y.len());
    for (m, s) in means.iter().zip(sizes.iter()) {
        out.extend(std::iter::repeat(*m).take(*s));
    }
    out
}
