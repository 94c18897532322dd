//! Small shared statistics helpers (means, OLS lines, Pearson, quantiles).

use crate::error::{Error, Result};

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Sample standard deviation (n-1 denominator).
pub fn sample_std(values: &[f64]) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    let m = mean(values);
    let ss: f64 = values.iter().map(|v| (v - m) * (v - m)).sum();
    (ss / (n - 1) as f64).sqrt()
}

/// An ordinary-least-squares line `y = slope * x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub slope: f64,
    pub intercept: f64,
}

impl Line {
    pub fn eval(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

/// OLS fit of y on x. Errors on fewer than two points or a degenerate
/// design (all x identical).
pub fn ols_line(xs: &[f64], ys: &[f64]) -> Result<Line> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    if n < 2 {
        return Err(Error::numerical(
            "ols",
            format!("segment has {n} points, need at least 2"),
        ));
    }
    let mx = mean(xs);
    let my = mean(ys);
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if sxx == 0.0 {
        return Err(Error::numerical("ols", "degenerate design: all x equal"));
    }
    let slope = sxy / sxx;
    Ok(Line {
        slope,
        intercept: my - slope * mx,
    })
}

/// Coefficient of determination of `line` on the given points.
pub fn r_squared(xs: &[f64], ys: &[f64], line: &Line) -> f64 {
    let my = mean(ys);
    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let r = y - line.eval(x);
        ss_res += r * r;
        ss_tot += (y - my) * (y - my);
    }
    if ss_tot == 0.0 {
        if ss_res == 0.0 {
            1.0
        } else {
            f64::NEG_INFINITY
        }
    } else {
        1.0 - ss_res / ss_tot
    }
}

/// Pearson correlation coefficient. Errors when either variable has zero
/// variance.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    assert_eq!(xs.len(), ys.len());
    if xs.len() < 2 {
        return Err(Error::numerical("pearson", "need at least 2 pairs"));
    }
    let mx = mean(xs);
    let my = mean(ys);
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
        sxy += (x - mx) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::numerical("pearson", "zero variance"));
    }
    Ok(sxy / (sxx * syy).sqrt())
}

/// Quantile by linear interpolation on the sorted sample. `q` in [0, 1].
/// Returns NaN on an empty slice.
pub fn quantile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return f64::NAN;
    }
    let pos = q.clamp(0.0, 1.0) * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    if lo == hi {
        sorted[lo]
    } else {
        let frac = pos - lo as f64;
        sorted[lo] * (1.0 - frac) + sorted[hi] * frac
    }
}

/// Median of an unsorted sample (sorts a copy).
pub fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    quantile(&v, 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ols_recovers_exact_line() {
        let xs: Vec<f64> = (0..10).map(f64::from).collect();
        let ys: Vec<f64> = xs.iter().map(|x| -0.01 * x + 3.0).collect();
        let line = ols_line(&xs, &ys).unwrap();
        assert_relative_eq!(line.slope, -0.01, max_relative = 1e-12);
        assert_relative_eq!(line.intercept, 3.0, max_relative = 1e-12);
        assert_relative_eq!(r_squared(&xs, &ys, &line), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn ols_rejects_degenerate() {
        assert!(ols_line(&[1.0, 1.0], &[0.0, 1.0]).is_err());
        assert!(ols_line(&[1.0], &[0.0]).is_err());
    }

    #[test]
    fn pearson_perfect_negative() {
        let xs = [1.0, 2.0, 3.0];
        let ys = [3.0, 2.0, 1.0];
        assert_relative_eq!(pearson(&xs, &ys).unwrap(), -1.0, epsilon = 1e-12);
    }

    #[test]
    fn pearson_zero_variance_errors() {
        assert!(pearson(&[1.0, 2.0], &[5.0, 5.0]).is_err());
    }

    #[test]
    fn quantile_interpolates() {
        let v = [1.0, 2.0, 3.0, 4.0];
        assert_relative_eq!(quantile(&v, 0.5), 2.5);
        assert_relative_eq!(quantile(&v, 0.0), 1.0);
        assert_relative_eq!(quantile(&v, 1.0), 4.0);
    }

    #[test]
    fn median_odd_even() {
        assert_relative_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_relative_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
