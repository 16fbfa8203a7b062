use crate::error::{Error, Result};

/// Least-squares fit of `y = A e^{slope·x}` in log space.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ExponentialFit {
    pub slope: f64,
    /// `ln A`.
    pub intercept: f64,
    /// Standard error of the slope; zero for an exact fit through 3+ points.
    pub slope_stderr: f64,
    pub r_squared: f64,
    pub x_range: (f64, f64),
    pub used: usize,
    /// `x` of points dropped because `y ≤ 0` or a value was not finite.
    pub excluded: Vec<f64>,
}

impl ExponentialFit {
    pub fn amplitude(&self) -> f64 {
        self.intercept.exp()
    }

    pub fn predict(&self, x: f64) -> f64 {
        (self.intercept + self.slope * x).exp()
    }
}

/// Ordinary least squares on `(x, ln y)`. Needs at least three usable points
/// spanning more than one `x`.
pub fn fit_exponential(points: &[(f64, f64)]) -> Result<ExponentialFit> {
    let mut excluded = Vec::new();
    let mut xs = Vec::with_capacity(points.len());
    let mut ls = Vec::with_capacity(points.len());
    for &(x, y) in points {
        if x.is_finite() && y.is_finite() && y > 0.0 {
            xs.push(x);
            ls.push(y.ln());
        } else {
            excluded.push(x);
        }
    }
    let n = xs.len();
    if n < 3 {
        return Err(Error::Fit(format!("need at least 3 positive points, have {n}")));
    }
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let ml = ls.iter().sum::<f64>() / nf;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if !(sxx > 0.0) {
        return Err(Error::Fit("all x values coincide".into()));
    }
    let sxl: f64 = xs.iter().zip(&ls).map(|(x, l)| (x - mx) * (l - ml)).sum();
    let sll: f64 = ls.iter().map(|l| (l - ml).powi(2)).sum();
    let slope = sxl / sxx;
    let intercept = ml - slope * mx;
    let rss: f64 = xs
        .iter()
        .zip(&ls)
        .map(|(x, l)| (l - intercept - slope * x).powi(2))
        .sum();
    let slope_stderr = (rss / (nf - 2.0) / sxx).sqrt();
    let r_squared = if sll > 0.0 { 1.0 - rss / sll } else { 1.0 };
    let (lo, hi) = xs
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)));
    Ok(ExponentialFit {
        slope,
        intercept,
        slope_stderr,
        r_squared,
        x_range: (lo, hi),
        used: n,
        excluded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_exponential() {
        let pts: Vec<_> = (0..10).map(|i| (i as f64, 2.0 * (-0.3 * i as f64).exp())).collect();
        let f = fit_exponential(&pts).unwrap();
        assert!((f.slope + 0.3).abs() < 1e-12);
        assert!((f.amplitude() - 2.0).abs() < 1e-12);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
        assert!(f.slope_stderr < 1e-12);
    }

    #[test]
    fn drops_nonpositive() {
        let pts = [(0.0, 1.0), (1.0, 0.0), (2.0, 0.5), (3.0, 0.25), (4.0, -1.0)];
        let f = fit_exponential(&pts).unwrap();
        assert_eq!(f.excluded, vec![1.0, 4.0]);
        assert_eq!(f.used, 3);
        assert_eq!(f.x_range, (0.0, 3.0));
    }

    #[test]
    fn too_few_points() {
        assert!(fit_exponential(&[(0.0, 1.0), (1.0, 0.5), (2.0, 0.0)]).is_err());
        assert!(fit_exponential(&[(1.0, 1.0), (1.0, 0.5), (1.0, 0.2)]).is_err());
    }
}
