//! Floating-point probe of log-concavity on the positive orthant.
//!
//! This is evidence, not a certificate: the Hessian of `log h` is evaluated at
//! random points and its largest eigenvalue compared with its Frobenius norm.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq)]
pub enum SampleRegion {
    /// Every coordinate log-uniform in `[lo, hi]`.
    LogUniform { lo: f64, hi: f64 },
    /// Every coordinate uniform in `[c_i - radius, c_i + radius]`.
    Box { center: Vec<f64>, radius: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleOptions {
    pub trials: usize,
    /// A point fails when `λ_max > tolerance · ‖H‖_F`.
    pub tolerance: f64,
    pub region: SampleRegion,
    pub seed: u64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            trials: 200,
            tolerance: 1e-8,
            region: SampleRegion::LogUniform { lo: 1e-2, hi: 1e2 },
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleReport {
    pub trials: usize,
    /// Largest `λ_max / ‖H‖_F` seen.
    pub worst_ratio: f64,
    /// First point at which the probe failed.
    pub failure: Option<Vec<f64>>,
}

impl SampleReport {
    pub fn passes(&self) -> bool {
        self.failure.is_none()
    }
}

/// Hessian of `log h` at `x`, or `None` when `h(x) <= 0`.
pub fn log_hessian(h: &Polynomial, x: &[f64]) -> Option<DMatrix<f64>> {
    let (v, g, hess) = h.value_gradient_hessian(x);
    if v <= 0.0 || !v.is_finite() {
        return None;
    }
    let n = x.len();
    Some(DMatrix::from_fn(n, n, |i, j| {
        hess[i][j] / v - g[i] * g[j] / (v * v)
    }))
}

/// Ratio `λ_max / ‖H‖_F` of the log-Hessian at one point (0 for a zero
/// matrix).
pub fn log_hessian_ratio(h: &Polynomial, x: &[f64]) -> Option<f64> {
    let m = log_hessian(h, x)?;
    let norm = m.norm();
    if norm == 0.0 {
        return Some(0.0);
    }
    let eig = SymmetricEigen::new(m);
    let max = eig
        .eigenvalues
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    Some(max / norm)
}

/// Samples `options.trials` points and checks negative semidefiniteness of
/// the log-Hessian. The zero polynomial passes trivially.
pub fn sampled_log_concavity(h: &Polynomial, options: &SampleOptions) -> SampleReport {
    let mut report = SampleReport {
        trials: options.trials,
        worst_ratio: f64::NEG_INFINITY,
        failure: None,
    };
    if h.is_zero() {
        report.worst_ratio = 0.0;
        return report;
    }
    let n = h.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    for _ in 0..options.trials {
        let x: Vec<f64> = match &options.region {
            SampleRegion::LogUniform { lo, hi } => (0..n)
                .map(|_| (rng.random_range(lo.ln()..=hi.ln())).exp())
                .collect(),
            SampleRegion::Box { center, radius } => center
                .iter()
                .map(|c| (c + rng.random_range(-radius..=*radius)).max(f64::MIN_POSITIVE))
                .collect(),
        };
        let Some(ratio) = log_hessian_ratio(h, &x) else {
            continue;
        };
        report.worst_ratio = report.worst_ratio.max(ratio);
        if ratio > options.tolerance && report.failure.is_none() {
            report.failure = Some(x);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(n, i)
    }

    #[test]
    fn monomial_passes() {
        let h = &v(2, 0) * &v(2, 1);
        let r = sampled_log_concavity(&h, &SampleOptions::default());
        assert!(r.passes(), "{r:?}");
    }

    #[test]
    fn weak_map_limit_fails_near_ones() {
        let one = Polynomial::constant(3, int(1));
        let h = &(&(&(&one + &v(3, 0)) + &v(3, 1)) + &v(3, 2)) + &(&v(3, 0) * &v(3, 2));
        assert!(log_hessian_ratio(&h, &[1.0, 1.0, 1.0]).unwrap() > 0.0);
        let opts = SampleOptions {
            trials: 50,
            region: SampleRegion::Box {
                center: vec![1.0; 3],
                radius: 0.1,
            },
            ..SampleOptions::default()
        };
        assert!(!sampled_log_concavity(&h, &opts).passes());
    }

    #[test]
    fn sum_of_squares_fails() {
        let h = &(&v(2, 0) * &v(2, 0)) + &(&v(2, 1) * &v(2, 1));
        assert!(!sampled_log_concavity(&h, &SampleOptions::default()).passes());
    }
}
