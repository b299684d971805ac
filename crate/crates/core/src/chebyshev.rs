//! Chebyshev interpolation on an interval, with exact series differentiation.
//!
//! Used to cache the radial Fourier transform ĥ(k) of hopping functions so
//! that parameter extraction and the decay-bound checker can evaluate ĥ, ĥ'
//! and ĥ'' at many momenta without re-integrating.

/// Chebyshev series c_0/2 + Σ_{k≥1} c_k T_k mapped to `[lo, hi]`.
#[derive(Debug, Clone)]
pub struct Chebyshev {
    lo: f64,
    hi: f64,
    coeffs: Vec<f64>,
}

impl Chebyshev {
    /// Interpolate `f` at `n` Chebyshev nodes on `[lo, hi]`.
    pub fn fit(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> Self {
        assert!(n >= 2 && hi > lo);
        let mid = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo);
        let vals: Vec<f64> = (0..n)
            .map(|j| {
                let x = (std::f64::consts::PI * (j as f64 + 0.5) / n as f64).cos();
                f(mid + half * x)
            })
            .collect();
        let mut coeffs = vec![0.0; n];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let mut sum = 0.0;
            for (j, v) in vals.iter().enumerate() {
                sum += v * (std::f64::consts::PI * k as f64 * (j as f64 + 0.5) / n as f64).cos();
            }
            *c = 2.0 * sum / n as f64;
        }
        Chebyshev { lo, hi, coeffs }
    }

    /// Clenshaw evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        let t = (2.0 * x - self.lo - self.hi) / (self.hi - self.lo);
        let mut b1 = 0.0;
        let mut b2 = 0.0;
        for &c in self.coeffs.iter().skip(1).rev() {
            let b0 = 2.0 * t * b1 - b2 + c;
            b2 = b1;
            b1 = b0;
        }
        t * b1 - b2 + 0.5 * self.coeffs[0]
    }

    /// Series of the derivative, using d_{k-1} = d_{k+1} + 2k c_k downward
    /// (d_{n-1} = 0), then rescaling for the interval map.
    pub fn derivative(&self) -> Chebyshev {
        let n = self.coeffs.len();
        let mut d = vec![0.0; n];
        for k in (1..n).rev() {
            let dk1 = if k + 1 < n { d[k + 1] } else { 0.0 };
            d[k - 1] = dk1 + 2.0 * k as f64 * self.coeffs[k];
        }
        let scale = 2.0 / (self.hi - self.lo);
        for c in d.iter_mut() {
            *c *= scale;
        }
        Chebyshev { lo: self.lo, hi: self.hi, coeffs: d }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}
