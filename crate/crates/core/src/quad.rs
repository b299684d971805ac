//! Adaptive panel quadrature.
//!
//! Each panel is integrated with a 15-point Gauss–Legendre rule whose nodes
//! are found at runtime by Newton iteration on the Legendre recurrence.  A
//! panel's error is estimated by comparing against its two halves; panels
//! are split until the estimate meets the requested absolute tolerance.

use crate::{Error, Result};
use std::sync::OnceLock;

const NPTS: usize = 15;

struct Rule {
    nodes: [f64; NPTS],
    weights: [f64; NPTS],
}

fn rule() -> &'static Rule {
    static RULE: OnceLock<Rule> = OnceLock::new();
    RULE.get_or_init(|| {
        let mut nodes = [0.0; NPTS];
        let mut weights = [0.0; NPTS];
        let n = NPTS;
        for i in 0..n {
            // Chebyshev-like initial guess, refined by Newton on P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre(n, x);
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        Rule { nodes, weights }
    })
}

/// Legendre polynomial P_n and derivative at x via the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn panel(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let r = rule();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for i in 0..NPTS {
        sum += r.weights[i] * f(mid + half * r.nodes[i]);
    }
    sum * half
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    /// Achieved error estimate (sum of accepted panel estimates).
    pub error_estimate: f64,
}

/// Integrate `f` over `[a, b]` to absolute tolerance `abs_tol`.
/// `initial_step` bounds the first panel width, which keeps oscillatory
/// integrands resolved from the start.
pub fn integrate(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    abs_tol: f64,
    initial_step: f64,
) -> Result<Quadrature> {
    if !(b >= a) {
        return Err(Error::domain("integration interval is reversed"));
    }
    if a == b {
        return Ok(Quadrature { value: 0.0, error_estimate: 0.0 });
    }
    let npanel = ((b - a) / initial_step.max(1e-12)).ceil().max(1.0) as usize;
    let npanel = npanel.min(1 << 16);
    let tol_per = abs_tol / npanel as f64;
    let mut value = 0.0;
    let mut err = 0.0;
    let width = (b - a) / npanel as f64;
    for i in 0..npanel {
        let lo = a + i as f64 * width;
        let hi = if i + 1 == npanel { b } else { lo + width };
        let (v, e) = refine(&f, lo, hi, panel(&f, lo, hi), tol_per, 0)?;
        value += v;
        err += e;
    }
    if err > abs_tol * 10.0 {
        return Err(Error::numerics(format!(
            "quadrature did not converge: error estimate {err:.3e} exceeds tolerance {abs_tol:.3e}"
        )));
    }
    Ok(Quadrature { value, error_estimate: err })
}

fn refine(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> Result<(f64, f64)> {
    let mid = 0.5 * (a + b);
    let left = panel(f, a, mid);
    let right = panel(f, mid, b);
    let est = (left + right - whole).abs();
    if est <= tol || depth >= 30 {
        if depth >= 30 && est > tol {
            return Err(Error::numerics(format!(
                "quadrature panel [{a}, {b}] stalled at error estimate {est:.3e}"
            )));
        }
        return Ok((left + right, est));
    }
    let (vl, el) = refine(f, a, mid, left, 0.5 * tol, depth + 1)?;
    let (vr, er) = refine(f, mid, b, right, 0.5 * tol, depth + 1)?;
    Ok((vl + vr, el + er))
}
