//! Bessel functions J0 and J1.
//!
//! Power series below the crossover radius, Hankel asymptotic expansion
//! above it.  Coefficients of the asymptotic series are generated by the
//! recurrence a_k = a_{k−1} (4ν² − (2k−1)²) / (8k), so no tabulated
//! constants are needed.  Absolute accuracy is a few 1e-14 over the range
//! used by the radial transforms.

const CROSSOVER: f64 = 11.0;

/// J0(x).
pub fn j0(x: f64) -> f64 {
    let x = x.abs();
    if x < CROSSOVER {
        series(0, x)
    } else {
        asymptotic(0, x)
    }
}

/// J1(x); odd in x.
pub fn j1(x: f64) -> f64 {
    let ax = x.abs();
    let v = if ax < CROSSOVER { series(1, ax) } else { asymptotic(1, ax) };
    if x < 0.0 {
        -v
    } else {
        v
    }
}

/// Ascending series J_ν(x) = (x/2)^ν Σ_k (−x²/4)^k / (k! (k+ν)!).
fn series(nu: u32, x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = if nu == 0 { 1.0 } else { 0.5 * x };
    let mut sum = term;
    let mut k = 1.0f64;
    loop {
        term *= q / (k * (k + nu as f64));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-3) || k > 80.0 {
            return sum;
        }
        k += 1.0;
    }
}

/// Hankel expansion J_ν(x) ≈ √(2/πx) [P cos χ − Q sin χ], χ = x − νπ/2 − π/4,
/// summed to the smallest term.
fn asymptotic(nu: u32, x: f64) -> f64 {
    let four_nu2 = 4.0 * (nu * nu) as f64;
    let mut a = 1.0f64; // a_0
    let mut p = 1.0;
    let mut q = 0.0;
    let mut last = f64::INFINITY;
    for k in 1..40u32 {
        let m = (2 * k - 1) as f64;
        a *= (four_nu2 - m * m) / (8.0 * k as f64 * x);
        if a.abs() >= last {
            break; // asymptotic series started diverging
        }
        last = a.abs();
        let sgn = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 1 {
            q += sgn * a;
        } else {
            p += sgn * a;
        }
        if a.abs() < 1e-17 {
            break;
        }
    }
    let chi = x - (nu as f64) * std::f64::consts::FRAC_PI_2 - std::f64::consts::FRAC_PI_4;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}
