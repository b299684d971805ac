//! Hopping functions and their radial Fourier (Hankel) transforms.
//!
//! The intralayer model is an in-plane Slater-Koster exponential (or a
//! tabulated shell model for tests).  Interlayer models come in three kinds:
//! the physical Slater-Koster function, and the two analytic families
//! exp(−γ√(r²+ℓ²)) and exp(−γ√(r²+ℓ²))/√(r²+ℓ²) whose transforms are known
//! in closed form and serve as quadrature oracles.  All continuum coupling
//! constants (w₁, w₂, w₃, w₁′, ζ, ξ, λ_i, μ_j) are extracted here.

use crate::bessel::{j0, j1};
use crate::chebyshev::Chebyshev;
use crate::geometry::ReciprocalData;
use crate::quad::integrate;
use crate::{rotation, Complex, Error, Result, Vec2};
use serde::{Deserialize, Serialize};

/// Absolute quadrature tolerance for ĥ(k), in eV·Å².
const HANKEL_ABS_TOL: f64 = 1e-10;
/// Stored couplings below this amplitude are dropped.
pub const DEFAULT_AMPLITUDE_CUTOFF: f64 = 1e-12;

// ---------------------------------------------------------------------------
// intralayer
// ---------------------------------------------------------------------------

/// In-plane hopping function h(r) of a single graphene sheet.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum IntralayerModel {
    /// h(r) = Vppπ · exp(−(|r| − a₀)/r₀)
    SlaterKosterInplane {
        v_pp_pi: f64,
        a0: f64,
        r0: f64,
        /// couplings with |h| below this are treated as zero
        amplitude_cutoff: f64,
    },
    /// Shell-resolved values: (distance, value) pairs, zero elsewhere.
    Tabulated { shells: Vec<(f64, f64)>, tolerance: f64 },
}

impl IntralayerModel {
    /// Physical monolayer parameters: Vppπ = −2.7 eV, a₀ = a/√3, r₀ = 0.319 a₀.
    pub fn physical(a: f64) -> Self {
        let a0 = a / 3f64.sqrt();
        IntralayerModel::SlaterKosterInplane {
            v_pp_pi: -2.7,
            a0,
            r0: 0.319 * a0,
            amplitude_cutoff: DEFAULT_AMPLITUDE_CUTOFF,
        }
    }

    /// Nearest-neighbor toy model with hopping `t` on the honeycomb lattice.
    pub fn nearest_neighbor(a: f64, t: f64) -> Self {
        IntralayerModel::Tabulated { shells: vec![(a / 3f64.sqrt(), t)], tolerance: 1e-6 }
    }

    /// Radial evaluation.  Exactly zero beyond the distance cutoff.
    pub fn eval_radial(&self, r: f64) -> f64 {
        match self {
            IntralayerModel::SlaterKosterInplane { v_pp_pi, a0, r0, amplitude_cutoff } => {
                let v = v_pp_pi * (-(r - a0) / r0).exp();
                if v.abs() < *amplitude_cutoff {
                    0.0
                } else {
                    v
                }
            }
            IntralayerModel::Tabulated { shells, tolerance } => shells
                .iter()
                .find(|(d, _)| (r - d).abs() <= *tolerance)
                .map(|&(_, v)| v)
                .unwrap_or(0.0),
        }
    }

    /// h(r) for a displacement vector; the models here are radial.
    pub fn eval(&self, r: Vec2) -> f64 {
        self.eval_radial(r.norm())
    }

    /// Distance beyond which the model evaluates to zero.
    pub fn distance_cutoff(&self) -> f64 {
        match self {
            IntralayerModel::SlaterKosterInplane { v_pp_pi, a0, r0, amplitude_cutoff } => {
                a0 + r0 * (v_pp_pi.abs() / amplitude_cutoff).ln()
            }
            IntralayerModel::Tabulated { shells, tolerance } => {
                shells.iter().map(|(d, _)| d + tolerance).fold(0.0, f64::max)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// interlayer
// ---------------------------------------------------------------------------

/// Radial interlayer hopping kinds.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum InterlayerKind {
    /// Slater-Koster with interlayer separation ℓ:
    /// Vppπ e^{−(s−a₀)/r₀} r²/s² + Vppσ e^{−(s−ℓ)/r₀} ℓ²/s², s = √(r²+ℓ²).
    SlaterKoster { v_pp_pi: f64, v_pp_sigma: f64, a0: f64, r0: f64, ell: f64 },
    /// e^{−γ√(r²+ℓ²)} (transform 2πγ e^{−ℓs}(1+ℓs)/s³, s = √(k²+γ²)).
    ExponentialB1 { gamma: f64, ell: f64 },
    /// e^{−γ√(r²+ℓ²)} / √(r²+ℓ²) (transform 2π e^{−ℓs}/s).
    Yukawa24 { gamma: f64, ell: f64 },
}

/// Angular factor ĥ_ang on the unit circle as a truncated Fourier series
/// a₀ + Σ_n (a_n cos nφ + b_n sin nφ) with complex coefficients.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AngularFactor {
    pub a0: Complex,
    pub cos_coeffs: Vec<Complex>,
    pub sin_coeffs: Vec<Complex>,
}

impl Default for AngularFactor {
    fn default() -> Self {
        AngularFactor { a0: Complex::new(1.0, 0.0), cos_coeffs: vec![], sin_coeffs: vec![] }
    }
}

impl AngularFactor {
    pub fn is_constant(&self) -> bool {
        self.cos_coeffs.iter().all(|c| c.norm() == 0.0)
            && self.sin_coeffs.iter().all(|c| c.norm() == 0.0)
    }

    /// Value at the unit vector with polar angle φ.
    pub fn eval(&self, phi: f64) -> Complex {
        let mut v = self.a0;
        for (n, c) in self.cos_coeffs.iter().enumerate() {
            v += c * ((n + 1) as f64 * phi).cos();
        }
        for (n, c) in self.sin_coeffs.iter().enumerate() {
            v += c * ((n + 1) as f64 * phi).sin();
        }
        v
    }

    /// Derivative with respect to counterclockwise rotation of the argument.
    pub fn eval_deriv(&self, phi: f64) -> Complex {
        let mut v = Complex::new(0.0, 0.0);
        for (n, c) in self.cos_coeffs.iter().enumerate() {
            let nf = (n + 1) as f64;
            v -= c * nf * (nf * phi).sin();
        }
        for (n, c) in self.sin_coeffs.iter().enumerate() {
            let nf = (n + 1) as f64;
            v += c * nf * (nf * phi).cos();
        }
        v
    }
}

/// Interlayer hopping model: radial kind, overall amplitude prefactor and
/// an angular factor applied to the transform.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InterlayerModel {
    pub kind: InterlayerKind,
    /// Overall prefactor multiplying the radial function (default 1).
    pub amplitude: f64,
    pub angular: AngularFactor,
    pub amplitude_cutoff: f64,
}

impl InterlayerModel {
    pub fn new(kind: InterlayerKind) -> Self {
        InterlayerModel {
            kind,
            amplitude: 1.0,
            angular: AngularFactor::default(),
            amplitude_cutoff: DEFAULT_AMPLITUDE_CUTOFF,
        }
    }

    /// Physical Slater-Koster interlayer hopping.  The interlayer distance of
    /// the reference parameter set is ℓ = 3.35 Å.
    pub fn physical(a: f64, ell: f64) -> Self {
        let a0 = a / 3f64.sqrt();
        Self::new(InterlayerKind::SlaterKoster {
            v_pp_pi: -2.7,
            v_pp_sigma: 0.48,
            a0,
            r0: 0.319 * a0,
            ell,
        })
    }

    /// The ε-normalized family of hopping functions
    /// h₁₂(r; ε) = e^{−γ√(r²+ℓ(ε)²)}/√(r²+ℓ(ε)²) with
    /// ℓ(ε) = −log(λ₀ ε √(|K|²+γ²) / 2π)/√(|K|²+γ²), so that the radial
    /// transform satisfies ĥ_rad(|K|; ε) = ε exactly.
    pub fn yukawa_normalized(gamma: f64, lambda0: f64, epsilon: f64, k_dirac: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::domain("epsilon must lie in (0,1)"));
        }
        let s = (k_dirac * k_dirac + gamma * gamma).sqrt();
        let arg = lambda0 * epsilon * s / (2.0 * std::f64::consts::PI);
        if !(arg > 0.0 && arg < 1.0) {
            return Err(Error::domain(format!(
                "normalization requires 0 < λ₀ ε √(|K|²+γ²)/2π < 1, got {arg}"
            )));
        }
        let ell = -arg.ln() / s;
        Ok(Self::new(InterlayerKind::Yukawa24 { gamma, ell }))
    }

    /// Radial real-space value h(r).
    pub fn eval_radial(&self, r: f64) -> f64 {
        let v = self.amplitude
            * match self.kind {
                InterlayerKind::SlaterKoster { v_pp_pi, v_pp_sigma, a0, r0, ell } => {
                    let s2 = r * r + ell * ell;
                    let s = s2.sqrt();
                    v_pp_pi * (-(s - a0) / r0).exp() * (r * r / s2)
                        + v_pp_sigma * (-(s - ell) / r0).exp() * (ell * ell / s2)
                }
                InterlayerKind::ExponentialB1 { gamma, ell } => {
                    (-gamma * (r * r + ell * ell).sqrt()).exp()
                }
                InterlayerKind::Yukawa24 { gamma, ell } => {
                    let s = (r * r + ell * ell).sqrt();
                    (-gamma * s).exp() / s
                }
            };
        if v.abs() < self.amplitude_cutoff {
            0.0
        } else {
            v
        }
    }

    /// Real-space value for a displacement.  Only defined for a constant
    /// angular factor (the angular dependence lives in momentum space).
    pub fn eval(&self, r: Vec2) -> Result<f64> {
        if !self.angular.is_constant() {
            return Err(Error::domain(
                "real-space evaluation requires a constant angular factor",
            ));
        }
        Ok(self.eval_radial(r.norm()) * self.angular.a0.re)
    }

    /// Distance beyond which |h| stays under the amplitude cutoff.
    pub fn distance_cutoff(&self) -> f64 {
        let mut r = 0.0;
        let mut peak: f64 = 0.0;
        // the radial kinds decay monotonically past their single maximum
        loop {
            let v = self.raw_radial(r).abs();
            peak = peak.max(v);
            if v < self.amplitude_cutoff && peak > 0.0 {
                return r;
            }
            r += 0.25;
            if r > 2000.0 {
                return r;
            }
        }
    }

    /// Radial value without the amplitude-cutoff clamp (used for envelopes).
    fn raw_radial(&self, r: f64) -> f64 {
        self.amplitude
            * match self.kind {
                InterlayerKind::SlaterKoster { v_pp_pi, v_pp_sigma, a0, r0, ell } => {
                    let s2 = r * r + ell * ell;
                    let s = s2.sqrt();
                    v_pp_pi * (-(s - a0) / r0).exp() * (r * r / s2)
                        + v_pp_sigma * (-(s - ell) / r0).exp() * (ell * ell / s2)
                }
                InterlayerKind::ExponentialB1 { gamma, ell } => {
                    (-gamma * (r * r + ell * ell).sqrt()).exp()
                }
                InterlayerKind::Yukawa24 { gamma, ell } => {
                    let s = (r * r + ell * ell).sqrt();
                    (-gamma * s).exp() / s
                }
            }
    }

    /// Upper integration limit: where the integrand envelope |h|·(r+1) drops
    /// below 1e-14 of its peak.
    pub fn integration_rmax(&self) -> f64 {
        let mut peak: f64 = 0.0;
        let mut r = 0.0;
        loop {
            let env = self.raw_radial(r).abs() * (r + 1.0);
            peak = peak.max(env);
            if peak > 0.0 && env < 1e-14 * peak {
                return r;
            }
            r += 0.25;
            if r > 4000.0 {
                return r;
            }
        }
    }

    /// Closed-form transform for the analytic families, if available.
    pub fn closed_form_transform(&self, k: f64) -> Option<f64> {
        match self.kind {
            InterlayerKind::Yukawa24 { gamma, ell } => {
                let s = (k * k + gamma * gamma).sqrt();
                Some(self.amplitude * 2.0 * std::f64::consts::PI * (-ell * s).exp() / s)
            }
            InterlayerKind::ExponentialB1 { gamma, ell } => {
                let s = (k * k + gamma * gamma).sqrt();
                Some(
                    self.amplitude
                        * 2.0
                        * std::f64::consts::PI
                        * gamma
                        * (-ell * s).exp()
                        * (1.0 + ell * s)
                        / (s * s * s),
                )
            }
            InterlayerKind::SlaterKoster { .. } => None,
        }
    }
}

// ---------------------------------------------------------------------------
// transforms
// ---------------------------------------------------------------------------

/// Radial transform ĥ(k) = 2π ∫₀^∞ h(r) J₀(kr) r dr of the radial part,
/// by adaptive quadrature.  eV·Å².
pub fn hankel_transform(model: &InterlayerModel, k: f64) -> Result<f64> {
    if k < 0.0 {
        return Err(Error::domain("hankel_transform requires k ≥ 0"));
    }
    let rmax = model.integration_rmax();
    let step = (std::f64::consts::PI / k.max(0.3)).min(1.0);
    let q = integrate(|r| model.eval_radial(r) * j0(k * r) * r, 0.0, rmax, HANKEL_ABS_TOL, step)?;
    Ok(2.0 * std::f64::consts::PI * q.value)
}

/// Radial derivative dĥ/dk = −2π ∫₀^∞ h(r) J₁(kr) r² dr.  eV·Å³.
pub fn hankel_derivative(model: &InterlayerModel, k: f64) -> Result<f64> {
    if !(k > 0.0) {
        return Err(Error::domain("hankel_derivative requires k > 0"));
    }
    let rmax = model.integration_rmax();
    let step = (std::f64::consts::PI / k.max(0.3)).min(1.0);
    let q = integrate(|r| model.eval_radial(r) * j1(k * r) * r * r, 0.0, rmax, HANKEL_ABS_TOL, step)?;
    Ok(-2.0 * std::f64::consts::PI * q.value)
}

/// Chebyshev cache of the radial transform over `[0, k_max]`, providing
/// ĥ, ĥ' and ĥ'' without repeated quadrature.
pub struct RadialTransformCache {
    pub value: Chebyshev,
    pub deriv: Chebyshev,
    pub second: Chebyshev,
}

impl RadialTransformCache {
    pub fn build(model: &InterlayerModel, k_max: f64, nodes: usize) -> Result<Self> {
        // fit on the quadrature transform; failures inside the closure are
        // deferred by returning NaN and checked afterwards
        let value = Chebyshev::fit(
            |k| hankel_transform(model, k.max(0.0)).unwrap_or(f64::NAN),
            0.0,
            k_max,
            nodes,
        );
        if value.eval(0.5 * k_max).is_nan() {
            return Err(Error::numerics("radial transform quadrature failed during cache build"));
        }
        let deriv = value.derivative();
        let second = deriv.derivative();
        Ok(RadialTransformCache { value, deriv, second })
    }
}

// ---------------------------------------------------------------------------
// coefficient extraction
// ---------------------------------------------------------------------------

/// Momentum-shell couplings and angular coefficients of the interlayer term.
#[derive(Debug, Clone, Serialize)]
pub struct InterlayerCoeffs {
    /// First-shell coupling ĥ(|K|)/|Γ|, eV.
    pub w1: f64,
    /// Second-shell coupling ĥ(2|K|)/|Γ|, eV.
    pub w2: f64,
    /// Third-shell coupling ĥ(√7|K|)/|Γ|, eV.
    pub w3: f64,
    /// Signed radial derivative ĥ'(|K|)/|Γ|, eV·Å.
    pub w1_prime: f64,
    /// ζ(ε) = ε⁻¹ ĥ_rad(2|K|; ε) under the ĥ_rad(|K|; ε) = ε normalization.
    pub zeta: f64,
    /// ξ(ε) = ĥ_rad'(|K|; ε) under the same normalization, Å.
    pub xi: f64,
    /// Per-direction first-shell couplings λ_i = ĥ(𝔯_{πi/3} K)/(ε|Γ|), eV.
    pub lambda: [Complex; 6],
    /// Angular-derivative couplings μ_j, eV·Å; the physical tangential
    /// coefficient of the second-order model is ε·μ_j.
    pub mu: [Complex; 3],
}

/// Extract all interlayer continuum couplings.
pub fn extract_interlayer_coeffs(
    model: &InterlayerModel,
    recip: &ReciprocalData,
    epsilon: f64,
) -> Result<InterlayerCoeffs> {
    let kn = recip.k_dirac.norm();
    let area = recip.cell_area;
    let rad_k = hankel_transform(model, kn)?;
    let rad_2k = hankel_transform(model, 2.0 * kn)?;
    let rad_s7k = hankel_transform(model, 7f64.sqrt() * kn)?;
    let rad_dk = hankel_derivative(model, kn)?;
    let mut lambda = [Complex::new(0.0, 0.0); 6];
    for (i, l) in lambda.iter_mut().enumerate() {
        let phi = std::f64::consts::PI * i as f64 / 3.0;
        *l = model.angular.eval(phi) * rad_k / (epsilon * area);
    }
    let mut mu = [Complex::new(0.0, 0.0); 3];
    for (j, m) in mu.iter_mut().enumerate() {
        let phi = 2.0 * std::f64::consts::PI * j as f64 / 3.0;
        *m = model.angular.eval_deriv(phi) * rad_k / (kn * epsilon * area);
    }
    let ang0 = model.angular.a0.re;
    let (zeta, xi) = if rad_k.abs() > 0.0 {
        (rad_2k / rad_k, epsilon * rad_dk / rad_k)
    } else {
        (0.0, 0.0)
    };
    Ok(InterlayerCoeffs {
        w1: ang0 * rad_k / area,
        w2: ang0 * rad_2k / area,
        w3: ang0 * rad_s7k / area,
        w1_prime: ang0 * rad_dk / area,
        zeta,
        xi,
        lambda,
        mu,
    })
}

/// Calibration constant of ℓ(ε) = γ |log ε| fixed by ℓ(ε₀) = ℓ₀.
pub fn calibrate_gamma(eps0: f64, ell0: f64) -> f64 {
    ell0 / eps0.ln().abs()
}

/// Interlayer separation schedule ℓ(ε) = γ_cal |log ε|.
pub fn ell_of_epsilon(epsilon: f64, gamma_cal: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::domain(format!("ell_of_epsilon requires 0 < ε < 1, got {epsilon}")));
    }
    Ok(gamma_cal * epsilon.ln().abs())
}

// ---------------------------------------------------------------------------
// decay-bound checker
// ---------------------------------------------------------------------------

/// Result of evaluating one decay-bound family on the (ε, k) grids.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub name: String,
    /// Smallest constant C making the bound hold on the grids.
    pub c_min: f64,
    pub pass: bool,
}

/// Report of the normalization and decay-bound checks for a hopping family.
#[derive(Debug, Clone, Serialize)]
pub struct AssumptionReport {
    pub eta: f64,
    pub nu: f64,
    /// ĥ_rad(|K|; ε) = ε can be imposed for every ε on the grid.
    pub normalization_ok: bool,
    /// worst relative defect of the normalization before rescaling
    pub normalization_defect: f64,
    pub bounds: Vec<BoundCheck>,
}

/// Evaluate the normalization and the four decay-bound families for the
/// model family `model_of_eps` over `eps_grid` × `k_grid`, reporting the
/// smallest admissible constants against the cap `c_cap`.
pub fn check_assumption(
    model_of_eps: impl Fn(f64) -> InterlayerModel,
    k_dirac: f64,
    eta: f64,
    nu: f64,
    eps_grid: &[f64],
    k_grid: &[f64],
    c_cap: f64,
) -> Result<AssumptionReport> {
    if eps_grid.is_empty() || k_grid.is_empty() {
        return Err(Error::domain("assumption check requires nonempty grids"));
    }
    let kn = k_dirac;
    let k_max = k_grid.iter().cloned().fold(0.0, f64::max).max(7f64.sqrt() * kn) * 1.05;

    let mut normalization_ok = true;
    let mut normalization_defect = 0.0f64;
    // family accumulators: (sum bound, threshold factor, exponent p(k))
    let mut c_all: f64 = 0.0;
    let mut c_eta: f64 = 0.0;
    let mut c_half: f64 = 0.0;
    let mut c_sqrt7: f64 = 0.0;
    let mut c_deriv_k: f64 = 0.0;
    let mut c_rad_2k: f64 = 0.0;

    for &eps in eps_grid {
        let model = model_of_eps(eps);
        let cache = RadialTransformCache::build(&model, k_max, 160)?;
        let at_k = cache.value.eval(kn);
        if at_k == 0.0 {
            normalization_ok = false;
            normalization_defect = f64::INFINITY;
            continue;
        }
        // normalized transform: n(k) = ε ĥ(k)/ĥ(|K|), exact at |K| by construction
        let scale = eps / at_k;
        normalization_defect = normalization_defect.max((scale * at_k - eps).abs() / eps);
        let n_val = |k: f64| cache.value.eval(k) * scale;
        let n_d1 = |k: f64| cache.deriv.eval(k) * scale;
        let n_d2 = |k: f64| cache.second.eval(k) * scale;

        // neighbor bounds at the two fixed shells
        c_deriv_k = c_deriv_k.max(n_d1(kn).abs() / eps.powf(0.5 * (1.0 + eta)));
        c_rad_2k = c_rad_2k.max(n_val(2.0 * kn).abs() / eps.powf(0.5 * (3.0 + eta)));

        for &k in k_grid {
            let s3 = n_val(k).abs() + n_d1(k).abs() + n_d2(k).abs();
            let s2 = n_val(k).abs() + n_d1(k).abs();
            let s1 = n_val(k).abs();
            c_all = c_all.max(s3);
            if k >= (1.0 - nu) * kn {
                c_eta = c_eta.max(c_from_bound(s3, eta * k / kn, eps));
            }
            if k >= (1.0 - nu) * 2.0 * kn {
                c_half = c_half.max(c_from_bound(s2, 0.5 * (1.0 + eta) * k / kn, eps));
            }
            if k >= (1.0 - nu) * 7f64.sqrt() * kn {
                c_sqrt7 = c_sqrt7.max(c_from_bound(s1, (2.0 + eta) / 7f64.sqrt() * k / kn, eps));
            }
        }
    }

    let mk = |name: &str, c: f64| BoundCheck { name: name.to_string(), c_min: c, pass: c <= c_cap };
    Ok(AssumptionReport {
        eta,
        nu,
        normalization_ok,
        normalization_defect,
        bounds: vec![
            mk("derivative at |K| <= C eps^((1+eta)/2)", c_deriv_k),
            mk("value at 2|K| <= C eps^((3+eta)/2)", c_rad_2k),
            mk("uniform bound on value+deriv+second", c_all),
            mk("family eta: S <= C (C eps)^(eta k/|K|)", c_eta),
            mk("family (1+eta)/2: S <= C (C eps)^((1+eta)k/2|K|)", c_half),
            mk("family (2+eta)/sqrt7: S <= C (C eps)^((2+eta)k/(sqrt7 |K|))", c_sqrt7),
        ],
    })
}

/// Smallest C with S ≤ C (Cε)^p, i.e. log C = (log S − p log ε)/(1 + p).
fn c_from_bound(s: f64, p: f64, eps: f64) -> f64 {
    if s <= 0.0 {
        return 0.0;
    }
    ((s.ln() - p * eps.ln()) / (1.0 + p)).exp()
}

/// Direction vectors 𝔯_{2π(n−1)/3} K̂ of the gradient couplings w'_n.
pub fn gradient_directions() -> [Vec2; 3] {
    let k_hat = Vec2::new(1.0, 0.0);
    [
        k_hat,
        rotation(2.0 * std::f64::consts::PI / 3.0) * k_hat,
        rotation(4.0 * std::f64::consts::PI / 3.0) * k_hat,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{reciprocal_data, LatticeSpec};
    use approx::assert_relative_eq;

    const A: f64 = 2.4595;

    fn recip() -> ReciprocalData {
        reciprocal_data(&LatticeSpec::symmetric(A, 1.05f64.to_radians(), 0.05).unwrap())
    }

    #[test]
    fn intralayer_at_bond_length_gives_v_pp_pi() {
        let m = IntralayerModel::physical(A);
        let a0 = A / 3f64.sqrt();
        assert_relative_eq!(m.eval_radial(a0), -2.7, max_relative = 1e-14);
        // r = 0 evaluates the bare formula
        assert_relative_eq!(m.eval_radial(0.0), -2.7 * (a0 / (0.319 * a0)).exp(), max_relative = 1e-12);
        // zero beyond the cutoff
        assert_eq!(m.eval_radial(m.distance_cutoff() + 0.5), 0.0);
    }

    #[test]
    fn interlayer_at_origin_is_v_pp_sigma() {
        let m = InterlayerModel::physical(A, 3.35);
        assert_relative_eq!(m.eval(Vec2::zeros()).unwrap(), 0.48, max_relative = 1e-14);
    }

    #[test]
    fn interlayer_b1_is_bare_exponential() {
        let m = InterlayerModel::new(InterlayerKind::ExponentialB1 { gamma: 0.8, ell: 2.0 });
        let r = Vec2::new(1.3, -0.4);
        let s = (r.norm_squared() + 4.0).sqrt();
        assert_relative_eq!(m.eval(r).unwrap(), (-0.8 * s).exp(), max_relative = 1e-14);
    }

    #[test]
    fn interlayer_decay_envelope() {
        // |h| drops below 1e-12 |Vppπ| past 60 Å for the physical model at ℓ = 3.5
        let m = InterlayerModel::physical(A, 3.5);
        assert!(m.eval_radial(60.0).abs() < 1e-12 * 2.7);
        assert!(m.distance_cutoff() < 60.0);
    }

    #[test]
    fn hankel_matches_yukawa_closed_form() {
        let m = InterlayerModel::new(InterlayerKind::Yukawa24 { gamma: 0.7, ell: 2.2 });
        let kn = recip().k_dirac.norm();
        for i in 0..12 {
            let k = 3.0 * kn * i as f64 / 11.0;
            let want = m.closed_form_transform(k).unwrap();
            let got = hankel_transform(&m, k).unwrap();
            assert!(
                (got - want).abs() <= 1e-8 * want.abs().max(1e-6),
                "k = {k}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn hankel_matches_exponential_b1_closed_form() {
        let m = InterlayerModel::new(InterlayerKind::ExponentialB1 { gamma: 0.9, ell: 1.8 });
        let kn = recip().k_dirac.norm();
        for i in 0..12 {
            let k = 3.0 * kn * i as f64 / 11.0;
            let want = m.closed_form_transform(k).unwrap();
            let got = hankel_transform(&m, k).unwrap();
            assert!(
                (got - want).abs() <= 1e-8 * want.abs().max(1e-6),
                "k = {k}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn hankel_zero_momentum_against_trapezoid_oracle() {
        let m = InterlayerModel::physical(A, 3.5);
        let got = hankel_transform(&m, 0.0).unwrap();
        // independent fixed-grid trapezoid oracle
        let rmax = 80.0;
        let n = 160_000;
        let h = rmax / n as f64;
        let mut sum = 0.0;
        for i in 0..=n {
            let r = i as f64 * h;
            let w = if i == 0 || i == n { 0.5 } else { 1.0 };
            sum += w * m.eval_radial(r) * r;
        }
        let oracle = 2.0 * std::f64::consts::PI * sum * h;
        assert!((got - oracle).abs() / oracle.abs() < 1e-6, "{got} vs {oracle}");
    }

    #[test]
    fn hankel_derivative_against_closed_form_and_finite_difference() {
        let m = InterlayerModel::new(InterlayerKind::Yukawa24 { gamma: 0.7, ell: 2.2 });
        let kn = recip().k_dirac.norm();
        // analytic derivative of 2π e^{-ℓ s}/s, s = √(k²+γ²)
        let (gamma, ell) = (0.7, 2.2);
        let s = (kn * kn + gamma * gamma).sqrt();
        let want = 2.0 * std::f64::consts::PI * (-ell * s).exp() / s * (-ell * kn / s - kn / (s * s));
        let got = hankel_derivative(&m, kn).unwrap();
        assert!((got - want).abs() / want.abs() < 1e-7, "{got} vs {want}");
        // central finite difference of the quadrature transform
        let hstep = 1e-4;
        let fd = (hankel_transform(&m, kn + hstep).unwrap()
            - hankel_transform(&m, kn - hstep).unwrap())
            / (2.0 * hstep);
        assert!((got - fd).abs() / got.abs() < 1e-6, "{got} vs fd {fd}");
    }

    #[test]
    fn physical_couplings_match_reference_table() {
        // w₁ = 110.85 meV, w₂ = 1.56 meV, w₃ = 0.06 meV, |w₁'| = 226.15 meV·Å
        let r = recip();
        let m = InterlayerModel::physical(A, 3.35);
        let c = extract_interlayer_coeffs(&m, &r, 0.05).unwrap();
        assert!((c.w1 * 1e3 - 110.85).abs() / 110.85 < 0.01, "w1 = {}", c.w1 * 1e3);
        assert!((c.w2 * 1e3 - 1.56).abs() / 1.56 < 0.03, "w2 = {}", c.w2 * 1e3);
        assert!((c.w3 * 1e3 - 0.06).abs() / 0.06 < 0.15, "w3 = {}", c.w3 * 1e3);
        assert!((c.w1_prime.abs() * 1e3 - 226.15).abs() / 226.15 < 0.01, "w1' = {}", c.w1_prime * 1e3);
    }

    #[test]
    fn radial_model_has_equal_lambdas_and_zero_mu() {
        let r = recip();
        let m = InterlayerModel::physical(A, 3.35);
        let c = extract_interlayer_coeffs(&m, &r, 0.05).unwrap();
        for l in &c.lambda {
            assert!((l - c.lambda[0]).norm() < 1e-14);
        }
        for mu in &c.mu {
            assert!(mu.norm() < 1e-14);
        }
    }

    #[test]
    fn zero_model_gives_zero_couplings() {
        let mut m = InterlayerModel::physical(A, 3.35);
        m.amplitude = 0.0;
        let c = extract_interlayer_coeffs(&m, &recip(), 0.05).unwrap();
        assert_eq!(c.w1, 0.0);
        assert_eq!(c.w2, 0.0);
        assert_eq!(c.w3, 0.0);
        assert_eq!(c.w1_prime, 0.0);
        assert!(c.lambda.iter().all(|l| l.norm() == 0.0));
    }

    #[test]
    fn yukawa_normalization_is_exact() {
        let kn = recip().k_dirac.norm();
        for eps in [0.05, 0.1, 0.2] {
            let m = InterlayerModel::yukawa_normalized(0.7, 1.0, eps, kn).unwrap();
            let got = m.closed_form_transform(kn).unwrap();
            // ĥ(|K|) = λ₀ ε with λ₀ = 1
            assert_relative_eq!(got, eps, max_relative = 1e-12);
        }
    }

    #[test]
    fn ell_schedule() {
        let gamma = calibrate_gamma(0.05, 3.5);
        assert_relative_eq!(ell_of_epsilon(0.05, gamma).unwrap(), 3.5, max_relative = 1e-14);
        assert_relative_eq!(
            ell_of_epsilon(0.05f64 * 0.05, gamma).unwrap(),
            7.0,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            ell_of_epsilon(0.1, gamma).unwrap(),
            gamma * 0.1f64.ln().abs(),
            max_relative = 1e-14
        );
        assert!(ell_of_epsilon(1.2, gamma).is_err());
    }

    #[test]
    fn assumption_checker_accepts_small_gamma_yukawa() {
        let kn = recip().k_dirac.norm();
        let eta = 0.5; // below √7 − 2 ≈ 0.6458 and below η₊(γ)
        let family = |eps: f64| InterlayerModel::yukawa_normalized(0.2, 1.0, eps, kn).unwrap();
        let k_grid: Vec<f64> = (0..40).map(|i| 3.0 * kn * i as f64 / 39.0).collect();
        let report =
            check_assumption(family, kn, eta, 0.5, &[0.02, 0.05, 0.1], &k_grid, 30.0).unwrap();
        assert!(report.normalization_ok);
        assert!(report.normalization_defect < 1e-9);
        for b in &report.bounds {
            assert!(b.pass, "bound failed: {} with C = {}", b.name, b.c_min);
        }
    }

    #[test]
    fn assumption_checker_zero_model() {
        let kn = recip().k_dirac.norm();
        let family = |_eps: f64| {
            let mut m = InterlayerModel::physical(A, 3.35);
            m.amplitude = 0.0;
            m
        };
        let k_grid: Vec<f64> = (0..10).map(|i| 3.0 * kn * i as f64 / 9.0).collect();
        let report = check_assumption(family, kn, 0.5, 0.5, &[0.05], &k_grid, 1.0).unwrap();
        assert!(!report.normalization_ok, "zero model cannot satisfy the normalization");
    }

    #[test]
    fn energy_scales_physical_values() {
        // v|ΔK| ∈ [160,180] meV, |w₁'ΔK| ∈ [6,9] meV, w₂ ∈ [1,2.5] meV
        let r = recip();
        let m = InterlayerModel::physical(A, 3.35);
        let c = extract_interlayer_coeffs(&m, &r, 0.05).unwrap();
        let dk = (r.k1 - r.k2).norm();
        let v = 5.23;
        assert!((0.160..=0.180).contains(&(v * dk)), "v dK = {}", v * dk);
        let w1p_dk = c.w1_prime.abs() * dk * 1e3;
        assert!((6.0..=9.0).contains(&w1p_dk), "w1' dK = {w1p_dk} meV");
        assert!((1.0..=2.5).contains(&(c.w2 * 1e3)), "w2 = {}", c.w2 * 1e3);
        let vd_dk2 = 1.12 * dk * dk * 1e3;
        let vo_dk2 = 2.25 * dk * dk * 1e3;
        assert!((0.5..=2.5).contains(&vd_dk2));
        assert!((0.5..=2.5).contains(&vo_dk2));
    }
}
