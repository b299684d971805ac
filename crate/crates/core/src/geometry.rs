//! Monolayer and twisted-bilayer lattice geometry.
//!
//! The monolayer is a honeycomb lattice with Bravais vectors
//! a1 = (a/2, √3a/2), a2 = (−a/2, √3a/2) and two sublattice sites per cell
//! obeying τ^A − τ^B = (0, −a/√3).  Layer j ∈ {1,2} is rotated by
//! θ_j/2 = (−1)^j θ/2 and shifted by ±𝔡/2 before the rotation.  The twist is
//! parametrized as 2 sin(θ/2) = βε with a dimensionless small parameter ε.

use crate::{rotation, Error, Mat2, Result, Vec2};
use serde::{Deserialize, Serialize};

/// Bilayer lattice parameters.  All lengths in Å, angles in radians.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LatticeSpec {
    /// Monolayer lattice constant.
    pub a: f64,
    /// Sublattice-A offset within the unit cell.
    pub tau_a: Vec2,
    /// Sublattice-B offset, fixed by τ^B = τ^A + (0, a/√3).
    pub tau_b: Vec2,
    /// Interlayer displacement 𝔡 (applied as ±𝔡/2 before twisting).
    pub dshift: Vec2,
    /// Relative twist angle θ.
    pub theta: f64,
    /// Dimensionless small parameter ε.
    pub epsilon: f64,
    /// Twist coefficient β with 2 sin(θ/2) = βε.
    pub beta: f64,
}

impl LatticeSpec {
    /// Build a spec from (a, θ, ε, τ^A, 𝔡); β is derived so the twist
    /// parametrization holds exactly.
    pub fn new(a: f64, theta: f64, epsilon: f64, tau_a: Vec2, dshift: Vec2) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::domain(format!("lattice constant a = {a} must be positive")));
        }
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::domain(format!("epsilon = {epsilon} must lie in (0, 1)")));
        }
        let beta = 2.0 * (theta / 2.0).sin() / epsilon;
        let tau_b = tau_a + Vec2::new(0.0, a / 3f64.sqrt());
        Ok(LatticeSpec { a, tau_a, tau_b, dshift, theta, epsilon, beta })
    }

    /// The symmetric configuration τ^A = (a/2, −a/(2√3)), 𝔡 = 0, for which
    /// the discrete point symmetries about the origin are exact.
    pub fn symmetric(a: f64, theta: f64, epsilon: f64) -> Result<Self> {
        let tau_a = Vec2::new(a / 2.0, -a / (2.0 * 3f64.sqrt()));
        Self::new(a, theta, epsilon, tau_a, Vec2::zeros())
    }

    /// Monolayer Bravais vectors (a1, a2).
    pub fn bravais(&self) -> (Vec2, Vec2) {
        let s3 = 3f64.sqrt();
        (
            Vec2::new(0.5 * self.a, 0.5 * s3 * self.a),
            Vec2::new(-0.5 * self.a, 0.5 * s3 * self.a),
        )
    }

    /// Unit-cell area |Γ| = (√3/2) a².
    pub fn cell_area(&self) -> f64 {
        3f64.sqrt() / 2.0 * self.a * self.a
    }

    /// Layer rotation angle θ_j/2 with θ_j = (−1)^j θ.
    pub fn layer_half_angle(&self, layer: u8) -> f64 {
        debug_assert!(layer == 1 || layer == 2);
        if layer == 1 {
            -self.theta / 2.0
        } else {
            self.theta / 2.0
        }
    }

    /// Sublattice offset τ_j^σ = 𝔯_{θ_j/2} (τ^σ + (−1)^j 𝔡/2).
    pub fn tau(&self, layer: u8, sublattice: Sublattice) -> Vec2 {
        let tau = match sublattice {
            Sublattice::A => self.tau_a,
            Sublattice::B => self.tau_b,
        };
        let sign = if layer == 1 { -1.0 } else { 1.0 };
        rotation(self.layer_half_angle(layer)) * (tau + 0.5 * sign * self.dshift)
    }
}

/// Reciprocal vectors, Dirac points, interlayer shift vectors and the moiré
/// lattice derived from a [`LatticeSpec`].
#[derive(Debug, Clone)]
pub struct ReciprocalData {
    pub b1: Vec2,
    pub b2: Vec2,
    /// Dirac point K = (4π/3a)(1, 0); K' = −K.
    pub k_dirac: Vec2,
    pub k_dirac_prime: Vec2,
    /// Layer Dirac points K_j = 𝔯_{θ_j/2} K.
    pub k1: Vec2,
    pub k2: Vec2,
    /// Dimensionless interlayer shifts s_1, s_2, s_3 (s_{j+1} = 𝔯_{2π/3} s_j).
    pub s: [Vec2; 3],
    /// Physical shifts 𝔰_n = ε s_n.
    pub s_phys: [Vec2; 3],
    /// Physical moiré lattice vectors, |a_m| = a / (2 sin(θ/2)).
    pub am1: Vec2,
    pub am2: Vec2,
    /// Moiré reciprocal vectors chosen dual to (am1, am2): b_{m,i}·a_{m,j} = 2π δ_ij.
    pub bm1: Vec2,
    pub bm2: Vec2,
    /// Monolayer unit-cell area |Γ|.
    pub cell_area: f64,
    /// Moiré unit-cell area.
    pub moire_cell_area: f64,
}

/// All reciprocal-space data for a valid spec.
pub fn reciprocal_data(spec: &LatticeSpec) -> ReciprocalData {
    let (a1, a2) = spec.bravais();
    let (b1, b2) = dual_pair(a1, a2);
    let k_dirac = Vec2::new(4.0 * std::f64::consts::PI / (3.0 * spec.a), 0.0);
    let k1 = rotation(spec.layer_half_angle(1)) * k_dirac;
    let k2 = rotation(spec.layer_half_angle(2)) * k_dirac;
    let s1 = Vec2::new(0.0, -4.0 * std::f64::consts::PI * spec.beta / (3.0 * spec.a));
    let r120 = rotation(2.0 * std::f64::consts::PI / 3.0);
    let s = [s1, r120 * s1, r120 * (r120 * s1)];
    let s_phys = [s[0] * spec.epsilon, s[1] * spec.epsilon, s[2] * spec.epsilon];
    let s3 = 3f64.sqrt();
    let amag = spec.a / (spec.beta * spec.epsilon);
    let am1 = amag * Vec2::new(0.5 * s3, 0.5);
    let am2 = amag * Vec2::new(-0.5 * s3, 0.5);
    let (bm1, bm2) = dual_pair(am1, am2);
    ReciprocalData {
        b1,
        b2,
        k_dirac,
        k_dirac_prime: -k_dirac,
        k1,
        k2,
        s,
        s_phys,
        am1,
        am2,
        bm1,
        bm2,
        cell_area: spec.cell_area(),
        moire_cell_area: (am1.x * am2.y - am1.y * am2.x).abs(),
    }
}

/// Reciprocal pair with b_i · a_j = 2π δ_ij.
fn dual_pair(a1: Vec2, a2: Vec2) -> (Vec2, Vec2) {
    let det = a1.x * a2.y - a1.y * a2.x;
    let f = 2.0 * std::f64::consts::PI / det;
    (Vec2::new(a2.y, -a2.x) * f, Vec2::new(-a1.y, a1.x) * f)
}

/// High-symmetry momenta of the moiré Brillouin zone, in the envelope
/// convention where the layer-1 Dirac point sits at zero.
#[derive(Debug, Clone, Copy)]
pub struct MoirePath {
    /// Moiré Dirac point K_m (layer-1 cone).
    pub k_m: Vec2,
    /// Second Dirac point K'_m = −𝔰_1 (layer-2 cone).
    pub k_m_prime: Vec2,
    /// Zone center Γ_m.
    pub gamma_m: Vec2,
    /// Edge midpoint M_m.
    pub m_m: Vec2,
}

/// Construct the K_m, Γ_m, M_m points used for band-structure paths.
pub fn moire_high_symmetry(recip: &ReciprocalData) -> MoirePath {
    let k_m = Vec2::zeros();
    let k_m_prime = -recip.s_phys[0];
    // Γ_m is the center of the hexagon having K_m and K'_m as adjacent corners.
    let gamma_m = k_m + rotation(-std::f64::consts::PI / 3.0) * (k_m_prime - k_m);
    let m_m = 0.5 * (k_m + k_m_prime);
    MoirePath { k_m, k_m_prime, gamma_m, m_m }
}

/// Piecewise-linear momentum path with cumulative arclength.
#[derive(Debug, Clone)]
pub struct KPath {
    pub points: Vec<Vec2>,
    pub arclength: Vec<f64>,
    /// Index into `points` where each input vertex lands.
    pub vertex_indices: Vec<usize>,
}

/// Sample a piecewise-linear path through `vertices`, `samples_per_segment`
/// points per segment plus the final endpoint.
pub fn kpath(vertices: &[Vec2], samples_per_segment: usize) -> Result<KPath> {
    if vertices.len() < 2 {
        return Err(Error::domain("kpath needs at least two vertices"));
    }
    if samples_per_segment == 0 {
        return Err(Error::domain("kpath needs at least one sample per segment"));
    }
    let mut points = Vec::new();
    let mut arclength = Vec::new();
    let mut vertex_indices = Vec::with_capacity(vertices.len());
    let mut s = 0.0;
    for (v0, v1) in vertices.iter().zip(vertices.iter().skip(1)) {
        vertex_indices.push(points.len());
        let seg = v1 - v0;
        let len = seg.norm();
        for i in 0..samples_per_segment {
            let t = i as f64 / samples_per_segment as f64;
            points.push(v0 + seg * t);
            arclength.push(s + len * t);
        }
        s += len;
    }
    vertex_indices.push(points.len());
    points.push(*vertices.last().unwrap());
    arclength.push(s);
    Ok(KPath { points, arclength, vertex_indices })
}

/// Sublattice label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sublattice {
    A,
    B,
}

/// One atomic site of the truncated bilayer.
#[derive(Debug, Clone, Copy)]
pub struct Site {
    pub position: Vec2,
    /// Layer index, 1 or 2.
    pub layer: u8,
    pub sublattice: Sublattice,
    /// Integer cell coordinates (n1, n2) in the unrotated lattice.
    pub cell: (i32, i32),
}

/// All sites of both layers inside the closed disk of radius `radius`,
/// ordered by (layer, sublattice, lexicographic cell index).
#[derive(Debug, Clone)]
pub struct SiteTable {
    pub sites: Vec<Site>,
    pub radius: f64,
    pub spec: LatticeSpec,
}

impl SiteTable {
    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }
}

/// Enumerate the truncated bilayer.  Rejects disks smaller than one lattice
/// constant, where the table would not even contain a full unit cell.
pub fn build_site_table(spec: &LatticeSpec, radius: f64) -> Result<SiteTable> {
    if !(radius > spec.a) {
        return Err(Error::domain(format!(
            "truncation radius {radius} Å must exceed the lattice constant {} Å",
            spec.a
        )));
    }
    let (a1, a2) = spec.bravais();
    // |n1 a1 + n2 a2| ≥ (√3/2) a · max(|n1|, |n2|); pad by the sublattice and
    // shift offsets.
    let pad = spec.tau_b.norm() + spec.dshift.norm() + 2.0 * spec.a;
    let nmax = ((radius + pad) / (3f64.sqrt() / 2.0 * spec.a)).ceil() as i32;
    let r2 = radius * radius;
    let mut sites = Vec::new();
    for layer in [1u8, 2u8] {
        let rot_half: Mat2 = rotation(spec.layer_half_angle(layer));
        for sublattice in [Sublattice::A, Sublattice::B] {
            let tau = match sublattice {
                Sublattice::A => spec.tau_a,
                Sublattice::B => spec.tau_b,
            };
            let sign = if layer == 1 { -1.0 } else { 1.0 };
            let off = tau + 0.5 * sign * spec.dshift;
            for n1 in -nmax..=nmax {
                for n2 in -nmax..=nmax {
                    let p = rot_half * (a1 * n1 as f64 + a2 * n2 as f64 + off);
                    if p.norm_squared() <= r2 {
                        sites.push(Site { position: p, layer, sublattice, cell: (n1, n2) });
                    }
                }
            }
        }
    }
    Ok(SiteTable { sites, radius, spec: *spec })
}
