//! Simulation laboratory for twisted bilayer graphene.
//!
//! The crate builds the bilayer tight-binding model on a truncated disk,
//! extracts all coefficients of the first- and second-order continuum
//! (Bistritzer-MacDonald type) models from the hopping functions, evolves
//! wave packets under both descriptions, and measures the approximation
//! error between them.
//!
//! Units: lengths in Å, momenta in Å⁻¹, energies in eV, times in ℏ/eV.

pub mod bessel;
pub mod bloch;
pub mod chebyshev;
pub mod continuum;
pub mod fit;
pub mod geometry;
pub mod hopping;
pub mod krylov;
pub mod quad;
pub mod sparse;
pub mod symmetry;
pub mod tightbinding;
pub mod wavepacket;

pub use geometry::{LatticeSpec, ReciprocalData, SiteTable, Sublattice};
pub use hopping::{AssumptionReport, InterlayerCoeffs, InterlayerModel, IntralayerModel};
pub use bloch::{BlochHamiltonian, DiracData};
pub use continuum::{ContinuumParams, CorrectionTerm, FieldGrid, ModelVariant, PlaneWaveBasis};
pub use sparse::SparseHermitian;
pub use tightbinding::TBState;
pub use wavepacket::{ErrorSeries, PacketSpec};

pub type Complex = num_complex::Complex64;
pub type Vec2 = nalgebra::Vector2<f64>;
pub type Mat2 = nalgebra::Matrix2<f64>;

/// Errors reported by model construction and the numerical kernels.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Domain(String),
    #[error("numerical failure: {0}")]
    Numerics(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn numerics(msg: impl Into<String>) -> Self {
        Error::Numerics(msg.into())
    }
}

/// Counter-clockwise rotation by `phi`.
pub fn rotation(phi: f64) -> Mat2 {
    let (s, c) = phi.sin_cos();
    Mat2::new(c, -s, s, c)
}
