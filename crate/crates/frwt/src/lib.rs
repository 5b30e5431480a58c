//! Numerical toolkit for the theta-order fractional Fourier transform and the
//! continuous fractional wavelet transform it induces, together with
//! admissibility analysis, reconstruction, reproducing-kernel range tests and
//! Hardy/Morrey norm estimators.
//!
//! Everything is generic over the scalar type through [`Real`]; the aliases
//! below fix the two supported precisions.

pub mod cfrwt;
pub mod error;
pub mod frft;
pub mod grid;
pub mod io;
pub mod real;
pub mod spaces;
pub mod wavelet;

pub use error::{FrwtError, Result};
pub use real::Real;

pub type Grid32 = grid::UniformGrid<f32>;
pub type Grid64 = grid::UniformGrid<f64>;
pub type Signal32 = grid::SampledSignal<f32>;
pub type Signal64 = grid::SampledSignal<f64>;
pub type Theta32 = grid::ThetaOrder<f32>;
pub type Theta64 = grid::ThetaOrder<f64>;
pub type Spectrum32 = frft::FrSpectrum<f32>;
pub type Spectrum64 = frft::FrSpectrum<f64>;
pub type Wavelet32 = wavelet::FractionalWavelet<f32>;
pub type Wavelet64 = wavelet::FractionalWavelet<f64>;
pub type Scalogram32 = cfrwt::Scalogram<f32>;
pub type Scalogram64 = cfrwt::Scalogram<f64>;
