//! Fractional wavelets: admissibility constants, divergence detection,
//! two-wavelet cross constants, combination via convolution/correlation, and
//! a small catalog of concrete wavelets.

use num_complex::Complex;

use crate::error::{FrwtError, Result};
use crate::frft::{frft_forward, FrSpectrum};
use crate::grid::{convolve, correlate, norm, NormOrder, SampledSignal, ThetaOrder, UniformGrid};
use crate::real::Real;

/// Relative growth of the innermost dyadic refinement above which the
/// admissibility integral is declared divergent. A finite constant cannot be
/// told apart from a divergent one by a single quadrature value; what a
/// divergent integrand (spectrum nonzero at the origin) does show is
/// near-constant mass per octave as the cutoff is halved, so the flag trips
/// when the last refinement still adds more than this fraction of the total.
const DIVERGENCE_GROWTH: f64 = 0.05;

/// Frequency-grid parameters used when a wavelet caches its spectrum: the
/// classical band `[-band, band]` is covered by a zero-free offset grid with
/// `count` nodes spanning `[-band^theta, band^theta]`.
#[derive(Debug, Clone, Copy)]
pub struct SpectrumParams<T> {
    pub classical_band: T,
    pub count: usize,
}

impl<T: Real> Default for SpectrumParams<T> {
    fn default() -> Self {
        Self {
            classical_band: T::lit(128.0),
            count: 8192,
        }
    }
}

impl<T: Real> SpectrumParams<T> {
    pub fn xi_grid(&self, theta: ThetaOrder<T>) -> Result<UniformGrid<T>> {
        UniformGrid::symmetric_offset(self.classical_band.powf(theta.get()), self.count)
    }
}

/// Admissibility integral `C = integral of |Psi(xi)|^2 / |xi| dxi` together
/// with its divergence flag.
#[derive(Debug, Clone, Copy)]
pub struct Admissibility<T> {
    pub value: T,
    pub divergent: bool,
}

fn octave_divergent<T: Real>(grid: &UniformGrid<T>, integrand: &[T], total: T) -> bool {
    // Dyadic bands [eps0/2^(m+1), eps0/2^m] of |xi|, innermost band kept at
    // least two nodes wide per sign.
    let eps0 = T::one().min(grid.t_max() / T::lit(4.0));
    let floor = grid.step() * T::lit(4.0);
    let mut hi = eps0;
    let mut last_contrib = T::zero();
    let mut any = false;
    while hi / T::lit(2.0) >= floor {
        let lo = hi / T::lit(2.0);
        let mut contrib = T::zero();
        for (k, v) in integrand.iter().enumerate() {
            let x = grid.node(k).abs();
            if x >= lo && x < hi {
                contrib += *v * grid.weight(k);
            }
        }
        last_contrib = contrib;
        any = true;
        hi = lo;
    }
    any && total > T::zero() && last_contrib / total > T::lit(DIVERGENCE_GROWTH)
}

/// `C_{psi,theta}` evaluated on the spectrum's zero-free grid, plus the
/// dyadic-refinement divergence flag.
pub fn admissibility_of_spectrum<T: Real>(spectrum: &FrSpectrum<T>) -> Admissibility<T> {
    let grid = spectrum.xi_grid();
    let integrand: Vec<T> = spectrum
        .values()
        .iter()
        .enumerate()
        .map(|(k, v)| v.norm_sqr() / grid.node(k).abs())
        .collect();
    let mut value = T::zero();
    for (k, v) in integrand.iter().enumerate() {
        value += *v * grid.weight(k);
    }
    let divergent = octave_divergent(grid, &integrand, value);
    Admissibility { value, divergent }
}

/// Admissibility constant of a sampled candidate wavelet with the default
/// spectrum parameters.
pub fn admissibility_constant<T: Real>(
    psi: &SampledSignal<T>,
    theta: ThetaOrder<T>,
) -> Result<Admissibility<T>> {
    if psi.is_zero() {
        return Err(FrwtError::NotAWavelet(
            "a wavelet must be a non-zero function".into(),
        ));
    }
    let params = SpectrumParams::default();
    let spectrum = frft_forward(psi, theta, &params.xi_grid(theta)?);
    Ok(admissibility_of_spectrum(&spectrum))
}

/// A validated fractional wavelet: a nonzero signal with finite admissibility
/// constant, cached spectrum and norms.
#[derive(Debug, Clone)]
pub struct FractionalWavelet<T> {
    signal: SampledSignal<T>,
    theta: ThetaOrder<T>,
    spectrum: FrSpectrum<T>,
    admissibility: T,
    l1_norm: T,
    l2_norm: T,
    support: Option<(T, T)>,
    id: String,
}

impl<T: Real> FractionalWavelet<T> {
    /// Validates a sampled signal as a fractional wavelet for the given
    /// order. `support` marks compactly supported wavelets with their
    /// support interval, which the Morrey-space results require.
    pub fn from_signal(
        signal: SampledSignal<T>,
        theta: ThetaOrder<T>,
        params: SpectrumParams<T>,
        id: impl Into<String>,
        support: Option<(T, T)>,
    ) -> Result<Self> {
        let xi_grid = params.xi_grid(theta)?;
        Self::from_signal_on_grid(signal, theta, xi_grid, id, support)
    }

    /// As [`Self::from_signal`], but caching the spectrum on an explicit
    /// frequency grid (so derived wavelets can share their mother's grid).
    pub fn from_signal_on_grid(
        signal: SampledSignal<T>,
        theta: ThetaOrder<T>,
        xi_grid: UniformGrid<T>,
        id: impl Into<String>,
        support: Option<(T, T)>,
    ) -> Result<Self> {
        if signal.is_zero() {
            return Err(FrwtError::NotAWavelet(
                "a wavelet must be a non-zero function".into(),
            ));
        }
        let spectrum = frft_forward(&signal, theta, &xi_grid);
        let adm = admissibility_of_spectrum(&spectrum);
        if adm.divergent || !adm.value.is_finite() || adm.value <= T::zero() {
            return Err(FrwtError::NotAWavelet(format!(
                "admissibility integral diverges near xi = 0 (partial value {})",
                adm.value
            )));
        }
        let l1_norm = norm(&signal, NormOrder::L1);
        let l2_norm = norm(&signal, NormOrder::L2);
        Ok(Self {
            signal,
            theta,
            spectrum,
            admissibility: adm.value,
            l1_norm,
            l2_norm,
            support,
            id: id.into(),
        })
    }

    #[inline]
    pub fn signal(&self) -> &SampledSignal<T> {
        &self.signal
    }

    #[inline]
    pub fn theta(&self) -> ThetaOrder<T> {
        self.theta
    }

    #[inline]
    pub fn spectrum(&self) -> &FrSpectrum<T> {
        &self.spectrum
    }

    /// The admissibility constant `C_{psi,theta}`.
    #[inline]
    pub fn admissibility(&self) -> T {
        self.admissibility
    }

    #[inline]
    pub fn l1_norm(&self) -> T {
        self.l1_norm
    }

    #[inline]
    pub fn l2_norm(&self) -> T {
        self.l2_norm
    }

    #[inline]
    pub fn compact_support(&self) -> Option<(T, T)> {
        self.support
    }

    #[inline]
    pub fn id(&self) -> &str {
        &self.id
    }
}

/// The mixed constant of a wavelet pair:
/// `C_{phi,psi,theta} = integral of conj(Phi(u)) Psi(u) / |u| du`, plus the
/// absolute-value integral whose finiteness the two-wavelet theorems assume.
#[derive(Debug, Clone, Copy)]
pub struct CrossAdmissibility<T> {
    pub value: Complex<T>,
    pub absolute_integral: T,
    pub finite: bool,
}

pub fn cross_admissibility<T: Real>(
    phi: &FractionalWavelet<T>,
    psi: &FractionalWavelet<T>,
) -> Result<CrossAdmissibility<T>> {
    if phi.theta() != psi.theta() {
        return Err(FrwtError::OrderMismatch(
            "cross admissibility needs wavelets of the same order".into(),
        ));
    }
    if phi.spectrum().xi_grid() != psi.spectrum().xi_grid() {
        return Err(FrwtError::GridMismatch(
            "cross admissibility needs spectra on the same frequency grid".into(),
        ));
    }
    let grid = phi.spectrum().xi_grid();
    let mut value = Complex::new(T::zero(), T::zero());
    let mut absolute = T::zero();
    let abs_integrand: Vec<T> = phi
        .spectrum()
        .values()
        .iter()
        .zip(psi.spectrum().values())
        .enumerate()
        .map(|(k, (a, b))| a.norm() * b.norm() / grid.node(k).abs())
        .collect();
    for (k, (a, b)) in phi
        .spectrum()
        .values()
        .iter()
        .zip(psi.spectrum().values())
        .enumerate()
    {
        let w = grid.weight(k) / grid.node(k).abs();
        value += (a.conj() * b).scale(w);
        absolute += abs_integrand[k] * grid.weight(k);
    }
    let finite = !octave_divergent(grid, &abs_integrand, absolute);
    Ok(CrossAdmissibility {
        value,
        absolute_integral: absolute,
        finite,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    /// Convolution `psi * phi`.
    Star,
    /// Correlation `psi o phi`.
    Circ,
}

/// Builds and validates the wavelet `psi * phi` (or `psi o phi`): combining
/// an admissible wavelet with an integrable factor stays admissible, with
/// `C_{psi*phi,theta} <= ||phi||_L1^2 * C_{psi,theta}`.
pub fn combine_wavelets<T: Real>(
    psi: &FractionalWavelet<T>,
    phi: &SampledSignal<T>,
    mode: CombineMode,
) -> Result<FractionalWavelet<T>> {
    let combined = match mode {
        CombineMode::Star => convolve(psi.signal(), phi)?,
        CombineMode::Circ => correlate(psi.signal(), phi)?,
    };
    let suffix = match mode {
        CombineMode::Star => "star",
        CombineMode::Circ => "circ",
    };
    FractionalWavelet::from_signal_on_grid(
        combined,
        psi.theta(),
        *psi.spectrum().xi_grid(),
        format!("{}_{}", psi.id(), suffix),
        None,
    )
}

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: [&str; 4] = ["mexican_hat", "haar", "dog", "gauss_deriv1"];

/// Samples a named mean-zero wavelet on the grid and validates it at the
/// given order. `haar` is flagged compactly supported on `[0, 1]`.
pub fn catalog<T: Real>(
    name: &str,
    grid: UniformGrid<T>,
    theta: ThetaOrder<T>,
) -> Result<FractionalWavelet<T>> {
    let half = T::lit(0.5);
    let one = T::one();
    match name {
        "mexican_hat" => {
            let signal =
                SampledSignal::from_real_fn(grid, |t| (one - t * t) * (-t * t / T::lit(2.0)).exp())?;
            FractionalWavelet::from_signal(signal, theta, SpectrumParams::default(), name, None)
        }
        "haar" => {
            let signal = SampledSignal::from_real_fn(grid, |t| {
                if t >= T::zero() && t < half {
                    one
                } else if t >= half && t < one {
                    -one
                } else {
                    T::zero()
                }
            })?;
            let params = SpectrumParams {
                classical_band: T::lit(256.0),
                count: 32768,
            };
            FractionalWavelet::from_signal(signal, theta, params, name, Some((T::zero(), one)))
        }
        "dog" => {
            // difference of two unit-mass-matched gaussians (sigma 1 and 2)
            let signal = SampledSignal::from_real_fn(grid, |t| {
                (-t * t / T::lit(2.0)).exp() - half * (-t * t / T::lit(8.0)).exp()
            })?;
            FractionalWavelet::from_signal(signal, theta, SpectrumParams::default(), name, None)
        }
        "gauss_deriv1" => {
            let signal =
                SampledSignal::from_real_fn(grid, |t| -t * (-t * t / T::lit(2.0)).exp())?;
            FractionalWavelet::from_signal(signal, theta, SpectrumParams::default(), name, None)
        }
        other => Err(FrwtError::UnknownWavelet(other.into())),
    }
}
