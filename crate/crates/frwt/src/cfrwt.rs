//! The continuous fractional wavelet transform
//! `W(b, a) = <f, psi_{a,b,theta}>` over a translation x signed-scale grid,
//! with the two-wavelet orthogonality pairing, reconstruction, the
//! reproducing-kernel range test, the convolution/correlation transform
//! identities and the scale-weighted inner-product identity.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{FrwtError, Result};
use crate::frft::{frft_forward, warp_frequency, FrSpectrum};
use crate::grid::{scale_factor, SampledSignal, ThetaOrder, UniformGrid};
use crate::real::Real;
use crate::wavelet::{combine_wavelets, CombineMode, FractionalWavelet};

/// Translation grid plus a signed, log-spaced scale ladder carrying the
/// quadrature weights of the measure `da / |a|^(1/theta + 1)` (trapezoid in
/// `log |a|` on each sign branch).
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleTranslationGrid<T> {
    b_grid: UniformGrid<T>,
    scales: Vec<T>,
    scale_weights: Vec<T>,
    theta: ThetaOrder<T>,
}

impl<T: Real> ScaleTranslationGrid<T> {
    /// Log-spaced scales `[a_min, a_max]` with `per_sign` nodes per branch;
    /// when `signed` is set the mirrored negative branch is included, listed
    /// first in ascending order.
    pub fn log_symmetric(
        theta: ThetaOrder<T>,
        b_grid: UniformGrid<T>,
        a_min: T,
        a_max: T,
        per_sign: usize,
        signed: bool,
    ) -> Result<Self> {
        if !(a_min > T::zero()) || !(a_max > a_min) {
            return Err(FrwtError::InvalidGrid(format!(
                "scale range [{a_min}, {a_max}] must satisfy 0 < a_min < a_max"
            )));
        }
        if per_sign < 2 {
            return Err(FrwtError::InvalidGrid(
                "need at least 2 scales per sign branch".into(),
            ));
        }
        let du = (a_max / a_min).ln() / T::lit((per_sign - 1) as f64);
        let mut pos = Vec::with_capacity(per_sign);
        let mut pos_w = Vec::with_capacity(per_sign);
        for k in 0..per_sign {
            let u = a_min.ln() + T::lit(k as f64) * du;
            let a = u.exp();
            let wu = if k == 0 || k == per_sign - 1 {
                du / T::lit(2.0)
            } else {
                du
            };
            pos.push(a);
            pos_w.push(wu * a.powf(-theta.inv()));
        }
        let (mut scales, mut scale_weights) = if signed {
            let mut s: Vec<T> = pos.iter().rev().map(|&a| -a).collect();
            let mut w: Vec<T> = pos_w.iter().rev().copied().collect();
            s.reserve(per_sign);
            w.reserve(per_sign);
            (s, w)
        } else {
            (Vec::new(), Vec::new())
        };
        scales.extend_from_slice(&pos);
        scale_weights.extend_from_slice(&pos_w);
        Ok(Self {
            b_grid,
            scales,
            scale_weights,
            theta,
        })
    }

    #[inline]
    pub fn b_grid(&self) -> &UniformGrid<T> {
        &self.b_grid
    }

    #[inline]
    pub fn scales(&self) -> &[T] {
        &self.scales
    }

    #[inline]
    pub fn scale_weights(&self) -> &[T] {
        &self.scale_weights
    }

    #[inline]
    pub fn theta(&self) -> ThetaOrder<T> {
        self.theta
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.scales.len() * self.b_grid.count()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.scales.is_empty()
    }
}

/// Sampled transform field `W(b, a)`, stored scale-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Scalogram<T> {
    grid: ScaleTranslationGrid<T>,
    values: Vec<Complex<T>>,
    wavelet_id: String,
    normalized: bool,
}

impl<T: Real> Scalogram<T> {
    pub fn new(
        grid: ScaleTranslationGrid<T>,
        values: Vec<Complex<T>>,
        wavelet_id: impl Into<String>,
        normalized: bool,
    ) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(FrwtError::InvalidGrid(format!(
                "scalogram has {} values for a {} point grid",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(FrwtError::NonFinite("scalogram value".into()));
        }
        Ok(Self {
            grid,
            values,
            wavelet_id: wavelet_id.into(),
            normalized,
        })
    }

    #[inline]
    pub fn grid(&self) -> &ScaleTranslationGrid<T> {
        &self.grid
    }

    #[inline]
    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    #[inline]
    pub fn value(&self, scale_idx: usize, b_idx: usize) -> Complex<T> {
        self.values[scale_idx * self.grid.b_grid().count() + b_idx]
    }

    #[inline]
    pub fn row(&self, scale_idx: usize) -> &[Complex<T>] {
        let nb = self.grid.b_grid().count();
        &self.values[scale_idx * nb..(scale_idx + 1) * nb]
    }

    #[inline]
    pub fn wavelet_id(&self) -> &str {
        &self.wavelet_id
    }

    #[inline]
    pub fn normalized(&self) -> bool {
        self.normalized
    }
}

/// One transform row at a fixed scale, evaluated on `b_grid`. Matches
/// `inner_product(f, dilate_translate(psi, a, b, theta))` operation for
/// operation when `psi` shares the grid of `f`.
pub(crate) fn forward_row<T: Real>(
    f: &SampledSignal<T>,
    psi: &SampledSignal<T>,
    theta: ThetaOrder<T>,
    b_grid: &UniformGrid<T>,
    a: T,
) -> Vec<Complex<T>> {
    let s = scale_factor(a, theta);
    let amp = a.abs().powf(-(theta.inv() / T::lit(2.0)));
    let fg = f.grid();
    (0..b_grid.count())
        .map(|j| {
            let b = b_grid.node(j);
            let mut acc = Complex::new(T::zero(), T::zero());
            for (k, fv) in f.values().iter().enumerate() {
                let d = psi.eval((fg.node(k) - b) / s).scale(amp);
                acc += (fv * d.conj()).scale(fg.weight(k));
            }
            acc
        })
        .collect()
}

fn check_theta<T: Real>(a: ThetaOrder<T>, b: ThetaOrder<T>, what: &str) -> Result<()> {
    if a != b {
        return Err(FrwtError::OrderMismatch(format!(
            "{what}: theta {} vs {}",
            a.get(),
            b.get()
        )));
    }
    Ok(())
}

/// Direct transform: the definitional time-domain inner product at every
/// `(b, a)` grid point. Rows are independent and evaluated in parallel; each
/// value is a fixed-order reduction, so output is reproducible bit for bit.
pub fn cfrwt_forward<T: Real>(
    f: &SampledSignal<T>,
    psi: &FractionalWavelet<T>,
    grid: &ScaleTranslationGrid<T>,
) -> Result<Scalogram<T>> {
    check_theta(psi.theta(), grid.theta(), "cfrwt_forward")?;
    let rows: Vec<Vec<Complex<T>>> = grid
        .scales()
        .par_iter()
        .map(|&a| forward_row(f, psi.signal(), grid.theta(), grid.b_grid(), a))
        .collect();
    Scalogram::new(grid.clone(), rows.concat(), psi.id(), false)
}

/// Spectral transform path:
/// `W(b, a) = 1/(2 pi theta) * integral of |xi|^(1/theta - 1) F(xi)
///  conj(daughter_spectrum(Psi, a, b)(xi)) dxi`,
/// the weighted Parseval form of the direct path. `F` must live on the
/// wavelet's cached frequency grid.
pub fn cfrwt_forward_spectral<T: Real>(
    f_spectrum: &FrSpectrum<T>,
    psi: &FractionalWavelet<T>,
    grid: &ScaleTranslationGrid<T>,
) -> Result<Scalogram<T>> {
    check_theta(psi.theta(), grid.theta(), "cfrwt_forward_spectral")?;
    if !f_spectrum.same_layout(psi.spectrum()) {
        return Err(FrwtError::GridMismatch(
            "signal spectrum must share the wavelet's frequency grid".into(),
        ));
    }
    let theta = grid.theta();
    let xi_grid = f_spectrum.xi_grid();
    let b_grid = grid.b_grid();
    let nb = b_grid.count();
    let prefactor = T::one() / (T::lit(2.0) * T::PI() * theta.get());
    let weight_exp = theta.inv() - T::one();

    let rows: Vec<Vec<Complex<T>>> = grid
        .scales()
        .par_iter()
        .map(|&a| {
            let amp = a.abs().powf(theta.inv() / T::lit(2.0));
            let mut row = vec![Complex::new(T::zero(), T::zero()); nb];
            for (k, fv) in f_spectrum.values().iter().enumerate() {
                let xi = xi_grid.node(k);
                let mother = psi.spectrum().eval(a * xi);
                let coeff = (fv * mother.conj())
                    .scale(xi_grid.weight(k) * xi.abs().powf(weight_exp) * prefactor * amp);
                let omega = warp_frequency(xi, theta);
                let rot = Complex::from_polar(T::one(), omega * b_grid.step());
                let mut ph = Complex::from_polar(T::one(), omega * b_grid.t_min());
                for slot in row.iter_mut() {
                    *slot += coeff * ph;
                    ph = ph * rot;
                }
            }
            row
        })
        .collect();
    Scalogram::new(grid.clone(), rows.concat(), psi.id(), false)
}

/// Double quadrature of `W1 * conj(W2)` against `db da / |a|^(1/theta + 1)`.
/// Equals `C_{phi,psi,theta} <f, g>` when the scalograms are transforms of
/// `f` and `g` with respect to wavelets `phi` and `psi`.
pub fn orthogonality_pairing<T: Real>(s1: &Scalogram<T>, s2: &Scalogram<T>) -> Result<Complex<T>> {
    if s1.grid() != s2.grid() {
        return Err(FrwtError::GridMismatch(
            "orthogonality pairing needs identical scale-translation grids".into(),
        ));
    }
    let grid = s1.grid();
    let b_grid = grid.b_grid();
    let mut acc = Complex::new(T::zero(), T::zero());
    for (i, &sw) in grid.scale_weights().iter().enumerate() {
        let r1 = s1.row(i);
        let r2 = s2.row(i);
        let mut row_acc = Complex::new(T::zero(), T::zero());
        for (j, (x, y)) in r1.iter().zip(r2).enumerate() {
            row_acc += (x * y.conj()).scale(b_grid.weight(j));
        }
        acc += row_acc.scale(sw);
    }
    Ok(acc)
}

/// Synthesis
/// `f(t) = 1/C * double integral of psi_{a,b,theta}(t) W(b,a) db da / |a|^(1/theta+1)`
/// over the stored grid and measure weights.
pub fn reconstruct<T: Real>(
    scalogram: &Scalogram<T>,
    psi: &FractionalWavelet<T>,
    c: Complex<T>,
    t_grid: &UniformGrid<T>,
) -> Result<SampledSignal<T>> {
    if c.norm() == T::zero() {
        return Err(FrwtError::DegeneratePair);
    }
    check_theta(psi.theta(), scalogram.grid().theta(), "reconstruct")?;
    let grid = scalogram.grid();
    let theta = grid.theta();
    let b_grid = grid.b_grid();
    let nscales = grid.scales().len();
    let inv_c = Complex::new(T::one(), T::zero()) / c;

    let values: Vec<Complex<T>> = (0..t_grid.count())
        .into_par_iter()
        .map(|ti| {
            let t = t_grid.node(ti);
            let mut acc = Complex::new(T::zero(), T::zero());
            for i in 0..nscales {
                let a = grid.scales()[i];
                let sw = grid.scale_weights()[i];
                let s = scale_factor(a, theta);
                let amp = a.abs().powf(-(theta.inv() / T::lit(2.0)));
                let row = scalogram.row(i);
                let mut row_acc = Complex::new(T::zero(), T::zero());
                for (j, w) in row.iter().enumerate() {
                    let d = psi.signal().eval((t - b_grid.node(j)) / s).scale(amp);
                    row_acc += (d * w).scale(b_grid.weight(j));
                }
                acc += row_acc.scale(sw);
            }
            acc * inv_c
        })
        .collect();
    SampledSignal::new(*t_grid, values)
}

/// Reproducing kernel
/// `K(b0,a0; b,a) = 1/C * <psi_{a,b,theta}, phi_{a0,b0,theta}>`. The two
/// wavelets must be sampled on a common grid.
pub fn reproducing_kernel<T: Real>(
    phi: &FractionalWavelet<T>,
    psi: &FractionalWavelet<T>,
    c: Complex<T>,
    p0: (T, T),
    p1: (T, T),
) -> Result<Complex<T>> {
    if c.norm() == T::zero() {
        return Err(FrwtError::DegeneratePair);
    }
    check_theta(phi.theta(), psi.theta(), "reproducing_kernel")?;
    if phi.signal().grid() != psi.signal().grid() {
        return Err(FrwtError::GridMismatch(
            "kernel evaluation needs wavelets sampled on one grid".into(),
        ));
    }
    let (b0, a0) = p0;
    let (b1, a1) = p1;
    if a0 == T::zero() || a1 == T::zero() {
        return Err(FrwtError::ZeroScale);
    }
    let theta = phi.theta();
    let grid = phi.signal().grid();
    let s1 = scale_factor(a1, theta);
    let amp1 = a1.abs().powf(-(theta.inv() / T::lit(2.0)));
    let s0 = scale_factor(a0, theta);
    let amp0 = a0.abs().powf(-(theta.inv() / T::lit(2.0)));
    let mut acc = Complex::new(T::zero(), T::zero());
    for k in 0..grid.count() {
        let t = grid.node(k);
        let dpsi = psi.signal().eval((t - b1) / s1).scale(amp1);
        let dphi = phi.signal().eval((t - b0) / s0).scale(amp0);
        acc += (dpsi * dphi.conj()).scale(grid.weight(k));
    }
    Ok(acc / c)
}

/// Relative L2 residual between a field and its reproducing-kernel
/// projection, over every `stride`-th grid point per axis.
///
/// The projection `double integral of F(b,a) K(b0,a0; b,a) dmu(b,a)` is
/// evaluated by exchanging the quadrature order: it is exactly the transform,
/// with respect to `phi`, of the synthesis of `F` through `psi` -- the same
/// triple sum reassociated, and several orders of magnitude cheaper than
/// forming the kernel pointwise.
pub fn range_membership<T: Real>(
    field: &Scalogram<T>,
    phi: &FractionalWavelet<T>,
    psi: &FractionalWavelet<T>,
    c: Complex<T>,
    stride: usize,
) -> Result<T> {
    if c.norm() == T::zero() {
        return Err(FrwtError::DegeneratePair);
    }
    let stride = stride.max(1);
    let grid = field.grid();
    let synthesized = reconstruct(field, psi, c, phi.signal().grid())?;
    let theta = grid.theta();
    let b_grid = grid.b_grid();

    let sub_scales: Vec<usize> = (0..grid.scales().len()).step_by(stride).collect();
    let sub_b: Vec<usize> = (0..b_grid.count()).step_by(stride).collect();
    let rows: Vec<(T, T)> = sub_scales
        .par_iter()
        .map(|&i| {
            let a = grid.scales()[i];
            let sw = grid.scale_weights()[i];
            let s = scale_factor(a, theta);
            let amp = a.abs().powf(-(theta.inv() / T::lit(2.0)));
            let fg = synthesized.grid();
            let mut num = T::zero();
            let mut den = T::zero();
            for &j in &sub_b {
                let b = b_grid.node(j);
                let mut proj = Complex::new(T::zero(), T::zero());
                for (k, fv) in synthesized.values().iter().enumerate() {
                    let d = phi.signal().eval((fg.node(k) - b) / s).scale(amp);
                    proj += (fv * d.conj()).scale(fg.weight(k));
                }
                let w = sw * b_grid.weight(j);
                num += (field.value(i, j) - proj).norm_sqr() * w;
                den += field.value(i, j).norm_sqr() * w;
            }
            (num, den)
        })
        .collect();
    let (num, den) = rows
        .iter()
        .fold((T::zero(), T::zero()), |(n, d), &(rn, rd)| (n + rn, d + rd));
    if den == T::zero() {
        return Ok(T::zero());
    }
    Ok((num / den).sqrt())
}

/// Convolution on an explicit target grid: `out(x) = integral f(u) g(x-u) du`
/// with the quadrature running over `f`'s grid.
fn convolve_onto<T: Real>(
    target: &UniformGrid<T>,
    f: &SampledSignal<T>,
    g: &SampledSignal<T>,
) -> Vec<Complex<T>> {
    let fg = f.grid();
    (0..target.count())
        .map(|j| {
            let x = target.node(j);
            let mut acc = Complex::new(T::zero(), T::zero());
            for (k, fv) in f.values().iter().enumerate() {
                acc += (fv * g.eval(x - fg.node(k))).scale(fg.weight(k));
            }
            acc
        })
        .collect()
}

/// Correlation on an explicit target grid: `out(x) = integral conj(f(u)) g(x+u) du`.
fn correlate_onto<T: Real>(
    target: &UniformGrid<T>,
    f: &SampledSignal<T>,
    g: &SampledSignal<T>,
) -> Vec<Complex<T>> {
    let fg = f.grid();
    (0..target.count())
        .map(|j| {
            let x = target.node(j);
            let mut acc = Complex::new(T::zero(), T::zero());
            for (k, fv) in f.values().iter().enumerate() {
                acc += (fv.conj() * g.eval(x + fg.node(k))).scale(fg.weight(k));
            }
            acc
        })
        .collect()
}

/// Transform of `f * g` (star) or `f o g` (circ) computed without forming the
/// combination: per scale, the 1-D convolution (resp. correlation) of `f`
/// with the row `W_psi g(., a)` on the translation grid.
pub fn transform_of_combination<T: Real>(
    f: &SampledSignal<T>,
    g: &SampledSignal<T>,
    psi: &FractionalWavelet<T>,
    mode: CombineMode,
    grid: &ScaleTranslationGrid<T>,
) -> Result<Scalogram<T>> {
    if !f.grid().same_step(grid.b_grid()) {
        return Err(FrwtError::GridMismatch(
            "combination transform needs f's grid step to match the translation grid".into(),
        ));
    }
    let base = cfrwt_forward(g, psi, grid)?;
    let rows: Vec<Vec<Complex<T>>> = (0..grid.scales().len())
        .into_par_iter()
        .map(|i| {
            let row = SampledSignal::new(*grid.b_grid(), base.row(i).to_vec())
                .expect("transform row is finite");
            match mode {
                CombineMode::Star => convolve_onto(grid.b_grid(), f, &row),
                CombineMode::Circ => correlate_onto(grid.b_grid(), f, &row),
            }
        })
        .collect();
    Scalogram::new(grid.clone(), rows.concat(), psi.id(), false)
}

/// Transform with the combined wavelet `f * psi` (star) or `f o psi` (circ),
/// computed from the rows of `W_psi g`: per scale `a`, with
/// `s = sgn(a) |a|^(1/theta)`,
/// `W_{f*psi} g(b,a)   = (f(./s) o W_psi g(., a))(b) / |a|^(1/theta)` and
/// `W_{f o psi} g(b,a) = (f(./s) * W_psi g(., a))(b) / |a|^(1/theta)`.
/// The combined signal is validated as a wavelet first; failures propagate.
pub fn transform_with_combined_wavelet<T: Real>(
    f: &SampledSignal<T>,
    psi: &FractionalWavelet<T>,
    g: &SampledSignal<T>,
    mode: CombineMode,
    grid: &ScaleTranslationGrid<T>,
) -> Result<Scalogram<T>> {
    check_theta(psi.theta(), grid.theta(), "transform_with_combined_wavelet")?;
    let combined_id = match mode {
        // f * psi = psi * f; f o psi must keep f in the conjugated slot.
        CombineMode::Star => combine_wavelets(psi, f, CombineMode::Star)?.id().to_string(),
        CombineMode::Circ => {
            let corr = SampledSignal::new(
                *f.grid(),
                correlate_onto(f.grid(), f, psi.signal()),
            )?;
            FractionalWavelet::from_signal_on_grid(
                corr,
                psi.theta(),
                *psi.spectrum().xi_grid(),
                format!("{}_circ", psi.id()),
                None,
            )?
            .id()
            .to_string()
        }
    };

    let base = cfrwt_forward(g, psi, grid)?;
    let theta = grid.theta();
    let b_grid = grid.b_grid();
    let rows: Vec<Vec<Complex<T>>> = (0..grid.scales().len())
        .into_par_iter()
        .map(|i| {
            let a = grid.scales()[i];
            let s = scale_factor(a, theta);
            let inv_mag = a.abs().powf(-theta.inv());
            let rescaled =
                SampledSignal::new(*b_grid, b_grid.nodes().map(|x| f.eval(x / s)).collect())
                    .expect("rescaled factor is finite");
            let row = SampledSignal::new(*b_grid, base.row(i).to_vec())
                .expect("transform row is finite");
            let out = match mode {
                CombineMode::Star => correlate_onto(b_grid, &rescaled, &row),
                CombineMode::Circ => convolve_onto(b_grid, &rescaled, &row),
            };
            out.into_iter().map(|v| v.scale(inv_mag)).collect()
        })
        .collect();
    Scalogram::new(grid.clone(), rows.concat(), combined_id, false)
}

/// The spectral profile `xi -> |xi|^(1/theta - 1) H(xi) conj(Chi(a xi))` of a
/// signal spectrum `H` against a wavelet spectrum `Chi` at scale `a`.
#[derive(Debug, Clone)]
pub struct WeightedSpectralProfile<T> {
    samples: SampledSignal<T>,
}

impl<T: Real> WeightedSpectralProfile<T> {
    pub fn new(h: &FrSpectrum<T>, chi: &FrSpectrum<T>, a: T) -> Result<Self> {
        if a == T::zero() {
            return Err(FrwtError::ZeroScale);
        }
        if h.theta() != chi.theta() {
            return Err(FrwtError::OrderMismatch(
                "profile factors must share the transform order".into(),
            ));
        }
        let theta = h.theta();
        let grid = *h.xi_grid();
        let weight_exp = theta.inv() - T::one();
        let values = (0..grid.count())
            .map(|k| {
                let xi = grid.node(k);
                (h.values()[k] * chi.eval(a * xi).conj()).scale(xi.abs().powf(weight_exp))
            })
            .collect();
        Ok(Self {
            samples: SampledSignal::new(grid, values)?,
        })
    }

    #[inline]
    pub fn xi_grid(&self) -> &UniformGrid<T> {
        self.samples.grid()
    }

    #[inline]
    pub fn values(&self) -> &[Complex<T>] {
        self.samples.values()
    }
}

/// Warped synthesis `V(b) = integral of exp(-i omega(xi) b) conj(P(xi)) dxi`
/// of a profile, sampled on the translation grid.
fn profile_synthesis<T: Real>(
    profile: &WeightedSpectralProfile<T>,
    theta: ThetaOrder<T>,
    b_grid: &UniformGrid<T>,
) -> Vec<Complex<T>> {
    let grid = profile.xi_grid();
    let mut out = vec![Complex::new(T::zero(), T::zero()); b_grid.count()];
    for (k, v) in profile.values().iter().enumerate() {
        let coeff = v.conj().scale(grid.weight(k));
        let omega = warp_frequency(grid.node(k), theta);
        let rot = Complex::from_polar(T::one(), -omega * b_grid.step());
        let mut ph = Complex::from_polar(T::one(), -omega * b_grid.t_min());
        for slot in out.iter_mut() {
            *slot += coeff * ph;
            ph = ph * rot;
        }
    }
    out
}

/// Two-route evaluation of the scale-weighted inner product at a fixed scale.
///
/// `lhs` is the translation-domain quadrature
/// `integral of |b|^(1/theta-1) (W_phi f)(b,a) conj((W_psi g)(b,a)) db`.
/// `rhs` evaluates the same quantity from the frequency side,
/// `|a|^(1/theta) / (4 pi^2 theta^2) * integral of |b|^(1/theta-1)
///  conj(V_P(b)) V_Q(b) db`,
/// where `P`, `Q` are the weighted spectral profiles of `(f, phi)` and
/// `(g, psi)` at scale `a` and `V` is their warped synthesis. Both values are
/// returned for comparison.
pub fn weighted_inner_product<T: Real>(
    f: &SampledSignal<T>,
    g: &SampledSignal<T>,
    phi: &FractionalWavelet<T>,
    psi: &FractionalWavelet<T>,
    a: T,
    b_grid: &UniformGrid<T>,
) -> Result<(Complex<T>, Complex<T>)> {
    if a == T::zero() {
        return Err(FrwtError::ZeroScale);
    }
    check_theta(phi.theta(), psi.theta(), "weighted_inner_product")?;
    let theta = phi.theta();
    let weight_exp = theta.inv() - T::one();

    let row_f = forward_row(f, phi.signal(), theta, b_grid, a);
    let row_g = forward_row(g, psi.signal(), theta, b_grid, a);
    let mut lhs = Complex::new(T::zero(), T::zero());
    for (j, (x, y)) in row_f.iter().zip(&row_g).enumerate() {
        let w = b_grid.weight(j) * b_grid.node(j).abs().powf(weight_exp);
        lhs += (x * y.conj()).scale(w);
    }

    let f_spec = frft_forward(f, theta, phi.spectrum().xi_grid());
    let g_spec = frft_forward(g, theta, psi.spectrum().xi_grid());
    let p = WeightedSpectralProfile::new(&f_spec, phi.spectrum(), a)?;
    let q = WeightedSpectralProfile::new(&g_spec, psi.spectrum(), a)?;
    let vp = profile_synthesis(&p, theta, b_grid);
    let vq = profile_synthesis(&q, theta, b_grid);
    let mut synth = Complex::new(T::zero(), T::zero());
    for (j, (x, y)) in vp.iter().zip(&vq).enumerate() {
        let w = b_grid.weight(j) * b_grid.node(j).abs().powf(weight_exp);
        synth += (x.conj() * y).scale(w);
    }
    let two_pi_theta = T::lit(2.0) * T::PI() * theta.get();
    let rhs = synth.scale(a.abs().powf(theta.inv()) / (two_pi_theta * two_pi_theta));
    Ok((lhs, rhs))
}
