//! Uniform grids, sampled signals and the quadrature layer: trapezoid
//! integration, inner products, Lebesgue norms, convolution/correlation and
//! the dilation-translation operator.
//!
//! Conventions used throughout the crate:
//! * all integrals over the real line are composite trapezoid sums over the
//!   grid span, accumulated left to right so results are bit-reproducible;
//! * off-grid evaluation is linear interpolation, zero outside the span.

use num_complex::Complex;

use crate::error::{FrwtError, Result};
use crate::real::Real;

/// Relative tolerance under which two grid steps are considered identical.
const STEP_REL_TOL: f64 = 1e-12;

/// A uniform grid `node(k) = t_min + k * step` with `count >= 2` nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid<T> {
    t_min: T,
    step: T,
    count: usize,
}

impl<T: Real> UniformGrid<T> {
    pub fn new(t_min: T, step: T, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(FrwtError::InvalidGrid(format!(
                "count = {count}, need at least 2 nodes"
            )));
        }
        if !(step > T::zero()) || !step.is_finite() || !t_min.is_finite() {
            return Err(FrwtError::InvalidGrid(format!(
                "step = {step}, t_min = {t_min}"
            )));
        }
        Ok(Self { t_min, step, count })
    }

    /// Grid spanning `[t_min, t_max]` with `count` nodes; the endpoints are
    /// reproduced exactly.
    pub fn from_span(t_min: T, t_max: T, count: usize) -> Result<Self> {
        if !(t_max > t_min) {
            return Err(FrwtError::InvalidGrid(format!(
                "t_max = {t_max} must exceed t_min = {t_min}"
            )));
        }
        if count < 2 {
            return Err(FrwtError::InvalidGrid(format!(
                "count = {count}, need at least 2 nodes"
            )));
        }
        let step = (t_max - t_min) / T::lit((count - 1) as f64);
        Self::new(t_min, step, count)
    }

    /// Symmetric grid on `(-half_span, half_span)` whose nodes sit half a step
    /// away from the endpoints, so zero is never a node when `count` is even.
    /// Used for frequency grids that feed `1/|xi|` integrands.
    pub fn symmetric_offset(half_span: T, count: usize) -> Result<Self> {
        if !(half_span > T::zero()) {
            return Err(FrwtError::InvalidGrid(format!(
                "half_span = {half_span} must be positive"
            )));
        }
        if count < 2 || count % 2 != 0 {
            return Err(FrwtError::InvalidGrid(format!(
                "offset grid needs an even count >= 2, got {count}"
            )));
        }
        let step = (half_span + half_span) / T::lit(count as f64);
        Self::new(-half_span + step / T::lit(2.0), step, count)
    }

    #[inline]
    pub fn node(&self, k: usize) -> T {
        debug_assert!(k < self.count);
        self.t_min + T::lit(k as f64) * self.step
    }

    #[inline]
    pub fn t_min(&self) -> T {
        self.t_min
    }

    #[inline]
    pub fn t_max(&self) -> T {
        self.node(self.count - 1)
    }

    #[inline]
    pub fn step(&self) -> T {
        self.step
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn nodes(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.count).map(move |k| self.node(k))
    }

    /// Trapezoid quadrature weight of node `k` over the grid span.
    #[inline]
    pub fn weight(&self, k: usize) -> T {
        if k == 0 || k == self.count - 1 {
            self.step / T::lit(2.0)
        } else {
            self.step
        }
    }

    pub fn same_step(&self, other: &Self) -> bool {
        let a = self.step.as_f64();
        let b = other.step.as_f64();
        (a - b).abs() <= STEP_REL_TOL * a.max(b)
    }
}

/// Complex-valued samples of a function on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal<T> {
    grid: UniformGrid<T>,
    values: Vec<Complex<T>>,
}

impl<T: Real> SampledSignal<T> {
    pub fn new(grid: UniformGrid<T>, values: Vec<Complex<T>>) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(FrwtError::InvalidGrid(format!(
                "signal has {} values but the grid has {} nodes",
                values.len(),
                grid.count()
            )));
        }
        if let Some(k) = values.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(FrwtError::NonFinite(format!("sample {k} is not finite")));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: UniformGrid<T>, f: impl Fn(T) -> Complex<T>) -> Result<Self> {
        let values = grid.nodes().map(f).collect();
        Self::new(grid, values)
    }

    pub fn from_real_fn(grid: UniformGrid<T>, f: impl Fn(T) -> T) -> Result<Self> {
        Self::from_fn(grid, |t| Complex::new(f(t), T::zero()))
    }

    pub fn zeros(grid: UniformGrid<T>) -> Self {
        let values = vec![Complex::new(T::zero(), T::zero()); grid.count()];
        Self { grid, values }
    }

    #[inline]
    pub fn grid(&self) -> &UniformGrid<T> {
        &self.grid
    }

    #[inline]
    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.re == T::zero() && v.im == T::zero())
    }

    /// Linear interpolation; zero outside the grid span.
    #[inline]
    pub fn eval(&self, t: T) -> Complex<T> {
        let p = (t - self.grid.t_min) / self.grid.step;
        let last = T::lit((self.grid.count - 1) as f64);
        if !(p >= T::zero()) || p > last {
            return Complex::new(T::zero(), T::zero());
        }
        let k = p.floor();
        let ki = k.as_f64() as usize;
        if ki >= self.grid.count - 1 {
            return self.values[self.grid.count - 1];
        }
        let frac = p - k;
        let lo = self.values[ki];
        let hi = self.values[ki + 1];
        lo + (hi - lo).scale(frac)
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }
}

/// Transform order `theta` restricted to `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaOrder<T>(T);

impl<T: Real> ThetaOrder<T> {
    pub fn new(theta: T) -> Result<Self> {
        if theta > T::zero() && theta <= T::one() && theta.is_finite() {
            Ok(Self(theta))
        } else {
            Err(FrwtError::InvalidTheta(theta.as_f64()))
        }
    }

    #[inline]
    pub fn get(self) -> T {
        self.0
    }

    /// `1/theta`, the exponent of the frequency warp.
    #[inline]
    pub fn inv(self) -> T {
        T::one() / self.0
    }
}

/// Trapezoid value of the integral of `f` over its grid span, accumulated in
/// grid order.
pub fn integrate<T: Real>(f: &SampledSignal<T>) -> Complex<T> {
    let grid = f.grid();
    let mut acc = Complex::new(T::zero(), T::zero());
    for (k, v) in f.values().iter().enumerate() {
        acc += v.scale(grid.weight(k));
    }
    acc
}

/// `<f, g> = integral of f * conj(g)`; the two signals must share a grid.
pub fn inner_product<T: Real>(f: &SampledSignal<T>, g: &SampledSignal<T>) -> Result<Complex<T>> {
    if f.grid() != g.grid() {
        return Err(FrwtError::GridMismatch(
            "inner product needs identical grids".into(),
        ));
    }
    let grid = f.grid();
    let mut acc = Complex::new(T::zero(), T::zero());
    for (k, (a, b)) in f.values().iter().zip(g.values()).enumerate() {
        acc += (a * b.conj()).scale(grid.weight(k));
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormOrder {
    L1,
    L2,
    Sup,
}

pub fn norm<T: Real>(f: &SampledSignal<T>, order: NormOrder) -> T {
    let grid = f.grid();
    match order {
        NormOrder::L1 => {
            let mut acc = T::zero();
            for (k, v) in f.values().iter().enumerate() {
                acc += v.norm() * grid.weight(k);
            }
            acc
        }
        NormOrder::L2 => {
            let mut acc = T::zero();
            for (k, v) in f.values().iter().enumerate() {
                acc += v.norm_sqr() * grid.weight(k);
            }
            acc.sqrt()
        }
        NormOrder::Sup => f
            .values()
            .iter()
            .fold(T::zero(), |m, v| m.max(v.norm())),
    }
}

/// `(f * g)(x) = integral of f(u) g(x - u) du`, evaluated on the grid of `f`;
/// `g` is read by linear interpolation and vanishes outside its span.
pub fn convolve<T: Real>(f: &SampledSignal<T>, g: &SampledSignal<T>) -> Result<SampledSignal<T>> {
    if !f.grid().same_step(g.grid()) {
        return Err(FrwtError::GridMismatch(
            "convolution needs identical grid steps".into(),
        ));
    }
    let grid = *f.grid();
    let values = (0..grid.count())
        .map(|i| {
            let x = grid.node(i);
            let mut acc = Complex::new(T::zero(), T::zero());
            for (k, v) in f.values().iter().enumerate() {
                acc += (*v * g.eval(x - grid.node(k))).scale(grid.weight(k));
            }
            acc
        })
        .collect();
    SampledSignal::new(grid, values)
}

/// `(f o g)(x) = integral of conj(f(u)) g(x + u) du` on the grid of `f`.
pub fn correlate<T: Real>(f: &SampledSignal<T>, g: &SampledSignal<T>) -> Result<SampledSignal<T>> {
    if !f.grid().same_step(g.grid()) {
        return Err(FrwtError::GridMismatch(
            "correlation needs identical grid steps".into(),
        ));
    }
    let grid = *f.grid();
    let values = (0..grid.count())
        .map(|i| {
            let x = grid.node(i);
            let mut acc = Complex::new(T::zero(), T::zero());
            for (k, v) in f.values().iter().enumerate() {
                acc += (v.conj() * g.eval(x + grid.node(k))).scale(grid.weight(k));
            }
            acc
        })
        .collect();
    SampledSignal::new(grid, values)
}

/// Signed scale factor `sgn(a) |a|^(1/theta)` of the dilation.
#[inline]
pub fn scale_factor<T: Real>(a: T, theta: ThetaOrder<T>) -> T {
    a.sgn() * a.abs().powf(theta.inv())
}

/// The daughter map `t -> |a|^(-1/(2 theta)) psi((t - b) / (sgn(a) |a|^(1/theta)))`
/// sampled on the grid of `psi`.
pub fn dilate_translate<T: Real>(
    psi: &SampledSignal<T>,
    a: T,
    b: T,
    theta: ThetaOrder<T>,
) -> Result<SampledSignal<T>> {
    if a == T::zero() {
        return Err(FrwtError::ZeroScale);
    }
    let s = scale_factor(a, theta);
    let amp = a.abs().powf(-(theta.inv() / T::lit(2.0)));
    let grid = *psi.grid();
    let values = grid
        .nodes()
        .map(|t| psi.eval((t - b) / s).scale(amp))
        .collect();
    SampledSignal::new(grid, values)
}
