//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS/FAIL line with the measured quantity (run with `--nocapture` to see
//! the lines for passing tests).

use std::time::Instant;

use num_complex::Complex;

use frwt::cfrwt::{
    cfrwt_forward, cfrwt_forward_spectral, orthogonality_pairing, range_membership, reconstruct,
    reproducing_kernel, transform_of_combination, transform_with_combined_wavelet,
    weighted_inner_product, ScaleTranslationGrid, Scalogram,
};
use frwt::frft::{frft_forward, frft_forward_direct, frft_inverse, warp_frequency, ClassicalSpectrum};
use frwt::grid::{
    inner_product, norm, NormOrder, SampledSignal, ThetaOrder, UniformGrid,
};
use frwt::spaces::{
    hardy_bound_report, hardy_norm, morrey_bound_report, morrey_norm, BallFamily, MollifierFamily,
    HARDY_SLACK, MORREY_SLACK,
};
use frwt::wavelet::{
    catalog, combine_wavelets, cross_admissibility, CombineMode, FractionalWavelet, CATALOG_NAMES,
};
use frwt::FrwtError;

const SQRT_PI: f64 = 1.7724538509055160;
const TWO_PI: f64 = 6.283185307179586;

/// `H^1` estimate of the `+-16`-span Mexican hat signal under the default
/// 33-dilation Gaussian family, recorded once from a dense oracle run with
/// 257 dilations on the half-step grid (see `refresh_hardy_reference`).
const HARDY_MEXHAT_DENSE_REFERENCE: f64 = 2.8258823810883311;

fn theta(v: f64) -> ThetaOrder<f64> {
    ThetaOrder::new(v).unwrap()
}

fn grid(min: f64, max: f64, n: usize) -> UniformGrid<f64> {
    UniformGrid::from_span(min, max, n).unwrap()
}

fn gabor(g: UniformGrid<f64>) -> SampledSignal<f64> {
    SampledSignal::from_real_fn(g, |t: f64| (-t * t / 8.0).exp() * (2.5 * t).sin()).unwrap()
}

fn gabor_even(g: UniformGrid<f64>) -> SampledSignal<f64> {
    SampledSignal::from_real_fn(g, |t: f64| (-t * t / 8.0).exp() * (2.5 * t).cos()).unwrap()
}

fn generic_signal(g: UniformGrid<f64>) -> SampledSignal<f64> {
    SampledSignal::from_real_fn(g, |t: f64| {
        (-(t - 1.0) * (t - 1.0) / 6.0).exp() * (2.0 * t + 0.7).sin()
    })
    .unwrap()
}

fn two_band_signal(g: UniformGrid<f64>) -> SampledSignal<f64> {
    SampledSignal::from_real_fn(g, |t: f64| {
        (-t * t / 8.0).exp() * (2.5 * t).sin() + 0.05 * (-t * t / 2.0).exp() * (35.0 * t).sin()
    })
    .unwrap()
}

fn mexhat_signal(g: UniformGrid<f64>) -> SampledSignal<f64> {
    SampledSignal::from_real_fn(g, |t: f64| (1.0 - t * t) * (-t * t / 2.0).exp()).unwrap()
}

fn rel_l2_error(got: &SampledSignal<f64>, want: &SampledSignal<f64>) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for (k, (a, b)) in got.values().iter().zip(want.values()).enumerate() {
        let w = want.grid().weight(k);
        num += (a - b).norm_sqr() * w;
        den += b.norm_sqr() * w;
    }
    (num / den).sqrt()
}

fn report(criterion: &str, pass: bool, detail: String) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_01_frft_round_trip() {
    let start = Instant::now();
    let t_grid = grid(-8.0, 8.0, 4096);
    let f = SampledSignal::from_real_fn(t_grid, |t: f64| (-t * t / 2.0).exp()).unwrap();
    let mut worst = (0.0f64, 0.0f64);
    for (th_v, nxi) in [(0.25, 16384), (0.5, 16384), (0.75, 196_608), (1.0, 8192)] {
        let th = theta(th_v);
        let xi_grid = UniformGrid::symmetric_offset(16.0, nxi).unwrap();
        let spec = frft_forward(&f, th, &xi_grid);
        let back = frft_inverse(&spec, &t_grid);
        let sup = back
            .values()
            .iter()
            .zip(f.values())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        if sup > worst.1 {
            worst = (th_v, sup);
        }
        assert!(sup < 1e-6, "theta {th_v}: sup err {sup:.3e}");
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "01 frft round trip",
        worst.1 < 1e-6 && elapsed < 5.0,
        format!("worst sup err {:.3e} at theta {}, {elapsed:.2}s", worst.1, worst.0),
    );
}

#[test]
fn criterion_02_warping_identity() {
    let t_grid = grid(-8.0, 8.0, 4096);
    let signals = [
        SampledSignal::from_real_fn(t_grid, |t: f64| (-t * t / 2.0).exp()).unwrap(),
        gabor(t_grid),
    ];
    let mut worst = 0.0f64;
    for f in &signals {
        let classical = ClassicalSpectrum::new(f, 16);
        let scale = norm(f, NormOrder::L1);
        for th_v in [0.25, 0.5, 0.75] {
            let th = theta(th_v);
            let xi_grid = UniformGrid::symmetric_offset(12.0f64.powf(th_v), 1024).unwrap();
            for path in [frft_forward, frft_forward_direct] {
                let spec = path(f, th, &xi_grid);
                for (k, v) in spec.values().iter().enumerate() {
                    let omega = warp_frequency(xi_grid.node(k), th);
                    let err = (v - classical.eval(omega)).norm() / scale;
                    worst = worst.max(err);
                }
            }
        }
    }
    report(
        "02 warping identity",
        worst < 1e-6,
        format!("worst relative deviation {worst:.3e}"),
    );
}

#[test]
fn criterion_03_admissibility_scale_law() {
    let mut worst = 0.0f64;
    for name in CATALOG_NAMES {
        let g = if name == "haar" {
            grid(-2.0, 3.0, 4097)
        } else {
            grid(-16.0, 16.0, 4097)
        };
        let base = catalog(name, g, theta(1.0)).unwrap().admissibility();
        for th in [0.25, 0.5, 0.75] {
            let c = catalog(name, g, theta(th)).unwrap().admissibility();
            worst = worst.max((c - th * base).abs() / (th * base));
        }
    }
    let mex = catalog("mexican_hat", grid(-16.0, 16.0, 4097), theta(1.0)).unwrap();
    let mex_err = (mex.admissibility() - TWO_PI).abs() / TWO_PI;
    report(
        "03 admissibility scale law",
        worst < 0.01 && mex_err < 0.01,
        format!("worst scale-law error {worst:.2e}, mexican hat C vs 2 pi {mex_err:.2e}"),
    );
}

fn pairing_setup(
    th: ThetaOrder<f64>,
) -> (
    UniformGrid<f64>,
    ScaleTranslationGrid<f64>,
) {
    let t_grid = grid(-16.0, 16.0, 2049);
    let b_grid = grid(-32.0, 32.0, 513);
    let st = ScaleTranslationGrid::log_symmetric(th, b_grid, 0.125, 8.0, 48, true).unwrap();
    (t_grid, st)
}

#[test]
fn criterion_04_orthogonality_relation() {
    let mut worst_rel = 0.0f64;
    let mut worst_null = 0.0f64;
    for th_v in [0.5, 1.0] {
        let th = theta(th_v);
        let (t_grid, st) = pairing_setup(th);
        let f1 = gabor(t_grid);
        let f2 = gabor_even(t_grid);
        let f3 = generic_signal(t_grid);
        let mex = catalog("mexican_hat", t_grid, th).unwrap();
        let dog = catalog("dog", t_grid, th).unwrap();
        for (phi, psi) in [(&mex, &mex), (&mex, &dog)] {
            let cross = cross_admissibility(phi, psi).unwrap();
            for (fa, fb) in [(&f1, &f1), (&f1, &f2), (&f1, &f3)] {
                let s1 = cfrwt_forward(fa, phi, &st).unwrap();
                let s2 = cfrwt_forward(fb, psi, &st).unwrap();
                let pairing = orthogonality_pairing(&s1, &s2).unwrap();
                let ip = inner_product(fa, fb).unwrap();
                let na = norm(fa, NormOrder::L2);
                let nb = norm(fb, NormOrder::L2);
                if ip.norm() > 1e-6 * na * nb {
                    let target = cross.value * ip;
                    worst_rel = worst_rel.max((pairing - target).norm() / target.norm());
                } else {
                    let scale =
                        (phi.admissibility() * psi.admissibility()).sqrt() * na * nb;
                    worst_null = worst_null.max(pairing.norm() / scale);
                }
            }
        }
    }
    // vanishing cross constant: even phi, odd psi at theta = 1
    let th = theta(1.0);
    let (t_grid, st) = pairing_setup(th);
    let mex = catalog("mexican_hat", t_grid, th).unwrap();
    let gd1 = catalog("gauss_deriv1", t_grid, th).unwrap();
    let cross = cross_admissibility(&mex, &gd1).unwrap();
    assert!(
        cross.value.norm() < 1e-8,
        "even/odd cross constant {:.3e}",
        cross.value.norm()
    );
    let f = gabor(t_grid);
    let g = generic_signal(t_grid);
    let s1 = cfrwt_forward(&f, &mex, &st).unwrap();
    let s2 = cfrwt_forward(&g, &gd1, &st).unwrap();
    let pairing = orthogonality_pairing(&s1, &s2).unwrap();
    let scale = (mex.admissibility() * gd1.admissibility()).sqrt()
        * norm(&f, NormOrder::L2)
        * norm(&g, NormOrder::L2);
    worst_null = worst_null.max(pairing.norm() / scale);

    report(
        "04 orthogonality relation",
        worst_rel < 0.03 && worst_null < 1e-3,
        format!("worst relative error {worst_rel:.3e}, worst null pairing {worst_null:.3e}"),
    );
}

#[test]
fn criterion_05_reconstruction() {
    let th = theta(0.5);
    let t_grid = grid(-16.0, 16.0, 2049);
    let b_grid = grid(-32.0, 32.0, 2049);
    let f = two_band_signal(t_grid);
    let mex = catalog("mexican_hat", t_grid, th).unwrap();
    let c_mex = Complex::new(mex.admissibility(), 0.0);

    let mut errors = Vec::new();
    for (a_min, a_max, per_sign) in [(0.5, 2.0, 17), (0.25, 4.0, 33), (0.125, 8.0, 49)] {
        let st =
            ScaleTranslationGrid::log_symmetric(th, b_grid, a_min, a_max, per_sign, true).unwrap();
        let scal = cfrwt_forward(&f, &mex, &st).unwrap();
        let rec = reconstruct(&scal, &mex, c_mex, &t_grid).unwrap();
        errors.push(rel_l2_error(&rec, &f));
    }
    let single_ok = errors[2] < 0.05 && errors[0] > errors[1] && errors[1] > errors[2];

    // two-wavelet pair: synthesize with a mollified copy of the wavelet
    let narrow = SampledSignal::from_real_fn(t_grid, |t: f64| {
        let s = 0.05;
        (-t * t / (2.0 * s * s)).exp() / (s * (TWO_PI).sqrt())
    })
    .unwrap();
    let psi2 = combine_wavelets(&mex, &narrow, CombineMode::Star).unwrap();
    let cross = cross_admissibility(&mex, &psi2).unwrap();
    let st = ScaleTranslationGrid::log_symmetric(th, b_grid, 0.125, 8.0, 49, true).unwrap();
    let scal = cfrwt_forward(&f, &mex, &st).unwrap();
    let rec2 = reconstruct(&scal, &psi2, cross.value, &t_grid).unwrap();
    let err2 = rel_l2_error(&rec2, &f);

    report(
        "05 reconstruction",
        single_ok && err2 < 0.07,
        format!(
            "nested errors {:.4} > {:.4} > {:.4} (single < 5%), two-wavelet {err2:.4} (< 7%)",
            errors[0], errors[1], errors[2]
        ),
    );
}

#[test]
fn criterion_06_reproducing_kernel() {
    let th = theta(1.0);
    let t_grid = grid(-16.0, 16.0, 2049);
    let mex = catalog("mexican_hat", t_grid, th).unwrap();
    let c = Complex::new(mex.admissibility(), 0.0);

    // diagonal value
    let diag = reproducing_kernel(&mex, &mex, c, (0.0, 1.0), (0.0, 1.0)).unwrap();
    let expect = 0.75 * SQRT_PI / TWO_PI;
    assert!(
        (diag.re - expect).abs() < 0.01 * expect,
        "diagonal {} vs {expect}",
        diag.re
    );

    // pointwise bound over a 21 x 21 grid
    let norms = mex.l2_norm() * mex.l2_norm();
    let mut worst = 0.0f64;
    for i in 0..21 {
        let a = -4.0 + 8.0 * i as f64 / 20.0;
        let a = if a.abs() < 0.05 { 0.3 } else { a };
        for j in 0..21 {
            let b = -8.0 + 16.0 * j as f64 / 20.0;
            let k = reproducing_kernel(&mex, &mex, c, (0.0, 1.0), (b, a)).unwrap();
            worst = worst.max(k.norm() * c.norm() / norms);
        }
    }
    let bound_ok = worst <= 1.0 + 1e-6;

    // range residual of a true scalogram
    let th5 = theta(0.5);
    let t5 = grid(-16.0, 16.0, 2049);
    let b5 = grid(-32.0, 32.0, 2049);
    let mex5 = catalog("mexican_hat", t5, th5).unwrap();
    let st = ScaleTranslationGrid::log_symmetric(th5, b5, 0.125, 8.0, 49, true).unwrap();
    let f = gabor(t5);
    let field = cfrwt_forward(&f, &mex5, &st).unwrap();
    let c5 = Complex::new(mex5.admissibility(), 0.0);
    let residual = range_membership(&field, &mex5, &mex5, c5, 4).unwrap();

    report(
        "06 reproducing kernel",
        bound_ok && residual < 0.05,
        format!("max |K| C / norms = {worst:.6} (<= 1 + 1e-6), range residual {residual:.4}"),
    );
}

#[test]
fn criterion_07_convolution_identities() {
    let start = Instant::now();
    let th = theta(0.5);
    let t_grid = grid(-16.0, 16.0, 2049);
    let b_grid = grid(-32.0, 32.0, 4097); // same step as t_grid
    let st = ScaleTranslationGrid::log_symmetric(th, b_grid, 1.0, 2.0, 2, true).unwrap();
    let mex = catalog("mexican_hat", t_grid, th).unwrap();

    let boxf = SampledSignal::from_real_fn(t_grid, |t| {
        if (0.0..=1.0).contains(&t) {
            1.0
        } else {
            0.0
        }
    })
    .unwrap();
    let burst =
        SampledSignal::from_real_fn(t_grid, |t: f64| (-t * t / 2.0).exp() * (4.0 * t).cos())
            .unwrap();

    // first identity: transform of f * g (and f o g) via per-scale 1-D ops
    let mut worst1 = 0.0f64;
    for mode in [CombineMode::Star, CombineMode::Circ] {
        let combined = match mode {
            CombineMode::Star => frwt::grid::convolve(&boxf, &burst).unwrap(),
            CombineMode::Circ => frwt::grid::correlate(&boxf, &burst).unwrap(),
        };
        let lhs = cfrwt_forward(&combined, &mex, &st).unwrap();
        let rhs = transform_of_combination(&boxf, &burst, &mex, mode, &st).unwrap();
        let scale = lhs.values().iter().map(|v| v.norm()).fold(0.0, f64::max);
        for (a, b) in lhs.values().iter().zip(rhs.values()) {
            worst1 = worst1.max((a - b).norm() / scale);
        }
    }

    // second identity: transform with the combined wavelet f * psi / f o psi
    let fbox2 = SampledSignal::from_real_fn(t_grid, |t| {
        if (0.0..=0.5).contains(&t) {
            1.0
        } else {
            0.0
        }
    })
    .unwrap();
    let chirp = SampledSignal::from_real_fn(t_grid, |t: f64| {
        (-t * t / 8.0).exp() * (1.5 * t + 0.25 * t * t).cos()
    })
    .unwrap();
    let mut worst2 = 0.0f64;
    for mode in [CombineMode::Star, CombineMode::Circ] {
        let combined_signal = match mode {
            CombineMode::Star => frwt::grid::convolve(&fbox2, mex.signal()).unwrap(),
            CombineMode::Circ => frwt::grid::correlate(&fbox2, mex.signal()).unwrap(),
        };
        let combined = FractionalWavelet::from_signal(
            combined_signal,
            th,
            frwt::wavelet::SpectrumParams::default(),
            "combined",
            None,
        )
        .unwrap();
        let lhs = cfrwt_forward(&chirp, &combined, &st).unwrap();
        let rhs = transform_with_combined_wavelet(&fbox2, &mex, &chirp, mode, &st).unwrap();
        let scale = lhs.values().iter().map(|v| v.norm()).fold(0.0, f64::max);
        for (a, b) in lhs.values().iter().zip(rhs.values()) {
            worst2 = worst2.max((a - b).norm() / scale);
        }
    }

    // mollifier limit: unit-mass narrow gaussian factor reproduces W g
    let narrow = SampledSignal::from_real_fn(t_grid, |t: f64| {
        let s = 0.05;
        (-t * t / (2.0 * s * s)).exp() / (s * TWO_PI.sqrt())
    })
    .unwrap();
    let moll = transform_of_combination(&narrow, &burst, &mex, CombineMode::Star, &st).unwrap();
    let base = cfrwt_forward(&burst, &mex, &st).unwrap();
    let scale = base.values().iter().map(|v| v.norm()).fold(0.0, f64::max);
    let worst3 = moll
        .values()
        .iter()
        .zip(base.values())
        .map(|(a, b)| (a - b).norm() / scale)
        .fold(0.0, f64::max);

    let elapsed = start.elapsed().as_secs_f64();
    report(
        "07 convolution identities",
        worst1 < 1e-5 && worst2 < 1e-4 && worst3 < 0.02 && elapsed < 60.0,
        format!(
            "combination diff {worst1:.2e} (< 1e-5), combined-wavelet diff {worst2:.2e} (< 1e-4), \
             mollifier limit {worst3:.2e} (< 2e-2), {elapsed:.1}s"
        ),
    );
}

#[test]
fn criterion_08_weighted_inner_product() {
    let th = theta(0.5);
    let t_grid = grid(-16.0, 16.0, 2049);
    let b_grid = grid(-32.0, 32.0, 513);
    let f = gabor(t_grid);
    let mex = catalog("mexican_hat", t_grid, th).unwrap();
    let (lhs, rhs) = weighted_inner_product(&f, &f, &mex, &mex, 2.0, &b_grid).unwrap();
    let rel = (lhs - rhs).norm() / rhs.norm();
    let nonneg = lhs.re >= 0.0 && rhs.re >= 0.0;

    // nonnegativity also at theta = 1
    let th1 = theta(1.0);
    let mex1 = catalog("mexican_hat", t_grid, th1).unwrap();
    let (l1, r1) = weighted_inner_product(&f, &f, &mex1, &mex1, 2.0, &b_grid).unwrap();

    report(
        "08 weighted inner product",
        rel < 0.02 && nonneg && l1.re >= 0.0 && r1.re >= 0.0,
        format!("two-route relative gap {rel:.3e} (< 2e-2), lhs {:.3e}, rhs {:.3e}", lhs.re, rhs.re),
    );
}

#[test]
fn criterion_09_combination_bound() {
    let th = theta(0.5);
    let t_grid = grid(-16.0, 16.0, 2049);
    let mex = catalog("mexican_hat", t_grid, th).unwrap();
    let dog = catalog("dog", t_grid, th).unwrap();
    let boxf = SampledSignal::from_real_fn(t_grid, |t| {
        if (0.0..=1.0).contains(&t) {
            1.0
        } else {
            0.0
        }
    })
    .unwrap();
    let narrow = SampledSignal::from_real_fn(t_grid, |t: f64| {
        let s = 0.05;
        (-t * t / (2.0 * s * s)).exp() / (s * TWO_PI.sqrt())
    })
    .unwrap();
    let mut worst_ratio = 0.0f64;
    for (psi, phi) in [(&mex, &boxf), (&mex, &narrow), (&dog, &boxf)] {
        let l1 = norm(phi, NormOrder::L1);
        for mode in [CombineMode::Star, CombineMode::Circ] {
            let combined = combine_wavelets(psi, phi, mode).unwrap();
            let bound = l1 * l1 * psi.admissibility();
            assert!(
                combined.admissibility() <= bound,
                "{} {:?}: C {} vs bound {bound}",
                psi.id(),
                mode,
                combined.admissibility()
            );
            worst_ratio = worst_ratio.max(combined.admissibility() / bound);
        }
    }
    report(
        "09 combination admissibility bound",
        worst_ratio <= 1.0,
        format!("worst C / bound ratio {worst_ratio:.4} (strict)"),
    );
}

#[test]
fn criterion_10_hardy_bound_suite() {
    let scales: Vec<f64> = vec![-4.0, -2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0, 4.0];
    let family = MollifierFamily::<f64>::gaussian(33);
    let mut all = true;
    let mut worst = 0.0f64;
    for th_v in [0.5, 1.0] {
        let th = theta(th_v);
        let t_grid = grid(-16.0, 16.0, 1025);
        let b_grid = grid(-32.0, 32.0, 1025);
        let f = mexhat_signal(t_grid);
        let g = SampledSignal::from_real_fn(t_grid, |t: f64| (-t * t / 6.0).exp() * (1.8 * t).cos())
            .unwrap();
        let dog = catalog("dog", t_grid, th).unwrap();
        let gd1 = catalog("gauss_deriv1", t_grid, th).unwrap();

        // main bound + distance vs a different wavelet and argument
        let rep = hardy_bound_report(&f, &gd1, Some((&g, &dog)), &scales, &family, &b_grid)
            .unwrap();
        all &= rep.all_pass();
        worst = rep.rows.iter().map(|r| r.ratio).fold(worst, f64::max);
        assert_eq!(rep.slack, HARDY_SLACK);

        // degenerate distance quadruple: phi = psi, f = g
        let rep2 =
            hardy_bound_report(&f, &dog, Some((&f, &dog)), &scales, &family, &b_grid).unwrap();
        all &= rep2.all_pass();
    }
    report(
        "10 hardy bound suite",
        all,
        format!("all rows pass at slack {HARDY_SLACK}, worst lhs/rhs ratio {worst:.3}"),
    );
}

#[test]
fn criterion_11_morrey_bound_suite() {
    let th = theta(0.5);
    let t_grid = grid(-2.0, 3.0, 1025);
    let haar = catalog("haar", t_grid, th).unwrap();
    let f = SampledSignal::from_real_fn(t_grid, |t| {
        (if (0.0..=1.0).contains(&t) { 1.0 } else { 0.0 }) - 0.2
    })
    .unwrap();
    let g = SampledSignal::from_real_fn(t_grid, |t| {
        (if (-1.0..=0.5).contains(&t) { 1.0 } else { 0.0 }) - 0.3
    })
    .unwrap();
    let family = BallFamily::for_grid(f.grid(), 0.5, 128, 4).unwrap();
    let b_grid = grid(-7.0, 8.0, 1537);
    let scales = [-4.0, -2.0, -1.0, 1.0, 2.0, 4.0];

    let rep = morrey_bound_report(&f, &haar, Some((&g, &haar)), &scales, &family, &b_grid).unwrap();
    let all = rep.all_pass();
    let worst = rep.rows.iter().map(|r| r.ratio).fold(0.0, f64::max);
    assert_eq!(rep.slack, MORREY_SLACK);

    // degenerate quadruple
    let rep2 = morrey_bound_report(&f, &haar, Some((&f, &haar)), &scales, &family, &b_grid).unwrap();

    // non-compact wavelet rejected with the hypothesis-violation error
    let mex = catalog("mexican_hat", grid(-16.0, 16.0, 1025), th).unwrap();
    let rejected = matches!(
        morrey_bound_report(&f, &mex, None, &scales, &family, &b_grid),
        Err(FrwtError::HypothesisViolation(_))
    );

    report(
        "11 morrey bound suite",
        all && rep2.all_pass() && rejected,
        format!(
            "all rows pass at slack {MORREY_SLACK}, worst ratio {worst:.3}, non-compact rejected: {rejected}"
        ),
    );
}

#[test]
fn criterion_12_estimator_soundness() {
    // monotonicity under family refinement
    let g = grid(-8.0, 8.0, 1025);
    let f = mexhat_signal(g);
    let family_small = MollifierFamily::<f64>::gaussian(9);
    let mut dil = family_small.dilations().to_vec();
    dil.extend_from_slice(&[80.0, 90.0]);
    let family_big = MollifierFamily::new(family_small.eta().clone(), dil).unwrap();
    let hardy_mono =
        hardy_norm(&f, &family_big).unwrap() >= hardy_norm(&f, &family_small).unwrap();

    let boxg = grid(-2.0, 3.0, 2049);
    let boxf = SampledSignal::from_real_fn(boxg, |t| {
        if (0.0..=1.0).contains(&t) {
            1.0
        } else {
            0.0
        }
    })
    .unwrap();
    let coarse = BallFamily::for_grid(boxf.grid(), 0.5, 32, 8).unwrap();
    let mut centers = coarse.centers().to_vec();
    centers.push(0.5);
    let mut radii = coarse.radii().to_vec();
    radii.push(0.5);
    let fine = BallFamily::new(centers, radii, 0.5).unwrap();
    let morrey_mono = morrey_norm(&boxf, &fine) >= morrey_norm(&boxf, &coarse);

    // absolute homogeneity to 1e-12
    let c = Complex::new(3.0, 4.0);
    let cf = f.map(|v| c * v);
    let family = MollifierFamily::<f64>::gaussian(17);
    let h1 = hardy_norm(&cf, &family).unwrap();
    let h0 = hardy_norm(&f, &family).unwrap();
    let hardy_homog = (h1 - 5.0 * h0).abs() <= 1e-12 * h1.max(1.0);
    let m1 = morrey_norm(&boxf.map(|v| c * v), &coarse);
    let m0 = morrey_norm(&boxf, &coarse);
    let morrey_homog = (m1 - 5.0 * m0).abs() <= 1e-12 * m1.max(1.0);

    // box Morrey value at nu = 1/2
    let dense = BallFamily::for_grid(boxf.grid(), 0.5, 512, 4).unwrap();
    let sqrt2_err = (morrey_norm(&boxf, &dense) - 2.0f64.sqrt()).abs() / 2.0f64.sqrt();

    // regression of the Hardy estimator against the dense-oracle reference
    let tg = grid(-16.0, 16.0, 1025);
    let mex = mexhat_signal(tg);
    let default_family = MollifierFamily::<f64>::gaussian(33);
    let hardy_default = hardy_norm(&mex, &default_family).unwrap();
    let hardy_reg =
        (hardy_default - HARDY_MEXHAT_DENSE_REFERENCE).abs() / HARDY_MEXHAT_DENSE_REFERENCE;

    report(
        "12 estimator soundness",
        hardy_mono && morrey_mono && hardy_homog && morrey_homog && sqrt2_err < 0.02
            && hardy_reg < 0.02,
        format!(
            "monotone {hardy_mono}/{morrey_mono}, homogeneous {hardy_homog}/{morrey_homog}, \
             sqrt2 err {sqrt2_err:.3e} (< 2e-2), hardy regression {hardy_reg:.3e} (< 2e-2)"
        ),
    );
}

/// Recomputes the dense-oracle reference behind `HARDY_MEXHAT_DENSE_REFERENCE`
/// (257 dilations, half-step grid). Run with
/// `cargo test -p frwt --test acceptance -- --ignored refresh_hardy_reference --nocapture`.
#[test]
#[ignore]
fn refresh_hardy_reference() {
    let tg = grid(-16.0, 16.0, 2049);
    let mex = mexhat_signal(tg);
    let family = MollifierFamily::<f64>::gaussian(257);
    let value = hardy_norm(&mex, &family).unwrap();
    println!("dense-oracle hardy reference: {value:.16}");
}

/// Spectral and direct forward paths agree on the standard test set
/// (part of the forward/spectral agreement invariant used by criteria 4-6).
#[test]
fn spectral_direct_agreement_standard_set() {
    let th = theta(0.5);
    let (t_grid, st) = pairing_setup(th);
    let f = gabor(t_grid);
    let mex = catalog("mexican_hat", t_grid, th).unwrap();
    let direct = cfrwt_forward(&f, &mex, &st).unwrap();
    let f_spec = frft_forward(&f, th, mex.spectrum().xi_grid());
    let spectral = cfrwt_forward_spectral(&f_spec, &mex, &st).unwrap();
    let mut num = 0.0;
    let mut den = 0.0;
    for (a, b) in spectral.values().iter().zip(direct.values()) {
        num += (a - b).norm_sqr();
        den += b.norm_sqr();
    }
    let rel = (num / den).sqrt();
    assert!(rel < 1e-4, "relative Frobenius {rel:.3e}");
    // scalogram type invariants
    let zeros = Scalogram::new(
        st.clone(),
        vec![Complex::new(0.0, 0.0); st.len()],
        "mexican_hat",
        false,
    )
    .unwrap();
    assert!(!zeros.normalized());
}
