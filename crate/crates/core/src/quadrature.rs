//! Globally adaptive 21-point Gauss–Kronrod quadrature, and a semi-infinite
//! driver that walks geometrically growing panels until the remaining tail is
//! certified negligible.

#![allow(clippy::excessive_precision)]

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Kronrod abscissae for the 21-point rule (QUADPACK `qk21`), non-negative half.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

/// Weights of the embedded 10-point Gauss rule (odd Kronrod indices).
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// An integral value with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub abs_err: f64,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut res_k = f_center * WGK[10];
    let mut res_abs = res_k.abs();
    let mut res_g = 0.0;
    let mut fv = [(0.0, 0.0); 10];
    for (j, fvj) in fv.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        *fvj = (f1, f2);
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for (j, &(f1, f2)) in fv.iter().enumerate() {
        res_asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let value = res_k * half;
    res_abs *= half.abs();
    res_asc *= half.abs();

    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * libm::pow(200.0 * err / res_asc, 1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Panel { a, b, value, err }
}

/// Adaptive integration over a finite interval.
///
/// Bisects the panel with the largest error estimate until the summed error
/// is below `max(abs_tol, rel_tol * |value|)` or `max_panels` is reached.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> Integral {
    if a == b {
        return Integral {
            value: 0.0,
            abs_err: 0.0,
        };
    }
    let mut panels: Vec<Panel> = Vec::with_capacity(64);
    panels.push(gauss_kronrod(&f, a, b));
    loop {
        let (value, err) = panels
            .iter()
            .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.err));
        if err <= abs_tol.max(rel_tol * value.abs()) || panels.len() >= max_panels {
            return Integral {
                value,
                abs_err: err,
            };
        }
        let (worst, _) =
            panels
                .iter()
                .enumerate()
                .fold((0, f64::NEG_INFINITY), |(wi, we), (i, p)| {
                    if p.err > we {
                        (i, p.err)
                    } else {
                        (wi, we)
                    }
                });
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        if mid <= p.a || mid >= p.b {
            // Panel cannot be split further in floating point.
            panels.push(Panel { err: 0.0, ..p });
            continue;
        }
        panels.push(gauss_kronrod(&f, p.a, mid));
        panels.push(gauss_kronrod(&f, mid, p.b));
    }
}

/// Largest breakpoint the semi-infinite driver will visit.
const MAX_BREAKPOINT: f64 = 1e250;

/// Integrates a non-negative, eventually non-increasing `g` over
/// `[lower, upper)`, where `upper` may be infinite.
///
/// Panels `[lower + h(2^j - 1), lower + h(2^{j+1} - 1)]` are integrated in turn.
/// After each panel the local power-law decay exponent
/// `p = -d ln g / d ln x` is estimated from the two breakpoints; the walk stops
/// once `g(T) T < 1e-12` and the power-law tail bound `g(T) T / (p - 1)` is
/// below `1e-13`. That bound is added to `abs_err`. A decay exponent at or
/// below one far out in the tail is reported as a divergent integral.
pub fn integrate_tail<G: Fn(f64) -> f64>(
    g: G,
    lower: f64,
    upper: f64,
    h: f64,
    panel_tol: f64,
) -> Result<Integral> {
    if upper.is_finite() {
        return Ok(integrate(&g, lower, upper, panel_tol, 1e-14, 2000));
    }
    let h = if h.is_finite() && h > 0.0 { h } else { 1.0 };
    let mut total = 0.0;
    let mut err = 0.0;
    let mut a = lower;
    let mut width = h;
    let mut g_prev = g(lower);
    loop {
        let b = a + width;
        let piece = integrate(&g, a, b, panel_tol, 1e-14, 500);
        total += piece.value;
        err += piece.abs_err;
        let g_b = g(b);
        if g_b == 0.0 {
            return Ok(Integral {
                value: total,
                abs_err: err,
            });
        }
        let decay = if a > 0.0 && g_prev > 0.0 {
            libm::log(g_prev / g_b) / libm::log(b / a)
        } else {
            f64::NAN
        };
        if decay.is_finite() {
            if decay > 1.0 {
                let tail = g_b * b / (decay - 1.0);
                if g_b * b < 1e-12 && tail < 1e-13 {
                    return Ok(Integral {
                        value: total,
                        abs_err: err + tail,
                    });
                }
                if b >= MAX_BREAKPOINT {
                    // Slowly converging power tail: add the estimate itself.
                    return Ok(Integral {
                        value: total + tail,
                        abs_err: err + tail,
                    });
                }
            } else if b - lower > 1e8 * h {
                return Err(Error::DivergentIntegral);
            }
        }
        if b >= MAX_BREAKPOINT {
            return Err(Error::DivergentIntegral);
        }
        g_prev = g_b;
        a = b;
        width *= 2.0;
    }
}
