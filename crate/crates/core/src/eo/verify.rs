//! Pointwise comparison of the residue recursion against the exact
//! generating-function expansion.

use num_complex::Complex64;
use serde::Serialize;

use crate::xibasis::{fit_expansion, omega_exact_eval};

use super::recursion::omega_eval;
use super::curve::SpectralCurve;
use super::{EOConfig, EoError};

/// Deterministic pseudo-random stream (SplitMix64): the state advances by
/// the golden-ratio increment and each output is finalized with two
/// xor-shift multiplies.  Fixed here so that seeded runs are reproducible
/// byte for byte across platforms.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// One compared sample point tuple.
#[derive(Clone, Debug, Serialize)]
pub struct ExpansionSample {
    pub points: Vec<[f64; 2]>,
    pub exact: [f64; 2],
    pub numeric: [f64; 2],
    pub rel_err: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpansionParams {
    pub a: u32,
    pub g: u32,
    pub n: usize,
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
}

/// Report of one exact-versus-numeric comparison run.
#[derive(Clone, Debug, Serialize)]
pub struct ExpansionReport {
    pub schema_version: u32,
    pub params: ExpansionParams,
    pub samples: Vec<ExpansionSample>,
    pub pass: bool,
}

/// Draws `samples` seeded point tuples with moduli in
/// `[0.1, 0.5] a^(-1/a)`, evaluates the recursion and the exact expansion
/// at each, and reports the relative errors against `tol`.
///
/// `threads` caps the number of worker threads for the numeric side; the
/// output is identical for any thread count because samples are fixed
/// up front and results are collected by index.
pub fn verify_expansion(
    a: u32,
    g: u32,
    n: usize,
    samples: usize,
    tol: f64,
    seed: u64,
    cfg: &EOConfig,
    threads: usize,
) -> Result<ExpansionReport, EoError> {
    cfg.validate()?;
    if 2 * g as i64 - 2 + (n as i64) <= 0 {
        return Err(EoError::InvalidInput(
            "comparison needs a stable (g, n)".into(),
        ));
    }
    let expansion = fit_expansion(a, g, n).map_err(EoError::from)?;
    let curve = SpectralCurve::new(a);

    let mut rng = SplitMix64::new(seed);
    let tuples: Vec<Vec<Complex64>> = (0..samples)
        .map(|_| draw_tuple(&mut rng, a, n, cfg))
        .collect();

    let mut results: Vec<Option<Result<ExpansionSample, EoError>>> = vec![None; samples];
    let threads = threads.clamp(1, samples.max(1));
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for worker in 0..threads {
            let tuples = &tuples;
            let curve = &curve;
            let expansion = &expansion;
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                let mut idx = worker;
                while idx < tuples.len() {
                    out.push((idx, compare_at(curve, expansion, g, n, &tuples[idx], cfg)));
                    idx += threads;
                }
                out
            }));
        }
        for handle in handles {
            for (idx, result) in handle.join().expect("worker panicked") {
                results[idx] = Some(result);
            }
        }
    });

    let mut out = Vec::with_capacity(samples);
    for r in results {
        out.push(r.expect("all indices covered")?);
    }
    let pass = out.iter().all(|s| s.rel_err <= tol);
    Ok(ExpansionReport {
        schema_version: 1,
        params: ExpansionParams {
            a,
            g,
            n,
            samples,
            tol,
            seed,
        },
        samples: out,
        pass,
    })
}

fn compare_at(
    curve: &SpectralCurve,
    expansion: &crate::xibasis::XiExpansion,
    g: u32,
    n: usize,
    points: &[Complex64],
    cfg: &EOConfig,
) -> Result<ExpansionSample, EoError> {
    let exact = omega_exact_eval(expansion, points).map_err(EoError::from)?;
    let numeric = omega_eval(curve, g, n, points, cfg)?;
    let denom = exact.norm().max(1e-300);
    Ok(ExpansionSample {
        points: points.iter().map(|z| [z.re, z.im]).collect(),
        exact: [exact.re, exact.im],
        numeric: [numeric.re, numeric.im],
        rel_err: (numeric - exact).norm() / denom,
    })
}

/// Samples one point tuple: moduli uniform in `[0.1, 0.5] a^(-1/a)`,
/// angles uniform, redrawn until pairwise separations clear the greater of
/// `min_separation` and 1/20 of the scale.
fn draw_tuple(rng: &mut SplitMix64, a: u32, n: usize, cfg: &EOConfig) -> Vec<Complex64> {
    let scale = (a as f64).powf(-1.0 / a as f64);
    let gap = scale * cfg.min_separation.max(0.05);
    loop {
        let points: Vec<Complex64> = (0..n)
            .map(|_| {
                let modulus = scale * (0.1 + 0.4 * rng.next_f64());
                let angle = 2.0 * std::f64::consts::PI * rng.next_f64();
                Complex64::from_polar(modulus, angle)
            })
            .collect();
        let ok = (0..n).all(|i| (i + 1..n).all(|j| (points[i] - points[j]).norm() >= gap));
        if ok {
            return points;
        }
    }
}
