//! Dominant frequencies of a uniformly sampled series.

use std::f64::consts::PI;

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MIN_SAMPLES: usize = 16;

/// Peaks weaker than this fraction of the strongest one are dropped.
const PEAK_FLOOR: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralPeak {
    /// In units of `1/dt` radians.
    pub angular_frequency: f64,
    /// Interpolated spectral magnitude (arbitrary units).
    pub amplitude: f64,
}

/// Hann-windowed, zero-padded DFT peaks, strongest first. Peak positions are
/// refined by a parabola through the logarithms of the three bins around
/// each local maximum.
pub fn spectrum(series: &[f64], dt: f64) -> Result<Vec<SpectralPeak>> {
    let n = series.len();
    if n < MIN_SAMPLES {
        return Err(Error::SeriesTooShort(n));
    }
    if !(dt > 0.0) {
        return Err(Error::InvalidParameter(format!("sample spacing must be positive, got {dt}")));
    }
    let mean = series.iter().sum::<f64>() / n as f64;
    let padded = (4 * n).next_power_of_two();
    let mut buf: Vec<Complex<f64>> = series
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let w = 0.5 - 0.5 * (2.0 * PI * k as f64 / (n - 1) as f64).cos();
            Complex::new((x - mean) * w, 0.0)
        })
        .collect();
    buf.resize(padded, Complex::new(0.0, 0.0));
    FftPlanner::new().plan_fft_forward(padded).process(&mut buf);

    let mag: Vec<f64> = buf[..padded / 2].iter().map(|z| z.norm()).collect();
    let top = mag.iter().cloned().fold(0.0, f64::max);
    if top == 0.0 {
        return Ok(Vec::new());
    }
    let bin = 2.0 * PI / (padded as f64 * dt);
    let mut peaks = Vec::new();
    for k in 1..mag.len() - 1 {
        if mag[k] > mag[k - 1] && mag[k] >= mag[k + 1] && mag[k] >= PEAK_FLOOR * top {
            let (a, b, c) = (mag[k - 1].ln(), mag[k].ln(), mag[k + 1].ln());
            let den = a - 2.0 * b + c;
            let shift = if den < 0.0 { 0.5 * (a - c) / den } else { 0.0 };
            peaks.push(SpectralPeak {
                angular_frequency: (k as f64 + shift) * bin,
                amplitude: (b - 0.25 * (a - c) * shift).exp(),
            });
        }
    }
    peaks.sort_by(|x, y| y.amplitude.total_cmp(&x.amplitude));
    Ok(peaks)
}
