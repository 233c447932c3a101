//! Complex-baseband signals, tone generation and time-domain power.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use libm::{floor, sincos};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::units;

/// A finite sequence of complex baseband samples (volts, 1-ohm load) at a
/// fixed sample rate. Immutable once constructed; every transform returns a
/// new signal.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSignal {
    samples: Vec<Complex64>,
    sample_rate_hz: f64,
}

impl ComplexSignal {
    pub fn new(samples: Vec<Complex64>, sample_rate_hz: f64) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySignal);
        }
        if !(sample_rate_hz.is_finite() && sample_rate_hz > 0.0) {
            return Err(Error::InvalidSampleRate(sample_rate_hz));
        }
        if samples
            .iter()
            .any(|s| !s.re.is_finite() || !s.im.is_finite())
        {
            return Err(Error::NonFiniteSamples);
        }
        Ok(Self {
            samples,
            sample_rate_hz,
        })
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.sample_rate_hz
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// One tone: frequency offset from the center frequency, amplitude, phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToneSpec {
    pub freq_offset_hz: f64,
    pub amplitude: f64,
    pub phase_rad: f64,
}

impl ToneSpec {
    pub fn new(freq_offset_hz: f64, amplitude: f64) -> Self {
        Self {
            freq_offset_hz,
            amplitude,
            phase_rad: 0.0,
        }
    }

    pub fn with_phase(mut self, phase_rad: f64) -> Self {
        self.phase_rad = phase_rad;
        self
    }
}

/// Render a tone: sample `k` is `A * exp(j*(2*pi*f*k/fs + phase))`.
///
/// Offsets at or beyond Nyquist are rejected.
pub fn gen_tone(tone: &ToneSpec, sample_rate_hz: f64, n_samples: usize) -> Result<ComplexSignal> {
    if n_samples == 0 {
        return Err(Error::EmptySignal);
    }
    if !(sample_rate_hz.is_finite() && sample_rate_hz > 0.0) {
        return Err(Error::InvalidSampleRate(sample_rate_hz));
    }
    if !tone.freq_offset_hz.is_finite()
        || libm::fabs(tone.freq_offset_hz) >= sample_rate_hz / 2.0
    {
        return Err(Error::AliasedTone {
            freq_offset_hz: tone.freq_offset_hz,
            sample_rate_hz,
        });
    }
    if !tone.amplitude.is_finite() || !tone.phase_rad.is_finite() {
        return Err(Error::NonFiniteSamples);
    }

    let cycles_per_sample = tone.freq_offset_hz / sample_rate_hz;
    let samples = (0..n_samples)
        .map(|k| {
            // Keep the phase argument in [0, 2*pi) so precision does not
            // degrade with sample index.
            let cycles = cycles_per_sample * k as f64;
            let theta = TAU * (cycles - floor(cycles)) + tone.phase_rad;
            let (s, c) = sincos(theta);
            Complex64::new(tone.amplitude * c, tone.amplitude * s)
        })
        .collect();
    ComplexSignal::new(samples, sample_rate_hz)
}

/// Pointwise sum of equal-rate, equal-length signals (ideal combining).
pub fn sum_signals(signals: &[ComplexSignal]) -> Result<ComplexSignal> {
    let first = signals.first().ok_or(Error::NoSignals)?;
    for s in &signals[1..] {
        if s.sample_rate_hz() != first.sample_rate_hz() {
            return Err(Error::SampleRateMismatch {
                a_hz: first.sample_rate_hz(),
                b_hz: s.sample_rate_hz(),
            });
        }
        if s.len() != first.len() {
            return Err(Error::LengthMismatch {
                a: first.len(),
                b: s.len(),
            });
        }
    }
    let mut acc = first.samples().to_vec();
    for s in &signals[1..] {
        for (a, b) in acc.iter_mut().zip(s.samples()) {
            *a += b;
        }
    }
    ComplexSignal::new(acc, first.sample_rate_hz())
}

/// Mean power of the signal in dBm: `mean(|x|^2) / 2` referenced to 1 mW.
///
/// An all-zero signal reports [`units::POWER_FLOOR_DBM`] rather than -inf.
pub fn time_power_dbm(signal: &ComplexSignal) -> f64 {
    let sum: f64 = signal.samples().iter().map(|s| s.norm_sqr()).sum();
    let watts = sum / signal.len() as f64 * 0.5;
    units::watts_to_dbm(watts)
}
