//! Crate-wide error type.

use alloc::vec::Vec;
use core::fmt;

use crate::fit::Exclusion;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors produced by signal construction, chain simulation, calibration and
/// the IP3 estimation pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A signal (or requested signal length) has no samples.
    EmptySignal,
    /// A sample is NaN or infinite.
    NonFiniteSamples,
    /// Sample rate must be finite and > 0.
    InvalidSampleRate(f64),
    /// Tone frequency offset at or beyond the Nyquist limit.
    AliasedTone {
        freq_offset_hz: f64,
        sample_rate_hz: f64,
    },
    /// An operation over a list of signals received an empty list.
    NoSignals,
    SampleRateMismatch {
        a_hz: f64,
        b_hz: f64,
    },
    LengthMismatch {
        a: usize,
        b: usize,
    },
    FftSizeNotPowerOfTwo(usize),
    ZeroAverages,
    /// Signal too short for the requested FFT size and average count.
    InsufficientSamples {
        required: usize,
        got: usize,
    },
    /// A requested frequency band does not intersect the spectrum span.
    BandOutsideSpan {
        lo_hz: f64,
        hi_hz: f64,
        span_lo_hz: f64,
        span_hi_hz: f64,
    },
    /// Attenuators only attenuate.
    NegativeLoss(f64),
    InvalidModel(&'static str),
    /// The device has no cubic term; its intercept point is unbounded.
    LinearDevice,
    TooFewCalPoints(usize),
    NonFiniteCalPoint,
    DuplicateGainSetting(f64),
    /// Gain setting outside the calibration table and extrapolation refused.
    GainOutOfRange {
        gain_db: f64,
        min_db: f64,
        max_db: f64,
    },
    /// Two-tone test needs two distinct tones.
    DegenerateTones,
    /// Measurement frequencies too close to resolve at the configured FFT.
    ToneCollision {
        f_a_hz: f64,
        f_b_hz: f64,
        min_separation_hz: f64,
    },
    InvalidSweep(&'static str),
    /// Sweep points violate an ordering/uniformity invariant.
    SweepDataInvalid(&'static str),
    InsufficientData {
        required: usize,
        got: usize,
    },
    /// Intermodulation products never cleared the noise margin.
    NotMeasurable {
        excluded: Vec<Exclusion>,
    },
    /// Too few points survive region selection to fit both lines.
    InsufficientLinearRegion {
        surviving: usize,
        excluded: Vec<Exclusion>,
    },
    /// Least squares has no unique solution (all abscissae equal).
    SingularFit,
    /// Parallel lines never intersect.
    EqualSlopes,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySignal => write!(f, "signal has no samples"),
            Error::NonFiniteSamples => write!(f, "signal contains non-finite samples"),
            Error::InvalidSampleRate(fs) => {
                write!(f, "sample rate must be finite and positive, got {fs} Hz")
            }
            Error::AliasedTone {
                freq_offset_hz,
                sample_rate_hz,
            } => write!(
                f,
                "tone offset {freq_offset_hz} Hz is at or beyond Nyquist ({} Hz)",
                sample_rate_hz / 2.0
            ),
            Error::NoSignals => write!(f, "no input signals"),
            Error::SampleRateMismatch { a_hz, b_hz } => {
                write!(f, "sample rates differ: {a_hz} Hz vs {b_hz} Hz")
            }
            Error::LengthMismatch { a, b } => {
                write!(f, "signal lengths differ: {a} vs {b} samples")
            }
            Error::FftSizeNotPowerOfTwo(n) => {
                write!(f, "fft_size must be a power of two >= 2, got {n}")
            }
            Error::ZeroAverages => write!(f, "n_averages must be >= 1"),
            Error::InsufficientSamples { required, got } => write!(
                f,
                "need at least {required} samples (fft_size * n_averages), got {got}"
            ),
            Error::BandOutsideSpan {
                lo_hz,
                hi_hz,
                span_lo_hz,
                span_hi_hz,
            } => write!(
                f,
                "band [{lo_hz}, {hi_hz}] Hz outside spectrum span [{span_lo_hz}, {span_hi_hz}] Hz"
            ),
            Error::NegativeLoss(db) => {
                write!(f, "attenuation must be >= 0 dB, got {db} dB")
            }
            Error::InvalidModel(why) => write!(f, "invalid front-end model: {why}"),
            Error::LinearDevice => write!(
                f,
                "device is linear (b3 = 0): intercept point is infinite / not measurable"
            ),
            Error::TooFewCalPoints(n) => {
                write!(f, "calibration needs >= 2 points, got {n}")
            }
            Error::NonFiniteCalPoint => write!(f, "calibration point contains non-finite value"),
            Error::DuplicateGainSetting(g) => {
                write!(f, "duplicate calibration gain setting {g} dB")
            }
            Error::GainOutOfRange {
                gain_db,
                min_db,
                max_db,
            } => write!(
                f,
                "gain {gain_db} dB outside calibrated range [{min_db}, {max_db}] dB \
                 (extrapolation refused)"
            ),
            Error::DegenerateTones => write!(f, "two-tone test requires f1 != f2"),
            Error::ToneCollision {
                f_a_hz,
                f_b_hz,
                min_separation_hz,
            } => write!(
                f,
                "measurement frequencies {f_a_hz} Hz and {f_b_hz} Hz closer than the \
                 required {min_separation_hz} Hz (3 FFT bins)"
            ),
            Error::InvalidSweep(why) => write!(f, "invalid sweep: {why}"),
            Error::SweepDataInvalid(why) => write!(f, "invalid sweep data: {why}"),
            Error::InsufficientData { required, got } => {
                write!(f, "need at least {required} sweep points, got {got}")
            }
            Error::NotMeasurable { excluded } => write!(
                f,
                "not measurable: no intermodulation products cleared the noise margin \
                 ({} points excluded)",
                excluded.len()
            ),
            Error::InsufficientLinearRegion {
                surviving,
                excluded,
            } => write!(
                f,
                "insufficient linear region: only {surviving} usable points \
                 ({} excluded), need >= 3",
                excluded.len()
            ),
            Error::SingularFit => write!(f, "singular fit: all input powers identical"),
            Error::EqualSlopes => write!(f, "fitted lines have equal slopes and never intersect"),
        }
    }
}
