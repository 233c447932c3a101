//! Unit conventions and conversions.
//!
//! Amplitudes are volts across a normalized 1-ohm load. A complex exponential
//! of amplitude `A` carries `A^2 / 2` watts; dBm is referenced to 1 mW. All
//! transcendental math goes through `libm` so results are identical across
//! builds and platforms.

use libm::{log10, pow, sqrt};

/// Smallest representable reading, used instead of -inf so reports stay
/// serializable. Corresponds to 1e-33 W.
pub const POWER_FLOOR_DBM: f64 = -300.0;

/// Watts to dBm, clamped at [`POWER_FLOOR_DBM`].
pub fn watts_to_dbm(watts: f64) -> f64 {
    if watts <= 0.0 {
        return POWER_FLOOR_DBM;
    }
    let dbm = 10.0 * log10(watts * 1e3);
    if dbm < POWER_FLOOR_DBM {
        POWER_FLOOR_DBM
    } else {
        dbm
    }
}

pub fn dbm_to_watts(dbm: f64) -> f64 {
    1e-3 * pow(10.0, dbm / 10.0)
}

/// Power of a complex exponential of this amplitude, in dBm.
pub fn amplitude_to_dbm(amplitude: f64) -> f64 {
    watts_to_dbm(amplitude * amplitude * 0.5)
}

/// Amplitude of a complex exponential carrying this power.
pub fn dbm_to_amplitude(dbm: f64) -> f64 {
    sqrt(2.0 * dbm_to_watts(dbm))
}

pub fn db_to_amplitude_ratio(db: f64) -> f64 {
    pow(10.0, db / 20.0)
}

pub fn amplitude_ratio_to_db(ratio: f64) -> f64 {
    20.0 * log10(ratio)
}
