//! Iterative radix-2 FFT for power-of-two sizes.
//!
//! Self-contained so the crate stays free of std; sizes are always powers of
//! two here (the spectrum estimator enforces that), which keeps the transform
//! small and predictable. Verified against a direct DFT in the tests.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use libm::sincos;
use num_complex::Complex64;

pub(crate) struct Fft {
    n: usize,
    log2n: u32,
    // twiddles[j] = exp(-2*pi*i*j/n) for j < n/2
    twiddles: Vec<Complex64>,
}

impl Fft {
    pub fn new(n: usize) -> Self {
        assert!(n.is_power_of_two() && n >= 2, "fft size must be 2^k >= 2");
        let twiddles = (0..n / 2)
            .map(|j| {
                let (s, c) = sincos(-TAU * j as f64 / n as f64);
                Complex64::new(c, s)
            })
            .collect();
        Self {
            n,
            log2n: n.trailing_zeros(),
            twiddles,
        }
    }

    pub fn process(&self, buf: &mut [Complex64]) {
        assert_eq!(buf.len(), self.n);
        let n = self.n;

        // Bit-reversal permutation.
        let shift = usize::BITS - self.log2n;
        for i in 0..n {
            let j = i.reverse_bits() >> shift;
            if j > i {
                buf.swap(i, j);
            }
        }

        // Butterflies.
        let mut len = 2;
        while len <= n {
            let half = len / 2;
            let stride = n / len;
            let mut base = 0;
            while base < n {
                for k in 0..half {
                    let w = self.twiddles[k * stride];
                    let t = w * buf[base + half + k];
                    let u = buf[base + k];
                    buf[base + k] = u + t;
                    buf[base + half + k] = u - t;
                }
                base += len;
            }
            len <<= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use alloc::vec;

    use super::*;

    /// Direct O(n^2) DFT used as the reference.
    fn dft(input: &[Complex64]) -> Vec<Complex64> {
        let n = input.len();
        (0..n)
            .map(|k| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (j, x) in input.iter().enumerate() {
                    let (s, c) = sincos(-TAU * (k * j % n) as f64 / n as f64);
                    acc += x * Complex64::new(c, s);
                }
                acc
            })
            .collect()
    }

    fn assert_close(a: &[Complex64], b: &[Complex64], tol: f64) {
        for (x, y) in a.iter().zip(b) {
            assert!(libm::sqrt((x - y).norm_sqr()) < tol, "{x:?} vs {y:?}");
        }
    }

    #[test]
    fn matches_dft_on_impulse_and_dc() {
        for n in [2usize, 4, 8, 64] {
            let fft = Fft::new(n);

            let mut impulse = vec![Complex64::new(0.0, 0.0); n];
            impulse[0] = Complex64::new(1.0, 0.0);
            let expect = dft(&impulse);
            fft.process(&mut impulse);
            assert_close(&impulse, &expect, 1e-12);

            let mut dc = vec![Complex64::new(1.0, 0.0); n];
            let expect = dft(&dc);
            fft.process(&mut dc);
            assert_close(&dc, &expect, 1e-12);
        }
    }

    #[test]
    fn matches_dft_on_pseudorandom_input() {
        // Cheap deterministic pseudo-random input; no RNG dependency needed.
        for n in [16usize, 128, 512] {
            let input: Vec<Complex64> = (0..n)
                .map(|k| {
                    let (s, c) = sincos(12.9898 * k as f64 + 0.5);
                    Complex64::new(c * 0.7, s * 1.3)
                })
                .collect();
            let expect = dft(&input);
            let fft = Fft::new(n);
            let mut buf = input.clone();
            fft.process(&mut buf);
            assert_close(&buf, &expect, 1e-9 * n as f64);
        }
    }

    #[test]
    fn bin_centered_tone_lands_in_its_bin() {
        let n = 256;
        let m = 37;
        let mut buf: Vec<Complex64> = (0..n)
            .map(|k| {
                let (s, c) = sincos(TAU * (m * k % n) as f64 / n as f64);
                Complex64::new(c, s)
            })
            .collect();
        Fft::new(n).process(&mut buf);
        for (k, v) in buf.iter().enumerate() {
            let mag = libm::sqrt(v.norm_sqr());
            if k == m {
                assert!((mag - n as f64).abs() < 1e-9);
            } else {
                assert!(mag < 1e-9, "bin {k}");
            }
        }
    }
}
