//! Pure states in a truncated Fock (number) basis.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{ln_factorial, NeumaierSum};

const ZERO_NORM: f64 = 1e-300;

/// Normalized pure state `Σ c_n |n⟩` over `n = 0..dim`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FockState {
    amplitudes: Vec<Complex64>,
}

impl FockState {
    /// Normalizes `raw` to unit Euclidean norm.
    pub fn normalize(raw: Vec<Complex64>) -> Result<Self> {
        let scale = raw.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if raw.is_empty() || !scale.is_finite() || scale < ZERO_NORM {
            return Err(Error::ZeroState);
        }
        let sum: NeumaierSum = raw.iter().map(|c| (c / scale).norm_sqr()).collect();
        let norm = scale * sum.value().sqrt();
        if norm < ZERO_NORM {
            return Err(Error::ZeroState);
        }
        Ok(Self {
            amplitudes: raw.into_iter().map(|c| c / norm).collect(),
        })
    }

    /// Normalizes a real amplitude vector.
    pub fn from_real(raw: &[f64]) -> Result<Self> {
        Self::normalize(raw.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Fock state `|n⟩` embedded in a space of dimension `dim`.
    pub fn number(n: usize, dim: usize) -> Result<Self> {
        if n >= dim {
            return Err(Error::IndexOutOfRange { n, dim });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[n] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes })
    }

    pub fn vacuum() -> Self {
        Self {
            amplitudes: vec![Complex64::new(1.0, 0.0)],
        }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Amplitude at index `n`, zero beyond the truncation.
    pub fn amplitude(&self, n: usize) -> Complex64 {
        self.amplitudes.get(n).copied().unwrap_or_default()
    }

    /// Highest index carrying a nonzero amplitude.
    pub fn max_occupied(&self) -> usize {
        self.amplitudes
            .iter()
            .rposition(|c| c.norm_sqr() > 0.0)
            .unwrap_or(0)
    }

    /// Same state zero-padded to at least `dim` levels.
    pub fn padded(&self, dim: usize) -> Self {
        let mut amplitudes = self.amplitudes.clone();
        if dim > amplitudes.len() {
            amplitudes.resize(dim, Complex64::new(0.0, 0.0));
        }
        Self { amplitudes }
    }

    /// Applies `(a†)^k` and renormalizes; the dimension grows by exactly `k`.
    pub fn add_photons(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Ok(self.clone());
        }
        // √((n+k)!/n!) in log space, shifted by the largest weight before
        // exponentiating
        let log_weights: Vec<f64> = (0..self.dim())
            .map(|n| 0.5 * (ln_factorial(n + k) - ln_factorial(n)))
            .collect();
        let shift = log_weights
            .iter()
            .zip(&self.amplitudes)
            .filter(|(_, c)| c.norm_sqr() > 0.0)
            .map(|(w, _)| *w)
            .fold(f64::NEG_INFINITY, f64::max);
        if shift == f64::NEG_INFINITY {
            return Err(Error::ZeroState);
        }
        let mut raw = vec![Complex64::new(0.0, 0.0); self.dim() + k];
        for (n, (c, w)) in self.amplitudes.iter().zip(&log_weights).enumerate() {
            raw[n + k] = c * (w - shift).exp();
        }
        Self::normalize(raw)
    }

    /// Photon-number distribution `p_m = |c_m|²`.
    pub fn photon_number_distribution(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|c| c.norm_sqr()).collect()
    }

    pub fn mean_photon_number(&self) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .map(|(m, c)| m as f64 * c.norm_sqr())
            .collect::<NeumaierSum>()
            .value()
    }

    /// `⟨self|other⟩`, the shorter state zero-padded.
    pub fn overlap(&self, other: &FockState) -> Complex64 {
        let mut re = NeumaierSum::new();
        let mut im = NeumaierSum::new();
        for (a, b) in self.amplitudes.iter().zip(&other.amplitudes) {
            let t = a.conj() * b;
            re.add(t.re);
            im.add(t.im);
        }
        Complex64::new(re.value(), im.value())
    }

    /// `|⟨self|other⟩|²`
    pub fn fidelity(&self, other: &FockState) -> f64 {
        self.overlap(other).norm_sqr()
    }

    /// `Σ |c_n|²`; unity up to rounding for every constructed state.
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|c| c.norm_sqr())
            .collect::<NeumaierSum>()
            .value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn normalize_examples() {
        let s = FockState::from_real(&[2.0, 0.0, 0.0]).unwrap();
        assert_eq!(s.amplitudes(), &[c(1.0), c(0.0), c(0.0)]);

        let s = FockState::from_real(&[1.0, 1.0]).unwrap();
        let h = 1.0 / 2f64.sqrt();
        assert_relative_eq!(s.amplitudes()[0].re, h, epsilon = 1e-15);
        assert_relative_eq!(s.amplitudes()[1].re, h, epsilon = 1e-15);

        assert_eq!(FockState::from_real(&[0.0, 0.0]), Err(Error::ZeroState));
        assert_eq!(FockState::normalize(vec![]), Err(Error::ZeroState));
    }

    #[test]
    fn normalize_survives_extreme_magnitudes() {
        let s = FockState::from_real(&[1e200, 1e200]).unwrap();
        assert_relative_eq!(s.norm_sqr(), 1.0, epsilon = 1e-14);
        let s = FockState::from_real(&[1e-290, 0.0]).unwrap();
        assert_eq!(s.amplitudes()[0], c(1.0));
    }

    #[test]
    fn add_photons_examples() {
        let one = FockState::vacuum().add_photons(1).unwrap();
        assert_eq!(one, FockState::number(1, 2).unwrap());

        let s = FockState::from_real(&[1.0, 1.0]).unwrap();
        assert_eq!(s.add_photons(0).unwrap(), s);

        // (|1⟩ + √2|2⟩)/√3
        let out = s.add_photons(1).unwrap();
        assert_eq!(out.dim(), 3);
        assert_eq!(out.amplitudes()[0], c(0.0));
        assert_relative_eq!(out.amplitudes()[1].re, 1.0 / 3f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(
            out.amplitudes()[2].re,
            (2.0f64 / 3.0).sqrt(),
            epsilon = 1e-15
        );
    }

    #[test]
    fn add_photons_on_vacuum_gives_fock() {
        for k in 0..12 {
            let s = FockState::vacuum().add_photons(k).unwrap();
            assert_eq!(s, FockState::number(k, k + 1).unwrap());
        }
    }

    #[test]
    fn add_photons_stays_finite_past_factorial_overflow() {
        let s = FockState::number(200, 201).unwrap().padded(300);
        let mixed = FockState::normalize(
            s.amplitudes()
                .iter()
                .enumerate()
                .map(|(n, a)| if n == 10 { c(1.0) } else { *a })
                .collect(),
        )
        .unwrap();
        let out = mixed.add_photons(50).unwrap();
        assert!(out.amplitudes().iter().all(|a| a.re.is_finite()));
        assert_relative_eq!(out.norm_sqr(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn distribution_and_mean() {
        let one = FockState::number(1, 2).unwrap();
        assert_eq!(one.photon_number_distribution(), vec![0.0, 1.0]);
        assert_eq!(FockState::vacuum().mean_photon_number(), 0.0);
        assert_eq!(FockState::number(7, 9).unwrap().mean_photon_number(), 7.0);
    }

    #[test]
    fn overlap_examples() {
        let zero = FockState::number(0, 2).unwrap();
        let one = FockState::number(1, 2).unwrap();
        assert_eq!(zero.overlap(&one), c(0.0));
        let s = FockState::from_real(&[0.3, -0.2, 0.9]).unwrap();
        assert_relative_eq!(s.overlap(&s).re, 1.0, epsilon = 1e-15);
        // zero padding of the shorter state
        assert_relative_eq!(FockState::vacuum().overlap(&s).re, s.amplitudes()[0].re);
    }

    #[test]
    fn index_out_of_range() {
        assert_eq!(
            FockState::number(3, 3),
            Err(Error::IndexOutOfRange { n: 3, dim: 3 })
        );
    }

    fn arb_state() -> impl Strategy<Value = FockState> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..24)
            .prop_filter("nonzero", |v| {
                v.iter().any(|(a, b)| a.abs() + b.abs() > 1e-3)
            })
            .prop_map(|v| {
                FockState::normalize(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect())
                    .unwrap()
            })
    }

    proptest! {
        #[test]
        fn photon_addition_properties(s in arb_state(), k in 0usize..8) {
            let out = s.add_photons(k).unwrap();
            prop_assert_eq!(out.dim(), s.dim() + k);
            prop_assert!((out.norm_sqr() - 1.0).abs() < 1e-12);
            for n in 0..k {
                prop_assert_eq!(out.amplitudes()[n], Complex64::new(0.0, 0.0));
            }
            prop_assert!(out.mean_photon_number() >= s.mean_photon_number() + k as f64 - 1e-12);
            let pnd: f64 = out.photon_number_distribution().iter().sum();
            prop_assert!((pnd - 1.0).abs() < 1e-12);
        }

        #[test]
        fn overlap_bounded(a in arb_state(), b in arb_state()) {
            prop_assert!(a.overlap(&b).norm() <= 1.0 + 1e-12);
            prop_assert!((a.fidelity(&a) - 1.0).abs() < 1e-12);
        }
    }
}
