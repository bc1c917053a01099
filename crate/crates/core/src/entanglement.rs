//! Concurrence potential: the state is mixed with vacuum on a balanced
//! beamsplitter and the entanglement of the output is read off the purity of
//! one reduced mode.

use num_complex::Complex64;

use crate::error::Result;
use crate::fock::FockState;
use crate::special::{ln_binomial, ln_factorial, log_sum_exp, NeumaierSum};
use crate::states::{log_hypergeometric_weight, HypergeometricParams};

/// Pure two-mode state; `amplitude(j, l)` is the coefficient of `|j, l⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeState {
    dim: usize,
    amplitudes: Vec<Complex64>,
}

/// Phase convention of the balanced beamsplitter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitterConvention {
    /// Reflected amplitude `i/√2`.
    Symmetric,
    /// Real coefficients `√C(n, j)/2^{n/2}`.
    Real,
}

impl TwoModeState {
    pub fn from_amplitudes(dim: usize, amplitudes: Vec<Complex64>) -> Self {
        assert_eq!(
            amplitudes.len(),
            dim * dim,
            "two-mode amplitudes must be dim x dim"
        );
        Self { dim, amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn amplitude(&self, j: usize, l: usize) -> Complex64 {
        self.amplitudes[j * self.dim + l]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|c| c.norm_sqr())
            .collect::<NeumaierSum>()
            .value()
    }

    /// `ρ_B = Tr_A |t⟩⟨t|` as a row-major `dim × dim` matrix.
    pub fn reduced_b(&self) -> Vec<Complex64> {
        let d = self.dim;
        let mut rho = vec![Complex64::new(0.0, 0.0); d * d];
        for l in 0..d {
            for lp in 0..d {
                rho[l * d + lp] = (0..d)
                    .map(|j| self.amplitude(j, l) * self.amplitude(j, lp).conj())
                    .sum();
            }
        }
        rho
    }

    /// `ρ_A = Tr_B |t⟩⟨t|` as a row-major `dim × dim` matrix.
    pub fn reduced_a(&self) -> Vec<Complex64> {
        let d = self.dim;
        let mut rho = vec![Complex64::new(0.0, 0.0); d * d];
        for j in 0..d {
            for jp in 0..d {
                rho[j * d + jp] = (0..d)
                    .map(|l| self.amplitude(j, l) * self.amplitude(jp, l).conj())
                    .sum();
            }
        }
        rho
    }
}

/// `Tr ρ²` of a Hermitian matrix, i.e. the sum of `|ρ_ij|²`.
fn matrix_purity(rho: &[Complex64]) -> f64 {
    rho.iter()
        .map(|c| c.norm_sqr())
        .collect::<NeumaierSum>()
        .value()
}

/// Output of `s ⊗ |0⟩` on a 50:50 beamsplitter; each mode keeps `s.dim()` levels.
pub fn beamsplitter_with_vacuum(s: &FockState) -> TwoModeState {
    beamsplitter_with_convention(s, SplitterConvention::Symmetric)
}

pub fn beamsplitter_with_convention(s: &FockState, convention: SplitterConvention) -> TwoModeState {
    let d = s.dim();
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); d * d];
    let i_pow = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, -1.0),
    ];
    for (n, c) in s.amplitudes().iter().enumerate() {
        if c.norm_sqr() == 0.0 {
            continue;
        }
        for j in 0..=n {
            let l = n - j;
            // C(n, j) √(j!(n−j)!/n!) 2^{−n/2} = √C(n, j) 2^{−n/2}
            let magnitude =
                (0.5 * ln_binomial(n, j) - 0.5 * n as f64 * std::f64::consts::LN_2).exp();
            let phase = match convention {
                SplitterConvention::Symmetric => i_pow[l % 4],
                SplitterConvention::Real => Complex64::new(1.0, 0.0),
            };
            amplitudes[j * d + l] = c * phase * magnitude;
        }
    }
    TwoModeState { dim: d, amplitudes }
}

/// `Tr ρ_B²` with `ρ_B` obtained by tracing out mode A.
pub fn reduced_purity(t: &TwoModeState) -> f64 {
    matrix_purity(&t.reduced_b())
}

/// `Tr ρ_A²` with `ρ_A` obtained by tracing out mode B.
pub fn reduced_purity_a(t: &TwoModeState) -> f64 {
    matrix_purity(&t.reduced_a())
}

/// `√(2(1 − Tr ρ_B²))` of the beamsplitter output.
pub fn concurrence_potential(s: &FockState) -> f64 {
    concurrence_from_purity(reduced_purity(&beamsplitter_with_vacuum(s)))
}

pub fn concurrence_from_purity(purity: f64) -> f64 {
    (2.0 * (1.0 - purity)).max(0.0).sqrt()
}

/// Reduced purity of the beamsplitter output for a photon-added
/// hypergeometric input, summed in closed form over the hypergeometric
/// weights without building the two-mode state.
///
/// The sum runs over levels `n, m, r ∈ [0, M]` and the split index `k₁`;
/// terms whose fourth level `n − m + r` leaves `[0, M]` or that need a
/// factorial of a negative integer vanish.
pub fn purity_closed_form_pahs(p: &HypergeometricParams) -> Result<f64> {
    p.validate()?;
    let (m_max, k) = (p.m as i64, p.k as i64);
    let log_h = (0..=m_max)
        .map(|n| Ok(0.5 * log_hypergeometric_weight(p, n)?))
        .collect::<Result<Vec<_>>>()?;
    let ln_fact = |n: i64| ln_factorial(n as usize);
    let ln2 = std::f64::consts::LN_2;

    // normalization: Σ h_n² (n+k)!/n!
    let norm_terms: Vec<f64> = (0..=m_max)
        .map(|n| 2.0 * log_h[n as usize] + ln_fact(n + k) - ln_fact(n))
        .collect();
    let log_norm = log_sum_exp(&norm_terms);

    let mut terms = Vec::new();
    for n in 0..=m_max {
        for m in 0..=m_max {
            for r in 0..=m_max {
                let q = n - m + r;
                if !(0..=m_max).contains(&q) {
                    continue;
                }
                let levels = [n, m, r, q];
                let weight: f64 = levels.iter().map(|&v| log_h[v as usize]).sum();
                if weight == f64::NEG_INFINITY {
                    continue;
                }
                let prefactor = weight
                    + levels
                        .iter()
                        .map(|&v| ln_fact(v + k) - 0.5 * ln_fact(v))
                        .sum::<f64>()
                    - (n + r + 2 * k) as f64 * ln2;
                let lo = 0.max(m - r);
                let hi = (n + k).min(m + k);
                for k1 in lo..=hi {
                    let denominator = ln_fact(k1)
                        + ln_fact(n + k - k1)
                        + ln_fact(k + m - k1)
                        + ln_fact(r - m + k1);
                    terms.push(prefactor - denominator);
                }
            }
        }
    }
    Ok((log_sum_exp(&terms) - 2.0 * log_norm).exp())
}
