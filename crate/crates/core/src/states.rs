//! Constructors for hypergeometric and photon-added hypergeometric states and
//! their limiting cases (binomial, coherent, Fock, vacuum).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::FockState;
use crate::special::{ln_binomial, ln_factorial, log_sum_exp};

/// Tolerance on the `L ≥ max{M/η, M/(1−η)}` constraint, relative to the bound.
const CONSTRAINT_SLACK: f64 = 1e-12;
/// Largest pre-normalization tail mass accepted by [`coherent_truncated`].
pub const MAX_COHERENT_TAIL: f64 = 1e-8;

/// `(L, M, η, k)`: population, dimension parameter, probability and number
/// of added photons.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HypergeometricParams {
    pub l: f64,
    pub m: usize,
    pub eta: f64,
    pub k: usize,
}

impl HypergeometricParams {
    pub fn new(l: f64, m: usize, eta: f64, k: usize) -> Result<Self> {
        let p = Self { l, m, eta, k };
        p.validate()?;
        Ok(p)
    }

    /// Parameters with `L` pinned to `coefficient` times the smallest valid `L`.
    pub fn pinned(coefficient: f64, m: usize, eta: f64, k: usize) -> Result<Self> {
        if coefficient.is_nan() || coefficient < 1.0 {
            return Err(Error::InvalidParams(format!(
                "L coefficient must be at least 1, got {coefficient}"
            )));
        }
        check_eta(eta)?;
        let l = coefficient * min_population(m, eta);
        // M = 0 leaves L unconstrained; any positive value gives |0⟩
        Self::new(if l > 0.0 { l } else { coefficient }, m, eta, k)
    }

    pub fn with_k(self, k: usize) -> Self {
        Self { k, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        check_eta(self.eta)?;
        if !(self.l.is_finite() && self.l > 0.0) {
            return Err(Error::InvalidParams(format!(
                "L must be a positive finite real, got {}",
                self.l
            )));
        }
        let bound = min_population(self.m, self.eta);
        if self.l < bound * (1.0 - CONSTRAINT_SLACK) {
            return Err(Error::InvalidParams(format!(
                "L = {} violates L >= max(M/eta, M/(1-eta)) = {bound}",
                self.l
            )));
        }
        Ok(())
    }
}

fn check_eta(eta: f64) -> Result<()> {
    if (0.0..=1.0).contains(&eta) {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!(
            "eta must lie in [0, 1], got {eta}"
        )))
    }
}

/// Smallest admissible `L`: `max{M/η, M/(1−η)}` inside the open interval,
/// `M` at the endpoints.
pub fn min_population(m: usize, eta: f64) -> f64 {
    let m = m as f64;
    if eta <= 0.0 || eta >= 1.0 {
        m
    } else {
        (m / eta).max(m / (1.0 - eta))
    }
}

/// `ln C(x, n)` for real `x`: `Σ_{j<n} ln(x − j) − ln n!`.
///
/// Returns `-inf` when a factor vanishes, so the coefficient is exactly zero.
pub fn log_binomial_real(x: f64, n: usize) -> Result<f64> {
    let mut acc = 0.0;
    for j in 0..n {
        let f = x - j as f64;
        if f < -1e-12 {
            return Err(Error::NegativeCoefficient { x, n });
        }
        // a vanishing factor zeroes the whole falling factorial
        if f <= 1e-12 {
            return Ok(f64::NEG_INFINITY);
        }
        acc += f.ln();
    }
    Ok(acc - ln_factorial(n))
}

/// `ln` of the squared hypergeometric amplitude,
/// `ln[C(Lη, n) C(L(1−η), M−n) / C(L, M)]`; `-inf` outside `0..=M`.
pub fn log_hypergeometric_weight(p: &HypergeometricParams, n: i64) -> Result<f64> {
    if n < 0 || n as usize > p.m {
        return Ok(f64::NEG_INFINITY);
    }
    let n = n as usize;
    let success = p.l * p.eta;
    let failure = p.l * (1.0 - p.eta);
    Ok(
        log_binomial_real(success, n)? + log_binomial_real(failure, p.m - n)?
            - log_binomial_real(p.l, p.m)?,
    )
}

/// Hypergeometric state `|L, M, η⟩`; the `k` field is ignored.
pub fn hypergeometric(p: &HypergeometricParams) -> Result<FockState> {
    p.validate()?;
    let logs = (0..=p.m as i64)
        .map(|n| log_hypergeometric_weight(p, n))
        .collect::<Result<Vec<_>>>()?;
    from_log_weights(&logs)
}

/// k-photon-added hypergeometric state `|L, M, η, k⟩`.
pub fn pahs(p: &HypergeometricParams) -> Result<FockState> {
    hypergeometric(p)?.add_photons(p.k)
}

/// Normalization constant of the photon-added state evaluated directly from
/// the hypergeometric weights and `(n+k)!/n!`.
pub fn pahs_normalization(p: &HypergeometricParams) -> Result<f64> {
    p.validate()?;
    let terms = (0..=p.m)
        .map(|n| {
            Ok(log_hypergeometric_weight(p, n as i64)? + ln_factorial(n + p.k) - ln_factorial(n))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((-0.5 * log_sum_exp(&terms)).exp())
}

/// Binomial state with `M + 1` levels and success probability `η`.
pub fn binomial(m: usize, eta: f64) -> Result<FockState> {
    check_eta(eta)?;
    if eta == 0.0 {
        return FockState::number(0, m + 1);
    }
    if eta == 1.0 {
        return FockState::number(m, m + 1);
    }
    let (ln_eta, ln_rest) = (eta.ln(), (-eta).ln_1p());
    let logs: Vec<f64> = (0..=m)
        .map(|n| ln_binomial(m, n) + n as f64 * ln_eta + (m - n) as f64 * ln_rest)
        .collect();
    from_log_weights(&logs)
}

/// Probability mass of a Poissonian with mean `α²` at indices `≥ dim`.
pub fn coherent_tail_mass(alpha: f64, dim: usize) -> f64 {
    let mean = alpha * alpha;
    if mean == 0.0 {
        return if dim == 0 { 1.0 } else { 0.0 };
    }
    let ln_mean = mean.ln();
    let mut total = 0.0;
    let mut n = dim;
    loop {
        let t = (n as f64 * ln_mean - mean - ln_factorial(n)).exp();
        total += t;
        // terms decrease geometrically once n exceeds the mean
        if n as f64 > mean && t < 1e-18 * total.max(1e-300) {
            break;
        }
        if t == 0.0 && n as f64 > mean {
            break;
        }
        n += 1;
    }
    total
}

/// Coherent state with real amplitude `α` truncated to `dim` levels and
/// renormalized.
pub fn coherent_truncated(alpha: f64, dim: usize) -> Result<FockState> {
    if !alpha.is_finite() {
        return Err(Error::InvalidParams(format!(
            "alpha must be finite, got {alpha}"
        )));
    }
    if dim == 0 {
        return Err(Error::InvalidParams("dimension must be positive".into()));
    }
    let tail_mass = coherent_tail_mass(alpha, dim);
    if tail_mass > MAX_COHERENT_TAIL {
        return Err(Error::TruncationTooSmall { tail_mass, dim });
    }
    if alpha == 0.0 {
        return FockState::number(0, dim);
    }
    let ln_abs = alpha.abs().ln();
    let raw: Vec<Complex64> = (0..dim)
        .map(|n| {
            let magnitude = (n as f64 * ln_abs - 0.5 * ln_factorial(n)).exp();
            let sign = if alpha < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
            Complex64::new(sign * magnitude, 0.0)
        })
        .collect();
    FockState::normalize(raw)
}

/// Number state `|n⟩` in a `dim`-level space.
pub fn fock(n: usize, dim: usize) -> Result<FockState> {
    FockState::number(n, dim)
}

/// Real nonnegative amplitudes `√exp(w)` from log squared weights.
fn from_log_weights(logs: &[f64]) -> Result<FockState> {
    let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return Err(Error::ZeroState);
    }
    FockState::normalize(
        logs.iter()
            .map(|w| Complex64::new((0.5 * (w - max)).exp(), 0.0))
            .collect(),
    )
}
