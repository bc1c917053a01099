//! Special functions and summation helpers shared by the state, Wigner and
//! entanglement modules.

use statrs::function::factorial;

/// ln(n!)
#[inline]
pub fn ln_factorial(n: usize) -> f64 {
    factorial::ln_factorial(n as u64)
}

/// ln C(n, k) for integer arguments, `-inf` when `k > n`.
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    if k > n {
        f64::NEG_INFINITY
    } else {
        ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
    }
}

/// Generalized Laguerre polynomials `L_0^a(z) ..= L_{n_max}^a(z)` written into
/// `out` by the upward three-term recurrence.
pub fn laguerre_into(n_max: usize, a: f64, z: f64, out: &mut Vec<f64>) {
    out.clear();
    out.push(1.0);
    if n_max == 0 {
        return;
    }
    out.push(1.0 + a - z);
    for n in 1..n_max {
        let nf = n as f64;
        let next = ((2.0 * nf + 1.0 + a - z) * out[n] - (nf + a) * out[n - 1]) / (nf + 1.0);
        out.push(next);
    }
}

/// Single generalized Laguerre polynomial value `L_n^a(z)`.
pub fn laguerre(n: usize, a: f64, z: f64) -> f64 {
    let mut buf = Vec::with_capacity(n + 1);
    laguerre_into(n, a, z, &mut buf);
    buf[n]
}

/// `ln Σ exp(v)` over the finite entries; `-inf` for an empty or all `-inf` input.
pub fn log_sum_exp(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    let sum: f64 = NeumaierSum::from_iter(values.iter().map(|v| (v - max).exp())).value();
    max + sum.ln()
}

/// Compensated (Neumaier) accumulator. Results depend only on the order of
/// the added terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}
