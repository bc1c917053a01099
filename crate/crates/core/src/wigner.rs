//! Wigner function of finite Fock-basis states.
//!
//! Two independent evaluation paths are provided: the closed-form Laguerre
//! expansion over Fock-basis kernels ([`WignerKernel`]) and direct quadrature
//! of the overlap integral of the position wavefunction
//! ([`wigner_oracle_point`]). Units use ħ = 1, so the vacuum is
//! `exp(−x² − p²)/π`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::FockState;
use crate::quadrature::{integrate_segment, CompositeRule};
use crate::special::{laguerre_into, ln_factorial, NeumaierSum};

/// Gauss–Legendre order used on every panel.
const PANEL_ORDER: usize = 8;
/// Extra radius beyond the classical turning circle of the highest level.
const RADIUS_MARGIN: f64 = 5.0;

/// Closed-form evaluator: precomputes the log of `√(2^a n!/(n+a)!)` for
/// every pair of levels.
#[derive(Debug, Clone)]
pub struct WignerKernel {
    amplitudes: Vec<Complex64>,
    /// `log_coef[a][n]` for the pair `(n + a, n)`.
    log_coef: Vec<Vec<f64>>,
}

impl WignerKernel {
    pub fn new(s: &FockState) -> Self {
        let dim = s.dim();
        let log_coef = (0..dim)
            .map(|a| {
                (0..dim - a)
                    .map(|n| {
                        0.5 * (a as f64 * std::f64::consts::LN_2 + ln_factorial(n)
                            - ln_factorial(n + a))
                    })
                    .collect()
            })
            .collect();
        Self {
            amplitudes: s.amplitudes().to_vec(),
            log_coef,
        }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn value(&self, x: f64, p: f64) -> f64 {
        let mut scratch = Vec::with_capacity(self.dim());
        self.value_with(x, p, &mut scratch)
    }

    /// `W(x, p)`, reusing `scratch` for the Laguerre values.
    pub fn value_with(&self, x: f64, p: f64, scratch: &mut Vec<f64>) -> f64 {
        let dim = self.dim();
        let r2 = x * x + p * p;
        let z = 2.0 * r2;
        let w = Complex64::new(x, -p);
        let w_abs = w.norm();
        let ln_w = w_abs.ln();
        let phase = if w_abs > 0.0 {
            w / w_abs
        } else {
            Complex64::new(0.0, 0.0)
        };

        let mut acc = NeumaierSum::new();
        let mut phase_a = Complex64::new(1.0, 0.0);
        for a in 0..dim {
            if a > 0 {
                if w_abs == 0.0 {
                    break;
                }
                phase_a *= phase;
            }
            let base = a as f64 * if a > 0 { ln_w } else { 0.0 } - r2;
            laguerre_into(dim - 1 - a, a as f64, z, scratch);
            for (n, &lag) in scratch.iter().enumerate() {
                let weight = self.amplitudes[n + a] * self.amplitudes[n].conj();
                if weight.norm_sqr() == 0.0 {
                    continue;
                }
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let magnitude = sign * (self.log_coef[a][n] + base).exp() * lag;
                let term = weight * phase_a * magnitude;
                // the (n, n+a) kernel is the conjugate of the (n+a, n) one
                acc.add(if a == 0 { term.re } else { 2.0 * term.re });
            }
        }
        acc.value() / PI
    }

    /// Full double sum over both orderings of every level pair, keeping the
    /// imaginary part.
    pub fn value_complex(&self, x: f64, p: f64) -> Complex64 {
        let dim = self.dim();
        let r2 = x * x + p * p;
        let z = 2.0 * r2;
        let mut scratch = Vec::new();
        let mut total = Complex64::new(0.0, 0.0);
        for a in 0..dim {
            laguerre_into(dim - 1 - a, a as f64, z, &mut scratch);
            let lower = Complex64::new(x, -p).powu(a as u32);
            let upper = Complex64::new(x, p).powu(a as u32);
            for (n, &lag) in scratch.iter().enumerate() {
                let m = n + a;
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let magnitude = sign * (self.log_coef[a][n] - r2).exp() * lag;
                total += self.amplitudes[m] * self.amplitudes[n].conj() * lower * magnitude;
                if a > 0 {
                    total += self.amplitudes[n] * self.amplitudes[m].conj() * upper * magnitude;
                }
            }
        }
        total / PI
    }
}

/// Closed-form `W(x, p)` of `s`.
pub fn wigner_point(s: &FockState, x: f64, p: f64) -> f64 {
    WignerKernel::new(s).value(x, p)
}

/// Normalized oscillator eigenfunctions `φ_0(u) ..= φ_{n_max}(u)`.
pub fn hermite_functions(n_max: usize, u: f64, out: &mut Vec<f64>) {
    out.clear();
    let phi0 = PI.powf(-0.25) * (-0.5 * u * u).exp();
    out.push(phi0);
    if n_max == 0 {
        return;
    }
    out.push(2f64.sqrt() * u * phi0);
    for n in 1..n_max {
        let nf = n as f64;
        let next = (2.0 / (nf + 1.0)).sqrt() * u * out[n] - (nf / (nf + 1.0)).sqrt() * out[n - 1];
        out.push(next);
    }
}

/// Position-space wavefunction `ψ(u) = Σ c_n φ_n(u)`.
pub fn wavefunction(s: &FockState, u: f64, scratch: &mut Vec<f64>) -> Complex64 {
    hermite_functions(s.dim() - 1, u, scratch);
    s.amplitudes()
        .iter()
        .zip(scratch.iter())
        .map(|(c, phi)| c * phi)
        .sum()
}

/// Absolute tolerance between the oracle's two refinement levels.
pub const ORACLE_REFINEMENT_TOLERANCE: f64 = 1e-7;

/// `W(x, p)` by direct quadrature of `(1/π)∫ ψ*(x+y) ψ(x−y) e^{2ipy} dy`.
pub fn wigner_oracle_point(s: &FockState, x: f64, p: f64) -> Result<f64> {
    let reach = (2.0 * s.max_occupied() as f64 + 1.0).sqrt() + 7.0;
    let cutoff = x.abs() + reach;
    let integrate = |panels: usize| {
        let rule = CompositeRule::new(-cutoff, cutoff, panels, 20);
        let mut scratch = Vec::new();
        let mut re = NeumaierSum::new();
        for (&y, &w) in rule.nodes.iter().zip(&rule.weights) {
            let f = wavefunction(s, x + y, &mut scratch).conj()
                * wavefunction(s, x - y, &mut scratch)
                * Complex64::from_polar(1.0, 2.0 * p * y);
            re.add(w * f.re);
        }
        re.value() / PI
    };
    let panels = (2.0 * cutoff).ceil() as usize;
    let coarse = integrate(panels);
    let fine = integrate(2 * panels);
    let delta = (fine - coarse).abs();
    if delta > ORACLE_REFINEMENT_TOLERANCE {
        return Err(Error::QuadratureNotConverged {
            delta,
            tolerance: ORACLE_REFINEMENT_TOLERANCE,
        });
    }
    Ok(fine)
}

/// Rectangular phase-space sampling grid, endpoints inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub p_min: f64,
    pub p_max: f64,
    pub nx: usize,
    pub np: usize,
}

impl GridSpec {
    pub fn square(half_width: f64, n: usize) -> Self {
        Self {
            x_min: -half_width,
            x_max: half_width,
            p_min: -half_width,
            p_max: half_width,
            nx: n,
            np: n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.nx >= 2
            && self.np >= 2
            && self.x_min < self.x_max
            && self.p_min < self.p_max
            && [self.x_min, self.x_max, self.p_min, self.p_max]
                .iter()
                .all(|v| v.is_finite());
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "degenerate Wigner grid {self:?}"
            )))
        }
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + (self.x_max - self.x_min) * i as f64 / (self.nx - 1) as f64
    }

    pub fn p(&self, j: usize) -> f64 {
        self.p_min + (self.p_max - self.p_min) * j as f64 / (self.np - 1) as f64
    }
}

/// Sampled `W(x, p)`; `values[i * np + j]` sits at `(x_i, p_j)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WignerGrid {
    pub x_min: f64,
    pub x_max: f64,
    pub p_min: f64,
    pub p_max: f64,
    pub nx: usize,
    pub np: usize,
    pub values: Vec<f64>,
}

impl WignerGrid {
    pub fn spec(&self) -> GridSpec {
        GridSpec {
            x_min: self.x_min,
            x_max: self.x_max,
            p_min: self.p_min,
            p_max: self.p_max,
            nx: self.nx,
            np: self.np,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.np + j]
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Trapezoidal estimate of `∬ W dx dp` over the grid.
    pub fn integral(&self) -> f64 {
        let spec = self.spec();
        let dx = (spec.x_max - spec.x_min) / (spec.nx - 1) as f64;
        let dp = (spec.p_max - spec.p_min) / (spec.np - 1) as f64;
        let edge = |i: usize, n: usize| if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        let mut acc = NeumaierSum::new();
        for i in 0..self.nx {
            for j in 0..self.np {
                acc.add(edge(i, self.nx) * edge(j, self.np) * self.get(i, j));
            }
        }
        acc.value() * dx * dp
    }

    /// Writes `x,p,W` rows with a header line.
    pub fn write_csv<W: std::io::Write>(&self, mut out: W) -> std::io::Result<()> {
        let spec = self.spec();
        writeln!(out, "x,p,W")?;
        for i in 0..self.nx {
            for j in 0..self.np {
                writeln!(
                    out,
                    "{:.16e},{:.16e},{:.16e}",
                    spec.x(i),
                    spec.p(j),
                    self.get(i, j)
                )?;
            }
        }
        Ok(())
    }
}

pub fn wigner_grid(s: &FockState, spec: &GridSpec) -> Result<WignerGrid> {
    spec.validate()?;
    let kernel = WignerKernel::new(s);
    let rows: Vec<Vec<f64>> = (0..spec.nx)
        .into_par_iter()
        .map(|i| {
            let mut scratch = Vec::new();
            let x = spec.x(i);
            (0..spec.np)
                .map(|j| kernel.value_with(x, spec.p(j), &mut scratch))
                .collect()
        })
        .collect();
    Ok(WignerGrid {
        x_min: spec.x_min,
        x_max: spec.x_max,
        p_min: spec.p_min,
        p_max: spec.p_max,
        nx: spec.nx,
        np: spec.np,
        values: rows.concat(),
    })
}

/// Number of sign changes of `W(x, 0)` sampled at `samples` points of
/// `(0, x_max]`.
pub fn sign_changes_along_x(s: &FockState, x_max: f64, samples: usize) -> usize {
    let kernel = WignerKernel::new(s);
    let mut scratch = Vec::new();
    let values: Vec<f64> = (1..=samples)
        .map(|i| kernel.value_with(x_max * i as f64 / samples as f64, 0.0, &mut scratch))
        .filter(|w| w.abs() > 1e-12)
        .collect();
    values
        .windows(2)
        .filter(|w| w[0].signum() != w[1].signum())
        .count()
}

/// Integration settings for phase-space integrals over `[−R, R]²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// Half-width `R`; `None` derives it from the state.
    pub radius: Option<f64>,
    /// Quadrature nodes per axis (rounded up to whole panels).
    pub nodes: usize,
    /// Largest accepted change of the log negativity when `nodes` doubles.
    pub tolerance: f64,
}

pub const MIN_NODES: usize = 32;

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            radius: None,
            nodes: 192,
            tolerance: 1e-4,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.nodes < MIN_NODES {
            return Err(Error::InvalidParams(format!(
                "quadrature needs at least {MIN_NODES} nodes per axis, got {}",
                self.nodes
            )));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::InvalidParams(
                "quadrature tolerance must be positive".into(),
            ));
        }
        if let Some(r) = self.radius {
            if !(r.is_finite() && r > 0.0) {
                return Err(Error::InvalidParams(format!("invalid radius {r}")));
            }
        }
        Ok(())
    }

    /// `R` for `s`: the explicit radius, else `√(2 n_max + 1) + 5`, never
    /// below `√(2⟨n⟩) + 5`.
    pub fn radius_for(&self, s: &FockState) -> f64 {
        let floor = (2.0 * s.mean_photon_number()).sqrt() + RADIUS_MARGIN;
        match self.radius {
            Some(r) => r,
            None => ((2.0 * s.max_occupied() as f64 + 1.0).sqrt() + RADIUS_MARGIN).max(floor),
        }
    }

    pub fn doubled(&self) -> Self {
        Self {
            nodes: 2 * self.nodes,
            ..*self
        }
    }
}

/// `∬ f dx dp` over `[−R, R]²` with a tensor-product composite rule.
pub fn integrate_phase_space<F>(f: F, radius: f64, nodes: usize) -> f64
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    let rule = CompositeRule::new(-radius, radius, nodes.div_ceil(PANEL_ORDER), PANEL_ORDER);
    let rows: Vec<f64> = rule
        .nodes
        .par_iter()
        .map(|&x| rule.integrate(|p| f(x, p)))
        .collect();
    rows.iter()
        .zip(&rule.weights)
        .map(|(r, w)| r * w)
        .collect::<NeumaierSum>()
        .value()
}

/// `∬ |f| dx dp` over the disk of radius `R`.
///
/// Negative regions of a Wigner function form rings around the origin, so
/// the integral is taken in polar coordinates: a trapezoidal rule over
/// `nodes` angles, and along each ray the zeros of `f` are bracketed on a
/// uniform sample of `nodes` radii, refined, and `r |f|` is integrated
/// piecewise between them with Gauss–Legendre panels. No panel straddles a
/// kink of `|f|`.
pub fn integrate_abs_phase_space<F>(f: F, radius: f64, nodes: usize) -> f64
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    let width = radius / nodes.div_ceil(PANEL_ORDER) as f64;
    let step = 2.0 * PI / nodes as f64;
    let rays: Vec<f64> = (0..nodes)
        .into_par_iter()
        .map(|i| {
            let (sin, cos) = (i as f64 * step).sin_cos();
            let line = |r: f64| f(r * cos, r * sin);
            let breaks = zero_crossings(&line, 0.0, radius, nodes);
            breaks
                .windows(2)
                .map(|seg| {
                    integrate_segment(|r| r * line(r).abs(), seg[0], seg[1], width, PANEL_ORDER)
                })
                .collect::<NeumaierSum>()
                .value()
        })
        .collect();
    step * rays.into_iter().collect::<NeumaierSum>().value()
}

/// `[a, roots…, b]` with the sign changes of `f` on a `samples`-point
/// uniform grid refined to near machine precision.
fn zero_crossings<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, samples: usize) -> Vec<f64> {
    let h = (b - a) / samples as f64;
    let mut breaks = vec![a];
    let mut left = (a, f(a));
    for i in 1..=samples {
        let x = if i == samples { b } else { a + i as f64 * h };
        let right = (x, f(x));
        if left.1 == 0.0 {
            if left.0 > a {
                breaks.push(left.0);
            }
        } else if left.1 * right.1 < 0.0 {
            breaks.push(refine_root(f, left, right));
        }
        left = right;
    }
    breaks.push(b);
    breaks
}

/// Illinois-modified regula falsi on a sign-changing bracket.
fn refine_root<F: Fn(f64) -> f64>(f: &F, mut lo: (f64, f64), mut hi: (f64, f64)) -> f64 {
    let mut side = 0i8;
    for _ in 0..100 {
        let x = (lo.0 * hi.1 - hi.0 * lo.1) / (hi.1 - lo.1);
        if (hi.0 - lo.0).abs() < 1e-13 * (1.0 + x.abs()) {
            return x;
        }
        let fx = f(x);
        if fx == 0.0 {
            return x;
        }
        if fx * hi.1 < 0.0 {
            lo = (x, fx);
            if side == -1 {
                hi.1 *= 0.5;
            }
            side = -1;
        } else {
            hi = (x, fx);
            if side == 1 {
                lo.1 *= 0.5;
            }
            side = 1;
        }
    }
    0.5 * (lo.0 + hi.0)
}

/// `∬ W dx dp` of `s`, evaluated at `2 × spec.nodes` like the refined WLN value.
pub fn wigner_integral(s: &FockState, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    let kernel = WignerKernel::new(s);
    Ok(integrate_phase_space(
        |x, p| kernel.value(x, p),
        spec.radius_for(s),
        spec.doubled().nodes,
    ))
}

/// Log negativity with its refinement diagnostics. The logarithm is natural.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WlnEstimate {
    /// Value at `2 × nodes`.
    pub value: f64,
    /// `|value(2 × nodes) − value(nodes)|`.
    pub delta: f64,
    pub nodes: usize,
    pub radius: f64,
    pub converged: bool,
}

pub const WLN_LOG_BASE: &str = "e";

/// Log negativity and its node-doubling delta, without failing on
/// non-convergence.
pub fn estimate_log_negativity(s: &FockState, spec: &QuadratureSpec) -> Result<WlnEstimate> {
    spec.validate()?;
    let kernel = WignerKernel::new(s);
    let radius = spec.radius_for(s);
    let at =
        |nodes: usize| integrate_abs_phase_space(|x, p| kernel.value(x, p), radius, nodes).ln();
    let coarse = at(spec.nodes);
    let fine_nodes = spec.doubled().nodes;
    let fine = at(fine_nodes);
    let delta = (fine - coarse).abs();
    Ok(WlnEstimate {
        value: fine,
        delta,
        nodes: fine_nodes,
        radius,
        converged: delta <= spec.tolerance,
    })
}

/// `ln ∬ |W(x, p)| dx dp`.
pub fn wigner_log_negativity(s: &FockState, spec: &QuadratureSpec) -> Result<f64> {
    let est = estimate_log_negativity(s, spec)?;
    if !est.converged {
        return Err(Error::QuadratureNotConverged {
            delta: est.delta,
            tolerance: spec.tolerance,
        });
    }
    Ok(est.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn hermite_functions_are_orthonormal() {
        let rule = CompositeRule::new(-12.0, 12.0, 48, 16);
        let mut buf = Vec::new();
        let table: Vec<Vec<f64>> = rule
            .nodes
            .iter()
            .map(|&u| {
                hermite_functions(10, u, &mut buf);
                buf.clone()
            })
            .collect();
        for m in 0..=10 {
            for n in 0..=10 {
                let ip: f64 = table
                    .iter()
                    .zip(&rule.weights)
                    .map(|(t, w)| w * t[m] * t[n])
                    .sum();
                let expected = if m == n { 1.0 } else { 0.0 };
                assert!((ip - expected).abs() < 1e-12, "({m},{n}) {ip}");
            }
        }
    }

    #[test]
    fn fock_anchors_at_origin() {
        assert_relative_eq!(
            wigner_point(&FockState::vacuum(), 0.0, 0.0),
            1.0 / PI,
            epsilon = 1e-15
        );
        let one = FockState::number(1, 2).unwrap();
        assert_relative_eq!(wigner_point(&one, 0.0, 0.0), -1.0 / PI, epsilon = 1e-15);
        let two = FockState::number(2, 3).unwrap();
        assert_relative_eq!(wigner_point(&two, 0.0, 0.0), 1.0 / PI, epsilon = 1e-15);
    }

    #[test]
    fn single_photon_matches_analytic_form() {
        let one = FockState::number(1, 2).unwrap();
        for &(x, p) in &[(0.3, -0.4), (1.2, 0.7), (-2.0, 1.5)] {
            let r2: f64 = x * x + p * p;
            let exact = (2.0 * r2 - 1.0) * (-r2).exp() / PI;
            assert_relative_eq!(wigner_point(&one, x, p), exact, epsilon = 1e-15);
        }
    }

    #[test]
    fn oracle_anchors() {
        let v = wigner_oracle_point(&FockState::vacuum(), 0.0, 0.0).unwrap();
        assert!((v - 1.0 / PI).abs() < 1e-8);
        let two = FockState::number(2, 3).unwrap();
        let v = wigner_oracle_point(&two, 0.0, 0.0).unwrap();
        assert!((v - 1.0 / PI).abs() < 1e-8);
    }

    #[test]
    fn closed_form_matches_oracle_for_complex_amplitudes() {
        let s = FockState::normalize(vec![
            Complex64::new(0.3, 0.1),
            Complex64::new(-0.2, 0.5),
            Complex64::new(0.0, -0.4),
            Complex64::new(0.6, 0.2),
        ])
        .unwrap();
        let kernel = WignerKernel::new(&s);
        for &x in &[-1.5, -0.2, 0.0, 0.8, 2.1] {
            for &p in &[-1.1, 0.0, 0.4, 1.9] {
                let oracle = wigner_oracle_point(&s, x, p).unwrap();
                assert!((kernel.value(x, p) - oracle).abs() < 1e-10, "({x},{p})");
                assert!(kernel.value_complex(x, p).im.abs() < 1e-12);
                assert!((kernel.value_complex(x, p).re - oracle).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn grid_layout_and_diagnostics() {
        let spec = GridSpec::square(4.0, 41);
        let grid = wigner_grid(&FockState::vacuum(), &spec).unwrap();
        assert_eq!(grid.values.len(), 41 * 41);
        assert!(grid.min() > 0.0);
        assert_relative_eq!(grid.max(), grid.get(20, 20));
        assert_relative_eq!(grid.max(), 1.0 / PI, epsilon = 1e-15);
        assert!((grid.integral() - 1.0).abs() < 1e-6);
        assert!(wigner_grid(&FockState::vacuum(), &GridSpec::square(4.0, 1)).is_err());

        let mut buf = Vec::new();
        wigner_grid(&FockState::vacuum(), &GridSpec::square(1.0, 2))
            .unwrap()
            .write_csv(&mut buf)
            .unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "x,p,W");
        assert!(lines[1].starts_with("-1.0000000000000000e0,-1.0000000000000000e0,"));
    }

    #[test]
    fn zero_crossings_are_refined() {
        let f = |x: f64| (x - 0.3) * (x + 1.7);
        let b = zero_crossings(&f, -3.0, 3.0, 10);
        assert_eq!(b.len(), 4);
        assert!((b[1] + 1.7).abs() < 1e-12);
        assert!((b[2] - 0.3).abs() < 1e-12);
    }

    #[test]
    fn abs_integral_of_single_photon() {
        // ∬|W₁| = 4e^{-1/2} − 1
        let one = FockState::number(1, 2).unwrap();
        let kernel = WignerKernel::new(&one);
        let v = integrate_abs_phase_space(|x, p| kernel.value(x, p), 8.0, 128);
        assert_relative_eq!(v, 4.0 * (-0.5f64).exp() - 1.0, epsilon = 1e-9);
    }

    #[test]
    fn quadrature_spec_checks() {
        assert!(QuadratureSpec {
            nodes: 16,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(QuadratureSpec {
            radius: Some(-1.0),
            ..Default::default()
        }
        .validate()
        .is_err());
        let s = FockState::number(4, 5).unwrap();
        let r = QuadratureSpec::default().radius_for(&s);
        assert_relative_eq!(r, 3.0 + 5.0);
        assert!(r >= (2.0 * s.mean_photon_number()).sqrt() + 5.0);
    }
}
