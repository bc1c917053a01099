//! Name-keyed registries of state families and measures, so front ends can
//! select both at runtime.

use std::collections::BTreeMap;

use crate::entanglement::concurrence_potential;
use crate::error::{Error, Result};
use crate::fock::FockState;
use crate::measures::{anticlassicality, sps_quality_mu};
use crate::states::{self, HypergeometricParams};
use crate::wigner::{estimate_log_negativity, QuadratureSpec};

pub use crate::report::{MeasureReport, MeasureValue, ParamValue};

/// Default multiple of the smallest valid `L` when `L` is not given.
pub const DEFAULT_L_COEFFICIENT: f64 = 2.0;
/// Default truncation of coherent states.
pub const DEFAULT_COHERENT_DIM: usize = 40;

/// Loose parameter bag shared by every family; each family reads the
/// entries it needs.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyParams {
    pub l: Option<f64>,
    pub l_coefficient: f64,
    pub m: Option<usize>,
    pub eta: Option<f64>,
    pub k: usize,
    pub alpha: Option<f64>,
    pub n: Option<usize>,
    pub dim: Option<usize>,
}

impl Default for FamilyParams {
    fn default() -> Self {
        Self {
            l: None,
            l_coefficient: DEFAULT_L_COEFFICIENT,
            m: None,
            eta: None,
            k: 0,
            alpha: None,
            n: None,
            dim: None,
        }
    }
}

/// Names accepted by [`FamilyParams::set`].
pub const PARAM_NAMES: &[&str] = &["L", "c", "M", "eta", "k", "alpha", "n", "dim"];

impl FamilyParams {
    /// Sets a parameter by name; integer parameters must be whole numbers.
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        let whole = || -> Result<usize> {
            if value >= 0.0 && value.fract() == 0.0 && value.is_finite() {
                Ok(value as usize)
            } else {
                Err(Error::InvalidParams(format!(
                    "{name} must be a nonnegative integer, got {value}"
                )))
            }
        };
        match name {
            "L" => self.l = Some(value),
            "c" => self.l_coefficient = value,
            "M" => self.m = Some(whole()?),
            "eta" => self.eta = Some(value),
            "k" => self.k = whole()?,
            "alpha" => self.alpha = Some(value),
            "n" => self.n = Some(whole()?),
            "dim" => self.dim = Some(whole()?),
            _ => {
                return Err(Error::UnknownName {
                    kind: "parameter",
                    name: name.to_string(),
                })
            }
        }
        Ok(())
    }

    fn require<T: Copy>(value: Option<T>, name: &str, family: &str) -> Result<T> {
        value.ok_or_else(|| Error::InvalidParams(format!("{family} needs --{name}")))
    }

    /// Resolves `(L, M, η, k)`, pinning `L` by the coefficient rule when it
    /// was not given explicitly.
    pub fn hypergeometric(&self, family: &str) -> Result<HypergeometricParams> {
        let m = Self::require(self.m, "M", family)?;
        let eta = Self::require(self.eta, "eta", family)?;
        match self.l {
            Some(l) => HypergeometricParams::new(l, m, eta, self.k),
            None => HypergeometricParams::pinned(self.l_coefficient, m, eta, self.k),
        }
    }
}

/// A named way of building a [`FockState`] from [`FamilyParams`].
pub trait StateFamily: Send + Sync {
    fn name(&self) -> &'static str;

    /// Names of the keys [`StateFamily::resolved`] returns, alphabetical.
    fn param_names(&self) -> &'static [&'static str];

    fn build(&self, params: &FamilyParams) -> Result<FockState>;

    /// The parameters that determine the state, after defaults are applied.
    fn resolved(&self, params: &FamilyParams) -> Result<BTreeMap<String, ParamValue>>;

    /// Hypergeometric parameters, for families that have them.
    fn hypergeometric(&self, _params: &FamilyParams) -> Option<HypergeometricParams> {
        None
    }
}

fn hypergeometric_map(p: &HypergeometricParams) -> BTreeMap<String, ParamValue> {
    BTreeMap::from([
        ("L".to_string(), ParamValue::Real(p.l)),
        ("M".to_string(), ParamValue::Int(p.m as i64)),
        ("eta".to_string(), ParamValue::Real(p.eta)),
        ("k".to_string(), ParamValue::Int(p.k as i64)),
    ])
}

struct Pahs;

impl StateFamily for Pahs {
    fn name(&self) -> &'static str {
        "pahs"
    }

    fn param_names(&self) -> &'static [&'static str] {
        &["L", "M", "eta", "k"]
    }

    fn build(&self, params: &FamilyParams) -> Result<FockState> {
        states::pahs(&params.hypergeometric(self.name())?)
    }

    fn resolved(&self, params: &FamilyParams) -> Result<BTreeMap<String, ParamValue>> {
        Ok(hypergeometric_map(&params.hypergeometric(self.name())?))
    }

    fn hypergeometric(&self, params: &FamilyParams) -> Option<HypergeometricParams> {
        params.hypergeometric(self.name()).ok()
    }
}

struct Hypergeometric;

impl Hypergeometric {
    fn params(&self, params: &FamilyParams) -> Result<HypergeometricParams> {
        if params.k != 0 {
            return Err(Error::InvalidParams(
                "hypergeometric takes no added photons; use the pahs family".into(),
            ));
        }
        params.hypergeometric(self.name())
    }
}

impl StateFamily for Hypergeometric {
    fn name(&self) -> &'static str {
        "hypergeometric"
    }

    fn param_names(&self) -> &'static [&'static str] {
        &["L", "M", "eta"]
    }

    fn build(&self, params: &FamilyParams) -> Result<FockState> {
        states::hypergeometric(&self.params(params)?)
    }

    fn resolved(&self, params: &FamilyParams) -> Result<BTreeMap<String, ParamValue>> {
        let mut map = hypergeometric_map(&self.params(params)?);
        map.remove("k");
        Ok(map)
    }

    fn hypergeometric(&self, params: &FamilyParams) -> Option<HypergeometricParams> {
        self.params(params).ok()
    }
}

/// Binomial state, photon-added when `k > 0`.
struct Binomial;

impl StateFamily for Binomial {
    fn name(&self) -> &'static str {
        "binomial"
    }

    fn param_names(&self) -> &'static [&'static str] {
        &["M", "eta", "k"]
    }

    fn build(&self, params: &FamilyParams) -> Result<FockState> {
        let m = FamilyParams::require(params.m, "M", self.name())?;
        let eta = FamilyParams::require(params.eta, "eta", self.name())?;
        states::binomial(m, eta)?.add_photons(params.k)
    }

    fn resolved(&self, params: &FamilyParams) -> Result<BTreeMap<String, ParamValue>> {
        Ok(BTreeMap::from([
            (
                "M".to_string(),
                ParamValue::Int(FamilyParams::require(params.m, "M", self.name())? as i64),
            ),
            (
                "eta".to_string(),
                ParamValue::Real(FamilyParams::require(params.eta, "eta", self.name())?),
            ),
            ("k".to_string(), ParamValue::Int(params.k as i64)),
        ]))
    }
}

/// Truncated coherent state, photon-added when `k > 0`.
struct Coherent;

impl StateFamily for Coherent {
    fn name(&self) -> &'static str {
        "coherent"
    }

    fn param_names(&self) -> &'static [&'static str] {
        &["alpha", "dim", "k"]
    }

    fn build(&self, params: &FamilyParams) -> Result<FockState> {
        let alpha = FamilyParams::require(params.alpha, "alpha", self.name())?;
        states::coherent_truncated(alpha, params.dim.unwrap_or(DEFAULT_COHERENT_DIM))?
            .add_photons(params.k)
    }

    fn resolved(&self, params: &FamilyParams) -> Result<BTreeMap<String, ParamValue>> {
        Ok(BTreeMap::from([
            (
                "alpha".to_string(),
                ParamValue::Real(FamilyParams::require(params.alpha, "alpha", self.name())?),
            ),
            (
                "dim".to_string(),
                ParamValue::Int(params.dim.unwrap_or(DEFAULT_COHERENT_DIM) as i64),
            ),
            ("k".to_string(), ParamValue::Int(params.k as i64)),
        ]))
    }
}

struct Fock;

impl StateFamily for Fock {
    fn name(&self) -> &'static str {
        "fock"
    }

    fn param_names(&self) -> &'static [&'static str] {
        &["dim", "n"]
    }

    fn build(&self, params: &FamilyParams) -> Result<FockState> {
        let n = FamilyParams::require(params.n, "n", self.name())?;
        states::fock(n, params.dim.unwrap_or(n + 1))
    }

    fn resolved(&self, params: &FamilyParams) -> Result<BTreeMap<String, ParamValue>> {
        let n = FamilyParams::require(params.n, "n", self.name())?;
        Ok(BTreeMap::from([
            (
                "dim".to_string(),
                ParamValue::Int(params.dim.unwrap_or(n + 1) as i64),
            ),
            ("n".to_string(), ParamValue::Int(n as i64)),
        ]))
    }
}

/// Inputs shared by every measure evaluation.
pub struct MeasureContext<'a> {
    pub state: &'a FockState,
    pub quadrature: QuadratureSpec,
}

/// A named scalar quantifier of a state.
pub trait Measure: Send + Sync {
    fn name(&self) -> &'static str;

    fn evaluate(&self, ctx: &MeasureContext<'_>) -> Result<MeasureValue>;
}

struct MeanPhotonNumber;

impl Measure for MeanPhotonNumber {
    fn name(&self) -> &'static str {
        "mean_n"
    }

    fn evaluate(&self, ctx: &MeasureContext<'_>) -> Result<MeasureValue> {
        Ok(MeasureValue::Scalar(ctx.state.mean_photon_number()))
    }
}

struct SourceQualityMeasure;

impl Measure for SourceQualityMeasure {
    fn name(&self) -> &'static str {
        "mu"
    }

    fn evaluate(&self, ctx: &MeasureContext<'_>) -> Result<MeasureValue> {
        Ok(MeasureValue::Quality(sps_quality_mu(ctx.state)))
    }
}

struct Anticlassicality {
    include_vacuum: bool,
}

impl Measure for Anticlassicality {
    fn name(&self) -> &'static str {
        if self.include_vacuum {
            "anticlassicality_with_vacuum"
        } else {
            "anticlassicality"
        }
    }

    fn evaluate(&self, ctx: &MeasureContext<'_>) -> Result<MeasureValue> {
        Ok(MeasureValue::Scalar(anticlassicality(
            ctx.state,
            self.include_vacuum,
        )))
    }
}

struct Concurrence;

impl Measure for Concurrence {
    fn name(&self) -> &'static str {
        "concurrence"
    }

    fn evaluate(&self, ctx: &MeasureContext<'_>) -> Result<MeasureValue> {
        Ok(MeasureValue::Scalar(concurrence_potential(ctx.state)))
    }
}

struct WignerLogNegativity;

impl Measure for WignerLogNegativity {
    fn name(&self) -> &'static str {
        "wln"
    }

    fn evaluate(&self, ctx: &MeasureContext<'_>) -> Result<MeasureValue> {
        Ok(MeasureValue::Wln(estimate_log_negativity(
            ctx.state,
            &ctx.quadrature,
        )?))
    }
}

/// State families and measures keyed by name.
pub struct Registry {
    families: BTreeMap<&'static str, Box<dyn StateFamily>>,
    measures: BTreeMap<&'static str, Box<dyn Measure>>,
}

impl Registry {
    pub fn empty() -> Self {
        Self {
            families: BTreeMap::new(),
            measures: BTreeMap::new(),
        }
    }

    /// Every family and measure this crate provides.
    pub fn builtin() -> Self {
        let mut registry = Self::empty();
        registry.register_family(Box::new(Pahs));
        registry.register_family(Box::new(Hypergeometric));
        registry.register_family(Box::new(Binomial));
        registry.register_family(Box::new(Coherent));
        registry.register_family(Box::new(Fock));
        registry.register_measure(Box::new(MeanPhotonNumber));
        registry.register_measure(Box::new(SourceQualityMeasure));
        registry.register_measure(Box::new(Anticlassicality {
            include_vacuum: false,
        }));
        registry.register_measure(Box::new(Anticlassicality {
            include_vacuum: true,
        }));
        registry.register_measure(Box::new(Concurrence));
        registry.register_measure(Box::new(WignerLogNegativity));
        registry
    }

    /// Registers `family`, replacing any family of the same name.
    pub fn register_family(&mut self, family: Box<dyn StateFamily>) {
        self.families.insert(family.name(), family);
    }

    pub fn register_measure(&mut self, measure: Box<dyn Measure>) {
        self.measures.insert(measure.name(), measure);
    }

    pub fn family(&self, name: &str) -> Result<&dyn StateFamily> {
        self.families
            .get(name)
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::UnknownName {
                kind: "state family",
                name: name.to_string(),
            })
    }

    pub fn measure(&self, name: &str) -> Result<&dyn Measure> {
        self.measures
            .get(name)
            .map(|m| m.as_ref())
            .ok_or_else(|| Error::UnknownName {
                kind: "measure",
                name: name.to_string(),
            })
    }

    /// Family names in alphabetical order.
    pub fn family_names(&self) -> Vec<&'static str> {
        self.families.keys().copied().collect()
    }

    /// Measure names in alphabetical order.
    pub fn measure_names(&self) -> Vec<&'static str> {
        self.measures.keys().copied().collect()
    }

    /// Builds the state and evaluates `measures` on it.
    pub fn report(
        &self,
        family: &str,
        params: &FamilyParams,
        measures: &[&str],
        quadrature: QuadratureSpec,
    ) -> Result<MeasureReport> {
        if measures.is_empty() {
            return Err(Error::InvalidParams(
                "at least one measure is required".into(),
            ));
        }
        let fam = self.family(family)?;
        let selected = measures
            .iter()
            .map(|name| self.measure(name))
            .collect::<Result<Vec<_>>>()?;
        let state = fam.build(params)?;
        let ctx = MeasureContext {
            state: &state,
            quadrature,
        };
        let mut values = BTreeMap::new();
        for measure in selected {
            values.insert(measure.name().to_string(), measure.evaluate(&ctx)?);
        }
        Ok(MeasureReport {
            family: fam.name().to_string(),
            params: fam.resolved(params)?,
            measures: values,
        })
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::builtin()
    }
}
